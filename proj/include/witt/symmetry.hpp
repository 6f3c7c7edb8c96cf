#pragma once

// Collineations of PG(2,3), automorphisms of the Witt design, and the
// affinity-extension identity relating the two on a line through U.
//
// Permutations compose left to right: a.then(b) applies a first. This matches
// exponent notation, X^(ab) = (X^a)^b.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "witt/gf3.hpp"
#include "witt/plane.hpp"
#include "witt/witt_design.hpp"

namespace witt {

/// A permutation of the 13 plane points. Design automorphisms fix U.
struct Perm {
  std::array<std::uint8_t, kNumPoints> images{};

  static Perm identity();
  int operator()(int p) const { return images.at(p); }
  PointMask operator()(PointMask m) const;
  Perm then(const Perm& next) const;
  Perm inverse() const;
  bool is_identity() const { return *this == identity(); }
  /// 4 bits per point.
  std::uint64_t key() const;
  /// Images of the points of W, in ascending point order.
  std::vector<int> on(PointMask domain) const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// An invertible 3x3 matrix modulo scalars, acting on column vectors.
struct Collineation {
  std::array<Scalar, 9> matrix{};  // row-major, first nonzero entry 1
  Perm action;

  /// Throws std::domain_error for a singular matrix.
  static Collineation from_matrix(const Mat& m);
  Mat as_mat() const;
  int operator()(int p) const { return action(p); }
};

/// All 5616 collineations, ordered by matrix.
const std::vector<Collineation>& all_collineations();

/// The 432 collineations fixing u.
std::vector<Collineation> stabilizer_of_u(const PlaneModel& plane, int u);

/// True if p maps every block of m onto a block.
bool preserves_blocks(const Perm& p, const WittModel& m);

/// Every permutation of `points` (fixing the rest of the plane) that maps the
/// block set onto itself. Depth-first over images in point order, pruning as
/// soon as the image of a partially assigned block lies in no block.
std::vector<Perm> find_automorphisms(PointMask points, std::span<const PointMask> blocks);

/// Order of the group generated by `generators`, by orbit closure of the identity.
std::size_t closure_order(std::span<const Perm> generators);

/// True if the elements act regularly on ordered k-tuples of distinct points
/// of `points`: the images of one fixed tuple are pairwise distinct and
/// there are exactly as many elements as tuples.
bool sharply_transitive(std::span<const Perm> elements, PointMask points, int k);

struct GroupSummary {
  std::size_t order = 0;
  std::vector<Perm> generators;
  bool sharply_5_transitive = false;
};

struct AutomorphismGroup {
  std::vector<Perm> elements;  // sorted
  GroupSummary summary;

  bool contains(const Perm& p) const;
};

AutomorphismGroup automorphism_group(const WittModel& m);

/// The fixed-point-free involution of the four points of `line` swapping x
/// and u (and the remaining two points), as a plane permutation that is the
/// identity off the line. Throws std::domain_error if x == u or either point
/// is off the line.
Perm elliptic_involution(const PlaneModel& plane, int line, int x, int u);

/// Permutations of the nine points off `line` that map the twelve restricted
/// lines onto restricted lines, found by backtracking. Points on `line` are
/// fixed in the returned permutations.
std::vector<Perm> affinities(const PlaneModel& plane, int line);

struct Extension {
  Collineation kappa;
  Perm beta;
};

/// Extends affinities of the plane minus a line g through U, both to a
/// collineation and to a design automorphism, by filtering the full lists.
class AffinityExtender {
 public:
  /// Throws std::domain_error if the line misses U.
  AffinityExtender(const PlaneModel& plane, const WittModel& model, const AutomorphismGroup& group, int line);

  int line() const { return line_; }
  /// Throws std::domain_error if alpha is not an affinity (with g fixed
  /// pointwise as the representation convention) and std::logic_error if an
  /// extension is missing or not unique.
  Extension extend(const Perm& alpha) const;

 private:
  std::uint64_t restriction_key(const Perm& p) const;

  const PlaneModel* plane_;
  int line_;
  PointMask affine_ = 0;
  std::vector<Collineation> kappas_;
  std::vector<Perm> betas_;
  std::unordered_multimap<std::uint64_t, std::size_t> kappa_index_;
  std::unordered_multimap<std::uint64_t, std::size_t> beta_index_;
};

Extension extend_affinity(const PlaneModel& plane, const WittModel& model, const AutomorphismGroup& group, int line,
                          const Perm& alpha);

struct InvolutionInstance {
  Perm alpha;
  int x = 0;
  int x_kappa = 0;
  int x_beta = 0;
};

struct InvolutionReport {
  int line = 0;
  std::size_t affinities = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Checks where X^kappa != X^beta.
  std::size_t kappa_beta_differ = 0;
  std::optional<InvolutionInstance> first_failure;
  std::optional<InvolutionInstance> first_difference;
};

/// For every affinity alpha of the plane minus `line` and every X on the line
/// other than U, checks X^beta = U^(kappa^-1 gamma_X kappa).
InvolutionReport verify_involution_formula(const PlaneModel& plane, const WittModel& model, const AutomorphismGroup& group,
                             int line);

}  // namespace witt
