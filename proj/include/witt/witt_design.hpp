#pragma once

// The planar model of the small Witt design W12 = S(5,6,12).
//
// Fix a point U of PG(2,3). The design points are W = PG(2,3) \ {U}. For every
// nonzero quadratic form q, the set { X in W : q(X) = 2 q(U) } is a block
// whenever it has more than three points; such a set always has exactly six.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "witt/plane.hpp"
#include "witt/quadrics.hpp"

namespace witt {

inline constexpr int kDefaultU = 4;  // (1,0,0)
inline constexpr int kBlockSize = 6;

struct Block {
  std::array<int, kBlockSize> points{};  // ascending

  /// Throws std::domain_error unless the mask has exactly six points.
  static Block from_mask(PointMask m);
  PointMask mask() const { return mask_of(points); }
  bool contains(int p) const { return (mask() & bit(p)) != 0; }

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Block = external points of the witness conic; U is internal to it.
struct ConicExterior {
  QuadraticForm conic;  // normalized (lexicographically smaller of q, 2q)
  friend bool operator==(const ConicExterior&, const ConicExterior&) = default;
};
/// Block = (r u s) \ (r n s) for lines r != s with U on neither.
struct SymmetricDifference {
  int r = 0;
  int s = 0;
  friend bool operator==(const SymmetricDifference&, const SymmetricDifference&) = default;
};
/// Block = (g u h) \ {U} for lines g != h with U on at least one.
struct LinePairMinusU {
  int g = 0;
  int h = 0;
  friend bool operator==(const LinePairMinusU&, const LinePairMinusU&) = default;
};

using BlockClass = std::variant<ConicExterior, SymmetricDifference, LinePairMinusU>;

const char* class_name(const BlockClass& c);
/// The point set a witness describes, relative to U.
PointMask rederive(const BlockClass& c, int u);

/// { X in W : q(X) = 2 q(U) } when it has more than three points. Throws
/// std::domain_error for q = 0 and std::logic_error if a candidate set of
/// size 4 or 5 ever appears.
std::optional<Block> block_of_form(const QuadraticForm& q, int u);

class WittModel {
 public:
  /// Builds W and its 132 blocks from one representative of each {q, 2q}.
  static WittModel construct(int u = kDefaultU);

  int u() const { return u_; }
  const std::array<int, 12>& w() const { return w_; }
  PointMask w_mask() const;
  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<std::size_t> find(const Block& b) const;

  /// Throws std::domain_error if b is not a block of this model.
  const BlockClass& classify_block(const Block& b) const;
  const BlockClass& class_at(std::size_t i) const { return classes_.at(i); }

  /// The unique block containing a 5-subset of W. Throws std::domain_error
  /// unless d is 5 distinct points of W.
  const Block& block_through(std::span<const int> d) const;

 private:
  WittModel() = default;

  int u_ = kDefaultU;
  std::array<int, 12> w_{};
  std::vector<Block> blocks_;
  std::vector<BlockClass> classes_;
  std::map<PointMask, std::size_t> block_index_;
  std::map<PointMask, std::size_t> five_set_index_;
};

/// Validates a 5-subset of W for the given U; returns its mask.
PointMask validate_five_set(std::span<const int> d, int u);

enum class ProofCase { A, B };

const char* to_string(ProofCase c);

struct SolveResult {
  Block block;
  ProofCase proof_case = ProofCase::A;
  /// The nonzero solution the block was read from. In case B it satisfies q(U) = 0.
  QuadraticForm form;
  /// Dimension of the solution space of the 5x6 block system.
  int solution_dim = 0;
  /// Determinant of the 5x5 system restricted to q(U) = 0. For U = (1,0,0)
  /// this is the matrix of monomials x0x1, x0x2, x1^2, x1x2, x2^2.
  Scalar exclusion_det;
};

/// The 5x6 linear system in the form coefficients: one row per point X of d,
/// expressing q(X) = 2 q(U).
Mat block_system(std::span<const int> d, int u);

/// The 5x5 determinant matrix: block_system restricted to forms with q(U) = 0,
/// eliminating the coefficient of the first nonzero coordinate of U squared.
Mat exclusion_matrix(std::span<const int> d, int u);

/// Finds the block through d from the linear system alone, without any block
/// list. Prefers a solution with q(U) = 0 (case B) when one exists.
SolveResult solve_block_through(std::span<const int> d, int u = kDefaultU);

}  // namespace witt
