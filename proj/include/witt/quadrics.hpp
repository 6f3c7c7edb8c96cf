#pragma once

// Quadratic forms on GF(3)^3, their level sets, the four quadric types of
// PG(2,3), and the tangent/external/internal geometry of conics.

#include <array>
#include <string>
#include <vector>

#include "witt/gf3.hpp"
#include "witt/plane.hpp"

namespace witt {

/// q(x) = a00 x0^2 + a01 x0x1 + a02 x0x2 + a11 x1^2 + a12 x1x2 + a22 x2^2.
struct QuadraticForm {
  std::array<Scalar, 6> coeffs{};  // a00, a01, a02, a11, a12, a22

  static QuadraticForm from_ints(std::array<int, 6> c);
  /// The 729 forms in base-3 order of (a00, ..., a22); index 0 is the zero form.
  static QuadraticForm from_index(int index);
  /// All 728 nonzero forms, ascending by coefficient vector.
  static std::vector<QuadraticForm> all_nonzero();

  bool is_zero() const;
  Scalar operator()(const Vec3& x) const;
  QuadraticForm scaled(Scalar s) const;
  /// The lexicographically smaller of q and 2q.
  QuadraticForm normalized() const;
  /// Coefficients as a vector of length 6 (the unknowns of the block system).
  Vec as_vec() const { return Vec(coeffs.begin(), coeffs.end()); }
  static QuadraticForm from_vec(const Vec& v);

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
  friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

std::string to_string(const QuadraticForm& q);

/// (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2), so that q(x) = coeffs . monomials(x).
Vec monomials(const Vec3& x);

/// Value of q on a projective point; independent of the representative.
Scalar evaluate(const QuadraticForm& q, const ProjPoint& p);

/// { P : q(P) = t } as a point mask. Throws std::domain_error for q = 0.
PointMask level_set(const QuadraticForm& q, Scalar t);

enum class QuadricKind { Conic, SinglePoint, LinePair, DoubleLine };

const char* to_string(QuadricKind kind);

struct QuadricType {
  QuadricKind kind;
  /// The canonical representative of this type, e.g. "x0^2+x1^2+x2^2".
  const char* canonical_form;
};

/// (#Q0, #Q1, #Q2).
using Signature = std::array<int, 3>;

Signature signature(const QuadraticForm& q);

/// Type from the level-set cardinality signature. Throws std::domain_error
/// for q = 0 and std::logic_error for a signature outside the four types.
QuadricType classify(const QuadraticForm& q);

struct ConicGeometry {
  PointMask conic = 0;
  std::vector<int> tangents;  // line indices, ascending
  PointMask external = 0;
  PointMask internal = 0;
};

/// Tangents are lines meeting the conic in one point; external points are the
/// off-conic points on some tangent and internal points the remaining ones.
/// Throws std::domain_error unless q is a conic.
ConicGeometry conic_geometry(const QuadraticForm& q);

struct TableRow {
  const char* form;
  QuadraticForm q;
  Signature counts;
};

/// Level-set cardinalities of the four canonical forms
/// x0^2+x1^2+x2^2, x0^2+x1^2, x0^2-x1^2, x0^2.
std::array<TableRow, 4> canonical_table();

}  // namespace witt
