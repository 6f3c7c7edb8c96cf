#include "witt/quadrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace witt {

namespace {

void require_nonzero(const QuadraticForm& q, const char* op) {
  if (q.is_zero()) throw std::domain_error(std::string(op) + ": the zero form is not allowed");
}

// Index pairs (i, j), i <= j, in coefficient order.
constexpr std::array<std::array<int, 2>, 6> kMonomials{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

}  // namespace

QuadraticForm QuadraticForm::from_ints(std::array<int, 6> c) {
  QuadraticForm q;
  for (int i = 0; i < 6; ++i) q.coeffs[i] = Scalar(c[i]);
  return q;
}

QuadraticForm QuadraticForm::from_index(int index) {
  if (index < 0 || index >= 729) throw std::domain_error("QuadraticForm::from_index: out of range");
  QuadraticForm q;
  for (int i = 5; i >= 0; --i) {
    q.coeffs[i] = Scalar(index % 3);
    index /= 3;
  }
  return q;
}

std::vector<QuadraticForm> QuadraticForm::all_nonzero() {
  std::vector<QuadraticForm> out;
  out.reserve(728);
  for (int i = 1; i < 729; ++i) out.push_back(from_index(i));
  return out;
}

QuadraticForm QuadraticForm::from_vec(const Vec& v) {
  if (v.size() != 6) throw std::domain_error("QuadraticForm::from_vec: expected 6 coefficients");
  QuadraticForm q;
  std::copy(v.begin(), v.end(), q.coeffs.begin());
  return q;
}

bool QuadraticForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Scalar s) { return s.is_zero(); });
}

Vec monomials(const Vec3& x) {
  Vec out(6);
  for (int m = 0; m < 6; ++m) out[m] = x[kMonomials[m][0]] * x[kMonomials[m][1]];
  return out;
}

Scalar QuadraticForm::operator()(const Vec3& x) const {
  Scalar sum = 0;
  for (int m = 0; m < 6; ++m) sum += coeffs[m] * x[kMonomials[m][0]] * x[kMonomials[m][1]];
  return sum;
}

QuadraticForm QuadraticForm::scaled(Scalar s) const {
  QuadraticForm q;
  for (int i = 0; i < 6; ++i) q.coeffs[i] = s * coeffs[i];
  return q;
}

QuadraticForm QuadraticForm::normalized() const { return std::min(*this, scaled(2)); }

std::string to_string(const QuadraticForm& q) {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << q.coeffs[i];
  return os.str();
}

Scalar evaluate(const QuadraticForm& q, const ProjPoint& p) { return q(p.rep); }

PointMask level_set(const QuadraticForm& q, Scalar t) {
  require_nonzero(q, "level_set");
  PointMask m = 0;
  for (const ProjPoint& p : PlaneModel::get().points())
    if (evaluate(q, p) == t) m |= bit(p.index);
  return m;
}

const char* to_string(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::Conic: return "conic";
    case QuadricKind::SinglePoint: return "single_point";
    case QuadricKind::LinePair: return "line_pair";
    case QuadricKind::DoubleLine: return "double_line";
  }
  return "?";
}

Signature signature(const QuadraticForm& q) {
  require_nonzero(q, "signature");
  Signature s{};
  for (const ProjPoint& p : PlaneModel::get().points()) ++s[evaluate(q, p).value()];
  return s;
}

QuadricType classify(const QuadraticForm& q) {
  require_nonzero(q, "classify");
  Signature s = signature(q);
  if (s[1] > s[2]) std::swap(s[1], s[2]);
  if (s == Signature{4, 3, 6}) return {QuadricKind::Conic, "x0^2+x1^2+x2^2"};
  if (s == Signature{1, 6, 6}) return {QuadricKind::SinglePoint, "x0^2+x1^2"};
  if (s == Signature{7, 3, 3}) return {QuadricKind::LinePair, "x0^2-x1^2"};
  if (s == Signature{4, 0, 9}) return {QuadricKind::DoubleLine, "x0^2"};
  throw std::logic_error("classify: unexpected level-set signature");
}

ConicGeometry conic_geometry(const QuadraticForm& q) {
  if (classify(q).kind != QuadricKind::Conic) throw std::domain_error("conic_geometry: form is not a conic");
  const PlaneModel& plane = PlaneModel::get();
  ConicGeometry g;
  g.conic = level_set(q, 0);
  PointMask on_tangent = 0;
  for (const ProjLine& line : plane.lines()) {
    if (popcount(line.mask & g.conic) != 1) continue;
    g.tangents.push_back(line.index);
    on_tangent |= line.mask;
  }
  const PointMask all = static_cast<PointMask>((1u << kNumPoints) - 1);
  g.external = on_tangent & ~g.conic;
  g.internal = all & ~g.conic & ~g.external;
  return g;
}

std::array<TableRow, 4> canonical_table() {
  std::array<TableRow, 4> rows{{
      {"x0^2+x1^2+x2^2", QuadraticForm::from_ints({1, 0, 0, 1, 0, 1}), {}},
      {"x0^2+x1^2", QuadraticForm::from_ints({1, 0, 0, 1, 0, 0}), {}},
      {"x0^2-x1^2", QuadraticForm::from_ints({1, 0, 0, 2, 0, 0}), {}},
      {"x0^2", QuadraticForm::from_ints({1, 0, 0, 0, 0, 0}), {}},
  }};
  for (TableRow& row : rows) row.counts = signature(row.q);
  return rows;
}

}  // namespace witt
