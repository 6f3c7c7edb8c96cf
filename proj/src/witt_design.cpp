#include "witt/witt_design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace witt {

namespace {

void require_point(int p, const char* op) {
  if (p < 0 || p >= kNumPoints) throw std::domain_error(std::string(op) + ": point index out of range");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Block Block::from_mask(PointMask m) {
  if (popcount(m) != kBlockSize) throw std::domain_error("Block: a block has exactly 6 points");
  Block b;
  const std::vector<int> idx = indices_of(m);
  std::copy(idx.begin(), idx.end(), b.points.begin());
  return b;
}

const char* class_name(const BlockClass& c) {
  return std::visit(Overloaded{[](const ConicExterior&) { return "conic_exterior"; },
                               [](const SymmetricDifference&) { return "symmetric_difference"; },
                               [](const LinePairMinusU&) { return "line_pair_minus_u"; }},
                    c);
}

PointMask rederive(const BlockClass& c, int u) {
  const PlaneModel& plane = PlaneModel::get();
  return std::visit(
      Overloaded{[&](const ConicExterior& e) { return conic_geometry(e.conic).external; },
                 [&](const SymmetricDifference& d) {
                   return static_cast<PointMask>(plane.line(d.r).mask ^ plane.line(d.s).mask);
                 },
                 [&](const LinePairMinusU& p) {
                   return static_cast<PointMask>((plane.line(p.g).mask | plane.line(p.h).mask) & ~bit(u));
                 }},
      c);
}

std::optional<Block> block_of_form(const QuadraticForm& q, int u) {
  require_point(u, "block_of_form");
  const ProjPoint& up = PlaneModel::get().point(u);
  const PointMask candidate = level_set(q, Scalar(2) * evaluate(q, up)) & ~bit(u);
  const int size = popcount(candidate);
  if (size <= 3) return std::nullopt;
  if (size != kBlockSize) throw std::logic_error("block_of_form: candidate block of size " + std::to_string(size));
  return Block::from_mask(candidate);
}

namespace {

// Every witness matching the block, across all three classes.
std::vector<BlockClass> witnesses(PointMask b, int u, const std::vector<QuadraticForm>& conics) {
  const PlaneModel& plane = PlaneModel::get();
  std::vector<BlockClass> out;
  for (int i = 0; i < kNumLines; ++i) {
    for (int j = i + 1; j < kNumLines; ++j) {
      const ProjLine& a = plane.line(i);
      const ProjLine& c = plane.line(j);
      const bool u_on = a.contains(u) || c.contains(u);
      if (u_on && ((a.mask | c.mask) & ~bit(u)) == b) out.emplace_back(LinePairMinusU{i, j});
      if (!u_on && (a.mask ^ c.mask) == b) out.emplace_back(SymmetricDifference{i, j});
    }
  }
  for (const QuadraticForm& q : conics) {
    const ConicGeometry g = conic_geometry(q);
    if (g.external == b && (g.internal & bit(u))) out.emplace_back(ConicExterior{q});
  }
  return out;
}

}  // namespace

WittModel WittModel::construct(int u) {
  require_point(u, "construct");
  WittModel m;
  m.u_ = u;
  int n = 0;
  for (int p = 0; p < kNumPoints; ++p)
    if (p != u) m.w_[n++] = p;

  std::set<Block> found;
  std::vector<QuadraticForm> conics;
  for (const QuadraticForm& q : QuadraticForm::all_nonzero()) {
    if (q.normalized() != q) continue;
    if (auto b = block_of_form(q, u)) found.insert(*b);
    if (classify(q).kind == QuadricKind::Conic) conics.push_back(q);
  }
  m.blocks_.assign(found.begin(), found.end());

  for (std::size_t i = 0; i < m.blocks_.size(); ++i) {
    const PointMask b = m.blocks_[i].mask();
    m.block_index_.emplace(b, i);

    const std::vector<BlockClass> ws = witnesses(b, u, conics);
    if (ws.empty()) throw std::logic_error("construct: block without a geometric witness");
    for (const BlockClass& w : ws)
      if (w.index() != ws.front().index()) throw std::logic_error("construct: block matches two classes");
    m.classes_.push_back(ws.front());

    for (int drop : m.blocks_[i].points) {
      const PointMask five = b & ~bit(drop);
      if (!m.five_set_index_.emplace(five, i).second)
        throw std::logic_error("construct: a 5-set lies in two blocks");
    }
  }
  return m;
}

PointMask WittModel::w_mask() const { return static_cast<PointMask>(((1u << kNumPoints) - 1) & ~bit(u_)); }

std::optional<std::size_t> WittModel::find(const Block& b) const {
  auto it = block_index_.find(b.mask());
  if (it == block_index_.end() || blocks_[it->second] != b) return std::nullopt;
  return it->second;
}

const BlockClass& WittModel::classify_block(const Block& b) const {
  const auto i = find(b);
  if (!i) throw std::domain_error("classify_block: not a block of this design");
  return classes_[*i];
}

PointMask validate_five_set(std::span<const int> d, int u) {
  if (d.size() != 5) throw std::domain_error("block_through: expected exactly 5 points");
  for (int p : d) {
    require_point(p, "block_through");
    if (p == u) throw std::domain_error("block_through: U is not a point of the design");
  }
  const PointMask m = mask_of(d);
  if (popcount(m) != 5) throw std::domain_error("block_through: points must be distinct");
  return m;
}

const Block& WittModel::block_through(std::span<const int> d) const {
  const PointMask m = validate_five_set(d, u_);
  auto it = five_set_index_.find(m);
  if (it == five_set_index_.end()) throw std::logic_error("block_through: 5-set not covered");
  return blocks_[it->second];
}

const char* to_string(ProofCase c) { return c == ProofCase::A ? "A" : "B"; }

Mat block_system(std::span<const int> d, int u) {
  validate_five_set(d, u);
  const PlaneModel& plane = PlaneModel::get();
  // q(X) - 2 q(U) = q(X) + q(U), coefficient-wise.
  const Vec mu = monomials(plane.point(u).rep);
  Mat m(5, 6);
  for (int r = 0; r < 5; ++r) {
    Vec row = monomials(plane.point(d[r]).rep);
    for (int c = 0; c < 6; ++c) row[c] += mu[c];
    m.set_row(r, row);
  }
  return m;
}

Mat exclusion_matrix(std::span<const int> d, int u) {
  const Mat m = block_system(d, u);
  const Vec3 urep = PlaneModel::get().point(u).rep;
  const Vec mu = monomials(urep);
  // Canonical U has a leading 1, so its squared monomial has coefficient 1 in q(U).
  int lead = 0;
  while (urep[lead].is_zero()) ++lead;
  const int pivot = lead == 0 ? 0 : (lead == 1 ? 3 : 5);

  Mat e(5, 5);
  for (int r = 0; r < 5; ++r) {
    int out = 0;
    for (int c = 0; c < 6; ++c) {
      if (c == pivot) continue;
      e(r, out++) = m(r, c) - m(r, pivot) * mu[c];
    }
  }
  return e;
}

SolveResult solve_block_through(std::span<const int> d, int u) {
  const Mat system = block_system(d, u);
  const Vec mu = monomials(PlaneModel::get().point(u).rep);
  const PointMask dmask = mask_of(d);

  SolveResult r;
  r.solution_dim = static_cast<int>(null_space(system).size());
  r.exclusion_det = det(exclusion_matrix(d, u));

  const std::vector<Vec> through_u = null_space(system.with_row(mu));
  if (!through_u.empty()) {
    r.proof_case = ProofCase::B;
    r.form = QuadraticForm::from_vec(through_u.front());
    if (classify(r.form).kind != QuadricKind::LinePair)
      throw std::logic_error("solve_block_through: case B quadric is not a line pair");
    r.block = Block::from_mask(level_set(r.form, 0) & ~bit(u));
  } else {
    r.proof_case = ProofCase::A;
    const std::vector<Vec> sol = null_space(system);
    if (sol.size() != 1) throw std::logic_error("solve_block_through: case A solution space is not a line");
    r.form = QuadraticForm::from_vec(sol.front());
    const auto b = block_of_form(r.form, u);
    if (!b) throw std::logic_error("solve_block_through: case A solution yields no block");
    r.block = *b;
  }
  if ((r.block.mask() & dmask) != dmask) throw std::logic_error("solve_block_through: block misses the 5-set");
  return r;
}

}  // namespace witt
