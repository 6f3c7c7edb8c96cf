#include "witt/plane.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace witt {

int popcount(PointMask m) { return std::popcount(static_cast<unsigned>(m)); }

std::vector<int> indices_of(PointMask m) {
  std::vector<int> out;
  for (int i = 0; i < 16; ++i)
    if (m & bit(i)) out.push_back(i);
  return out;
}

PointMask mask_of(std::span<const int> points) {
  PointMask m = 0;
  for (int p : points) m |= bit(p);
  return m;
}

Vec3 canonical(const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) return inv(v[i]) * v;
  throw std::domain_error("normalize: zero vector is not a projective point");
}

int PlaneModel::code(const Vec3& c) { return c[0].value() * 9 + c[1].value() * 3 + c[2].value(); }

PlaneModel::PlaneModel() {
  index_by_code_.fill(-1);
  // Enumerating codes in ascending order yields the lexicographic ordering.
  int next = 0;
  for (int c = 1; c < 27; ++c) {
    const Vec3 v{{c / 9, (c / 3) % 3, c % 3}};
    if (canonical(v) != v) continue;
    points_[next] = ProjPoint{v, next};
    index_by_code_[c] = next;
    ++next;
  }
  for (int k = 0; k < kNumLines; ++k) {
    ProjLine& line = lines_[k];
    line.dual = points_[k].rep;
    line.index = k;
    int n = 0;
    for (const ProjPoint& p : points_) {
      if (!dot(line.dual, p.rep).is_zero()) continue;
      line.points.at(n++) = p.index;
      line.mask |= bit(p.index);
    }
    if (n != 4) throw std::logic_error("PlaneModel: line without exactly 4 points");
  }
  for (auto& row : line_of_pair_) row.fill(-1);
  for (const ProjLine& line : lines_)
    for (int a : line.points)
      for (int b : line.points)
        if (a != b) line_of_pair_[a][b] = line.index;
}

const PlaneModel& PlaneModel::get() {
  static const PlaneModel model;
  return model;
}

const ProjPoint& PlaneModel::normalize(const Vec3& v) const { return points_[index_by_code_[code(canonical(v))]]; }

const ProjLine& PlaneModel::line_with_dual(const Vec3& dual) const { return lines_[normalize(dual).index]; }

const ProjLine& PlaneModel::line_through(int p, int q) const {
  if (p == q) throw std::domain_error("line_through: points must be distinct");
  return lines_[line_of_pair_.at(p).at(q)];
}

const ProjPoint& PlaneModel::meet(int line_a, int line_b) const {
  if (line_a == line_b) throw std::domain_error("meet: lines must be distinct");
  const PointMask common = lines_.at(line_a).mask & lines_.at(line_b).mask;
  return points_[std::countr_zero(static_cast<unsigned>(common))];
}

std::array<int, 4> PlaneModel::lines_through(int point) const {
  std::array<int, 4> out{};
  int n = 0;
  for (const ProjLine& line : lines_)
    if (line.contains(point)) out.at(n++) = line.index;
  return out;
}

bool PlaneModel::collinear(int a, int b, int c) const {
  if (a == b || a == c) return true;
  return line_through(a, b).contains(c);
}

std::array<int, 3> PlaneModel::collinear_triple_in(std::span<const int> five) const {
  if (five.size() != 5) throw std::domain_error("collinear_triple_in: expected 5 points");
  for (int p : five)
    if (p < 0 || p >= kNumPoints) throw std::domain_error("collinear_triple_in: point out of range");
  if (popcount(mask_of(five)) != 5) throw std::domain_error("collinear_triple_in: points must be distinct");

  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        if (collinear(five[i], five[j], five[k])) return {five[i], five[j], five[k]};
  throw std::logic_error("collinear_triple_in: found a 5-arc in PG(2,3)");
}

}  // namespace witt
