#pragma once

// The projective plane PG(2,3): 13 points, 13 lines, 4 points on every line.
//
// Points are indexed 0..12 in ascending lexicographic order of their canonical
// representative (first nonzero coordinate 1):
//   #0=(0,0,1) #1=(0,1,0) #2=(0,1,1) #3=(0,1,2) #4=(1,0,0) #5=(1,0,1)
//   #6=(1,0,2) #7=(1,1,0) #8=(1,1,1) #9=(1,1,2) #10=(1,2,0) #11=(1,2,1)
//   #12=(1,2,2)
// Line k is the line whose canonical dual vector equals point k's
// representative, i.e. line k = { P : dual_k . P = 0 }.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "witt/gf3.hpp"

namespace witt {

inline constexpr int kNumPoints = 13;
inline constexpr int kNumLines = 13;

/// Bit i set <=> point #i is in the set.
using PointMask = std::uint16_t;

constexpr PointMask bit(int point) { return static_cast<PointMask>(1u << point); }
int popcount(PointMask m);
/// Ascending point indices of a mask.
std::vector<int> indices_of(PointMask m);
PointMask mask_of(std::span<const int> points);

struct ProjPoint {
  Vec3 rep;
  int index = 0;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.index == b.index; }
};

struct ProjLine {
  Vec3 dual;
  int index = 0;
  std::array<int, 4> points{};  // ascending
  PointMask mask = 0;

  bool contains(int point) const { return (mask & bit(point)) != 0; }
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.index == b.index; }
};

/// Canonical representative of the span of v. Throws std::domain_error for v = 0.
Vec3 canonical(const Vec3& v);

class PlaneModel {
 public:
  PlaneModel();

  /// Shared immutable instance.
  static const PlaneModel& get();

  const std::array<ProjPoint, kNumPoints>& points() const { return points_; }
  const std::array<ProjLine, kNumLines>& lines() const { return lines_; }
  const ProjPoint& point(int index) const { return points_.at(index); }
  const ProjLine& line(int index) const { return lines_.at(index); }

  /// Throws std::domain_error for the zero vector.
  const ProjPoint& normalize(const Vec3& v) const;
  /// The line with the given (not necessarily canonical) dual vector.
  const ProjLine& line_with_dual(const Vec3& dual) const;

  bool incident(int point, int line) const { return lines_.at(line).contains(point); }
  /// Throws std::domain_error when p == q.
  const ProjLine& line_through(int p, int q) const;
  /// Throws std::domain_error when a == b.
  const ProjPoint& meet(int line_a, int line_b) const;
  std::array<int, 4> lines_through(int point) const;
  bool collinear(int a, int b, int c) const;

  /// Some 3 collinear points among 5 distinct points; the triple is the
  /// lexicographically first one. Throws std::domain_error on bad input and
  /// std::logic_error if none exists (PG(2,3) has no 5-arc).
  std::array<int, 3> collinear_triple_in(std::span<const int> five) const;

 private:
  static int code(const Vec3& canonical_rep);

  std::array<ProjPoint, kNumPoints> points_{};
  std::array<ProjLine, kNumLines> lines_{};
  std::array<int, 27> index_by_code_{};
  std::array<std::array<int, kNumPoints>, kNumPoints> line_of_pair_{};
};

}  // namespace witt
