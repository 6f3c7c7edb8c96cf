#pragma once

// Brute-force t-design verification and derivation for small incidence
// structures (at most 64 points).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "witt/plane.hpp"
#include "witt/witt_design.hpp"

namespace witt {

/// Points are arbitrary integer labels; blocks are subsets of them.
struct IncidenceStructure {
  std::vector<int> points;
  std::vector<std::vector<int>> blocks;

  static IncidenceStructure from_model(const WittModel& m);
  /// PG(2,3) with its 13 lines as blocks.
  static IncidenceStructure from_plane(const PlaneModel& plane);

  /// Sorted points, each block sorted, block list sorted.
  IncidenceStructure canonical() const;
  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

/// True when both structures have the same canonical form.
bool same_structure(const IncidenceStructure& a, const IncidenceStructure& b);

struct DesignParams {
  int t = 0;
  int v = 0;
  int k = 0;
  int lambda = 0;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

struct Violation {
  enum class Kind { BlockSize, Coverage };
  Kind kind = Kind::Coverage;
  /// Coverage: the offending t-subset. BlockSize: the offending block.
  std::vector<int> subset;
  /// Coverage: number of blocks through subset. BlockSize: the block's size.
  int observed = 0;
  /// Coverage: the majority count. BlockSize: the size of the first block.
  int expected = 0;
};

struct DesignVerdict {
  std::optional<DesignParams> params;
  std::optional<Violation> violation;
  bool ok() const { return params.has_value(); }
};

/// Counts every t-subset. lambda is the most frequent count; any t-subset with
/// a different count is reported. Throws std::domain_error for an empty
/// structure, t < 1, t larger than the smallest block, or blocks using
/// unknown points.
DesignVerdict verify_t_design(const IncidenceStructure& s, int t);

/// lambda_i = lambda C(v-i, t-i) / C(k-i, t-i) for i = 0..t.
/// Throws std::domain_error when a division is not exact.
std::vector<std::uint64_t> lambda_cascade(const DesignParams& p);

/// The number of blocks through every i-subset if it is the same for all of
/// them, otherwise nullopt.
std::optional<std::uint64_t> uniform_count(const IncidenceStructure& s, int i);

/// Blocks containing `fixed`, with `fixed` removed; points minus `fixed`.
/// Throws std::domain_error if `fixed` is not a subset of the points.
IncidenceStructure derived_design(const IncidenceStructure& s, std::span<const int> fixed);

/// The nine points off `line`, with the other twelve lines restricted to them.
IncidenceStructure affine_residue(const PlaneModel& plane, int line);

}  // namespace witt
