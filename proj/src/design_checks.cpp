#include "witt/design_checks.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace witt {

namespace {

using Mask = std::uint64_t;

// Maps labels to bit positions so blocks can be handled as 64-bit masks.
struct Encoded {
  std::vector<int> labels;
  std::vector<Mask> blocks;
};

Encoded encode(const IncidenceStructure& s) {
  if (s.points.size() > 64) throw std::domain_error("design checks support at most 64 points");
  Encoded e;
  e.labels = s.points;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (!pos.emplace(s.points[i], static_cast<int>(i)).second) throw std::domain_error("duplicate point label");
  for (const auto& block : s.blocks) {
    Mask m = 0;
    for (int p : block) {
      auto it = pos.find(p);
      if (it == pos.end()) throw std::domain_error("block uses a point outside the structure");
      m |= Mask{1} << it->second;
    }
    e.blocks.push_back(m);
  }
  return e;
}

// Calls f(mask) for every i-subset of n positions, in lexicographic order.
template <class F>
void for_each_subset(int n, int i, F&& f) {
  if (i < 0 || i > n) return;
  std::vector<int> idx(i);
  for (int j = 0; j < i; ++j) idx[j] = j;
  while (true) {
    Mask m = 0;
    for (int j : idx) m |= Mask{1} << j;
    f(m);
    int j = i - 1;
    while (j >= 0 && idx[j] == n - i + j) --j;
    if (j < 0) return;
    ++idx[j];
    for (int l = j + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
  }
}

int count_through(const std::vector<Mask>& blocks, Mask subset) {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [&](Mask b) { return (b & subset) == subset; }));
}

std::vector<int> decode(const std::vector<int>& labels, Mask m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (m & (Mask{1} << i)) out.push_back(labels[i]);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IncidenceStructure IncidenceStructure::from_model(const WittModel& m) {
  IncidenceStructure s;
  s.points.assign(m.w().begin(), m.w().end());
  for (const Block& b : m.blocks()) s.blocks.emplace_back(b.points.begin(), b.points.end());
  return s;
}

IncidenceStructure IncidenceStructure::from_plane(const PlaneModel& plane) {
  IncidenceStructure s;
  for (const ProjPoint& p : plane.points()) s.points.push_back(p.index);
  for (const ProjLine& l : plane.lines()) s.blocks.emplace_back(l.points.begin(), l.points.end());
  return s;
}

IncidenceStructure IncidenceStructure::canonical() const {
  IncidenceStructure c = *this;
  std::sort(c.points.begin(), c.points.end());
  for (auto& b : c.blocks) std::sort(b.begin(), b.end());
  std::sort(c.blocks.begin(), c.blocks.end());
  return c;
}

bool same_structure(const IncidenceStructure& a, const IncidenceStructure& b) { return a.canonical() == b.canonical(); }

DesignVerdict verify_t_design(const IncidenceStructure& s, int t) {
  if (s.points.empty() || s.blocks.empty()) throw std::domain_error("verify_t_design: empty structure");
  const Encoded e = encode(s);
  std::size_t min_size = s.blocks.front().size();
  for (const auto& b : s.blocks) min_size = std::min(min_size, b.size());
  if (t < 1 || static_cast<std::size_t>(t) > min_size) throw std::domain_error("verify_t_design: t out of range");

  DesignVerdict verdict;
  const int k = std::popcount(e.blocks.front());
  for (Mask b : e.blocks) {
    if (std::popcount(b) != k) {
      verdict.violation = Violation{Violation::Kind::BlockSize, decode(e.labels, b), std::popcount(b), k};
      return verdict;
    }
  }

  const int v = static_cast<int>(e.labels.size());
  std::vector<std::pair<Mask, int>> counts;
  std::map<int, std::size_t> histogram;
  for_each_subset(v, t, [&](Mask m) {
    const int c = count_through(e.blocks, m);
    counts.emplace_back(m, c);
    ++histogram[c];
  });
  // Most frequent count; ties go to the smaller count.
  int lambda = histogram.begin()->first;
  for (const auto& [c, n] : histogram)
    if (n > histogram[lambda]) lambda = c;

  for (const auto& [m, c] : counts) {
    if (c != lambda) {
      verdict.violation = Violation{Violation::Kind::Coverage, decode(e.labels, m), c, lambda};
      return verdict;
    }
  }
  verdict.params = DesignParams{t, v, k, lambda};
  return verdict;
}

std::vector<std::uint64_t> lambda_cascade(const DesignParams& p) {
  if (p.t < 0 || p.k < p.t || p.v < p.k || p.lambda < 0) throw std::domain_error("lambda_cascade: invalid parameters");
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= p.t; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(p.lambda) * binomial(p.v - i, p.t - i);
    const std::uint64_t den = binomial(p.k - i, p.t - i);
    if (num % den != 0) throw std::domain_error("lambda_cascade: parameters are not feasible");
    out.push_back(num / den);
  }
  return out;
}

std::optional<std::uint64_t> uniform_count(const IncidenceStructure& s, int i) {
  const Encoded e = encode(s);
  std::optional<int> seen;
  bool uniform = true;
  for_each_subset(static_cast<int>(e.labels.size()), i, [&](Mask m) {
    const int c = count_through(e.blocks, m);
    if (!seen) seen = c;
    uniform = uniform && c == *seen;
  });
  if (!uniform || !seen) return std::nullopt;
  return static_cast<std::uint64_t>(*seen);
}

IncidenceStructure derived_design(const IncidenceStructure& s, std::span<const int> fixed) {
  for (int f : fixed)
    if (std::find(s.points.begin(), s.points.end(), f) == s.points.end())
      throw std::domain_error("derived_design: fixed point is not a point of the structure");
  auto is_fixed = [&](int p) { return std::find(fixed.begin(), fixed.end(), p) != fixed.end(); };

  IncidenceStructure d;
  std::copy_if(s.points.begin(), s.points.end(), std::back_inserter(d.points), [&](int p) { return !is_fixed(p); });
  for (const auto& b : s.blocks) {
    const bool through = std::all_of(fixed.begin(), fixed.end(),
                                     [&](int f) { return std::find(b.begin(), b.end(), f) != b.end(); });
    if (!through) continue;
    std::vector<int> rest;
    std::copy_if(b.begin(), b.end(), std::back_inserter(rest), [&](int p) { return !is_fixed(p); });
    d.blocks.push_back(std::move(rest));
  }
  return d;
}

IncidenceStructure affine_residue(const PlaneModel& plane, int line) {
  const ProjLine& g = plane.line(line);
  IncidenceStructure s;
  for (const ProjPoint& p : plane.points())
    if (!g.contains(p.index)) s.points.push_back(p.index);
  for (const ProjLine& l : plane.lines()) {
    if (l.index == line) continue;
    std::vector<int> rest;
    for (int p : l.points)
      if (!g.contains(p)) rest.push_back(p);
    s.blocks.push_back(std::move(rest));
  }
  return s;
}

}  // namespace witt
