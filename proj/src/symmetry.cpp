#include "witt/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace witt {

Perm Perm::identity() {
  Perm p;
  for (int i = 0; i < kNumPoints; ++i) p.images[i] = static_cast<std::uint8_t>(i);
  return p;
}

PointMask Perm::operator()(PointMask m) const {
  PointMask out = 0;
  for (int i = 0; i < kNumPoints; ++i)
    if (m & bit(i)) out |= bit(images[i]);
  return out;
}

Perm Perm::then(const Perm& next) const {
  Perm p;
  for (int i = 0; i < kNumPoints; ++i) p.images[i] = next.images[images[i]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  for (int i = 0; i < kNumPoints; ++i) p.images[images[i]] = static_cast<std::uint8_t>(i);
  return p;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < kNumPoints; ++i) k |= std::uint64_t{images[i]} << (4 * i);
  return k;
}

std::vector<int> Perm::on(PointMask domain) const {
  std::vector<int> out;
  for (int i : indices_of(domain)) out.push_back(images[i]);
  return out;
}

Collineation Collineation::from_matrix(const Mat& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::domain_error("Collineation: expected a 3x3 matrix");
  if (det(m).is_zero()) throw std::domain_error("Collineation: singular matrix");
  Collineation c;
  Scalar lead = 0;
  for (int i = 0; i < 9 && lead.is_zero(); ++i) lead = m(i / 3, i % 3);
  const Scalar s = inv(lead);
  for (int i = 0; i < 9; ++i) c.matrix[i] = s * m(i / 3, i % 3);

  const PlaneModel& plane = PlaneModel::get();
  for (const ProjPoint& p : plane.points()) {
    Vec3 image;
    for (int r = 0; r < 3; ++r) image[r] = c.matrix[3 * r] * p.rep[0] + c.matrix[3 * r + 1] * p.rep[1] + c.matrix[3 * r + 2] * p.rep[2];
    c.action.images[p.index] = static_cast<std::uint8_t>(plane.normalize(image).index);
  }
  return c;
}

Mat Collineation::as_mat() const {
  Mat m(3, 3);
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = matrix[i];
  return m;
}

const std::vector<Collineation>& all_collineations() {
  static const std::vector<Collineation> all = [] {
    std::vector<Collineation> out;
    for (int code = 0; code < 19683; ++code) {
      Mat m(3, 3);
      int rest = code;
      for (int i = 8; i >= 0; --i) {
        m(i / 3, i % 3) = rest % 3;
        rest /= 3;
      }
      // One representative per scalar class: leading entry 1.
      int first = 0;
      while (first < 9 && m(first / 3, first % 3).is_zero()) ++first;
      if (first == 9 || m(first / 3, first % 3) != Scalar(1) || det(m).is_zero()) continue;
      out.push_back(Collineation::from_matrix(m));
    }
    return out;
  }();
  return all;
}

std::vector<Collineation> stabilizer_of_u(const PlaneModel& plane, int u) {
  plane.point(u);
  std::vector<Collineation> out;
  for (const Collineation& c : all_collineations())
    if (c(u) == u) out.push_back(c);
  return out;
}

bool preserves_blocks(const Perm& p, const WittModel& m) {
  return std::all_of(m.blocks().begin(), m.blocks().end(),
                     [&](const Block& b) { return m.find(Block::from_mask(p(b.mask()))).has_value(); });
}

std::vector<Perm> find_automorphisms(PointMask points, std::span<const PointMask> blocks) {
  constexpr std::size_t kMasks = std::size_t{1} << kNumPoints;
  std::vector<bool> is_block(kMasks, false);
  std::vector<bool> in_some_block(kMasks, false);
  for (PointMask b : blocks) {
    is_block[b] = true;
    // Enumerate the submasks of b.
    for (PointMask s = b;; s = static_cast<PointMask>((s - 1) & b)) {
      in_some_block[s] = true;
      if (s == 0) break;
    }
  }

  const std::vector<int> domain = indices_of(points);
  const int n = static_cast<int>(domain.size());
  std::vector<std::vector<std::size_t>> containing(kNumPoints);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int p : indices_of(blocks[i])) containing[p].push_back(i);

  std::vector<PointMask> image(blocks.size(), 0);
  std::vector<int> remaining(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) remaining[i] = popcount(blocks[i]);

  Perm current = Perm::identity();
  PointMask used = 0;
  std::vector<Perm> found;

  std::function<void(int)> assign = [&](int depth) {
    if (depth == n) {
      found.push_back(current);
      return;
    }
    const int p = domain[depth];
    for (int y : domain) {
      if (used & bit(y)) continue;
      bool ok = true;
      std::size_t touched = 0;
      for (std::size_t b : containing[p]) {
        image[b] |= bit(y);
        --remaining[b];
        ++touched;
        const bool complete = remaining[b] == 0;
        if (!in_some_block[image[b]] || (complete && !is_block[image[b]])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        current.images[p] = static_cast<std::uint8_t>(y);
        used |= bit(y);
        assign(depth + 1);
        used &= static_cast<PointMask>(~bit(y));
      }
      for (std::size_t i = 0; i < touched; ++i) {
        const std::size_t b = containing[p][i];
        image[b] &= static_cast<PointMask>(~bit(y));
        ++remaining[b];
      }
    }
    current.images[p] = static_cast<std::uint8_t>(p);
  };
  assign(0);
  return found;
}

std::size_t closure_order(std::span<const Perm> generators) {
  std::unordered_set<std::uint64_t> seen{Perm::identity().key()};
  std::deque<Perm> queue{Perm::identity()};
  while (!queue.empty()) {
    const Perm g = queue.front();
    queue.pop_front();
    for (const Perm& s : generators) {
      const Perm h = g.then(s);
      if (seen.insert(h.key()).second) queue.push_back(h);
    }
  }
  return seen.size();
}

bool sharply_transitive(std::span<const Perm> elements, PointMask points, int k) {
  const std::vector<int> domain = indices_of(points);
  const int n = static_cast<int>(domain.size());
  if (k < 0 || k > n) return false;
  std::size_t tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= static_cast<std::size_t>(n - i);
  if (elements.size() != tuples) return false;

  std::unordered_set<std::uint64_t> images;
  for (const Perm& g : elements) {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i) {
      const int y = g(domain[i]);
      if (!(points & bit(y))) return false;
      key = key * 16 + static_cast<std::uint64_t>(y);
    }
    if (!images.insert(key).second) return false;
  }
  return true;
}

bool AutomorphismGroup::contains(const Perm& p) const { return std::binary_search(elements.begin(), elements.end(), p); }

AutomorphismGroup automorphism_group(const WittModel& m) {
  std::vector<PointMask> blocks;
  for (const Block& b : m.blocks()) blocks.push_back(b.mask());

  AutomorphismGroup g;
  g.elements = find_automorphisms(m.w_mask(), blocks);
  std::sort(g.elements.begin(), g.elements.end());
  g.summary.order = g.elements.size();
  g.summary.sharply_5_transitive = sharply_transitive(g.elements, m.w_mask(), 5);

  // Greedy generating set: add the first element outside the current subgroup.
  std::unordered_set<std::uint64_t> subgroup{Perm::identity().key()};
  for (const Perm& p : g.elements) {
    if (subgroup.size() == g.elements.size()) break;
    if (subgroup.contains(p.key())) continue;
    g.summary.generators.push_back(p);
    std::deque<Perm> queue{Perm::identity()};
    subgroup = {Perm::identity().key()};
    while (!queue.empty()) {
      const Perm x = queue.front();
      queue.pop_front();
      for (const Perm& s : g.summary.generators) {
        const Perm y = x.then(s);
        if (subgroup.insert(y.key()).second) queue.push_back(y);
      }
    }
  }
  return g;
}

Perm elliptic_involution(const PlaneModel& plane, int line, int x, int u) {
  const ProjLine& g = plane.line(line);
  if (x == u) throw std::domain_error("elliptic_involution: x and u must differ");
  if (!g.contains(x) || !g.contains(u)) throw std::domain_error("elliptic_involution: points must lie on the line");
  std::vector<int> rest;
  for (int p : g.points)
    if (p != x && p != u) rest.push_back(p);
  Perm p = Perm::identity();
  p.images[x] = static_cast<std::uint8_t>(u);
  p.images[u] = static_cast<std::uint8_t>(x);
  p.images[rest[0]] = static_cast<std::uint8_t>(rest[1]);
  p.images[rest[1]] = static_cast<std::uint8_t>(rest[0]);
  return p;
}

namespace {

std::vector<PointMask> restricted_lines(const PlaneModel& plane, int line) {
  const PointMask g = plane.line(line).mask;
  std::vector<PointMask> out;
  for (const ProjLine& l : plane.lines())
    if (l.index != line) out.push_back(l.mask & static_cast<PointMask>(~g));
  return out;
}

}  // namespace

std::vector<Perm> affinities(const PlaneModel& plane, int line) {
  const PointMask g = plane.line(line).mask;
  const PointMask all = static_cast<PointMask>((1u << kNumPoints) - 1);
  return find_automorphisms(all & static_cast<PointMask>(~g), restricted_lines(plane, line));
}

AffinityExtender::AffinityExtender(const PlaneModel& plane, const WittModel& model, const AutomorphismGroup& group,
                                   int line)
    : plane_(&plane), line_(line) {
  const ProjLine& g = plane.line(line);
  if (!g.contains(model.u())) throw std::domain_error("AffinityExtender: line does not pass through U");
  affine_ = static_cast<PointMask>(((1u << kNumPoints) - 1) & ~g.mask);

  for (const Collineation& c : all_collineations()) {
    if (c.action(g.mask) != g.mask) continue;
    kappa_index_.emplace(restriction_key(c.action), kappas_.size());
    kappas_.push_back(c);
  }
  for (const Perm& p : group.elements) {
    if (p(affine_) != affine_) continue;
    beta_index_.emplace(restriction_key(p), betas_.size());
    betas_.push_back(p);
  }
}

std::uint64_t AffinityExtender::restriction_key(const Perm& p) const {
  std::uint64_t k = 0;
  for (int i : indices_of(affine_)) k = k * 16 + p(i);
  return k;
}

Extension AffinityExtender::extend(const Perm& alpha) const {
  const ProjLine& g = plane_->line(line_);
  for (int p : g.points)
    if (alpha(p) != p) throw std::domain_error("extend_affinity: alpha must fix the points of the line");
  if (alpha(affine_) != affine_) throw std::domain_error("extend_affinity: alpha must permute the affine points");
  const std::vector<PointMask> lines = restricted_lines(*plane_, line_);
  for (PointMask l : lines)
    if (std::find(lines.begin(), lines.end(), alpha(l)) == lines.end())
      throw std::domain_error("extend_affinity: alpha is not an affinity");

  const std::uint64_t key = restriction_key(alpha);
  if (kappa_index_.count(key) != 1) throw std::logic_error("extend_affinity: collineation extension is not unique");
  if (beta_index_.count(key) != 1) throw std::logic_error("extend_affinity: automorphism extension is not unique");
  return {kappas_[kappa_index_.find(key)->second], betas_[beta_index_.find(key)->second]};
}

Extension extend_affinity(const PlaneModel& plane, const WittModel& model, const AutomorphismGroup& group, int line,
                          const Perm& alpha) {
  return AffinityExtender(plane, model, group, line).extend(alpha);
}

InvolutionReport verify_involution_formula(const PlaneModel& plane, const WittModel& model, const AutomorphismGroup& group,
                             int line) {
  const AffinityExtender extender(plane, model, group, line);
  const int u = model.u();
  InvolutionReport report;
  report.line = line;

  for (const Perm& alpha : affinities(plane, line)) {
    ++report.affinities;
    const auto [kappa, beta] = extender.extend(alpha);
    const Perm kappa_inv = kappa.action.inverse();
    for (int x : plane.line(line).points) {
      if (x == u) continue;
      ++report.checks;
      const Perm gamma = elliptic_involution(plane, line, x, u);
      const int rhs = kappa_inv.then(gamma).then(kappa.action)(u);
      const InvolutionInstance instance{alpha, x, kappa(x), beta(x)};
      if (beta(x) != rhs) {
        ++report.failures;
        if (!report.first_failure) report.first_failure = instance;
      }
      if (kappa(x) != beta(x)) {
        ++report.kappa_beta_differ;
        if (!report.first_difference) report.first_difference = instance;
      }
    }
  }
  return report;
}

}  // namespace witt
