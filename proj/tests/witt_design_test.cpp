#include "witt/witt_design.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "witt/symmetry.hpp"

namespace witt {
namespace {

const PlaneModel& plane = PlaneModel::get();

const WittModel& model() {
  static const WittModel m = WittModel::construct();
  return m;
}

Block block(std::array<int, 6> pts) { return Block{pts}; }

std::vector<int> w_points(int u) {
  std::vector<int> w;
  for (int p = 0; p < kNumPoints; ++p)
    if (p != u) w.push_back(p);
  return w;
}

TEST(BlockOfFormTest, Examples) {
  EXPECT_EQ(block_of_form(QuadraticForm::from_ints({1, 0, 0, 1, 0, 1}), 4), block({2, 3, 5, 6, 7, 10}));
  EXPECT_EQ(block_of_form(QuadraticForm::from_ints({0, 0, 0, 1, 0, 2}), 4), block({2, 3, 8, 9, 11, 12}));
  EXPECT_EQ(block_of_form(QuadraticForm::from_ints({0, 0, 0, 1, 0, 1}), 4), std::nullopt);
  EXPECT_THROW(block_of_form(QuadraticForm{}, 4), std::domain_error);
}

TEST(BlockOfFormTest, FormPairCollapse) {
  for (const QuadraticForm& q : QuadraticForm::all_nonzero()) ASSERT_EQ(block_of_form(q, 4), block_of_form(q.scaled(2), 4));
}

TEST(BlockOfFormTest, CandidateSizesForEveryU) {
  // Candidate sets have 0, 3 or 6 points for every U and form; none of size 4 or 5.
  const auto pts = oracle::points();
  for (int u = 0; u < kNumPoints; ++u) {
    for (int code = 1; code < 729; ++code) {
      const QuadraticForm q = QuadraticForm::from_index(code);
      oracle::Coeffs a{};
      for (int i = 0; i < 6; ++i) a[i] = q.coeffs[i].value();
      int size = 0;
      for (int x = 0; x < kNumPoints; ++x)
        size += x != u && oracle::eval(a, pts[x]) == oracle::mod3(2 * oracle::eval(a, pts[u]));
      ASSERT_TRUE(size == 0 || size == 3 || size == 6) << "u=" << u << " q=" << to_string(q);
      ASSERT_NO_THROW(block_of_form(q, u));
    }
  }
}

TEST(ConstructTest, MatchesDefinitionOracle) {
  const WittModel& m = model();
  ASSERT_EQ(m.blocks().size(), 132u);
  const auto expected = oracle::witt_blocks(4);
  ASSERT_EQ(expected.size(), 132u);
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_EQ(std::vector<int>(m.blocks()[i].points.begin(), m.blocks()[i].points.end()), expected[i]);
  for (const Block& b : m.blocks()) EXPECT_FALSE(b.contains(4));
  EXPECT_EQ(m.w().size(), 12u);
  EXPECT_TRUE(std::is_sorted(m.blocks().begin(), m.blocks().end()));
}

TEST(ConstructTest, Census) {
  std::map<std::string, int> census;
  for (std::size_t i = 0; i < model().blocks().size(); ++i) ++census[class_name(model().class_at(i))];
  EXPECT_EQ(census["conic_exterior"], 54);
  EXPECT_EQ(census["symmetric_difference"], 36);
  EXPECT_EQ(census["line_pair_minus_u"], 42);
}

TEST(ConstructTest, EveryUGivesADesignIsomorphicByCollineation) {
  const WittModel m0 = WittModel::construct(0);
  ASSERT_EQ(m0.blocks().size(), 132u);
  // Any collineation moving #0 to #4 relabels one model onto the other.
  int checked = 0;
  for (const Collineation& c : all_collineations()) {
    if (c(0) != 4) continue;
    std::set<Block> image;
    for (const Block& b : m0.blocks()) image.insert(Block::from_mask(c.action(b.mask())));
    ASSERT_EQ(image, std::set<Block>(model().blocks().begin(), model().blocks().end()));
    if (++checked == 20) break;
  }
  EXPECT_EQ(checked, 20);
}

TEST(ConstructTest, SteinerPropertyForEveryU) {
  for (int u = 0; u < kNumPoints; ++u) {
    const WittModel m = WittModel::construct(u);
    ASSERT_EQ(m.blocks().size(), 132u);
    int subsets = 0;
    oracle::for_each_combination(w_points(u), 5, [&](const std::vector<int>& d) {
      ++subsets;
      int containing = 0;
      const PointMask dm = mask_of(d);
      for (const Block& b : m.blocks()) containing += (b.mask() & dm) == dm;
      ASSERT_EQ(containing, 1);
    });
    ASSERT_EQ(subsets, 792);
  }
}

TEST(ClassifyBlockTest, Examples) {
  const WittModel& m = model();
  const BlockClass& conic = m.classify_block(block({2, 3, 5, 6, 7, 10}));
  ASSERT_TRUE(std::holds_alternative<ConicExterior>(conic));
  EXPECT_EQ(std::get<ConicExterior>(conic).conic, QuadraticForm::from_ints({1, 0, 0, 1, 0, 1}));

  const BlockClass& sym = m.classify_block(block({7, 8, 9, 10, 11, 12}));
  ASSERT_TRUE(std::holds_alternative<SymmetricDifference>(sym));
  const auto [r, s] = std::get<SymmetricDifference>(sym);
  // x0 = x1 has dual (1,2,0); x0 = -x1 has dual (1,1,0).
  EXPECT_EQ(std::set<int>({r, s}), std::set<int>({plane.line_with_dual(Vec3{{1, 2, 0}}).index,
                                                  plane.line_with_dual(Vec3{{1, 1, 0}}).index}));
  EXPECT_EQ(plane.meet(r, s).index, 0);

  const BlockClass& pair = m.classify_block(block({2, 3, 8, 9, 11, 12}));
  ASSERT_TRUE(std::holds_alternative<LinePairMinusU>(pair));
  const auto [g, h] = std::get<LinePairMinusU>(pair);
  EXPECT_EQ(std::set<int>({g, h}), std::set<int>({plane.line_with_dual(Vec3{{0, 1, 2}}).index,
                                                  plane.line_with_dual(Vec3{{0, 1, 1}}).index}));
  EXPECT_TRUE(plane.line(g).contains(4) && plane.line(h).contains(4));

  EXPECT_THROW(m.classify_block(block({0, 1, 2, 3, 5, 7})), std::domain_error);
}

TEST(ClassifyBlockTest, WitnessesAreSound) {
  const WittModel& m = model();
  const int u = m.u();
  for (std::size_t i = 0; i < m.blocks().size(); ++i) {
    const BlockClass& c = m.class_at(i);
    ASSERT_EQ(rederive(c, u), m.blocks()[i].mask());
    if (const auto* e = std::get_if<ConicExterior>(&c)) {
      ASSERT_TRUE(conic_geometry(e->conic).internal & bit(u));
    } else if (const auto* d = std::get_if<SymmetricDifference>(&c)) {
      ASSERT_NE(d->r, d->s);
      ASSERT_FALSE(plane.line(d->r).contains(u) || plane.line(d->s).contains(u));
    } else {
      const auto& p = std::get<LinePairMinusU>(c);
      ASSERT_NE(p.g, p.h);
      ASSERT_TRUE(plane.line(p.g).contains(u) || plane.line(p.h).contains(u));
    }
  }
}

TEST(BlockThroughTest, Examples) {
  const WittModel& m = model();
  EXPECT_EQ(m.block_through(std::vector<int>{2, 3, 5, 6, 7}), block({2, 3, 5, 6, 7, 10}));
  EXPECT_EQ(m.block_through(std::vector<int>{2, 3, 8, 9, 11}), block({2, 3, 8, 9, 11, 12}));
  // Brute-force scan over the definition-level blocks.
  const std::vector<int> d{0, 2, 3, 5, 6};
  std::vector<std::vector<int>> hits;
  for (const auto& b : oracle::witt_blocks(4))
    if (std::includes(b.begin(), b.end(), d.begin(), d.end())) hits.push_back(b);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], (std::vector<int>{0, 1, 2, 3, 5, 6}));
  EXPECT_EQ(m.block_through(d), block({0, 1, 2, 3, 5, 6}));
}

TEST(BlockThroughTest, Errors) {
  const WittModel& m = model();
  EXPECT_THROW(m.block_through(std::vector<int>{2, 3, 5, 6}), std::domain_error);
  EXPECT_THROW(m.block_through(std::vector<int>{2, 3, 5, 6, 6}), std::domain_error);
  EXPECT_THROW(m.block_through(std::vector<int>{2, 3, 4, 6, 7}), std::domain_error);
  EXPECT_THROW(m.block_through(std::vector<int>{2, 3, 5, 6, 13}), std::domain_error);
}

TEST(SolveBlockThroughTest, CaseA) {
  const std::vector<int> d{2, 3, 5, 6, 7};
  const SolveResult r = solve_block_through(d);
  EXPECT_EQ(r.proof_case, ProofCase::A);
  EXPECT_EQ(r.block, block({2, 3, 5, 6, 7, 10}));
  EXPECT_EQ(r.solution_dim, 1);
  EXPECT_FALSE(r.exclusion_det.is_zero());
  EXPECT_EQ(oracle::block_equation_solutions(d, 4).size(), 3u);
}

TEST(SolveBlockThroughTest, CaseB) {
  const std::vector<int> d{2, 3, 8, 9, 11};
  const SolveResult r = solve_block_through(d);
  EXPECT_EQ(r.proof_case, ProofCase::B);
  EXPECT_EQ(r.block, block({2, 3, 8, 9, 11, 12}));
  EXPECT_TRUE(r.form.coeffs[0].is_zero());  // a00 = q(U) = 0
  EXPECT_EQ(classify(r.form).kind, QuadricKind::LinePair);
  // Q0 is the line pair x1 = x2, x1 = -x2, and contains U.
  const PointMask pair = plane.line_with_dual(Vec3{{0, 1, 2}}).mask | plane.line_with_dual(Vec3{{0, 1, 1}}).mask;
  EXPECT_EQ(level_set(r.form, 0), pair);
  EXPECT_TRUE(pair & bit(4));
  EXPECT_TRUE(r.exclusion_det.is_zero());
  // Oracle: some nonzero solution of the block equation has a00 = 0.
  const auto sols = oracle::block_equation_solutions(d, 4);
  EXPECT_TRUE(std::any_of(sols.begin(), sols.end(), [](const oracle::Coeffs& a) {
    return a[0] == 0 && std::any_of(a.begin(), a.end(), [](int x) { return x != 0; });
  }));
}

TEST(SolveBlockThroughTest, ExclusionMatrixForStandardU) {
  // For U = (1,0,0) the exclusion matrix has columns x0x1, x0x2, x1^2, x1x2, x2^2.
  const std::vector<int> d{2, 3, 5, 6, 7};
  const Mat e = exclusion_matrix(d, 4);
  for (int r = 0; r < 5; ++r) {
    const Vec3& x = plane.point(d[r]).rep;
    const std::array<Scalar, 5> expected{x[0] * x[1], x[0] * x[2], x[1] * x[1], x[1] * x[2], x[2] * x[2]};
    for (int c = 0; c < 5; ++c) EXPECT_EQ(e(r, c), expected[c]);
  }
}

TEST(SolveBlockThroughTest, AgreesWithLookupAndDichotomyHolds) {
  for (int u : {4, 0, 8}) {
    const WittModel m = WittModel::construct(u);
    int case_a = 0, case_b = 0;
    oracle::for_each_combination(w_points(u), 5, [&](const std::vector<int>& d) {
      const SolveResult r = solve_block_through(d, u);
      ASSERT_EQ(r.block, m.block_through(d));
      // Case A certificate (nonzero determinant) and case B certificate
      // (a solution with q(U) = 0) are mutually exclusive and exhaustive.
      const bool has_b = !null_space(block_system(d, u).with_row(monomials(plane.point(u).rep))).empty();
      ASSERT_NE(!r.exclusion_det.is_zero(), has_b);
      if (r.proof_case == ProofCase::A) {
        ++case_a;
        ASSERT_FALSE(r.exclusion_det.is_zero());
        ASSERT_EQ(r.solution_dim, 1);
      } else {
        ++case_b;
        ASSERT_EQ(evaluate(r.form, plane.point(u)), Scalar(0));
        ASSERT_EQ(classify(r.form).kind, QuadricKind::LinePair);
        ASSERT_TRUE(level_set(r.form, 0) & bit(u));
      }
    });
    EXPECT_EQ(case_a + case_b, 792);
    EXPECT_GT(case_a, 0);
    EXPECT_GT(case_b, 0);
  }
}

TEST(SolveBlockThroughTest, Errors) {
  EXPECT_THROW(solve_block_through(std::vector<int>{2, 3, 4, 6, 7}), std::domain_error);
  EXPECT_THROW(solve_block_through(std::vector<int>{2, 3, 5, 6}), std::domain_error);
  EXPECT_THROW(solve_block_through(std::vector<int>{2, 2, 5, 6, 7}), std::domain_error);
}

}  // namespace
}  // namespace witt
