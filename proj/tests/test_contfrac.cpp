#include <gtest/gtest.h>

#include <limits>
#include <numeric>

#include "contact_census/contfrac.hpp"
#include "contact_census/error.hpp"
#include "oracles.hpp"

using namespace contact_census;

namespace {

// Bottom-up evaluation r0 - 1/(r1 - 1/(...)) with plain fractions.
std::pair<std::int64_t, std::int64_t> evaluate(const std::vector<std::int64_t>& r) {
  std::int64_t num = r.back(), den = 1;
  for (std::size_t i = r.size() - 1; i-- > 0;) {
    // r_i - den/num
    std::int64_t n2 = r[i] * num - den;
    den = num;
    num = n2;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

}  // namespace

TEST(ToCf, Examples) {
  EXPECT_EQ(to_cf(7, 1).coeffs(), (std::vector<std::int64_t>{-7}));
  EXPECT_EQ(to_cf(10, 3).coeffs(), (std::vector<std::int64_t>{-4, -2, -2}));
  EXPECT_EQ(to_cf(2, 1).coeffs(), (std::vector<std::int64_t>{-2}));
}

TEST(ToCf, RejectsExcludedInput) {
  EXPECT_THROW(to_cf(1, 1), Error);
  EXPECT_THROW(to_cf(3, 5), Error);
  EXPECT_THROW(to_cf(6, 4), Error);
  EXPECT_THROW(to_cf(0, 1), Error);
  EXPECT_THROW(NegContFrac({-3, -1}), Error);
  EXPECT_THROW(NegContFrac({}), Error);
}

TEST(ToCf, EntriesAndReconstructionAgreeWithDirectEvaluation) {
  for (std::int64_t p = 2; p <= 200; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      NegContFrac cf = to_cf(p, q);
      for (auto r : cf.coeffs()) ASSERT_LE(r, -2);
      auto [num, den] = evaluate(cf.coeffs());
      ASSERT_EQ(num, -p);
      ASSERT_EQ(den, q);
      ASSERT_EQ(from_cf(cf), Slope(-p, q));
    }
}

TEST(FromCf, Examples) {
  EXPECT_EQ(from_cf(NegContFrac({-2})), Slope(-2, 1));
  EXPECT_EQ(from_cf(NegContFrac({-4, -2, -2})), Slope(-10, 3));
  for (int n = 1; n <= 12; ++n) {
    NegContFrac twos(std::vector<std::int64_t>(n, -2));
    EXPECT_EQ(from_cf(twos), Slope(-(n + 1), n));
  }
}

TEST(CfStep, Examples) {
  EXPECT_EQ(std::get<NegContFrac>(cf_step(NegContFrac({-4, -2, -2}))).coeffs(), (std::vector<std::int64_t>{-3}));
  EXPECT_EQ(std::get<NegContFrac>(cf_step(NegContFrac({-3}))).coeffs(), (std::vector<std::int64_t>{-2}));
  EXPECT_TRUE(std::holds_alternative<TerminalMinusOne>(cf_step(NegContFrac({-2}))));
}

TEST(CfStep, NextSlopeIsAdjacentOnThePath) {
  for (std::int64_t p = 2; p <= 60; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      NegContFrac cf = to_cf(p, q);
      CfStep next = cf_step(cf);
      Slope after = std::holds_alternative<TerminalMinusOne>(next) ? Slope(-1, 1) : from_cf(std::get<NegContFrac>(next));
      EXPECT_TRUE(oracle::adjacent(Slope(-p, q), after)) << p << "/" << q;
      EXPECT_EQ(path_via_cf(p, q)[1], after);
    }
}

TEST(PathViaCf, Examples) {
  EXPECT_EQ(path_via_cf(10, 3), (std::vector<Slope>{Slope(-10, 3), Slope(-3, 1), Slope(-2, 1), Slope(-1, 1)}));
  EXPECT_EQ(path_via_cf(1, 1), std::vector<Slope>{Slope(-1, 1)});
  auto paths = oracle::bfs_to_minus_one(7, 5);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(path_via_cf(7, 5), paths.front());
}

TEST(PathViaCf, MatchesBfsOracle) {
  for (std::int64_t p = 2; p <= 25; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto paths = oracle::bfs_to_minus_one(p, q);
      ASSERT_EQ(paths.size(), 1u) << p << "/" << q;
      EXPECT_EQ(path_via_cf(p, q), paths.front()) << p << "/" << q;
    }
}

TEST(BlockShape, Examples) {
  BlockShape s = block_shape(NegContFrac({-4, -2, -2}));
  EXPECT_EQ(s.sizes, (std::vector<std::int64_t>{2, 0, 1}));
  EXPECT_EQ(s.descriptor_count(), 6);
  for (std::int64_t m = 2; m <= 9; ++m) EXPECT_EQ(block_shape(NegContFrac({-m})).sizes, std::vector<std::int64_t>{m - 1});
  EXPECT_EQ(block_shape(NegContFrac({-2})).sizes, std::vector<std::int64_t>{1});
}

TEST(BlockShape, SizesPartitionThePath) {
  for (std::int64_t p = 2; p <= 80; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      NegContFrac cf = to_cf(p, q);
      auto sizes = block_shape(cf).sizes;
      std::int64_t total = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
      auto path = path_via_cf(p, q);
      EXPECT_EQ(total, static_cast<std::int64_t>(path.size()) - 1);
      auto blocks = slice_blocks(cf);
      ASSERT_EQ(blocks.size(), path.size() - 1);
      for (std::size_t j = 0; j < sizes.size(); ++j)
        EXPECT_EQ(std::count(blocks.begin(), blocks.end(), j), sizes[j]);
    }
}

TEST(ToCf, HugeExpansionsAreRejected) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  try {
    to_cf(big, big - 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
  // Large values with a short expansion are fine.
  EXPECT_EQ(to_cf(big, 1).coeffs(), (std::vector<std::int64_t>{-big}));
  EXPECT_EQ(to_cf(big, 2).size(), 2u);
}
