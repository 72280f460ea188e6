#include <gtest/gtest.h>

#include "frozen.hpp"
#include "klc/codes.hpp"
#include "klc/errors.hpp"

using namespace klc;

namespace {

constexpr CodeId kCodes[] = {CodeId::SO3, CodeId::O3, CodeId::SP2};

const nlohmann::json& oracle_code(unsigned q, CodeId id) {
  return frozen::at_q(q).at("codes").at(std::string(to_string(id)));
}

// Naive coefficients of (1 + 2y)^(n - w) (1 - y)^w by repeated multiplication.
std::vector<mpz_class> naive_kernel(std::uint64_t n, std::uint64_t w) {
  std::vector<mpz_class> p{1};
  auto times = [&](long c) {
    std::vector<mpz_class> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + 1] += c * p[i];
    }
    p = std::move(next);
  };
  for (std::uint64_t i = 0; i < n - w; ++i) times(2);
  for (std::uint64_t i = 0; i < w; ++i) times(-1);
  return p;
}

}  // namespace

TEST(Codes, LengthsAndIds) {
  EXPECT_EQ(code_length(3, CodeId::SO3), 24u);
  EXPECT_EQ(code_length(3, CodeId::O3), 48u);
  EXPECT_EQ(code_length(9, CodeId::SP2), 720u);
  EXPECT_EQ(group_of(CodeId::O3), GroupId::O3);
  EXPECT_EQ(parse_code_id("sp2"), CodeId::SP2);
  EXPECT_THROW(parse_code_id("x"), ConfigError);
}

TEST(Codes, MacWilliamsKernelMatchesNaiveExpansion) {
  for (std::uint64_t n : {1u, 5u, 24u, 48u})
    for (std::uint64_t w = 0; w <= n; w += (n > 10 ? 7 : 1)) ASSERT_EQ(macwilliams_kernel(n, w), naive_kernel(n, w));
  EXPECT_THROW(macwilliams_kernel(3, 4), DomainError);
}

TEST(Codes, Stirling2) {
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(5, 3), 25);
  EXPECT_EQ(stirling2(3, 5), 0);
  for (int h = 1; h <= 8; ++h) {
    // sum_t S(h, t) is the Bell number; check x^h = sum_t S(h,t) x(x-1)...(x-t+1) at x = 7.
    mpz_class total = 0, falling = 1;
    for (int t = 0; t <= h; ++t) {
      total += stirling2(h, t) * falling;
      falling *= 7 - t;
    }
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 7, h);
    ASSERT_EQ(total, power);
  }
}

class CodeScale : public ::testing::TestWithParam<int> {};

TEST_P(CodeScale, DualCodewordsAgainstOracle) {
  const Field f(GetParam());
  for (CodeId id : kCodes) {
    const CodeData code(f, id);
    EXPECT_EQ(code.length(), code_length(f.size(), id));
    EXPECT_TRUE(dual_map_injective(code));
    std::vector<std::uint64_t> weights;
    for (auto a : f.elements()) weights.push_back(dual_codeword(code, a).weight());
    std::sort(weights.begin(), weights.end());
    EXPECT_EQ(weights, oracle_code(f.size(), id).at("dual_weights").get<std::vector<std::uint64_t>>());
    EXPECT_EQ(dual_spectrum(code).total(), f.size());
  }
}

TEST_P(CodeScale, DualWeightFormula) {
  const Field f(GetParam());
  for (CodeId id : {CodeId::SO3, CodeId::O3}) {
    const CodeData code(f, id);
    for (auto a : f.units()) ASSERT_EQ(mpz_class(dual_codeword(code, a).weight()), dual_weight_formula(f, id, a));
  }
  EXPECT_THROW(dual_weight_formula(f, CodeId::SP2, f.one()), DomainError);
}

TEST_P(CodeScale, DpAgreesWithMacWilliamsAndOracle) {
  const Field f(GetParam());
  for (CodeId id : kCodes) {
    const CodeData code(f, id);
    const WeightDistribution dp = weight_distribution_dp(f, id);
    const WeightDistribution mw = weight_distribution_macwilliams(code);
    ASSERT_EQ(dp.counts, mw.counts) << to_string(id);
    const auto& o = oracle_code(f.size(), id);
    const auto head = frozen::big(o.at("head"));
    for (std::size_t j = 0; j < head.size(); ++j) EXPECT_EQ(dp.at(j), head[j]) << to_string(id) << " j=" << j;
    EXPECT_EQ(dp.total(), mpz_class(o.at("total").get<std::string>()));
    mpz_class size;
    mpz_ui_pow_ui(size.get_mpz_t(), 3, code.length() - f.exponent());
    EXPECT_EQ(dp.total(), size);
    EXPECT_TRUE(membership_spot_check(code, dp, 1000, 0)) << to_string(id);
  }
}

TEST_P(CodeScale, TruncatedDpIsPrefix) {
  const Field f(GetParam());
  const WeightDistribution full = weight_distribution_dp(f, CodeId::O3);
  const WeightDistribution part = weight_distribution_dp(f, CodeId::O3, 6);
  ASSERT_EQ(part.truncated_at, std::optional<std::uint64_t>(6));
  for (std::uint64_t j = 0; j <= 6; ++j) EXPECT_EQ(part.at(j), full.at(j));
  EXPECT_THROW(part.at(7), DomainError);
}

TEST_P(CodeScale, PlessIdentity) {
  const Field f(GetParam());
  for (CodeId id : kCodes) {
    const CodeData code(f, id);
    const WeightDistribution dist = weight_distribution_macwilliams(code);
    const DualSpectrum dual = dual_spectrum(code);
    const auto sums = frozen::big(oracle_code(f.size(), id).at("power_sums"));
    for (int h = 0; h <= 4; ++h) {
      const PlessReport rep = pless_check(dist, dual, f.exponent(), h);
      ASSERT_TRUE(rep.equal) << to_string(id) << " h=" << h;
      if (h >= 1) {
        ASSERT_EQ(rep.lhs, sums[h - 1]);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(FullSpectra, CodeScale, ::testing::Values(1, 2));

TEST(Codes, FullWeightDistributionsAtQ3) {
  const Field f(1);
  for (CodeId id : kCodes)
    EXPECT_EQ(weight_distribution_dp(f, id).counts, frozen::big(oracle_code(3, id).at("all"))) << to_string(id);
  EXPECT_EQ(weight_distribution_dp(f, CodeId::SO3).at(1), 18);
  EXPECT_EQ(weight_distribution_dp(f, CodeId::O3).at(1), 36);
  EXPECT_EQ(weight_distribution_dp(f, CodeId::SP2).at(1), 12);
}

TEST(Codes, TruncatedOnlyAtLargeLength) {
  const Field f(3);
  EXPECT_THROW(weight_distribution_dp(f, CodeId::O3), ScaleError);
  const WeightDistribution d = weight_distribution_dp(f, CodeId::SO3, 3);
  EXPECT_EQ(d.counts.size(), 4u);
  EXPECT_EQ(d.at(0), 1);
  EXPECT_THROW(pless_check(d, dual_spectrum(CodeData(f, CodeId::SO3)), 3, 1), DomainError);
}

TEST(Codes, DualWeightFormulaRejectsZero) {
  const Field f(1);
  EXPECT_THROW(dual_weight_formula(f, CodeId::SO3, f.zero()), DomainError);
}
