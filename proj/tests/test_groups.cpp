#include <gtest/gtest.h>

#include <map>

#include "frozen.hpp"
#include "klc/errors.hpp"
#include "klc/groups.hpp"

using namespace klc;

namespace {

constexpr GroupId kGroups[] = {GroupId::SO3, GroupId::O3, GroupId::SP2};

}  // namespace

TEST(Groups, Orders) {
  EXPECT_EQ(group_order(3, GroupId::SO3), 24u);
  EXPECT_EQ(group_order(3, GroupId::O3), 48u);
  EXPECT_EQ(group_order(3, GroupId::SP2), 24u);
  EXPECT_EQ(group_order(9, GroupId::O3), 1440u);
  const auto& orders = frozen::at_q(3).at("orders");
  for (GroupId id : kGroups) EXPECT_EQ(group_order(3, id), orders.at(std::string(to_string(id))).get<std::uint64_t>());
}

TEST(Groups, ParseIds) {
  EXPECT_EQ(parse_group_id("o3"), GroupId::O3);
  EXPECT_EQ(to_string(GroupId::SP2), "sp2");
  EXPECT_THROW(parse_group_id("gl2"), ConfigError);
}

TEST(Groups, QBinomialAndCosets) {
  EXPECT_EQ(q_binomial(3, 1, 0), 1);
  EXPECT_EQ(q_binomial(3, 1, 1), 1);
  EXPECT_EQ(q_binomial(3, 4, 2), 130);  // (3^4-1)(3^3-1)/((3^2-1)(3-1))
  EXPECT_EQ(coset_count(9, 0), 1);
  EXPECT_EQ(coset_count(9, 1), 9);
  const Field f(2);
  EXPECT_EQ(coset_representatives(f, 0).size(), 1u);
  EXPECT_EQ(coset_representatives(f, 1).size(), 9u);
  EXPECT_THROW(coset_count(9, 2), DomainError);
}

TEST(Groups, MatrixHelpers) {
  const Field f(1);
  const SquareMatrix j = defining_form(f, GroupId::O3);
  EXPECT_EQ(matrix::mul(f, j, j), matrix::identity(3));
  EXPECT_EQ(matrix::det(f, j), f.from_int(-1));
  EXPECT_EQ(matrix::trace(f, j), f.one());
  const SquareMatrix a = matrix::from_rows(f, 2, {1, 2, 0, 1});
  EXPECT_EQ(matrix::det(f, a), f.one());
  EXPECT_EQ(matrix::transpose(matrix::transpose(a)), a);
}

// The Bruhat enumeration must reproduce the brute-force filter of all q^(n^2) matrices.
TEST(Groups, EnumerationEqualsBruteForceAtQ3) {
  const Field f(1);
  for (GroupId id : kGroups) {
    std::vector<SquareMatrix> bruhat;
    for (const auto& g : enumerate_group(f, id)) bruhat.push_back(g.matrix);
    const auto brute = brute_force_group(f, id);
    EXPECT_EQ(brute.size(), group_order(3, id));
    EXPECT_TRUE(same_multiset(bruhat, brute)) << to_string(id);
  }
}

TEST(Groups, SameMultisetDetectsDifferences) {
  const Field f(1);
  auto brute = brute_force_group(f, GroupId::SO3);
  auto shorter = brute;
  shorter.pop_back();
  EXPECT_FALSE(same_multiset(brute, shorter));
  shorter.push_back(brute.front());
  EXPECT_FALSE(same_multiset(brute, shorter));
}

class GroupScale : public ::testing::TestWithParam<int> {};

TEST_P(GroupScale, EnumerationIsDistinctClosedAndValid) {
  const Field f(GetParam());
  for (GroupId id : kGroups) {
    const auto elems = enumerate_group(f, id);
    ASSERT_EQ(elems.size(), group_order(f.size(), id));
    EXPECT_TRUE(closure_spot_check(f, id, elems, 100, 0)) << to_string(id);
    for (const auto& g : elems) {
      ASSERT_TRUE(satisfies_defining_relation(f, id, g.matrix));
      ASSERT_EQ(g.cell.has_value(), id != GroupId::SP2);
    }
  }
}

TEST_P(GroupScale, CellSizes) {
  const Field f(GetParam());
  const std::uint64_t q = f.size();
  std::map<std::pair<int, bool>, std::uint64_t> cells;
  for (const auto& g : enumerate_group(f, GroupId::O3)) ++cells[{g.cell->r, g.cell->rho}];
  // |Q| = (q - 1) q; cell r=1 multiplies by q coset representatives.
  EXPECT_EQ((cells[{0, false}]), (q - 1) * q);
  EXPECT_EQ((cells[{1, false}]), (q - 1) * q * q);
  EXPECT_EQ((cells[{0, true}]), (q - 1) * q);
  EXPECT_EQ((cells[{1, true}]), (q - 1) * q * q);
  for (const auto& g : enumerate_group(f, GroupId::SO3)) {
    const BruhatCell c = *g.cell;
    ASSERT_TRUE((c == BruhatCell{0, false}) || (c == BruhatCell{1, true}));
  }
}

TEST_P(GroupScale, StreamingAgreesWithMaterialized) {
  const Field f(GetParam());
  const auto elems = enumerate_group(f, GroupId::O3);
  std::size_t i = 0;
  bool same = true;
  for_each_group_element(f, GroupId::O3, [&](const GroupElement& g) { same = same && g.matrix == elems[i++].matrix; });
  EXPECT_TRUE(same);
  EXPECT_EQ(i, elems.size());
}

TEST_P(GroupScale, TraceSpectraMatchClosedForms) {
  const Field f(GetParam());
  for (GroupId id : kGroups) {
    const SpectrumReport rep = trace_spectrum(f, id);
    EXPECT_TRUE(rep.agree) << to_string(id);
    EXPECT_TRUE(rep.all_positive) << to_string(id);
    EXPECT_EQ(rep.enumerated.total(), group_order(f.size(), id));
    EXPECT_EQ(trace_spectrum_from(f, enumerate_group(f, id)), rep.enumerated);
  }
}

TEST_P(GroupScale, GaussSumsMatchClosedForms) {
  const Field f(GetParam());
  for (GroupId id : kGroups) {
    const TraceSpectrum s = trace_spectrum_enumerated(f, id);
    for (auto a : f.units()) {
      const GaussSumReport rep = gauss_sum(f, id, a, s);
      ASSERT_TRUE(rep.equal) << to_string(id) << " a=" << a.enc;
      if (id != GroupId::SO3) {
        ASSERT_TRUE(rep.from_spectrum.is_rational());
      }
    }
  }
}

// Fourier inversion: q N(beta) = |G| + sum_{a != 0} lambda(-a beta) G(a).
TEST_P(GroupScale, SpectrumRecoveredFromGaussSums) {
  const Field f(GetParam());
  for (GroupId id : kGroups) {
    const TraceSpectrum s = trace_spectrum_enumerated(f, id);
    for (auto beta : f.elements()) {
      CycInt total(static_cast<long>(group_order(f.size(), id)));
      for (auto a : f.units()) total += lambda_char(f, f.neg(f.mul(a, beta))) * gauss_sum(f, id, a, s).closed_form;
      ASSERT_EQ(total, CycInt(mpz_class(f.size()) * s.counts[beta.enc])) << to_string(id) << " beta=" << beta.enc;
    }
  }
}

TEST_P(GroupScale, DeterminantSplitsO3) {
  const Field f(GetParam());
  std::vector<SquareMatrix> det_one, det_minus_one;
  for (const auto& g : enumerate_group(f, GroupId::O3))
    (matrix::det(f, g.matrix) == f.one() ? det_one : det_minus_one).push_back(g.matrix);
  std::vector<SquareMatrix> so3;
  for (const auto& g : enumerate_group(f, GroupId::SO3)) so3.push_back(g.matrix);
  EXPECT_TRUE(same_multiset(det_one, so3));
  EXPECT_EQ(det_minus_one.size(), so3.size());
}

INSTANTIATE_TEST_SUITE_P(SmallFields, GroupScale, ::testing::Values(1, 2, 3));

TEST(Groups, SpectraAgainstOracle) {
  const Field f1(1);
  const auto& s3 = frozen::at_q(3).at("spectra");
  const Field f2(2);
  const auto& s9 = frozen::at_q(9).at("closed_spectra");
  for (GroupId id : kGroups) {
    const std::string key(to_string(id));
    EXPECT_EQ(trace_spectrum_enumerated(f1, id).counts, s3.at(key).get<std::vector<std::uint64_t>>());
    EXPECT_EQ(trace_spectrum_enumerated(f2, id).counts, s9.at(key).get<std::vector<std::uint64_t>>());
  }
  EXPECT_EQ(trace_spectrum_enumerated(f1, GroupId::SO3).counts, (std::vector<std::uint64_t>{9, 6, 9}));
  EXPECT_EQ(trace_spectrum_enumerated(f1, GroupId::O3).counts, (std::vector<std::uint64_t>{18, 15, 15}));
}

TEST(Groups, GaussSumAnchorsAtQ3) {
  const Field f(1);
  EXPECT_EQ(gauss_sum(f, GroupId::SO3, f.one()).from_spectrum, CycInt(0, -3));
  EXPECT_EQ(gauss_sum(f, GroupId::O3, f.one()).from_spectrum, CycInt(3));
  EXPECT_THROW(gauss_sum(f, GroupId::O3, f.zero()), DomainError);
}

TEST(Groups, LargeGroupsStreamInsteadOfMaterializing) {
  const Field f(5);  // |O(3, 243)| = 28,697,328
  EXPECT_THROW(enumerate_group(f, GroupId::O3), ScaleError);
  EXPECT_THROW(brute_force_group(Field(2), GroupId::O3), ScaleError);
}
