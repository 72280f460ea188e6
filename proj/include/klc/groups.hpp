#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "klc/eisenstein.hpp"
#include "klc/field.hpp"

namespace klc {

enum class GroupId { SO3, O3, SP2 };
std::string_view to_string(GroupId id);
GroupId parse_group_id(std::string_view s);  // "so3" | "o3" | "sp2"

// Dense 2x2 or 3x3 matrix over GF(q), row-major.
struct SquareMatrix {
  int dim = 3;
  std::array<FieldElement, 9> e{};

  FieldElement at(int i, int j) const { return e[i * dim + j]; }
  FieldElement& at(int i, int j) { return e[i * dim + j]; }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  friend auto operator<=>(const SquareMatrix& x, const SquareMatrix& y) { return x.e <=> y.e; }
};

namespace matrix {

SquareMatrix identity(int dim);
SquareMatrix from_rows(const Field& f, int dim, std::initializer_list<std::uint32_t> encs);
SquareMatrix mul(const Field& f, const SquareMatrix& x, const SquareMatrix& y);
SquareMatrix transpose(const SquareMatrix& x);
FieldElement det(const Field& f, const SquareMatrix& x);
FieldElement trace(const Field& f, const SquareMatrix& x);

}  // namespace matrix

// Bruhat cell of an O(3, q) element: Q sigma_r (B_r\Q) or rho Q sigma_r (B_r\Q).
struct BruhatCell {
  int r = 0;
  bool rho = false;
  friend bool operator==(const BruhatCell&, const BruhatCell&) = default;
};

struct GroupElement {
  SquareMatrix matrix;
  std::optional<BruhatCell> cell;  // absent for SP2
};

// J = [[0,1,0],[1,0,0],[0,0,1]] for O3/SO3; the alternating form
// [[0,1],[-1,0]] for SP2.
SquareMatrix defining_form(const Field& f, GroupId id);
// True iff m satisfies the defining relation of the group
// (w^T J w = J, plus det w = 1 for SO3 and SP2).
bool satisfies_defining_relation(const Field& f, GroupId id, const SquareMatrix& m);

std::uint64_t group_order(std::uint32_t q, GroupId id);

// Gaussian binomial [n choose rr]_q.
mpz_class q_binomial(std::uint32_t q, int n, int rr);
// |B_r \ Q(3, q)| = q^C(rr+1, 2) [1 choose rr]_q.
mpz_class coset_count(std::uint32_t q, int rr);
// Coset representatives of B_r \ Q(3, q) as the h-parameter of Q elements
// with A = 1.
std::vector<FieldElement> coset_representatives(const Field& f, int rr);

// Visits the group in canonical order. For O3 the cells come in the order
// (r=0,Q), (r=1,Q), (r=0,rhoQ), (r=1,rhoQ); SO3 keeps (r=0,Q) and (r=1,rhoQ).
// Inside a cell elements are ordered by (enc A, enc h, coset index). SP2 is
// ordered lexicographically by its entries. Every visited element is checked
// against the defining relation; a violation throws InternalError.
void for_each_group_element(const Field& f, GroupId id, const std::function<void(const GroupElement&)>& fn);

inline constexpr std::uint64_t kMaxMaterializedOrder = 5'000'000;

// Materialized canonical enumeration. Also checks the count against
// group_order and rejects duplicates (InternalError). Throws ScaleError when
// the group has more than kMaxMaterializedOrder elements.
std::vector<GroupElement> enumerate_group(const Field& f, GroupId id);

// Filters all q^(dim^2) matrices by the defining relation, in entry order.
// Feasible only for tiny q: 3^9 matrices at q = 3 for O3/SO3.
std::vector<SquareMatrix> brute_force_group(const Field& f, GroupId id);

// True iff both sequences contain the same matrices with the same multiplicity.
bool same_multiset(std::vector<SquareMatrix> x, std::vector<SquareMatrix> y);

// Checks u*v against the defining relation for `pairs` random pairs.
bool closure_spot_check(const Field& f, GroupId id, const std::vector<GroupElement>& elems, int pairs,
                        std::uint64_t seed);

// N_G(beta) = #{w in G : Tr w = beta}, indexed by enc(beta).
struct TraceSpectrum {
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
  bool all_positive() const;
  friend bool operator==(const TraceSpectrum&, const TraceSpectrum&) = default;
};

TraceSpectrum trace_spectrum_enumerated(const Field& f, GroupId id);
TraceSpectrum trace_spectrum_from(const Field& f, const std::vector<GroupElement>& elems);
// n_1(beta) = q^2 - q + q d(beta-1); n_2(beta) = 2q^2 - 2q + q d(beta-1) + q d(beta+1);
// n_sp(beta) = q^2 - q + q d(beta), with d = delta(1, q; .).
TraceSpectrum trace_spectrum_closed_form(const Field& f, GroupId id);

struct SpectrumReport {
  GroupId group;
  TraceSpectrum enumerated;
  TraceSpectrum closed_form;
  bool agree;
  bool all_positive;
};
SpectrumReport trace_spectrum(const Field& f, GroupId id);

struct GaussSumReport {
  GroupId group;
  FieldElement a;
  CycInt from_spectrum;  // sum_beta N(beta) lambda(a beta)
  CycInt closed_form;
  bool equal;
};
// Closed forms: SO3 -> lambda(a) q K(a^2); O3 -> 2 Re(lambda(a)) q K(a^2);
// SP2 -> q K(a^2).
CycInt gauss_sum_closed_form(const Field& f, GroupId id, FieldElement a);
GaussSumReport gauss_sum(const Field& f, GroupId id, FieldElement a, const TraceSpectrum& spectrum);
GaussSumReport gauss_sum(const Field& f, GroupId id, FieldElement a);

}  // namespace klc
