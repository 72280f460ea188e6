#include "klc/field.hpp"

#include <sstream>

#include "klc/errors.hpp"

namespace klc {

namespace poly3 {

namespace {

void trim(Poly3& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int mod3(long long v) { return static_cast<int>(((v % 3) + 3) % 3); }

// Remainder of a modulo the monic polynomial m.
Poly3 rem(Poly3 a, const Poly3& m) {
  trim(a);
  const int dm = degree(m);
  while (degree(a) >= dm) {
    const int shift = degree(a) - dm;
    const int c = a.back();
    for (int k = 0; k <= dm; ++k) a[k + shift] = mod3(a[k + shift] - c * m[k]);
    trim(a);
  }
  return a;
}

}  // namespace

std::uint64_t encode(const Poly3& p) {
  std::uint64_t enc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) enc = enc * 3 + static_cast<std::uint64_t>(*it);
  return enc;
}

Poly3 decode(std::uint64_t enc) {
  Poly3 p;
  while (enc != 0) {
    p.push_back(static_cast<int>(enc % 3));
    enc /= 3;
  }
  return p;
}

int degree(const Poly3& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (p[k] != 0) return k;
  return -1;
}

bool is_irreducible(const Poly3& p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (int fd = 1; 2 * fd <= d; ++fd) {
    // Monic divisors of degree fd: encodings in [3^fd, 2*3^fd).
    std::uint64_t lo = 1;
    for (int k = 0; k < fd; ++k) lo *= 3;
    for (std::uint64_t e = lo; e < 2 * lo; ++e)
      if (degree(rem(p, decode(e))) < 0) return false;
  }
  return true;
}

std::string to_string(const Poly3& p) {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(p); k >= 0; --k) {
    if (p[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (p[k] != 1 || k == 0) os << p[k];
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace poly3

Field::Field(int r, std::optional<Poly3> modulus) : r_(r) {
  if (r < 1 || r > kMaxExponent)
    throw ConfigError("field exponent r=" + std::to_string(r) + " outside [1, " +
                      std::to_string(kMaxExponent) + "]");
  q_ = 1;
  for (int k = 0; k <= r; ++k) {
    pow3_.push_back(q_);
    if (k < r) q_ *= 3;
  }

  if (modulus) {
    Poly3 m = *modulus;
    for (int c : m)
      if (c < 0 || c > 2)
        throw ConfigError("modulus coefficients must lie in {0,1,2}: " + poly3::to_string(m));
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (poly3::degree(m) != r || m.back() != 1)
      throw ConfigError("modulus " + poly3::to_string(m) + " is not monic of degree " +
                        std::to_string(r));
    if (!poly3::is_irreducible(m))
      throw ConfigError("modulus " + poly3::to_string(m) + " is reducible over GF(3)");
    modulus_ = std::move(m);
  } else {
    for (std::uint64_t e = q_;; ++e) {
      Poly3 m = poly3::decode(e);
      if (poly3::is_irreducible(m)) {
        modulus_ = std::move(m);
        break;
      }
    }
  }

  // Smallest-encoding generator of the unit group.
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = mul_reference({x}, {g}).enc;
      ++order;
    } while (x != 1);
    if (order != q_ - 1) continue;
    x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      exp_[k + q_ - 1] = x;
      log_[x] = k;
      x = mul_reference({x}, {g}).enc;
    }
    break;
  }

  trace_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) trace_[x] = static_cast<std::uint8_t>(trace_reference({x}));
}

FieldElement Field::element(std::uint32_t enc) const {
  if (enc >= q_)
    throw DomainError("encoding " + std::to_string(enc) + " is not an element of GF(" +
                      std::to_string(q_) + ")");
  return {enc};
}

FieldElement Field::from_int(long long v) const { return {static_cast<std::uint32_t>(poly3::mod3(v))}; }

FieldElement Field::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(r_))
    throw DomainError("expected " + std::to_string(r_) + " coefficients");
  std::uint32_t enc = 0;
  for (int k = r_ - 1; k >= 0; --k) {
    if (coeffs[k] < 0 || coeffs[k] > 2) throw DomainError("coefficient outside {0,1,2}");
    enc = enc * 3 + static_cast<std::uint32_t>(coeffs[k]);
  }
  return {enc};
}

std::vector<int> Field::coeffs(FieldElement x) const {
  std::vector<int> c(r_);
  std::uint32_t e = x.enc;
  for (int k = 0; k < r_; ++k, e /= 3) c[k] = static_cast<int>(e % 3);
  return c;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t x = 0; x < q_; ++x) out[x] = {x};
  return out;
}

std::vector<FieldElement> Field::units() const {
  std::vector<FieldElement> out(q_ - 1);
  for (std::uint32_t x = 1; x < q_; ++x) out[x - 1] = {x};
  return out;
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
  std::uint32_t a = x.enc, b = y.enc, res = 0;
  for (int k = 0; k < r_ && (a | b); ++k, a /= 3, b /= 3) res += ((a % 3 + b % 3) % 3) * pow3_[k];
  return {res};
}

FieldElement Field::neg(FieldElement x) const {
  std::uint32_t a = x.enc, res = 0;
  for (int k = 0; k < r_ && a; ++k, a /= 3) res += ((3 - a % 3) % 3) * pow3_[k];
  return {res};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  return {exp_[log_[x.enc] + log_[y.enc]]};
}

FieldElement Field::inv(FieldElement x) const {
  if (x.is_zero()) throw DomainError("inverse of zero in GF(" + std::to_string(q_) + ")");
  return {exp_[(q_ - 1 - log_[x.enc]) % (q_ - 1)]};
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.is_zero()) return zero();
  const std::uint64_t k = (static_cast<std::uint64_t>(log_[x.enc]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[k]};
}

FieldElement Field::scale(long long c, FieldElement x) const {
  switch (poly3::mod3(c)) {
    case 0:
      return zero();
    case 1:
      return x;
    default:
      return neg(x);
  }
}

bool Field::is_square(FieldElement x) const {
  if (x.is_zero()) throw DomainError("square class of zero is undefined");
  return pow(x, (q_ - 1) / 2) == one();
}

FieldElement Field::mul_reference(FieldElement x, FieldElement y) const {
  const auto a = coeffs(x);
  const auto b = coeffs(y);
  Poly3 prod(2 * r_, 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % 3;
  Poly3 red = poly3::rem(std::move(prod), modulus_);
  red.resize(r_, 0);
  return from_coeffs(red);
}

int Field::trace_reference(FieldElement x) const {
  FieldElement sum = zero();
  FieldElement frob = x;
  for (int k = 0; k < r_; ++k) {
    sum = add(sum, frob);
    frob = mul_reference(mul_reference(frob, frob), frob);
  }
  if (sum.enc >= 3)
    throw InternalError("trace of " + std::to_string(x.enc) + " left the prime field");
  return static_cast<int>(sum.enc);
}

std::string Field::describe_modulus() const { return poly3::to_string(modulus_); }

}  // namespace klc
