#include "klc/eisenstein.hpp"

#include "klc/errors.hpp"

namespace klc {

CycInt CycInt::zeta_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return {1, 0};
    case 1:
      return zeta();
    default:
      return zeta_squared();
  }
}

CycInt CycInt::from_root_counts(const mpz_class& n0, const mpz_class& n1, const mpz_class& n2) {
  return {n0 - n2, n1 - n2};
}

mpz_class CycInt::to_integer() const {
  if (b_ != 0) throw InternalError("expected a rational integer, got " + to_string());
  return a_;
}

long CycInt::to_long() const {
  const mpz_class v = to_integer();
  if (!v.fits_slong_p()) throw InternalError("integer " + v.get_str() + " does not fit in long");
  return v.get_si();
}

CycInt& CycInt::operator+=(const CycInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  // (a + b z)(c + d z) = ac - bd + (ad + bc - bd) z
  const mpz_class bd = b_ * o.b_;
  mpz_class na = a_ * o.a_ - bd;
  mpz_class nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string CycInt::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s = a_ == 0 ? "" : a_.get_str();
  if (b_ > 0 && !s.empty()) s += "+";
  if (b_ == -1)
    s += "-";
  else if (b_ != 1)
    s += b_.get_str() + "*";
  return s + "zeta";
}

CycInt lambda_char(const Field& f, FieldElement x) { return CycInt::zeta_pow(f.trace(x)); }

CycInt CharacterAccumulator::value() const {
  return CycInt::from_root_counts(mpz_class(std::to_string(counts_[0])), mpz_class(std::to_string(counts_[1])),
                                  mpz_class(std::to_string(counts_[2])));
}

}  // namespace klc
