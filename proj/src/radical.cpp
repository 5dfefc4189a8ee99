#include "coxmut/radical.hpp"

#include <numeric>

namespace coxmut {

void square_split(std::uint64_t w, std::uint64_t& q, std::uint64_t& r) {
  q = 1;
  r = w;
  if (w == 0) {
    q = 0;
    r = 1;
    return;
  }
  for (std::uint64_t f = 2; f * f <= r; ++f) {
    while (r % (f * f) == 0) {
      r /= f * f;
      q *= f;
    }
  }
}

RadicalScalar::RadicalScalar(mpq_class coeff, std::uint64_t radicand)
    : coeff_(std::move(coeff)), radicand_(radicand) {
  coeff_.canonicalize();
  if (radicand_ == 0) coeff_ = 0;
  if (sgn(coeff_) == 0) {
    radicand_ = 1;
    return;
  }
  std::uint64_t q, r;
  square_split(radicand_, q, r);
  coeff_ *= mpz_class(static_cast<unsigned long>(q));
  radicand_ = r;
}

RadicalScalar RadicalScalar::sqrt_of(std::uint64_t w) {
  std::uint64_t q, r;
  square_split(w, q, r);
  return RadicalScalar(mpq_class(mpz_class(static_cast<unsigned long>(q))), r);
}

mpq_class RadicalScalar::squared() const {
  mpq_class out = coeff_ * coeff_;
  out *= mpz_class(static_cast<unsigned long>(radicand_));
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_) {
    throw radicand_mismatch("cannot add " + a.to_string() + " and " +
                            b.to_string());
  }
  return RadicalScalar(a.coeff_ + b.coeff_, a.radicand_);
}

RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
  return a + (-b);
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::uint64_t g = std::gcd(a.radicand_, b.radicand_);
  std::uint64_t r = (a.radicand_ / g) * (b.radicand_ / g);
  mpq_class c = a.coeff_ * b.coeff_ * mpz_class(static_cast<unsigned long>(g));
  return RadicalScalar(c, r);
}

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
  return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
}

std::string RadicalScalar::to_string() const {
  if (radicand_ == 1) return coeff_.get_str();
  return coeff_.get_str() + "*sqrt(" + std::to_string(radicand_) + ")";
}

}  // namespace coxmut
