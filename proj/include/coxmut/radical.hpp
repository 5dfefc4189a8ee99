#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coxmut {

class radicand_mismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact number coeff * sqrt(radicand) with a squarefree radicand.
/// Zero is normalized to radicand 1.
class RadicalScalar {
 public:
  RadicalScalar() = default;
  RadicalScalar(mpq_class coeff, std::uint64_t radicand);

  /// sqrt(w) for a non-negative integer w.
  static RadicalScalar sqrt_of(std::uint64_t w);

  const mpq_class& coeff() const { return coeff_; }
  std::uint64_t radicand() const { return radicand_; }

  bool is_zero() const { return sgn(coeff_) == 0; }
  int sign() const { return sgn(coeff_); }

  /// Exact rational value of the square.
  mpq_class squared() const;

  RadicalScalar operator-() const;
  friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);

  std::string to_string() const;

 private:
  mpq_class coeff_{0};
  std::uint64_t radicand_ = 1;
};

/// Splits w = q^2 * r with r squarefree.
void square_split(std::uint64_t w, std::uint64_t& q, std::uint64_t& r);

}  // namespace coxmut
