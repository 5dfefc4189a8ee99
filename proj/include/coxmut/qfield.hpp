#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "coxmut/word.hpp"

namespace coxmut {

/// a + b√2 + c√3 + d√6 with rational components.
class QuadraticFieldElement {
 public:
  QuadraticFieldElement() = default;
  QuadraticFieldElement(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticFieldElement(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  const mpq_class& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

  QuadraticFieldElement& operator+=(const QuadraticFieldElement& o);
  QuadraticFieldElement& operator-=(const QuadraticFieldElement& o);
  friend QuadraticFieldElement operator+(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x += y; }
  friend QuadraticFieldElement operator-(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x -= y; }
  friend QuadraticFieldElement operator-(const QuadraticFieldElement& x);
  friend QuadraticFieldElement operator*(const QuadraticFieldElement& x, const QuadraticFieldElement& y);
  friend bool operator==(const QuadraticFieldElement& x, const QuadraticFieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// x += y * z without temporaries for zero parts.
  static void fma(QuadraticFieldElement& x, const QuadraticFieldElement& y, const QuadraticFieldElement& z);

  /// -2cos(pi/m) for m in {2, 3, 4, 6}.
  static QuadraticFieldElement minus_two_cos_pi_over(int m);

  std::string to_string() const;

 private:
  mpq_class a_, b_, c_, d_;
};

/// Dense square matrix over the quadratic field.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  static QMatrix identity(int n);

  int size() const { return n_; }
  QuadraticFieldElement& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const QuadraticFieldElement& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  bool is_identity() const;
  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<QuadraticFieldElement> e_;
};

QMatrix power(const QMatrix& m, int k);

/// Geometric representation of a Coxeter group: sigma[i] sends e_j to
/// e_j - 2 B(e_i, e_j) e_i with B(e_i, e_j) = -cos(pi / m_ij).
struct ReflectionRep {
  int rank = 0;
  QMatrix form;
  std::vector<QMatrix> sigma;
};

/// Off-diagonal entries must lie in {2, 3, 4, 6}; throws std::invalid_argument
/// otherwise.
ReflectionRep build_reflection_rep(const std::vector<std::vector<int>>& m);

QMatrix evaluate_word(std::span<const QMatrix> images, std::span<const int> w);
QMatrix evaluate_word(const ReflectionRep& rep, std::span<const int> w);

/// base^exponent evaluated by repeated squaring.
QMatrix evaluate_relator(std::span<const QMatrix> images, std::span<const int> base, int exponent);

}  // namespace coxmut
