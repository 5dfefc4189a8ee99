#include "coxmut/qfield.hpp"

#include <stdexcept>

namespace coxmut {

QuadraticFieldElement& QuadraticFieldElement::operator+=(const QuadraticFieldElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator-=(const QuadraticFieldElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

QuadraticFieldElement operator-(const QuadraticFieldElement& x) {
  return {-x.a_, -x.b_, -x.c_, -x.d_};
}

void QuadraticFieldElement::fma(QuadraticFieldElement& x, const QuadraticFieldElement& y,
                                const QuadraticFieldElement& z) {
  // Basis 1, √2, √3, √6: √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2.
  const mpq_class* ys[4] = {&y.a_, &y.b_, &y.c_, &y.d_};
  const mpq_class* zs[4] = {&z.a_, &z.b_, &z.c_, &z.d_};
  mpq_class* xs[4] = {&x.a_, &x.b_, &x.c_, &x.d_};
  static constexpr int target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int scale[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 3, 3}, {1, 2, 3, 6}};
  mpq_class t;
  for (int i = 0; i < 4; ++i) {
    if (sgn(*ys[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(*zs[j]) == 0) continue;
      t = *ys[i] * *zs[j];
      if (scale[i][j] != 1) t *= scale[i][j];
      *xs[target[i][j]] += t;
    }
  }
}

QuadraticFieldElement operator*(const QuadraticFieldElement& x, const QuadraticFieldElement& y) {
  QuadraticFieldElement r;
  QuadraticFieldElement::fma(r, x, y);
  return r;
}

QuadraticFieldElement QuadraticFieldElement::minus_two_cos_pi_over(int m) {
  switch (m) {
    case 2: return {0, 0, 0, 0};
    case 3: return {-1, 0, 0, 0};
    case 4: return {0, -1, 0, 0};
    case 6: return {0, 0, -1, 0};
    default: throw std::invalid_argument("Coxeter exponent " + std::to_string(m) + " is not in {2,3,4,6}");
  }
}

std::string QuadraticFieldElement::to_string() const {
  std::string s;
  auto part = [&](const mpq_class& q, const char* unit) {
    if (sgn(q) == 0) return;
    if (!s.empty()) s += sgn(q) > 0 ? " + " : " - ";
    else if (sgn(q) < 0) s += "-";
    mpq_class abs_q = abs(q);
    if (*unit == '\0' || abs_q != 1) s += abs_q.get_str();
    s += unit;
  };
  part(a_, "");
  part(b_, "√2");
  part(c_, "√3");
  part(d_, "√6");
  return s.empty() ? "0" : s;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = QuadraticFieldElement(1);
  return m;
}

bool QMatrix::is_identity() const {
  const QuadraticFieldElement one(1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const QuadraticFieldElement& e = (*this)(i, j);
      if (i == j ? !(e == one) : !e.is_zero()) return false;
    }
  }
  return true;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  const int n = x.size();
  QMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const QuadraticFieldElement& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const QuadraticFieldElement& ykj = y(k, j);
        if (ykj.is_zero()) continue;
        QuadraticFieldElement::fma(r(i, j), xik, ykj);
      }
    }
  }
  return r;
}

QMatrix power(const QMatrix& m, int k) {
  QMatrix result = QMatrix::identity(m.size());
  QMatrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

ReflectionRep build_reflection_rep(const std::vector<std::vector<int>>& m) {
  ReflectionRep rep;
  const int n = static_cast<int>(m.size());
  rep.rank = n;
  // form holds 2B.
  rep.form = QMatrix(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("Coxeter matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        rep.form(i, j) = QuadraticFieldElement(2);
      } else {
        if (m[i][j] != m[j][i]) throw std::invalid_argument("Coxeter matrix is not symmetric");
        rep.form(i, j) = QuadraticFieldElement::minus_two_cos_pi_over(m[i][j]);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    QMatrix s = QMatrix::identity(n);
    for (int j = 0; j < n; ++j) s(i, j) -= rep.form(i, j);
    rep.sigma.push_back(std::move(s));
  }
  return rep;
}

QMatrix evaluate_word(std::span<const QMatrix> images, std::span<const int> w) {
  if (images.empty()) return QMatrix();
  QMatrix r = QMatrix::identity(images.front().size());
  for (int g : w) {
    if (g < 0 || static_cast<std::size_t>(g) >= images.size()) throw std::out_of_range("generator out of range");
    r = r * images[g];
  }
  return r;
}

QMatrix evaluate_word(const ReflectionRep& rep, std::span<const int> w) {
  return evaluate_word(std::span<const QMatrix>(rep.sigma), w);
}

QMatrix evaluate_relator(std::span<const QMatrix> images, std::span<const int> base, int exponent) {
  return power(evaluate_word(images, base), exponent);
}

}  // namespace coxmut
