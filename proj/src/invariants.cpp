#include "coxmut/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxmut {

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(m[i][j]) != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // The pivot must divide the rest of the block.
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (sgn(m[i][j]) != 0 && !mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
              break;
            }
          }
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  std::vector<std::vector<mpz_class>> m;
  for (const Relation& r : p.relations) {
    std::vector<mpz_class> row(static_cast<std::size_t>(p.generators), 0);
    for (int g : r.base) row[g] += r.exponent;
    m.push_back(std::move(row));
  }
  AbelianInvariants out;
  std::vector<mpz_class> d = smith_diagonal(std::move(m));
  for (const mpz_class& x : d) {
    if (x != 1) out.factors.push_back(x);
  }
  for (std::size_t i = d.size(); i < static_cast<std::size_t>(p.generators); ++i) out.factors.push_back(0);
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (i) s += ",";
    s += a.factors[i].get_str();
  }
  return s + "]";
}

Perm Perm::from_images(std::span<const int> images) {
  if (images.size() > static_cast<std::size_t>(kMaxPermPoints)) throw std::invalid_argument("too many points");
  Perm r;
  for (std::size_t i = 0; i < images.size(); ++i) r.p[i] = static_cast<std::uint8_t>(images[i]);
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < kMaxPermPoints; ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

Perm Perm::then(const Perm& o) const {
  Perm r;
  for (int i = 0; i < kMaxPermPoints; ++i) r.p[i] = o.p[p[i]];
  return r;
}

std::vector<Perm> involutions(int degree) {
  if (degree < 1 || degree > kMaxHomDegree) throw std::invalid_argument("hom degree must be in 1..5");
  std::vector<Perm> out;
  Perm cur;
  do {
    if (cur.then(cur).is_identity()) out.push_back(cur);
  } while (std::next_permutation(cur.p.begin(), cur.p.begin() + degree));
  return out;
}

std::vector<Perm> group_elements(std::span<const Perm> gens, std::size_t limit) {
  std::set<Perm> seen{Perm{}};
  std::vector<Perm> out{Perm{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& g : gens) {
      Perm x = out[i].then(g);
      if (seen.insert(x).second) {
        if (out.size() >= limit) throw std::length_error("permutation group exceeds the element limit");
        out.push_back(x);
      }
    }
  }
  return out;
}

std::vector<Perm> involutions(std::span<const Perm> elements) {
  std::vector<Perm> out;
  for (const Perm& x : elements) {
    if (x.then(x).is_identity()) out.push_back(x);
  }
  return out;
}

std::vector<Perm> affine_permutation_generators(int n, int k) {
  const int points = n * k;
  if (n < 2 || k < 1 || points > kMaxPermPoints) throw std::invalid_argument("affine permutation group too large");
  std::vector<Perm> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> img(static_cast<std::size_t>(points));
    for (int x = 0; x < points; ++x) img[x] = x;
    for (int x = i; x < points; x += n) {
      int y = (x + 1) % points;
      img[x] = y;
      img[y] = x;
    }
    out.push_back(Perm::from_images(img));
  }
  return out;
}

Perm evaluate_relator(std::span<const Perm> images, std::span<const int> base, int exponent) {
  Perm b;
  for (int g : base) b = b.then(images[g]);
  Perm r;
  for (int i = 0; i < exponent; ++i) r = r.then(b);
  return r;
}

void for_each_hom(const Presentation& p, std::span<const Perm> candidates,
                  const std::function<bool(std::span<const Perm>)>& f) {
  const int n = p.generators;
  // Relators become checkable once their largest generator is assigned.
  std::vector<std::vector<const Relation*>> ready(static_cast<std::size_t>(std::max(n, 1)));
  for (const Relation& r : p.relations) {
    if (r.base.empty()) continue;
    int top = *std::max_element(r.base.begin(), r.base.end());
    ready[top].push_back(&r);
  }
  std::vector<Perm> images(static_cast<std::size_t>(n));
  bool stop = false;
  auto rec = [&](auto&& self, int g) -> void {
    if (stop) return;
    if (g == n) {
      if (!f(images)) stop = true;
      return;
    }
    for (const Perm& c : candidates) {
      images[g] = c;
      bool ok = true;
      for (const Relation* r : ready[g]) {
        if (!evaluate_relator(images, r->base, r->exponent).is_identity()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, g + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

void for_each_hom(const Presentation& p, int degree, const std::function<bool(std::span<const Perm>)>& f) {
  std::vector<Perm> choices = involutions(degree);
  for_each_hom(p, std::span<const Perm>(choices), f);
}

std::uint64_t count_homs(const Presentation& p, std::span<const Perm> candidates) {
  std::uint64_t count = 0;
  for_each_hom(p, candidates, [&](std::span<const Perm>) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t count_homs(const Presentation& p, int degree) {
  std::vector<Perm> choices = involutions(degree);
  return count_homs(p, std::span<const Perm>(choices));
}

}  // namespace coxmut
