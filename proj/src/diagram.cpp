#include "coxmut/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <gmpxx.h>

#include "coxmut/radical.hpp"

namespace coxmut {

namespace {

Weight checked_mul(Weight a, Weight b) {
  Weight out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("weight overflow");
  }
  return out;
}

Weight checked_add(Weight a, Weight b) {
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("weight overflow");
  }
  return out;
}

Weight to_weight(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("weight overflow");
  return z.get_si();
}

}  // namespace

Diagram::Diagram(int n) : n_(n) {
  if (n < 0) throw invalid_diagram("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Diagram::Diagram(int n, std::span<const Arrow> arrows) : Diagram(n) {
  for (const Arrow& a : arrows) {
    check_vertex(a.from);
    check_vertex(a.to);
    if (a.from == a.to) throw invalid_diagram("self-arrow at vertex " + std::to_string(a.from + 1));
    if (a.weight <= 0) throw invalid_diagram("arrow weight must be positive");
    if (adjacent(a.from, a.to)) {
      throw invalid_diagram("more than one arrow between " + std::to_string(a.from + 1) + " and " +
                            std::to_string(a.to + 1));
    }
    set_arrow(a.from, a.to, a.weight);
  }
}

Diagram::Diagram(int n, std::initializer_list<Arrow> arrows)
    : Diagram(n, std::span<const Arrow>(arrows.begin(), arrows.size())) {}

void Diagram::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw invalid_diagram("vertex out of range");
}

void Diagram::set_arrow(int from, int to, Weight weight) {
  check_vertex(from);
  check_vertex(to);
  if (from == to) throw invalid_diagram("self-arrow");
  if (weight < 0) throw invalid_diagram("negative weight");
  adj_[idx(from, to)] = weight;
  adj_[idx(to, from)] = -weight;
}

std::vector<Arrow> Diagram::arrows() const {
  std::vector<Arrow> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (adj_[idx(i, j)] > 0) out.push_back({i, j, adj_[idx(i, j)]});
    }
  }
  return out;
}

std::vector<int> Diagram::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adj_[idx(v, u)] != 0) out.push_back(u);
  }
  return out;
}

Weight Diagram::max_weight() const {
  Weight m = 0;
  for (Weight w : adj_) m = std::max(m, w);
  return m;
}

std::vector<ChordlessCycle> chordless_cycles(const Diagram& d) {
  const int n = d.size();
  std::vector<ChordlessCycle> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  auto record = [&](const std::vector<int>& cyc) {
    const int len = static_cast<int>(cyc.size());
    bool fwd = true, bwd = true;
    for (int i = 0; i < len; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % len];
      if (!d.has_arrow(a, b)) fwd = false;
      if (!d.has_arrow(b, a)) bwd = false;
    }
    ChordlessCycle c;
    c.vertices = cyc;
    c.oriented = fwd || bwd;
    if (bwd) {
      std::reverse(c.vertices.begin() + 1, c.vertices.end());
    }
    for (int i = 0; i < len; ++i) {
      c.weights.push_back(d.weight(c.vertices[i], c.vertices[(i + 1) % len]));
    }
    out.push_back(std::move(c));
  };

  auto extend = [&](auto&& self, int s) -> void {
    const int last = path.back();
    const int k = static_cast<int>(path.size()) - 1;
    for (int v = s + 1; v < n; ++v) {
      if (on_path[v] || !d.adjacent(last, v)) continue;
      bool chord = false;
      for (int i = 1; i < k; ++i) {
        if (d.adjacent(path[i], v)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (k >= 1 && d.adjacent(s, v)) {
        if (path[1] < v) {
          std::vector<int> cyc = path;
          cyc.push_back(v);
          record(cyc);
        }
        continue;
      }
      path.push_back(v);
      on_path[v] = 1;
      self(self, s);
      on_path[v] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const ChordlessCycle& a, const ChordlessCycle& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  for (const ChordlessCycle& c : chordless_cycles(d)) {
    std::uint64_t r = 1;
    for (Weight w : c.weights) {
      std::uint64_t q, rw;
      square_split(static_cast<std::uint64_t>(w), q, rw);
      std::uint64_t g = std::gcd(r, rw);
      r = (r / g) * (rw / g);
    }
    if (r != 1) {
      rep.valid = false;
      std::string msg = "weight product along cycle (";
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) msg += ",";
        msg += std::to_string(c.vertices[i] + 1);
      }
      msg += ") is not a perfect square";
      rep.problems.push_back(msg);
      rep.bad_cycles.push_back(c);
    }
  }
  return rep;
}

Diagram mutate(const Diagram& d, int k) {
  const int n = d.size();
  if (k < 0 || k >= n) throw invalid_diagram("vertex out of range");
  Diagram out = d;
  for (int i = 0; i < n; ++i) {
    if (i != k && d.adjacent(i, k)) {
      Weight w = d.signed_weight(i, k);
      if (w > 0) {
        out.set_arrow(k, i, w);
      } else {
        out.set_arrow(i, k, -w);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (i == k || !d.has_arrow(i, k)) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k || j == i || !d.has_arrow(k, j)) continue;
      Weight a = d.weight(i, k);
      Weight b = d.weight(k, j);
      Weight c = d.signed_weight(i, j);
      RadicalScalar old_val;
      if (c < 0) {
        old_val = RadicalScalar::sqrt_of(static_cast<std::uint64_t>(-c));
      } else if (c > 0) {
        old_val = -RadicalScalar::sqrt_of(static_cast<std::uint64_t>(c));
      }
      RadicalScalar ab = RadicalScalar::sqrt_of(static_cast<std::uint64_t>(a)) *
                         RadicalScalar::sqrt_of(static_cast<std::uint64_t>(b));
      RadicalScalar new_val = ab - old_val;
      mpq_class sq = new_val.squared();
      if (sq.get_den() != 1) throw radicand_mismatch("non-integral weight");
      Weight w = to_weight(sq.get_num());
      if (new_val.sign() > 0) {
        out.set_arrow(i, j, w);
      } else if (new_val.sign() < 0) {
        out.set_arrow(j, i, w);
      } else {
        out.set_arrow(i, j, 0);
      }
    }
  }
  return out;
}

Diagram mutate_sequence(Diagram d, std::span<const int> vertices) {
  for (int k : vertices) d = mutate(d, k);
  return d;
}

Diagram opposite(const Diagram& d) {
  Diagram out(d.size());
  for (const Arrow& a : d.arrows()) out.set_arrow(a.to, a.from, a.weight);
  return out;
}

Diagram permute(const Diagram& d, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != d.size()) throw invalid_diagram("permutation size mismatch");
  Diagram out(d.size());
  for (const Arrow& a : d.arrows()) out.set_arrow(perm[a.from], perm[a.to], a.weight);
  return out;
}

Subdiagram induced_subdiagram(const Diagram& d, std::span<const int> vertices) {
  Subdiagram out;
  out.vertices.assign(vertices.begin(), vertices.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  const int m = static_cast<int>(out.vertices.size());
  out.diagram = Diagram(m);
  for (int a = 0; a < m; ++a) {
    if (out.vertices[a] < 0 || out.vertices[a] >= d.size()) throw invalid_diagram("vertex out of range");
    for (int b = 0; b < m; ++b) {
      Weight w = d.signed_weight(out.vertices[a], out.vertices[b]);
      if (w > 0) out.diagram.set_arrow(a, b, w);
    }
  }
  return out;
}

bool is_connected(const Diagram& d) {
  const int n = d.size();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : d.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

bool is_acyclic(const Diagram& d) {
  const int n = d.size();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Arrow& a : d.arrows()) ++indeg[a.to];
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int u = 0; u < n; ++u) {
      if (d.has_arrow(v, u) && --indeg[u] == 0) ready.push_back(u);
    }
  }
  return seen == n;
}

bool ExchangeMatrix::skew_symmetrizable() const {
  const int n = size();
  if (static_cast<int>(d.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(b[i].size()) != n || d[i] <= 0 || b[i][i] != 0) return false;
    for (int j = 0; j < n; ++j) {
      if (d[i] * b[i][j] != -d[j] * b[j][i]) return false;
    }
  }
  return true;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k) {
  const int n = m.size();
  if (k < 0 || k >= n) throw invalid_diagram("vertex out of range");
  ExchangeMatrix out = m;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.b[i][j] = -m.b[i][j];
        continue;
      }
      std::int64_t bik = m.b[i][k], bkj = m.b[k][j];
      std::int64_t t = checked_add(checked_mul(std::abs(bik), bkj), checked_mul(bik, std::abs(bkj)));
      out.b[i][j] = checked_add(m.b[i][j], t / 2);
    }
  }
  return out;
}

Diagram diagram_of(const ExchangeMatrix& m) {
  const int n = m.size();
  Diagram out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.b[i][j] > 0) out.set_arrow(i, j, std::abs(checked_mul(m.b[i][j], m.b[j][i])));
    }
  }
  return out;
}

ExchangeMatrix lift_to_matrix(const Diagram& dg) {
  const int n = dg.size();
  // Spanning forest in BFS order from the least vertex of each component.
  std::vector<Arrow> tree, rest;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> roots;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    roots.push_back(s);
    comp[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : dg.neighbours(v)) {
        if (comp[u] >= 0) continue;
        comp[u] = s;
        q.push(u);
        Weight w = dg.signed_weight(v, u);
        tree.push_back(w > 0 ? Arrow{v, u, w} : Arrow{u, v, -w});
      }
    }
  }
  for (const Arrow& a : dg.arrows()) {
    if (std::find(tree.begin(), tree.end(), a) == tree.end()) rest.push_back(a);
  }

  std::vector<Weight> p(tree.size(), 1);
  std::vector<mpq_class> dq(static_cast<std::size_t>(n));

  auto attempt = [&]() -> bool {
    for (int r : roots) dq[r] = 1;
    // Tree arrows appear in BFS order, so one endpoint is always known.
    std::vector<char> known(static_cast<std::size_t>(n), 0);
    for (int r : roots) known[r] = 1;
    for (std::size_t e = 0; e < tree.size(); ++e) {
      const Arrow& a = tree[e];
      mpq_class pe(p[e]), qe(a.weight / p[e]);
      if (known[a.from]) {
        dq[a.to] = dq[a.from] * pe / qe;
        known[a.to] = 1;
      } else {
        dq[a.from] = dq[a.to] * qe / pe;
        known[a.from] = 1;
      }
    }
    for (const Arrow& a : rest) {
      mpq_class p2 = mpq_class(a.weight) * dq[a.to] / dq[a.from];
      if (p2.get_den() != 1) return false;
      mpz_class root;
      mpz_class num = p2.get_num();
      if (!mpz_perfect_square_p(num.get_mpz_t())) return false;
      mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
      if (root == 0 || mpz_class(a.weight) % root != 0) return false;
    }
    return true;
  };

  auto next_choice = [&](std::size_t e) -> bool {
    Weight w = tree[e].weight;
    for (Weight c = p[e] + 1; c <= w; ++c) {
      if (w % c == 0) {
        p[e] = c;
        return true;
      }
    }
    return false;
  };

  bool found = false;
  while (true) {
    if (attempt()) {
      found = true;
      break;
    }
    // Odometer over divisor choices, last tree arrow varying fastest.
    std::size_t e = tree.size();
    bool advanced = false;
    while (e > 0) {
      --e;
      if (next_choice(e)) {
        for (std::size_t f = e + 1; f < tree.size(); ++f) p[f] = 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  if (!found) throw unliftable_diagram("no skew-symmetrizable integer matrix realizes this diagram");

  mpz_class l = 1;
  for (const mpq_class& x : dq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> di(static_cast<std::size_t>(n));
  mpz_class g = 0;
  for (int i = 0; i < n; ++i) {
    mpq_class scaled = dq[i] * l;
    di[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di[i].get_mpz_t());
  }
  ExchangeMatrix m;
  m.b.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  m.d.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.d[i] = to_weight(di[i] / g);
  for (std::size_t e = 0; e < tree.size(); ++e) {
    m.b[tree[e].from][tree[e].to] = p[e];
    m.b[tree[e].to][tree[e].from] = -(tree[e].weight / p[e]);
  }
  for (const Arrow& a : rest) {
    mpq_class p2 = mpq_class(a.weight) * dq[a.to] / dq[a.from];
    mpz_class root;
    mpz_class num = p2.get_num();
    mpz_sqrt(root.get_mpz_t(), num.get_mpz_t());
    Weight pv = root.get_si();
    m.b[a.from][a.to] = pv;
    m.b[a.to][a.from] = -(a.weight / pv);
  }
  return m;
}

}  // namespace coxmut
