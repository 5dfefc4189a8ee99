#include "coxmut/mutation_class.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace coxmut {

std::size_t cap_from_env(std::size_t fallback) {
  const char* s = std::getenv("COXMUT_CAP");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

std::string to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Complete: return "complete";
    case ClassStatus::WeightExceeded: return "weight-exceeded";
    case ClassStatus::CapExceeded: return "cap-exceeded";
  }
  return "?";
}

std::optional<std::size_t> MutationClass::find(const Diagram& d) const {
  CanonicalKey k = canonical_key(d);
  auto it = std::find(keys.begin(), keys.end(), k);
  if (it == keys.end()) return std::nullopt;
  return static_cast<std::size_t>(it - keys.begin());
}

std::vector<int> MutationClass::path_to(std::size_t i) const {
  std::vector<int> path;
  std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(i);
  while (parent[cur].first >= 0) {
    path.push_back(parent[cur].second);
    cur = parent[cur].first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

MutationClass enumerate_class(const Diagram& seed, std::size_t cap) {
  MutationClass c;
  const int n = seed.size();
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> index;
  auto add = [&](const Diagram& d, CanonicalKey k, std::ptrdiff_t parent, int v) {
    index.emplace(k, c.representatives.size());
    c.representatives.push_back(d);
    c.keys.push_back(std::move(k));
    c.parent.emplace_back(parent, v);
  };
  if (n >= 3 && seed.max_weight() > 4) {
    c.status = ClassStatus::WeightExceeded;
    c.witness = seed;
    add(seed, canonical_key(seed), -1, -1);
    return c;
  }
  add(seed, canonical_key(seed), -1, -1);
  std::vector<ClassEdge> edges;
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    for (int v = 0; v < n; ++v) {
      Diagram m = mutate(c.representatives[i], v);
      if (n >= 3 && m.max_weight() > 4) {
        c.status = ClassStatus::WeightExceeded;
        c.witness = m;
        return c;
      }
      CanonicalKey k = canonical_key(m);
      auto it = index.find(k);
      std::size_t to;
      if (it == index.end()) {
        if (c.representatives.size() >= cap) {
          c.status = ClassStatus::CapExceeded;
          return c;
        }
        to = c.representatives.size();
        add(m, std::move(k), static_cast<std::ptrdiff_t>(i), v);
      } else {
        to = it->second;
      }
      edges.push_back({i, v, to});
    }
  }
  c.edges = std::move(edges);
  return c;
}

FinitenessResult is_mutation_finite(const Diagram& d, std::size_t cap) {
  FinitenessResult r;
  r.mutation_class = enumerate_class(d, cap);
  switch (r.mutation_class.status) {
    case ClassStatus::Complete: r.finite = true; break;
    case ClassStatus::WeightExceeded: r.finite = false; break;
    case ClassStatus::CapExceeded: break;
  }
  return r;
}

std::string TypeTag::display() const {
  switch (family) {
    case TypeFamily::Finite: return "finite " + name;
    case TypeFamily::Affine: return "affine " + name;
    case TypeFamily::Exceptional: return "exceptional " + name;
    case TypeFamily::Other: return "other";
  }
  return "other";
}

namespace {

// Path 0 -> 1 -> ... -> n-1 with the given weights.
Diagram path(const std::vector<Weight>& weights) {
  Diagram d(static_cast<int>(weights.size()) + 1);
  for (std::size_t i = 0; i < weights.size(); ++i) d.set_arrow(static_cast<int>(i), static_cast<int>(i) + 1, weights[i]);
  return d;
}

// Star with arms of the given lengths around vertex 0, arrows pointing away.
Diagram star(const std::vector<int>& arms) {
  int n = 1;
  for (int a : arms) n += a;
  Diagram d(n);
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int j = 0; j < a; ++j) {
      d.set_arrow(prev, next, 1);
      prev = next++;
    }
  }
  return d;
}

// Oriented triangles 0 -> a -> b -> 0 with a => b of weight 4.
Diagram wings(int count, int extra) {
  Diagram d(1 + 2 * count + extra);
  for (int w = 0; w < count; ++w) {
    int a = 1 + 2 * w, b = 2 + 2 * w;
    d.set_arrow(0, a, 1);
    d.set_arrow(a, b, 4);
    d.set_arrow(b, 0, 1);
  }
  if (extra) d.set_arrow(0, 2 * count + 1, 1);
  return d;
}

// Vertices 0 => 1 of weight 4; every arm starts at c with 1 -> c -> 0.
Diagram elliptic(const std::vector<int>& arms) {
  int n = 2;
  for (int a : arms) n += a;
  Diagram d(n);
  d.set_arrow(0, 1, 4);
  int next = 2;
  for (int a : arms) {
    int c = next++;
    d.set_arrow(1, c, 1);
    d.set_arrow(c, 0, 1);
    int prev = c;
    for (int j = 1; j < a; ++j) {
      d.set_arrow(prev, next, 1);
      prev = next++;
    }
  }
  return d;
}

Diagram oriented_cycle(const std::vector<Weight>& weights) {
  const int n = static_cast<int>(weights.size());
  Diagram d(n);
  for (int i = 0; i < n; ++i) d.set_arrow(i, (i + 1) % n, weights[i]);
  return d;
}

void add_std(std::vector<StandardDiagram>& out, TypeFamily f, std::string name, Diagram d) {
  out.push_back({{f, std::move(name)}, std::move(d)});
}

}  // namespace

std::vector<StandardDiagram> standard_diagrams(int n) {
  std::vector<StandardDiagram> out;
  const auto F = TypeFamily::Finite;
  const auto A = TypeFamily::Affine;
  const auto X = TypeFamily::Exceptional;
  const std::string N = std::to_string(n);
  if (n < 1) return out;

  add_std(out, F, "A_" + N, path(std::vector<Weight>(static_cast<std::size_t>(n - 1), 1)));
  if (n >= 2) {
    std::vector<Weight> w(static_cast<std::size_t>(n - 1), 1);
    w.back() = 2;
    add_std(out, F, "B_" + N, path(w));
  }
  if (n >= 4) {
    Diagram d = path(std::vector<Weight>(static_cast<std::size_t>(n - 2), 1));
    Diagram e(n);
    for (const Arrow& a : d.arrows()) e.set_arrow(a.from, a.to, a.weight);
    e.set_arrow(n - 3, n - 1, 1);
    add_std(out, F, "D_" + N, e);
  }
  if (n == 6) add_std(out, F, "E_6", star({2, 2, 1}));
  if (n == 7) add_std(out, F, "E_7", star({2, 3, 1}));
  if (n == 8) add_std(out, F, "E_8", star({2, 4, 1}));
  if (n == 4) add_std(out, F, "F_4", path({1, 2, 1}));
  if (n == 2) add_std(out, F, "G_2", path({3}));

  if (n == 2) add_std(out, A, "Ã_{1,1}", path({4}));
  for (int k = 1; n >= 3 && 2 * k <= n; ++k) {
    Diagram d(n);
    for (int i = 0; i < n; ++i) {
      if (i < k) {
        d.set_arrow(i, (i + 1) % n, 1);
      } else {
        d.set_arrow((i + 1) % n, i, 1);
      }
    }
    add_std(out, A, "Ã_{" + std::to_string(k) + "," + std::to_string(n - k) + "}", d);
  }
  const std::string M = std::to_string(n - 1);
  if (n >= 4) {
    // Chain 0..n-2 with weight 2 on the last edge, vertex n-1 hanging off 1.
    std::vector<Weight> w(static_cast<std::size_t>(n - 2), 1);
    w.back() = 2;
    Diagram p = path(w);
    Diagram d(n);
    for (const Arrow& a : p.arrows()) d.set_arrow(a.from, a.to, a.weight);
    d.set_arrow(1, n - 1, 1);
    add_std(out, A, "B̃_" + M, d);
  }
  if (n >= 3) {
    std::vector<Weight> w(static_cast<std::size_t>(n - 1), 1);
    w.front() = 2;
    w.back() = 2;
    add_std(out, A, "C̃_" + M, path(w));
  }
  if (n >= 5) {
    Diagram p = path(std::vector<Weight>(static_cast<std::size_t>(n - 3), 1));
    Diagram d(n);
    for (const Arrow& a : p.arrows()) d.set_arrow(a.from, a.to, a.weight);
    d.set_arrow(1, n - 2, 1);
    d.set_arrow(n - 4, n - 1, 1);
    add_std(out, A, "D̃_" + M, d);
  }
  if (n == 7) add_std(out, A, "Ẽ_6", star({2, 2, 2}));
  if (n == 8) add_std(out, A, "Ẽ_7", star({1, 3, 3}));
  if (n == 9) add_std(out, A, "Ẽ_8", star({1, 2, 5}));
  if (n == 5) add_std(out, A, "F̃_4", path({1, 1, 2, 1}));
  if (n == 3) add_std(out, A, "G̃_2", path({1, 3}));

  if (n == 6) add_std(out, X, "X_6", wings(2, 1));
  if (n == 7) add_std(out, X, "X_7", wings(3, 0));
  if (n == 8) add_std(out, X, "E_6^{(1,1)}", elliptic({2, 2, 2}));
  if (n == 9) add_std(out, X, "E_7^{(1,1)}", elliptic({1, 3, 3}));
  if (n == 10) add_std(out, X, "E_8^{(1,1)}", elliptic({1, 2, 5}));
  if (n == 4) {
    add_std(out, X, "G_2^{(*,+)}", Diagram(4, {{0, 3, 1}, {1, 2, 4}, {3, 1, 3}, {2, 3, 3}}));
    add_std(out, X, "G_2^{(*,*)}", Diagram(4, {{0, 2, 1}, {3, 0, 1}, {1, 2, 3}, {3, 1, 3}, {2, 3, 4}}));
  }
  if (n == 6) {
    add_std(out, X, "F_4^{(*,+)}", oriented_cycle({1, 1, 2, 1, 1, 2}));
    Diagram d = oriented_cycle({1, 1, 2, 1, 2});
    Diagram e(6);
    for (const Arrow& a : d.arrows()) e.set_arrow(a.from, a.to, a.weight);
    e.set_arrow(5, 1, 1);
    add_std(out, X, "F_4^{(*,*)}", e);
  }
  return out;
}

std::optional<TypeTag> classify(const MutationClass& c) {
  if (c.status == ClassStatus::CapExceeded) return std::nullopt;
  if (c.status == ClassStatus::WeightExceeded) return TypeTag{};
  const Diagram& seed = c.representatives.front();
  if (!is_connected(seed)) return TypeTag{};
  std::set<CanonicalKey> keys(c.keys.begin(), c.keys.end());
  for (const StandardDiagram& s : standard_diagrams(seed.size())) {
    if (keys.count(canonical_key(s.diagram))) return s.tag;
  }
  return TypeTag{};
}

std::optional<TypeTag> classify(const Diagram& d, std::size_t cap) { return classify(enumerate_class(d, cap)); }

Ruleset resolve_ruleset(const Diagram& d) {
  std::optional<TypeTag> tag = classify(d, cap_from_env(kDefaultClassCap));
  if (!tag) throw std::invalid_argument("classification inconclusive: class enumeration hit the cap");
  switch (tag->family) {
    case TypeFamily::Finite:
    case TypeFamily::Affine: return Ruleset::FiniteAffine;
    case TypeFamily::Exceptional: return Ruleset::Exceptional;
    case TypeFamily::Other: break;
  }
  throw std::invalid_argument("diagram is not of finite, affine or exceptional type; choose a ruleset");
}

std::vector<Diagram> cycle_census(std::span<const MutationClass> classes) {
  std::map<CanonicalKey, Diagram> found;
  for (const MutationClass& c : classes) {
    for (const Diagram& d : c.representatives) {
      for (const ChordlessCycle& cyc : chordless_cycles(d)) {
        if (!cyc.oriented) continue;
        if (std::all_of(cyc.weights.begin(), cyc.weights.end(), [](Weight w) { return w == 1; })) continue;
        Diagram sub = induced_subdiagram(d, cyc.vertices).diagram;
        CanonicalForm f = canonical_form(sub);
        if (!found.count(f.key)) found.emplace(f.key, canonical_diagram(sub));
      }
    }
  }
  std::vector<Diagram> out;
  for (auto& [k, d] : found) out.push_back(d);
  return out;
}

std::vector<Diagram> oriented_cycle_catalog(int min_length, int max_length, std::size_t cap) {
  std::map<CanonicalKey, Diagram> found;
  for (int len = min_length; len <= max_length; ++len) {
    std::vector<Weight> w(static_cast<std::size_t>(len), 1);
    while (true) {
      long product = 1;
      for (Weight x : w) product *= x;
      const long root = std::lround(std::sqrt(static_cast<double>(product)));
      if (root * root == product) {
        Diagram d = oriented_cycle(w);
        CanonicalForm f = canonical_form(d);
        if (!found.count(f.key) && is_mutation_finite(d, cap).finite == true) {
          found.emplace(f.key, canonical_diagram(d));
        }
      }
      int i = 0;
      while (i < len && w[static_cast<std::size_t>(i)] == 4) w[static_cast<std::size_t>(i++)] = 1;
      if (i == len) break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
  std::vector<Diagram> out;
  for (auto& [k, d] : found) out.push_back(d);
  return out;
}

Diagram cycle_orientation(std::span<const bool> forward) {
  const int n = static_cast<int>(forward.size());
  Diagram d(n);
  for (int i = 0; i < n; ++i) {
    if (forward[i]) {
      d.set_arrow(i, (i + 1) % n, 1);
    } else {
      d.set_arrow((i + 1) % n, i, 1);
    }
  }
  return d;
}

std::size_t cycle_orientation_classes(int n, bool include_oriented) {
  std::set<CanonicalKey> seen;
  std::size_t classes = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!include_oriented && (mask == 0 || mask == (1u << n) - 1)) continue;
    bool fw[32];
    for (int i = 0; i < n; ++i) fw[i] = (mask >> i) & 1u;
    Diagram d = cycle_orientation(std::span<const bool>(fw, static_cast<std::size_t>(n)));
    if (seen.count(canonical_key(d))) continue;
    MutationClass c = enumerate_class(d);
    seen.insert(c.keys.begin(), c.keys.end());
    ++classes;
  }
  return classes;
}

}  // namespace coxmut
