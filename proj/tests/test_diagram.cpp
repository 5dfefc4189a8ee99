#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "coxmut/canonical.hpp"
#include "coxmut/diagram.hpp"
#include "coxmut/mutation_class.hpp"
#include "coxmut/radical.hpp"

using namespace coxmut;

namespace {

Diagram triangle(Weight a, Weight b, Weight c) { return Diagram(3, {{0, 1, a}, {1, 2, b}, {2, 0, c}}); }

// Brute force over vertex subsets: an induced subgraph is a chordless cycle
// iff it is connected and every vertex has exactly two neighbours in it.
std::set<std::pair<std::vector<int>, bool>> brute_cycles(const Diagram& d) {
  std::set<std::pair<std::vector<int>, bool>> out;
  const int n = d.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    if (s.size() < 3) continue;
    bool ok = true, oriented = true;
    for (int v : s) {
      int deg = 0, outdeg = 0;
      for (int u : s) {
        if (d.adjacent(v, u)) ++deg;
        if (d.has_arrow(v, u)) ++outdeg;
      }
      ok = ok && deg == 2;
      oriented = oriented && outdeg == 1;
    }
    if (!ok) continue;
    std::vector<int> seen{s[0]};
    for (std::size_t i = 0; i < seen.size(); ++i) {
      for (int u : s) {
        if (d.adjacent(seen[i], u) && std::find(seen.begin(), seen.end(), u) == seen.end()) seen.push_back(u);
      }
    }
    if (seen.size() == s.size()) out.insert({s, oriented});
  }
  return out;
}

Diagram random_simply_laced(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution edge(p), dir(0.5);
  Diagram d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) dir(rng) ? d.set_arrow(i, j, 1) : d.set_arrow(j, i, 1);
    }
  }
  return d;
}

// Least adjacency string over all relabellings.
std::vector<Weight> naive_canonical(const Diagram& d) {
  std::vector<int> perm(static_cast<std::size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) perm[i] = i;
  std::vector<Weight> best;
  do {
    std::vector<Weight> cur;
    for (int i = 0; i < d.size(); ++i) {
      for (int j = 0; j < d.size(); ++j) cur.push_back(d.signed_weight(perm[i], perm[j]));
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t naive_class_size(const Diagram& seed) {
  std::set<std::vector<Weight>> seen{naive_canonical(seed)};
  std::vector<Diagram> queue{seed};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int k = 0; k < seed.size(); ++k) {
      Diagram m = mutate(queue[i], k);
      if (seen.insert(naive_canonical(m)).second) queue.push_back(m);
    }
  }
  return seen.size();
}

Diagram standard(const std::string& name, int n) {
  for (const StandardDiagram& s : standard_diagrams(n)) {
    if (s.tag.name == name) return s.diagram;
  }
  throw std::runtime_error("no standard diagram " + name);
}

}  // namespace

TEST_CASE("mutating a path of type A3 at the middle vertex closes an oriented triangle") {
  Diagram path(3, {{0, 1, 1}, {1, 2, 1}});
  Diagram m = mutate(path, 1);
  CHECK(m.has_arrow(1, 0));
  CHECK(m.has_arrow(2, 1));
  CHECK(m.has_arrow(0, 2));
  CHECK(m.weight(0, 2) == 1);
}

TEST_CASE("mutation of the (3,3,4) triangle at vertex 2 gives the (3,3,1) triangle") {
  Diagram g = triangle(3, 3, 4);
  Diagram m = mutate(g, 1);
  CHECK(m.weight(0, 1) == 3);
  CHECK(m.weight(1, 2) == 3);
  CHECK(m.weight(0, 2) == 1);
  CHECK(m.has_arrow(0, 2));
  CHECK(mutate(m, 1) == g);
}

TEST_CASE("mutation is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Diagram d = random_simply_laced(rng, 6, 0.4);
    for (int k = 0; k < d.size(); ++k) CHECK(mutate(mutate(d, k), k) == d);
  }
}

TEST_CASE("perfect-square violations are rejected") {
  Diagram bad = triangle(2, 1, 1);
  CHECK_FALSE(validate(bad).valid);
  CHECK_THROWS_AS(mutate(bad, 0), radicand_mismatch);
}

TEST_CASE("chordless cycles agree with subset brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Diagram d = random_simply_laced(rng, 7, trial % 2 ? 0.35 : 0.55);
    std::set<std::pair<std::vector<int>, bool>> got;
    for (const ChordlessCycle& c : chordless_cycles(d)) {
      std::vector<int> v = c.vertices;
      std::sort(v.begin(), v.end());
      got.insert({v, c.oriented});
    }
    CHECK(got == brute_cycles(d));
  }
}

TEST_CASE("canonical keys are invariant under relabelling and separate non-isomorphic diagrams") {
  std::mt19937 rng(3);
  MutationClass c = enumerate_class(standard("F̃_4", 5));
  REQUIRE(c.complete());
  std::set<CanonicalKey> keys;
  for (const Diagram& d : c.representatives) {
    CanonicalKey k = canonical_key(d);
    keys.insert(k);
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(permute(d, perm)) == k);
    }
  }
  CHECK(keys.size() == c.size());
  std::set<std::vector<Weight>> naive;
  for (const Diagram& d : c.representatives) naive.insert(naive_canonical(d));
  CHECK(naive.size() == c.size());
}

TEST_CASE("class sizes agree with a naive enumeration") {
  for (auto [name, n] : std::vector<std::pair<std::string, int>>{
           {"A_4", 4}, {"D_4", 4}, {"B_3", 3}, {"G̃_2", 3}, {"Ã_{2,2}", 4}, {"C̃_3", 4}, {"X_7", 7}}) {
    INFO(name);
    MutationClass c = enumerate_class(standard(name, n));
    REQUIRE(c.complete());
    CHECK(c.size() == naive_class_size(standard(name, n)));
  }
}

TEST_CASE("class paths reproduce every representative") {
  MutationClass c = enumerate_class(standard("D̃_4", 5));
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<int> path = c.path_to(i);
    CHECK(mutate_sequence(c.representatives[0], path) == c.representatives[i]);
  }
}

TEST_CASE("lifting to exchange matrices round-trips and commutes with mutation on the F̃4 class") {
  MutationClass c = enumerate_class(standard("F̃_4", 5));
  REQUIRE(c.complete());
  for (const Diagram& d : c.representatives) {
    ExchangeMatrix b = lift_to_matrix(d);
    CHECK(b.skew_symmetrizable());
    CHECK(diagram_of(b) == d);
    for (int k = 0; k < d.size(); ++k) CHECK(diagram_of(mutate_matrix(b, k)) == mutate(d, k));
  }
}

TEST_CASE("mutation-infinite diagrams are detected") {
  Diagram star(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
  FinitenessResult r = is_mutation_finite(star);
  REQUIRE(r.finite.has_value());
  CHECK_FALSE(*r.finite);
  CHECK(*is_mutation_finite(triangle(1, 1, 1)).finite);
}

TEST_CASE("classification names the alternating square as affine") {
  Diagram sq(4, {{0, 1, 1}, {2, 1, 1}, {2, 3, 1}, {0, 3, 1}});
  std::optional<TypeTag> t = classify(sq);
  REQUIRE(t);
  CHECK(t->display() == "affine Ã_{2,2}");
  for (int n = 2; n <= 8; ++n) {
    for (const StandardDiagram& s : standard_diagrams(n)) {
      INFO(s.tag.name);
      std::optional<TypeTag> got = classify(s.diagram);
      REQUIRE(got);
      CHECK(*got == s.tag);
    }
  }
}

TEST_CASE("orientations of the n-cycle fall into floor(n/2) classes") {
  for (int n = 3; n <= 6; ++n) CHECK(cycle_orientation_classes(n, false) == static_cast<std::size_t>(n / 2));
}

TEST_CASE("oriented cycle catalog up to length 6 matches the known list") {
  auto cyc = [](std::vector<Weight> w) {
    const int n = static_cast<int>(w.size());
    Diagram d(n);
    for (int i = 0; i < n; ++i) d.set_arrow(i, (i + 1) % n, w[static_cast<std::size_t>(i)]);
    return canonical_key(d);
  };
  std::set<CanonicalKey> want = {
      cyc({1, 1, 4}),    cyc({2, 2, 1}),    cyc({2, 2, 4}),    cyc({4, 4, 4}),          cyc({2, 2, 1, 1}),
      cyc({2, 2, 2, 2}), cyc({2, 1, 2, 1}), cyc({1, 1, 2, 1, 2}), cyc({1, 1, 2, 1, 1, 2}), cyc({3, 3, 1}),
      cyc({3, 3, 4}),    cyc({3, 1, 3, 1}), cyc({1, 1, 1}),    cyc({1, 1, 1, 1}),       cyc({1, 1, 1, 1, 1}),
      cyc({1, 1, 1, 1, 1, 1}),
  };
  std::set<CanonicalKey> got;
  for (const Diagram& d : oriented_cycle_catalog(3, 6)) got.insert(canonical_key(d));
  CHECK(got == want);
}
