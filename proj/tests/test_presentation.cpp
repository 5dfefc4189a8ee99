#include <catch_amalgamated.hpp>

#include <set>

#include "coxmut/presentation.hpp"
#include "coxmut/word.hpp"

using namespace coxmut;

namespace {

Word w1(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(x - 1);
  return w;
}

std::set<Word> relator_set(const Presentation& p) {
  std::set<Word> s;
  for (const Word& w : p.relators()) s.insert(normalize_relator(w));
  return s;
}

std::set<Word> displayed(std::initializer_list<std::pair<Word, int>> rels, int gens) {
  std::set<Word> s;
  for (int i = 0; i < gens; ++i) s.insert(normalize_relator(Word{i, i}));
  for (const auto& [b, e] : rels) s.insert(normalize_relator(power(b, e)));
  return s;
}

}  // namespace

TEST_CASE("relator normalization identifies rotations and reversals") {
  CHECK(normalize_relator(w1({1, 2, 3, 2})) == normalize_relator(w1({2, 3, 2, 1})));
  CHECK(normalize_relator(w1({1, 2, 3, 2})) == normalize_relator(w1({2, 1, 2, 3})));
  CHECK(normalize_relator(w1({1, 2, 3})) == normalize_relator(w1({3, 2, 1})));
  CHECK(free_reduce(w1({1, 2, 2, 1, 3})) == w1({3}));
  CHECK(cyclic_reduce(w1({1, 2, 3, 1})) == w1({2, 3}));
}

TEST_CASE("presentations of the (3,3,4) and (3,3,1) triangles") {
  Diagram g(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 4}});
  Presentation p = generate_presentation(g, Ruleset::FiniteAffine);
  CHECK(relator_set(p) == displayed({{w1({1, 2}), 6},
                                     {w1({2, 3}), 6},
                                     {w1({1, 2, 3, 2}), 3},
                                     {w1({2, 3, 1, 3}), 6},
                                     {w1({3, 1, 2, 1}), 6},
                                     {w1({2, 1, 2, 1, 2, 3}), 2},
                                     {w1({2, 3, 2, 3, 2, 1}), 2}},
                                    3));
  Presentation q = generate_presentation(mutate(g, 1), Ruleset::FiniteAffine);
  CHECK(relator_set(q) == displayed({{w1({1, 3}), 3},
                                     {w1({1, 2}), 6},
                                     {w1({2, 3}), 6},
                                     {w1({2, 3, 1, 3}), 2},
                                     {w1({3, 1, 2, 1}), 2}},
                                    3));
}

TEST_CASE("cycle relation exponents follow t") {
  ChordlessCycle c{{0, 1, 2}, true, {3, 3, 4}};
  std::vector<int> t = cycle_t_values(c);
  CHECK(t == std::vector<int>{1, 3, 3});
  std::vector<CycleParam> ps = cycle_relation_params(c);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].m == 3);
  CHECK(ps[1].m == 6);
  CHECK(cycle_relation_base(c, 0) == Word{0, 1, 2, 1});
}

TEST_CASE("reduced presentation of the simply-laced triangle keeps one cycle relation") {
  Diagram tri(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  Presentation full = generate_presentation(tri, Ruleset::FiniteAffine);
  CHECK(full.count(RelationKind::R3) == 3);
  CHECK(reduce_cycle_relations(full, tri).count(RelationKind::R3) == 1);
}

TEST_CASE("the handle pattern produces both R5 relators under the surface ruleset") {
  PatternSpec h = pattern_spec(PatternFamily::Handle);
  Presentation p = generate_presentation(h.diagram, Ruleset::UnpuncturedSurface);
  CHECK(p.count(RelationKind::R5) == 2);
  std::set<Word> s = relator_set(p);
  CHECK(s.count(normalize_relator(power(w1({1, 2, 3, 4, 5, 4, 3, 2}), 3))));
  CHECK(s.count(normalize_relator(power(w1({1, 4, 3, 2, 5, 2, 3, 4}), 3))));
  CHECK(generate_presentation(h.diagram, Ruleset::FiniteAffine).count(RelationKind::R5) == 0);
}

TEST_CASE("pattern matching finds the D~n pattern in its own diagram and its opposite") {
  for (int n = 4; n <= 6; ++n) {
    PatternSpec spec = pattern_spec(PatternFamily::Dn, n);
    std::vector<PatternFamily> fam{PatternFamily::Dn};
    CHECK_FALSE(match_patterns(spec.diagram, fam).empty());
    CHECK_FALSE(match_patterns(opposite(spec.diagram), fam).empty());
  }
}

TEST_CASE("rendering") {
  Relation r{RelationKind::R3, w1({1, 2, 3, 2}), 3, w1({1, 2, 3}), 1, 3, 0};
  CHECK(render_relation(r) == "(s1 s2 s3 s2)^3");
  Presentation p = generate_presentation(Diagram(2, {{0, 1, 1}}), Ruleset::FiniteAffine);
  CHECK(render_text(p) == "generators: 2\nR1 (s1)^2\nR1 (s2)^2\nR2 (s1 s2)^3\n");
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(ruleset_from_string("hyperbolic"), std::invalid_argument);
  Diagram heavy(2, {{0, 1, 5}});
  CHECK_THROWS_AS(generate_presentation(heavy, Ruleset::FiniteAffine), std::invalid_argument);
}
