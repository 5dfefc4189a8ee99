#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "coxmut/canonical.hpp"
#include "coxmut/coset.hpp"
#include "coxmut/invariance.hpp"
#include "coxmut/mutation_class.hpp"
#include "coxmut/presentation.hpp"

using namespace coxmut;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

Diagram standard(const std::string& name, int n) {
  for (const StandardDiagram& s : standard_diagrams(n)) {
    if (s.tag.name == name) return s.diagram;
  }
  throw std::runtime_error("no standard diagram " + name);
}

Diagram cycle(const std::vector<Weight>& w) {
  const int n = static_cast<int>(w.size());
  Diagram d(n);
  for (int i = 0; i < n; ++i) d.set_arrow(i, (i + 1) % n, w[static_cast<std::size_t>(i)]);
  return d;
}

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

Result class_sizes() {
  const std::vector<std::tuple<std::string, int, std::size_t>> cases = {
      {"F̃_4", 5, 59},         {"F_4^{(*,+)}", 6, 90}, {"F_4^{(*,*)}", 6, 35}, {"X_6", 6, 5},
      {"X_7", 7, 2},           {"G_2^{(*,+)}", 4, 6},  {"G_2^{(*,*)}", 4, 2},
  };
  Result o{true, ""};
  for (const auto& [name, n, want] : cases) {
    MutationClass c = enumerate_class(standard(name, n));
    const bool ok = c.status == ClassStatus::Complete && c.size() == want;
    o.pass = o.pass && ok;
    o.detail += name + "=" + std::to_string(c.size()) + (ok ? "" : "(want " + std::to_string(want) + ")") + " ";
  }
  return o;
}

Result finite_orders() {
  const std::vector<std::tuple<std::string, int, std::size_t>> cases = {
      {"A_3", 3, 24}, {"B_3", 3, 48}, {"D_4", 4, 192}, {"F_4", 4, 1152}};
  Result o{true, ""};
  for (const auto& [name, n, want] : cases) {
    MutationClass c = enumerate_class(standard(name, n));
    std::size_t bad = 0;
    for (const Diagram& d : c.representatives) {
      CosetTable t = coset_enumerate(generate_presentation(d, Ruleset::FiniteAffine));
      if (!t.complete() || t.index != want) ++bad;
    }
    o.pass = o.pass && bad == 0 && c.status == ClassStatus::Complete;
    o.detail += name + ": " + std::to_string(c.size()) + " diagrams, " + std::to_string(bad) + " off; ";
  }
  return o;
}

Result affine_invariance() {
  const std::vector<std::pair<std::string, int>> cases = {{"Ã_{1,2}", 3}, {"Ã_{2,2}", 4}, {"B̃_3", 4}, {"C̃_2", 3},
                                                          {"D̃_4", 5},    {"G̃_2", 3},    {"F̃_4", 5}};
  BackendConfig cfg;
  cfg.backend = Backend::Exact;
  Result o{true, ""};
  for (const auto& [name, n] : cases) {
    VerificationReport r = verify_class(standard(name, n), Ruleset::FiniteAffine, cfg);
    const bool ok = r.failures() == 0 && r.relations_checked() > 0 && r.notes.empty();
    o.pass = o.pass && ok;
    o.detail += name + " " + std::to_string(r.relations_checked()) + "/" + std::to_string(r.failures()) + " ";
  }
  o.detail = "relations/failures: " + o.detail;
  return o;
}

Result worked_example() {
  Diagram g(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 4}});
  const bool p = relator_set(generate_presentation(g, Ruleset::FiniteAffine)) ==
                 displayed({{w1({1, 2}), 6},
                            {w1({2, 3}), 6},
                            {w1({1, 2, 3, 2}), 3},
                            {w1({2, 3, 1, 3}), 6},
                            {w1({3, 1, 2, 1}), 6},
                            {w1({2, 1, 2, 1, 2, 3}), 2},
                            {w1({2, 3, 2, 3, 2, 1}), 2}},
                           3);
  const bool q = relator_set(generate_presentation(mutate(g, 1), Ruleset::FiniteAffine)) ==
                 displayed({{w1({1, 3}), 3},
                            {w1({1, 2}), 6},
                            {w1({2, 3}), 6},
                            {w1({2, 3, 1, 3}), 2},
                            {w1({3, 1, 2, 1}), 2}},
                           3);
  const bool images = substitution_step(g, 1).images == std::vector<Word>{w1({1}), w1({2}), w1({2, 3, 2})};
  BackendConfig cfg;
  cfg.backend = Backend::Exact;
  VerificationReport r = verify_invariance_step(g, 1, Ruleset::FiniteAffine, cfg);
  std::size_t forward_failures = 0;
  std::size_t forward_checked = 0;
  for (const EdgeReport& e : r.edges) {
    if (e.from != g) continue;
    forward_checked += e.outcomes.size();
    forward_failures += e.failures();
  }
  Result o;
  o.pass = p && q && images && forward_checked > 0 && forward_failures == 0;
  o.detail = std::string("G relators ") + (p ? "match" : "differ") + ", mu2(G) relators " + (q ? "match" : "differ") +
             ", t3 = s2s3s2 " + (images ? "yes" : "no") + ", substituted relations " +
             std::to_string(forward_checked) + " with " + std::to_string(forward_failures) + " failures";
  return o;
}

Result counterexamples() {
  Result o{true, ""};
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    o.pass = o.pass && ok;
    o.detail += name + (ok ? " ok" : " FAIL") + " (" + detail + "); ";
  };
  auto order = [](const CosetTable& t) { return t.complete() ? std::to_string(t.index) : std::string(">cap"); };
  auto homs = [](const QuotientSummary& s, int k) {
    auto it = s.hom_counts.find(k);
    return it == s.hom_counts.end() ? std::optional<std::uint64_t>() : std::optional<std::uint64_t>(it->second);
  };
  auto base_ok = [](const CounterexampleReport& r) { return r.presentation_consistent && r.phi_is_homomorphism; };

  {
    CounterexampleReport r = reproduce_counterexample(CounterexampleCase::A3, 4, 100000);
    auto a = homs(r.tilde_side, 4), b = homs(r.coxeter_side, 4);
    const bool ok = base_ok(r) && r.coxeter_side.order.complete() && r.coxeter_side.order.index == 24 &&
                    !r.tilde_side.order.complete() && a && b && *a != *b;
    add("A3", ok,
        order(r.tilde_side.order) + " vs " + order(r.coxeter_side.order) + ", S4 homs " +
            (a ? std::to_string(*a) : "?") + " vs " + (b ? std::to_string(*b) : "?"));
  }
  {
    CounterexampleReport r = reproduce_counterexample(CounterexampleCase::B3, 4, 100000);
    const bool ok = base_ok(r) && r.tilde_side.order.complete() && r.coxeter_side.order.complete() &&
                    r.tilde_side.order.index == 384 && r.coxeter_side.order.index == 48;
    add("B3", ok, order(r.tilde_side.order) + " vs " + order(r.coxeter_side.order));
  }
  {
    CounterexampleReport r = reproduce_counterexample(CounterexampleCase::G2, 4, 100000);
    auto a = homs(r.tilde_side, 3), b = homs(r.coxeter_side, 3);
    const bool ok = base_ok(r) && r.coxeter_side.order.complete() && r.coxeter_side.order.index == 12 &&
                    !r.tilde_side.order.complete() && a && b && *a != *b;
    add("G2", ok,
        order(r.tilde_side.order) + " vs " + order(r.coxeter_side.order) + ", S3 homs " +
            (a ? std::to_string(*a) : "?") + " vs " + (b ? std::to_string(*b) : "?"));
  }
  for (auto [c, want] : {std::pair{CounterexampleCase::Dn, std::size_t{192}}, {CounterexampleCase::Bn, 768}}) {
    CounterexampleReport r = reproduce_counterexample(c, 4, 100000);
    const QuotientSummary& finite = r.coxeter_side;
    const QuotientSummary& other = r.tilde_side;
    const bool ok = base_ok(r) && finite.order.complete() && finite.order.index == want && !other.order.complete() &&
                    r.separated();
    std::string sep = r.separations.empty() ? "not separated" : r.separations.front();
    add(to_string(c) + "(n=4)", ok,
        order(other.order) + " vs " + order(finite.order) + ", want " + std::to_string(want) + ", " + sep);
  }
  return o;
}

std::vector<Diagram> table_cycles() {
  std::vector<Diagram> rows = {
      cycle({1, 1, 4}),       cycle({2, 2, 1}), cycle({2, 2, 4}),          cycle({4, 4, 4}),
      cycle({2, 2, 1, 1}),    cycle({2, 2, 2, 2}), cycle({2, 1, 2, 1}),    cycle({1, 1, 2, 1, 1, 2}),
      cycle({3, 3, 1}),       cycle({3, 3, 4}), cycle({3, 1, 3, 1}),       cycle({1, 1, 1}),
      cycle({1, 1, 1, 1}),    cycle({1, 1, 1, 1, 1}),
  };
  // The F~4 row: the oriented 5-cycles in the F~4 class.
  MutationClass f4 = enumerate_class(standard("F̃_4", 5));
  for (const Diagram& d : f4.representatives) {
    for (const ChordlessCycle& c : chordless_cycles(d)) {
      if (c.oriented && c.vertices.size() == 5) rows.push_back(d);
    }
  }
  return rows;
}

Result cycle_catalog() {
  std::set<CanonicalKey> table;
  for (const Diagram& d : table_cycles()) table.insert(canonical_key(d));
  std::set<CanonicalKey> found;
  for (const Diagram& d : oriented_cycle_catalog(3, 5)) found.insert(canonical_key(d));
  std::size_t missing = 0, extra = 0;
  std::string missing_sizes;
  for (const CanonicalKey& k : table) {
    if (!found.count(k)) {
      ++missing;
    }
  }
  for (const CanonicalKey& k : found) extra += table.count(k) ? 0 : 1;
  for (const Diagram& d : table_cycles()) {
    if (!found.count(canonical_key(d))) missing_sizes += " " + std::to_string(d.size()) + "-cycle";
  }
  Result o;
  o.pass = missing == 0 && extra == 0;
  o.detail = "table " + std::to_string(table.size()) + ", search " + std::to_string(found.size()) + ", missing " +
             std::to_string(missing) + (missing_sizes.empty() ? "" : " (" + missing_sizes.substr(1) + ")") +
             ", extra " + std::to_string(extra);
  return o;
}

Result parity() {
  std::vector<Diagram> members;
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"Ã_{2,2}", 4}, {"D̃_4", 5}}) {
    MutationClass c = enumerate_class(standard(name, n));
    members.insert(members.end(), c.representatives.begin(), c.representatives.end());
  }
  std::size_t x6 = 0;
  for (const Diagram& d : enumerate_class(standard("X_6", 6)).representatives) {
    if (d.max_weight() == 1) {
      members.push_back(d);
      ++x6;
    }
  }
  std::size_t cycles = 0, violations = 0;
  for (const Diagram& d : members) {
    for (const ChordlessCycle& c : chordless_cycles(d)) {
      if (c.oriented) continue;
      ++cycles;
      std::set<int> on(c.vertices.begin(), c.vertices.end());
      for (int v = 0; v < d.size(); ++v) {
        if (on.count(v)) continue;
        int arrows = 0;
        for (int u : c.vertices) arrows += d.weight(v, u) != 0 || d.weight(u, v) != 0;
        if (arrows % 2) ++violations;
      }
    }
  }
  Result o;
  o.pass = violations == 0 && cycles > 0;
  o.detail = std::to_string(members.size()) + " diagrams (" + std::to_string(x6) + " from X6), " +
             std::to_string(cycles) + " non-oriented cycles, " + std::to_string(violations) + " violations";
  return o;
}

Result surface_cycles() {
  std::size_t members = 0, violations = 0;
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"Ã_{2,2}", 4}, {"Ã_{2,3}", 5}}) {
    MutationClass c = enumerate_class(standard(name, n));
    members += c.size();
    for (const Diagram& d : c.representatives) {
      for (const ChordlessCycle& cyc : chordless_cycles(d)) {
        if (cyc.oriented && cyc.vertices.size() > 3) ++violations;
      }
    }
  }
  Result o;
  o.pass = violations == 0 && members > 0;
  o.detail = std::to_string(members) + " diagrams, " + std::to_string(violations) + " long oriented cycles";
  return o;
}

Result exceptional_invariance() {
  const std::vector<std::pair<std::string, int>> cases = {{"X_6", 6},         {"X_7", 7},         {"G_2^{(*,*)}", 4},
                                                          {"G_2^{(*,+)}", 4}, {"F_4^{(*,*)}", 6}, {"F_4^{(*,+)}", 6}};
  BackendConfig cfg;
  cfg.backend = Backend::FiniteQuotient;
  cfg.max_degree = 4;
  Result o{true, ""};
  for (const auto& [name, n] : cases) {
    VerificationReport r = verify_class(standard(name, n), Ruleset::Exceptional, cfg);
    const bool ok = r.failures() == 0 && r.relations_checked() > 0;
    o.pass = o.pass && ok;
    o.detail += name + " " + std::to_string(r.relations_checked()) + "/" + std::to_string(r.failures()) + " ";
  }
  o.detail = "relations/failures: " + o.detail;
  return o;
}

Result orientation_count() {
  Result o{true, ""};
  for (int n = 3; n <= 6; ++n) {
    std::size_t k = cycle_orientation_classes(n, false);
    o.pass = o.pass && k == static_cast<std::size_t>(n / 2);
    o.detail += "n=" + std::to_string(n) + ":" + std::to_string(k) + " ";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 10, class_sizes},      {2, 60, finite_orders},          {3, 300, affine_invariance},
      {4, 1, worked_example},    {5, 120, counterexamples},       {6, 60, cycle_catalog},
      {7, 30, parity},           {8, 30, surface_cycles},         {9, 600, exceptional_invariance},
      {10, 10, orientation_count},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s [%.2fs, budget %.0fs%s]\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
