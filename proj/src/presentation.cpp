#include "coxmut/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "coxmut/mutation_class.hpp"
#include "coxmut/radical.hpp"

namespace coxmut {

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::R1: return "R1";
    case RelationKind::R2: return "R2";
    case RelationKind::R3: return "R3";
    case RelationKind::R4: return "R4";
    case RelationKind::R5: return "R5";
    case RelationKind::R5Star: return "R5*";
    case RelationKind::Quotient: return "quotient";
  }
  return "?";
}

RelationKind relation_kind_from_string(const std::string& s) {
  for (RelationKind k : {RelationKind::R1, RelationKind::R2, RelationKind::R3, RelationKind::R4,
                         RelationKind::R5, RelationKind::R5Star, RelationKind::Quotient}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown relation kind: " + s);
}

std::string to_string(Ruleset r) {
  switch (r) {
    case Ruleset::FiniteAffine: return "finite-affine";
    case Ruleset::UnpuncturedSurface: return "unpunctured-surface";
    case Ruleset::Exceptional: return "exceptional";
    case Ruleset::Auto: return "auto";
  }
  return "?";
}

Ruleset ruleset_from_string(const std::string& s) {
  for (Ruleset r : {Ruleset::FiniteAffine, Ruleset::UnpuncturedSurface, Ruleset::Exceptional, Ruleset::Auto}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown ruleset: " + s);
}

std::string to_string(PatternFamily f) {
  switch (f) {
    case PatternFamily::A22: return "A~2,2";
    case PatternFamily::Dn: return "D~n";
    case PatternFamily::B3: return "B~3";
    case PatternFamily::Bn: return "B~n";
    case PatternFamily::G2: return "G~2";
    case PatternFamily::Handle: return "handle";
    case PatternFamily::X5: return "X5";
  }
  return "?";
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  out.reserve(relations.size());
  for (const Relation& r : relations) out.push_back(r.word());
  return out;
}

std::size_t Presentation::count(RelationKind k) const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [k](const Relation& r) { return r.kind == k; }));
}

std::optional<int> coxeter_exponent(Weight w) {
  switch (w) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    case 4: return std::nullopt;
    default:
      throw std::invalid_argument("arrow weight " + std::to_string(w) +
                                  " is outside the mutation-finite range");
  }
}

namespace {

int exponent_from_t(int t) {
  static constexpr int table[] = {2, 3, 4, 6};
  return table[t];
}

}  // namespace

std::vector<int> cycle_t_values(const ChordlessCycle& c) {
  const int d = static_cast<int>(c.vertices.size());
  std::vector<int> out;
  for (int l = 0; l < d; ++l) {
    RadicalScalar prod(1, 1);
    for (int j = l; j <= l + d - 2; ++j) {
      prod = prod * RadicalScalar::sqrt_of(static_cast<std::uint64_t>(c.weights[j % d]));
    }
    RadicalScalar last = RadicalScalar::sqrt_of(static_cast<std::uint64_t>(c.weights[(l + d - 1) % d]));
    mpq_class t = (prod - last).squared();
    if (t.get_den() != 1) throw std::logic_error("non-integral t on a cycle");
    out.push_back(static_cast<int>(t.get_num().get_si()));
  }
  return out;
}

std::vector<CycleParam> cycle_relation_params(const ChordlessCycle& c) {
  std::vector<int> ts = cycle_t_values(c);
  std::vector<CycleParam> out;
  for (int l = 0; l < static_cast<int>(ts.size()); ++l) {
    if (ts[l] < 4) out.push_back({l, ts[l], exponent_from_t(ts[l])});
  }
  return out;
}

Word cycle_relation_base(const ChordlessCycle& c, int l) {
  const int d = static_cast<int>(c.vertices.size());
  Word w;
  for (int j = 0; j < d; ++j) w.push_back(c.vertices[(l + j) % d]);
  for (int j = d - 2; j >= 1; --j) w.push_back(c.vertices[(l + j) % d]);
  return w;
}

namespace {

Word from_labels(std::initializer_list<int> one_based) {
  Word w;
  for (int x : one_based) w.push_back(x - 1);
  return w;
}

Diagram from_arrows(int n, std::initializer_list<std::array<int, 3>> one_based) {
  Diagram d(n);
  for (const auto& a : one_based) d.set_arrow(a[0] - 1, a[1] - 1, a[2]);
  return d;
}

}  // namespace

PatternSpec pattern_spec(PatternFamily f, int param) {
  PatternSpec s{f, 0, Diagram(), RelationKind::R4, {}, 2};
  switch (f) {
    case PatternFamily::A22:
      s.diagram = from_arrows(4, {{1, 2, 1}, {2, 3, 1}, {3, 1, 4}, {1, 4, 1}, {4, 3, 1}});
      s.bases = {from_labels({1, 2, 3, 4, 3, 2})};
      break;
    case PatternFamily::Dn: {
      const int n = param;
      if (n < 4) throw std::invalid_argument("D~n pattern needs n >= 4");
      s.param = n;
      Diagram d(n + 1);
      d.set_arrow(2, n, 1);
      for (int v = 2; v < n; ++v) d.set_arrow(v, v + 1, 1);
      d.set_arrow(n, 0, 1);
      d.set_arrow(0, 2, 1);
      d.set_arrow(n, 1, 1);
      d.set_arrow(1, 2, 1);
      s.diagram = d;
      Word w = {0, 1, 2, 1, 0};
      for (int v = 3; v <= n; ++v) w.push_back(v);
      for (int v = n - 1; v >= 3; --v) w.push_back(v);
      s.bases = {w};
      break;
    }
    case PatternFamily::B3:
      s.diagram = from_arrows(4, {{1, 2, 2}, {2, 3, 2}, {3, 1, 4}, {1, 4, 1}, {4, 3, 1}});
      s.bases = {from_labels({2, 3, 4, 1, 4, 3}), from_labels({2, 1, 4, 3, 4, 1})};
      break;
    case PatternFamily::Bn: {
      const int n = param;
      if (n < 3) throw std::invalid_argument("B~n pattern needs n >= 3");
      s.param = n;
      Diagram d(n + 1);
      d.set_arrow(0, n - 1, 1);
      for (int v = 0; v + 1 < n; ++v) d.set_arrow(v, v + 1, 1);
      d.set_arrow(n - 1, n, 2);
      d.set_arrow(n, 0, 2);
      s.diagram = d;
      Word w = {n, 0, n};
      for (int v = 1; v <= n - 1; ++v) w.push_back(v);
      for (int v = n - 2; v >= 1; --v) w.push_back(v);
      s.bases = {w};
      break;
    }
    case PatternFamily::G2:
      s.diagram = from_arrows(3, {{1, 2, 3}, {2, 3, 3}, {3, 1, 4}});
      s.bases = {from_labels({2, 1, 2, 1, 2, 3}), from_labels({2, 3, 2, 3, 2, 1})};
      break;
    case PatternFamily::Handle:
      s.kind = RelationKind::R5;
      s.exponent = 3;
      s.diagram = from_arrows(
          5, {{1, 3, 4}, {2, 1, 1}, {3, 2, 1}, {4, 1, 1}, {3, 4, 1}, {5, 2, 1}, {2, 4, 1}, {4, 5, 1}});
      s.bases = {from_labels({1, 2, 3, 4, 5, 4, 3, 2}), from_labels({1, 4, 3, 2, 5, 2, 3, 4})};
      break;
    case PatternFamily::X5:
      s.kind = RelationKind::R5Star;
      s.exponent = 2;
      // Labels 0..4 with 0 the centre.
      s.diagram = Diagram(5, {{0, 1, 1}, {1, 2, 4}, {2, 0, 1}, {0, 3, 1}, {3, 4, 4}, {4, 0, 1}});
      s.bases = {Word{1, 0, 2, 0, 1, 3, 0, 4, 0, 3}, Word{2, 0, 1, 0, 2, 4, 0, 3, 0, 4}};
      break;
  }
  return s;
}

namespace {

void match_one(const Diagram& d, const Diagram& pat, bool opp, PatternFamily fam, int param,
               std::set<std::vector<int>>& seen_sets, std::vector<PatternMatch>& out) {
  const int m = pat.size();
  const int n = d.size();
  if (m > n) return;
  // Label order: breadth-first from label 0 so each label after the first has
  // an assigned neighbour.
  std::vector<int> order{0};
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  in[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int u : pat.neighbours(order[i])) {
      if (!in[u]) {
        in[u] = 1;
        order.push_back(u);
      }
    }
  }
  for (int u = 0; u < m; ++u) {
    if (!in[u]) order.push_back(u);
  }
  std::vector<int> map(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      std::vector<int> set = map;
      std::sort(set.begin(), set.end());
      if (seen_sets.insert(set).second) out.push_back({fam, map, param, opp});
      return;
    }
    const int label = order[depth];
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        int other = order[k];
        if (d.signed_weight(v, map[other]) != pat.signed_weight(label, other)) ok = false;
      }
      if (!ok) continue;
      map[label] = v;
      used[v] = 1;
      self(self, depth + 1);
      used[v] = 0;
      map[label] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<PatternMatch> match_patterns(const Diagram& d, std::span<const PatternFamily> families) {
  std::vector<PatternMatch> out;
  for (PatternFamily f : families) {
    std::vector<int> params{0};
    if (f == PatternFamily::Dn) {
      params.clear();
      for (int k = 4; k + 1 <= d.size(); ++k) params.push_back(k);
    } else if (f == PatternFamily::Bn) {
      params.clear();
      for (int k = 3; k + 1 <= d.size(); ++k) params.push_back(k);
    }
    for (int param : params) {
      PatternSpec spec = pattern_spec(f, param);
      std::set<std::vector<int>> seen_sets;
      match_one(d, spec.diagram, false, f, spec.param, seen_sets, out);
      match_one(d, opposite(spec.diagram), true, f, spec.param, seen_sets, out);
    }
  }
  return out;
}

std::vector<PatternFamily> families_for(Ruleset r) {
  std::vector<PatternFamily> fams{PatternFamily::A22, PatternFamily::Dn, PatternFamily::B3, PatternFamily::Bn,
                                  PatternFamily::G2};
  if (r == Ruleset::UnpuncturedSurface) fams.push_back(PatternFamily::Handle);
  if (r == Ruleset::Exceptional) fams.push_back(PatternFamily::X5);
  return fams;
}

Presentation generate_presentation(const Diagram& d, Ruleset ruleset) {
  if (ruleset == Ruleset::Auto) ruleset = resolve_ruleset(d);
  const int n = d.size();
  Presentation p;
  p.generators = n;
  p.ruleset = ruleset;
  std::set<Word> seen;

  auto add = [&](Relation r) {
    if (r.kind != RelationKind::R1) {
      Word norm = normalize_relator(r.word());
      if (norm.empty() || !seen.insert(norm).second) return;
    }
    p.relations.push_back(std::move(r));
  };

  for (int i = 0; i < n; ++i) add({RelationKind::R1, {i}, 2, {i}, std::nullopt, std::nullopt, 0});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::optional<int> m = coxeter_exponent(d.weight(i, j));
      if (m) add({RelationKind::R2, {i, j}, *m, {i, j}, std::nullopt, std::nullopt, 0});
    }
  }

  std::vector<ChordlessCycle> cycles;
  for (ChordlessCycle& c : chordless_cycles(d)) {
    if (c.oriented) cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const ChordlessCycle& a, const ChordlessCycle& b) { return a.vertices < b.vertices; });
  for (const ChordlessCycle& c : cycles) {
    for (const CycleParam& cp : cycle_relation_params(c)) {
      add({RelationKind::R3, cycle_relation_base(c, cp.l), cp.m, c.vertices, cp.t, cp.m, cp.l});
    }
  }

  std::vector<PatternFamily> fams = families_for(ruleset);
  for (const PatternMatch& match : match_patterns(d, fams)) {
    PatternSpec spec = pattern_spec(match.family, match.param);
    for (const Word& b : spec.bases) {
      Word w;
      for (int label : b) w.push_back(match.vertex_map[label]);
      add({spec.kind, w, spec.exponent, match.vertex_map, std::nullopt, std::nullopt, 0});
    }
  }
  return p;
}

Presentation omit_r4(const Presentation& p) {
  Presentation out = p;
  std::erase_if(out.relations, [](const Relation& r) { return r.kind == RelationKind::R4; });
  return out;
}

Presentation reduce_cycle_relations(const Presentation& p, const Diagram& d) {
  Presentation out = p;
  std::map<std::vector<int>, std::vector<std::size_t>> by_cycle;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (p.relations[i].kind == RelationKind::R3) by_cycle[p.relations[i].source].push_back(i);
  }
  std::set<std::size_t> drop;
  for (const auto& [verts, idxs] : by_cycle) {
    std::vector<Weight> ws;
    for (std::size_t k = 0; k < verts.size(); ++k) ws.push_back(d.weight(verts[k], verts[(k + 1) % verts.size()]));
    std::vector<Weight> sorted_ws = ws;
    std::sort(sorted_ws.begin(), sorted_ws.end());
    const bool g2_cycle = sorted_ws == std::vector<Weight>{3, 3, 4};
    bool any_two = false, all_three = true;
    for (std::size_t i : idxs) {
      if (*p.relations[i].m == 2) any_two = true;
      if (*p.relations[i].m != 3) all_three = false;
    }
    int keep_m = 0;
    if (any_two) {
      keep_m = 2;
    } else if (all_three || g2_cycle) {
      keep_m = 3;
    } else {
      continue;
    }
    std::optional<std::size_t> keep;
    for (std::size_t i : idxs) {
      if (*p.relations[i].m != keep_m) continue;
      if (!keep || p.relations[i].cycle_offset < p.relations[*keep].cycle_offset) keep = i;
    }
    for (std::size_t i : idxs) {
      if (!keep || i != *keep) drop.insert(i);
    }
  }
  out.relations.clear();
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (!drop.count(i)) out.relations.push_back(p.relations[i]);
  }
  return out;
}

Presentation quotient(const Presentation& p, std::span<const Word> extra) {
  Presentation out = p;
  for (const Word& w : extra) {
    Word src = w;
    std::sort(src.begin(), src.end());
    src.erase(std::unique(src.begin(), src.end()), src.end());
    out.relations.push_back({RelationKind::Quotient, w, 1, src, std::nullopt, std::nullopt, 0});
  }
  return out;
}

Presentation coxeter_presentation(const std::vector<std::vector<int>>& m) {
  Presentation p;
  const int n = static_cast<int>(m.size());
  p.generators = n;
  for (int i = 0; i < n; ++i) p.relations.push_back({RelationKind::R1, {i}, 2, {i}, std::nullopt, std::nullopt, 0});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j] > 0) p.relations.push_back({RelationKind::R2, {i, j}, m[i][j], {i, j}, std::nullopt, std::nullopt, 0});
    }
  }
  return p;
}

std::string render_relation(const Relation& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.base.size(); ++i) {
    if (i) s += ' ';
    s += "s" + std::to_string(r.base[i] + 1);
  }
  s += ")";
  if (r.exponent != 1) s += "^" + std::to_string(r.exponent);
  return s;
}

std::string render_text(const Presentation& p) {
  std::string s = "generators: " + std::to_string(p.generators) + "\n";
  for (const Relation& r : p.relations) s += to_string(r.kind) + " " + render_relation(r) + "\n";
  return s;
}

}  // namespace coxmut
