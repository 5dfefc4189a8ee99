#include "coxmut/invariance.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "coxmut/canonical.hpp"

namespace coxmut {

std::string to_string(Convention c) { return c == Convention::Outgoing ? "outgoing" : "incoming"; }

std::string to_string(Backend b) { return b == Backend::Exact ? "exact-representation" : "finite-quotient"; }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::NotDecided: return "not-decided";
  }
  return "?";
}

namespace {

bool conjugated(const Diagram& g, int x, int i, Convention c) {
  if (i == x) return false;
  return c == Convention::Outgoing ? g.has_arrow(x, i) : g.has_arrow(i, x);
}

}  // namespace

SubstitutionStep substitution_step(const Diagram& g, int x, Convention c) {
  SubstitutionStep s;
  s.vertex = x;
  for (int i = 0; i < g.size(); ++i) {
    s.images.push_back(conjugated(g, x, i, c) ? Word{x, i, x} : Word{i});
  }
  return s;
}

std::vector<Word> track_substitution(const Diagram& seed, std::span<const int> path, Convention c) {
  std::vector<Word> words;
  for (int i = 0; i < seed.size(); ++i) words.push_back({i});
  Diagram g = seed;
  for (int x : path) {
    SubstitutionStep s = substitution_step(g, x, c);
    std::vector<Word> next;
    for (const Word& w : s.images) next.push_back(substitute(w, words));
    words = std::move(next);
    g = mutate(g, x);
  }
  return words;
}

std::vector<QMatrix> step_images(std::span<const QMatrix> images, const Diagram& g, int x, Convention c) {
  std::vector<QMatrix> out(images.begin(), images.end());
  for (int i = 0; i < g.size(); ++i) {
    if (conjugated(g, x, i, c)) out[i] = images[x] * images[i] * images[x];
  }
  return out;
}

std::vector<Perm> step_images(std::span<const Perm> images, const Diagram& g, int x, Convention c) {
  std::vector<Perm> out(images.begin(), images.end());
  for (int i = 0; i < g.size(); ++i) {
    if (conjugated(g, x, i, c)) out[i] = images[x].then(images[i]).then(images[x]);
  }
  return out;
}

std::size_t EdgeReport::failures() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(),
                                                [](const RelationOutcome& o) { return o.outcome == Outcome::Fails; }));
}

std::size_t VerificationReport::relations_checked() const {
  std::size_t n = 0;
  for (const EdgeReport& e : edges) n += e.outcomes.size();
  return n;
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const EdgeReport& e : edges) n += e.failures();
  return n;
}

std::optional<std::size_t> base_representative(const MutationClass& c) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Diagram& d = c.representatives[i];
    if (!is_acyclic(d) || d.max_weight() >= 4) continue;
    if (!best || c.keys[i] < c.keys[*best]) best = i;
  }
  return best;
}

std::vector<std::vector<int>> coxeter_matrix(const Diagram& d) {
  const int n = d.size();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::optional<int> e = coxeter_exponent(d.weight(i, j));
      if (!e) throw std::invalid_argument("weight-4 arrow has no Coxeter exponent");
      m[i][j] = *e;
    }
  }
  return m;
}

namespace {

std::string matrix_witness(const QMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      const QuadraticFieldElement& e = m(i, j);
      bool bad = i == j ? !(e == QuadraticFieldElement(1)) : !e.is_zero();
      if (bad) {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + e.to_string();
      }
    }
  }
  return "";
}

std::string perm_witness(std::span<const Perm> images, int degree) {
  std::string s = "S" + std::to_string(degree) + " images:";
  for (const Perm& p : images) {
    s += " [";
    for (int i = 0; i < degree; ++i) s += std::to_string(p.p[i] + 1);
    s += "]";
  }
  return s;
}

EdgeReport exact_edge(const Diagram& target, std::span<const QMatrix> images, const Diagram& from, int x,
                      int direction, Ruleset ruleset) {
  EdgeReport e;
  e.from = from;
  e.vertex = x;
  e.direction = direction;
  Presentation p = generate_presentation(target, ruleset);
  for (const Relation& r : p.relations) {
    QMatrix m = evaluate_relator(images, r.base, r.exponent);
    RelationOutcome o{r, Outcome::Holds, ""};
    if (!m.is_identity()) {
      o.outcome = Outcome::Fails;
      o.witness = matrix_witness(m);
    }
    e.outcomes.push_back(std::move(o));
  }
  return e;
}

void exact_both(VerificationReport& rep, const Diagram& g, std::span<const QMatrix> images, int x,
                const BackendConfig& cfg) {
  Diagram g2 = mutate(g, x);
  std::vector<QMatrix> fwd = step_images(images, g, x, cfg.convention);
  rep.edges.push_back(exact_edge(g2, fwd, g, x, 0, rep.ruleset));
  std::vector<QMatrix> back = step_images(fwd, g2, x, cfg.convention);
  rep.edges.push_back(exact_edge(g, back, g, x, 1, rep.ruleset));
}

EdgeReport quotient_edge(const Diagram& source, const Diagram& target, int x, const Diagram& from, int direction,
                         Ruleset ruleset, const BackendConfig& cfg) {
  EdgeReport e;
  e.from = from;
  e.vertex = x;
  e.direction = direction;
  Presentation ps = generate_presentation(source, ruleset);
  Presentation pt = generate_presentation(target, ruleset);
  for (const Relation& r : pt.relations) e.outcomes.push_back({r, Outcome::Holds, ""});
  for_each_hom(ps, cfg.max_degree, [&](std::span<const Perm> images) {
    std::vector<Perm> t = step_images(images, source, x, cfg.convention);
    for (RelationOutcome& o : e.outcomes) {
      if (o.outcome == Outcome::Fails) continue;
      if (!evaluate_relator(t, o.relation.base, o.relation.exponent).is_identity()) {
        o.outcome = Outcome::Fails;
        o.witness = perm_witness(images, cfg.max_degree);
      }
    }
    return true;
  });
  return e;
}

void quotient_both(VerificationReport& rep, const Diagram& g, int x, const BackendConfig& cfg) {
  Diagram g2 = mutate(g, x);
  rep.edges.push_back(quotient_edge(g, g2, x, g, 0, rep.ruleset, cfg));
  rep.edges.push_back(quotient_edge(g2, g, x, g, 1, rep.ruleset, cfg));
}

// Reflection images of the generators of `target`, reached from `base` along
// `path`.
std::vector<QMatrix> images_along(const Diagram& base, std::span<const int> path, const Diagram& target,
                                  Convention c) {
  ReflectionRep rr = build_reflection_rep(coxeter_matrix(base));
  std::vector<QMatrix> images = rr.sigma;
  Diagram h = base;
  for (int y : path) {
    images = step_images(images, h, y, c);
    h = mutate(h, y);
  }
  if (!(h == target)) throw std::logic_error("mutation path does not reach the target diagram");
  return images;
}

struct Setup {
  MutationClass cls;
  Backend backend = Backend::Exact;
  std::optional<std::size_t> base;
};

Setup prepare(VerificationReport& rep, const Diagram& g, Ruleset& ruleset, const BackendConfig& cfg) {
  if (ruleset == Ruleset::Auto) ruleset = resolve_ruleset(g);
  rep.ruleset = ruleset;
  rep.convention = cfg.convention;
  Setup s;
  s.cls = enumerate_class(g, cfg.class_cap);
  if (!s.cls.complete()) {
    rep.incomplete = true;
    rep.notes.push_back("mutation class enumeration ended with status " + to_string(s.cls.status));
  }
  s.base = s.cls.complete() ? base_representative(s.cls) : std::nullopt;
  s.backend = cfg.backend.value_or(s.base ? Backend::Exact : Backend::FiniteQuotient);
  if (s.backend == Backend::Exact && !s.base) {
    rep.notes.push_back("no acyclic representative without weight-4 arrows; using finite quotients");
    s.backend = Backend::FiniteQuotient;
  }
  if (s.backend == Backend::FiniteQuotient) {
    rep.notes.push_back("finite-quotient check into S" + std::to_string(cfg.max_degree) +
                        " is one-sided: holds means no violation in that quotient");
  }
  rep.backend = s.backend;
  return s;
}

}  // namespace

VerificationReport verify_invariance_step(const Diagram& g, int x, Ruleset ruleset, const BackendConfig& cfg) {
  if (x < 0 || x >= g.size()) throw std::out_of_range("vertex out of range");
  VerificationReport rep;
  Setup s = prepare(rep, g, ruleset, cfg);
  if (s.backend == Backend::Exact) {
    // The class was enumerated from g, so reversing the path g -> base
    // leads from the base back to g.
    std::vector<int> path = s.cls.path_to(*s.base);
    std::reverse(path.begin(), path.end());
    std::vector<QMatrix> images = images_along(s.cls.representatives[*s.base], path, g, cfg.convention);
    exact_both(rep, g, images, x, cfg);
  } else {
    quotient_both(rep, g, x, cfg);
  }
  return rep;
}

VerificationReport verify_class(const Diagram& seed, Ruleset ruleset, const BackendConfig& cfg) {
  VerificationReport rep;
  Setup s = prepare(rep, seed, ruleset, cfg);
  if (rep.incomplete) return rep;
  const int n = seed.size();
  if (s.backend == Backend::Exact) {
    // Breadth-first walk from the base keeping one concrete diagram per class
    // member together with its generator images.
    const Diagram& base = s.cls.representatives[*s.base];
    std::vector<Diagram> nodes{base};
    std::vector<std::vector<QMatrix>> images{images_along(base, {}, base, cfg.convention)};
    std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> seen{{canonical_key(base), 0}};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int x = 0; x < n; ++x) {
        exact_both(rep, nodes[i], images[i], x, cfg);
        Diagram next = mutate(nodes[i], x);
        CanonicalKey k = canonical_key(next);
        if (seen.count(k)) continue;
        seen.emplace(std::move(k), nodes.size());
        images.push_back(step_images(images[i], nodes[i], x, cfg.convention));
        nodes.push_back(std::move(next));
      }
    }
  } else {
    for (const Diagram& g : s.cls.representatives) {
      for (int x = 0; x < n; ++x) quotient_both(rep, g, x, cfg);
    }
  }
  return rep;
}

std::string to_string(CounterexampleCase c) {
  switch (c) {
    case CounterexampleCase::A3: return "A3";
    case CounterexampleCase::Dn: return "Dn";
    case CounterexampleCase::B3: return "B3";
    case CounterexampleCase::Bn: return "Bn";
    case CounterexampleCase::G2: return "G2";
  }
  return "?";
}

CounterexampleCase counterexample_case_from_string(const std::string& s) {
  for (CounterexampleCase c : {CounterexampleCase::A3, CounterexampleCase::Dn, CounterexampleCase::B3,
                               CounterexampleCase::Bn, CounterexampleCase::G2}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown counterexample case: " + s);
}

namespace {

// Builders take 1-based labels.
struct CaseBuilder {
  int gens;
  Diagram g;
  Presentation p;
  std::vector<std::vector<int>> m;

  explicit CaseBuilder(int n)
      : gens(n), g(n), m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2)) {
    p.generators = n;
    for (int i = 0; i < n; ++i) p.relations.push_back({RelationKind::R1, {i}, 2, {i}, std::nullopt, std::nullopt, 0});
    for (int i = 0; i < n; ++i) m[i][i] = 1;
  }
  void arrow(int a, int b, Weight w = 1) { g.set_arrow(a - 1, b - 1, w); }
  void rel(RelationKind k, std::initializer_list<int> base, int e) {
    Word w;
    for (int x : base) w.push_back(x - 1);
    std::vector<int> src = w;
    std::sort(src.begin(), src.end());
    src.erase(std::unique(src.begin(), src.end()), src.end());
    p.relations.push_back({k, w, e, src, std::nullopt, std::nullopt, 0});
  }
  // Pairs not listed get exponent 2 in both groups.
  void pair_relations(const std::map<std::pair<int, int>, int>& listed, const std::set<std::pair<int, int>>& free) {
    for (int i = 1; i <= gens; ++i) {
      for (int j = i + 1; j <= gens; ++j) {
        if (free.count({i, j})) continue;
        auto it = listed.find({i, j});
        rel(RelationKind::R2, {i, j}, it == listed.end() ? 2 : it->second);
      }
    }
  }
  void coxeter(int a, int b, int e) {
    m[a - 1][b - 1] = e;
    m[b - 1][a - 1] = e;
  }
};

Word word1(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(x - 1);
  return w;
}

// s_{n+1} s_1 ... s_{n-2} s_n s_{n-2} ... s_1 s_{n+1}, 0-based result.
Word long_conjugate(int n) {
  Word w{n};
  for (int i = 1; i <= n - 2; ++i) w.push_back(i - 1);
  w.push_back(n - 1);
  for (int i = n - 2; i >= 1; --i) w.push_back(i - 1);
  w.push_back(n);
  return w;
}

}  // namespace

CounterexampleData counterexample_data(CounterexampleCase c, int n) {
  CounterexampleData d;
  d.which = c;
  switch (c) {
    case CounterexampleCase::A3: {
      CaseBuilder b(4);
      b.arrow(3, 2);
      b.arrow(2, 1);
      b.arrow(1, 3, 4);
      b.arrow(3, 4);
      b.arrow(4, 1);
      b.pair_relations({{{1, 2}, 3}, {{2, 3}, 3}, {{3, 4}, 3}, {{1, 4}, 3}}, {{1, 3}});
      b.rel(RelationKind::R3, {3, 2, 1, 2}, 3);
      b.rel(RelationKind::R3, {3, 4, 1, 4}, 3);
      b.coxeter(1, 2, 3);
      b.coxeter(2, 3, 3);
      b.coxeter(3, 4, 3);
      b.coxeter(4, 1, 3);
      d.n = 4;
      d.g = b.g;
      d.w_tilde = b.p;
      d.w_matrix = b.m;
      d.phi = {word1({1}), word1({2}), word1({4, 2, 3, 2, 4}), word1({4})};
      d.h = word1({2, 4});
      d.hom_degree = 4;
      break;
    }
    case CounterexampleCase::Dn: {
      if (n < 4) throw std::invalid_argument("Dn case needs n >= 4");
      CaseBuilder b(n + 1);
      b.arrow(1, 2);
      b.arrow(2, n);
      b.arrow(n, 1);
      b.arrow(n + 1, 2);
      b.arrow(n, n + 1);
      for (int i = 2; i < n; ++i) b.arrow(i, i + 1);
      std::map<std::pair<int, int>, int> listed;
      for (int i = 1; i <= n; ++i) listed[{i, i + 1}] = 3;
      listed[{1, n}] = 3;
      listed[{2, n + 1}] = 3;
      listed[{2, n}] = 3;
      b.pair_relations(listed, {});
      b.rel(RelationKind::R3, {1, 2, n, 2}, 2);
      b.rel(RelationKind::R3, {n + 1, 2, n, 2}, 2);
      for (int i = 1; i <= n - 2; ++i) b.coxeter(i, i + 1, 3);
      b.coxeter(2, n + 1, 3);
      b.coxeter(n - 2, n, 3);
      d.n = n;
      d.g = b.g;
      d.w_tilde = b.p;
      d.w_matrix = b.m;
      for (int i = 0; i <= n; ++i) d.phi.push_back({i});
      d.phi[n - 1] = long_conjugate(n);
      d.h = word1({1, n + 1});
      d.hom_degree = 4;
      d.target = affine_permutation_generators(n, 3);
      d.target_name = "affine permutations mod " + std::to_string(3 * n);
      break;
    }
    case CounterexampleCase::B3: {
      CaseBuilder b(4);
      b.arrow(3, 2, 2);
      b.arrow(2, 1, 2);
      b.arrow(1, 3, 4);
      b.arrow(3, 4);
      b.arrow(4, 1);
      b.pair_relations({{{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 3}, {{1, 4}, 3}}, {{1, 3}});
      b.rel(RelationKind::R3, {1, 2, 3, 2}, 2);
      b.rel(RelationKind::R3, {3, 4, 1, 4}, 3);
      b.coxeter(1, 4, 3);
      b.coxeter(2, 4, 4);
      // The displayed W also lists (s1 s2)^3, which makes W/phi(H) = A4 and
      // breaks phi; m12 = 2 gives the stated A1 x A3.
      b.coxeter(3, 4, 3);
      d.n = 3;
      d.g = b.g;
      d.w_tilde = b.p;
      d.w_matrix = b.m;
      d.phi = {word1({2, 4, 1, 4, 2}), word1({2}), word1({4, 3, 4}), word1({3})};
      d.h = word1({2, 3, 2, 3});
      d.hom_degree = 4;
      break;
    }
    case CounterexampleCase::Bn: {
      if (n < 3) throw std::invalid_argument("Bn case needs n >= 3");
      CaseBuilder b(n + 1);
      b.arrow(1, n);
      for (int i = 1; i < n; ++i) b.arrow(i, i + 1);
      b.arrow(n, n + 1, 2);
      b.arrow(n + 1, 1, 2);
      std::map<std::pair<int, int>, int> listed;
      listed[{1, n + 1}] = 4;
      listed[{n, n + 1}] = 4;
      for (int i = 1; i < n; ++i) listed[{i, i + 1}] = 3;
      listed[{1, n}] = 3;
      b.pair_relations(listed, {});
      b.rel(RelationKind::R3, {n + 1, 1, n, 1}, 2);
      b.coxeter(n + 1, 1, 4);
      for (int i = 1; i <= n - 2; ++i) b.coxeter(i, i + 1, 3);
      b.coxeter(n - 2, n, 3);
      d.n = n;
      d.g = b.g;
      d.w_tilde = b.p;
      d.w_matrix = b.m;
      for (int i = 0; i <= n; ++i) d.phi.push_back({i});
      d.phi[n - 1] = long_conjugate(n);
      d.h = word1({1, n + 1, 1, n + 1});
      d.hom_degree = 4;
      d.target = affine_permutation_generators(n, 3);
      d.target_name = "affine permutations mod " + std::to_string(3 * n);
      break;
    }
    case CounterexampleCase::G2: {
      CaseBuilder b(3);
      b.arrow(1, 2, 3);
      b.arrow(2, 3, 4);
      b.arrow(3, 1, 3);
      b.pair_relations({{{1, 2}, 6}, {{1, 3}, 6}}, {{2, 3}});
      b.rel(RelationKind::R3, {1, 2, 3, 2}, 6);
      b.rel(RelationKind::R3, {2, 3, 1, 3}, 6);
      b.rel(RelationKind::R3, {3, 1, 2, 1}, 3);
      b.coxeter(1, 3, 6);
      b.coxeter(2, 3, 3);
      d.n = 2;
      d.g = b.g;
      d.w_tilde = b.p;
      d.w_matrix = b.m;
      d.phi = {word1({3, 1, 3}), word1({3, 1, 3, 2, 3, 1, 3}), word1({3})};
      d.h = word1({1, 3, 1, 3});
      d.hom_degree = 3;
      break;
    }
  }
  return d;
}

namespace {

QuotientSummary summarize(Presentation p, std::size_t cap, int max_degree, std::span<const Perm> target) {
  QuotientSummary s;
  s.order = coset_enumerate(p, {}, cap);
  s.abelian = abelian_invariants(p);
  for (int k = 2; k <= max_degree; ++k) s.hom_counts[k] = count_homs(p, k);
  if (!target.empty()) s.target_homs = count_homs(p, target);
  s.presentation = std::move(p);
  return s;
}

}  // namespace

CounterexampleReport reproduce_counterexample(CounterexampleCase c, int n, std::size_t cap) {
  CounterexampleReport r;
  r.data = counterexample_data(c, n);
  r.cap = cap;
  const CounterexampleData& d = r.data;

  std::set<Word> generated;
  for (const Word& w : omit_r4(generate_presentation(d.g, Ruleset::FiniteAffine)).relators()) {
    generated.insert(normalize_relator(w));
  }
  r.presentation_consistent = std::all_of(d.w_tilde.relations.begin(), d.w_tilde.relations.end(),
                                          [&](const Relation& rel) {
                                            return rel.kind == RelationKind::R1 ||
                                                   generated.count(normalize_relator(rel.word()));
                                          });

  ReflectionRep rep = build_reflection_rep(d.w_matrix);
  std::vector<QMatrix> images;
  for (const Word& w : d.phi) images.push_back(evaluate_word(rep, w));
  r.phi_is_homomorphism = std::all_of(d.w_tilde.relations.begin(), d.w_tilde.relations.end(), [&](const Relation& rel) {
    return evaluate_relator(images, rel.base, rel.exponent).is_identity();
  });

  const int degree = std::max(d.hom_degree, 4);
  std::vector<Word> tilde_extra{d.h};
  std::vector<Word> cox_extra{substitute(d.h, d.phi)};
  std::vector<Perm> target;
  if (!d.target.empty()) target = involutions(std::span<const Perm>(group_elements(d.target)));
  r.tilde_side = summarize(quotient(d.w_tilde, tilde_extra), cap, degree, target);
  r.coxeter_side = summarize(quotient(coxeter_presentation(d.w_matrix), cox_extra), cap, degree, target);

  const QuotientSummary& a = r.tilde_side;
  const QuotientSummary& b = r.coxeter_side;
  if (a.order.complete() && b.order.complete() && a.order.index != b.order.index) {
    r.separations.push_back("orders " + std::to_string(a.order.index) + " vs " + std::to_string(b.order.index));
  }
  if (!(a.abelian == b.abelian)) {
    r.separations.push_back("abelian invariants " + to_string(a.abelian) + " vs " + to_string(b.abelian));
  }
  for (const auto& [k, count] : a.hom_counts) {
    if (count != b.hom_counts.at(k)) {
      r.separations.push_back("homs into S" + std::to_string(k) + ": " + std::to_string(count) + " vs " +
                              std::to_string(b.hom_counts.at(k)));
    }
  }
  if (a.target_homs && b.target_homs && *a.target_homs != *b.target_homs) {
    r.separations.push_back("homs into " + d.target_name + ": " + std::to_string(*a.target_homs) + " vs " +
                            std::to_string(*b.target_homs));
  }
  return r;
}

}  // namespace coxmut
