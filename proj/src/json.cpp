#include "coxmut/json.hpp"

#include <set>

namespace coxmut {

namespace {

Json one_based(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

int require_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw invalid_diagram(std::string("diagram JSON needs integer field \"") + field + "\"");
  }
  return j[field].get<int>();
}

}  // namespace

Json to_json(const Diagram& d) {
  Json arrows = Json::array();
  for (const Arrow& a : d.arrows()) {
    arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"weight", a.weight}});
  }
  return {{"n", d.size()}, {"arrows", arrows}};
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) throw invalid_diagram("diagram JSON must be an object");
  const int n = require_int(j, "n");
  if (n < 1) throw invalid_diagram("diagram needs at least one vertex");
  Diagram d(n);
  if (!j.contains("arrows")) return d;
  if (!j["arrows"].is_array()) throw invalid_diagram("\"arrows\" must be an array");
  std::set<std::pair<int, int>> pairs;
  for (const Json& a : j["arrows"]) {
    if (!a.is_object()) throw invalid_diagram("arrow must be an object");
    int from = require_int(a, "from");
    int to = require_int(a, "to");
    int w = a.contains("weight") ? require_int(a, "weight") : 1;
    if (from < 1 || from > n || to < 1 || to > n) throw invalid_diagram("vertex out of range");
    if (from == to) throw invalid_diagram("loop at vertex " + std::to_string(from));
    if (w < 1) throw invalid_diagram("arrow weight must be positive");
    if (!pairs.insert({std::min(from, to), std::max(from, to)}).second) {
      throw invalid_diagram("two arrows between " + std::to_string(from) + " and " + std::to_string(to));
    }
    d.set_arrow(from - 1, to - 1, w);
  }
  return d;
}

Json to_json(const Relation& r) {
  Json j = {{"kind", to_string(r.kind)}, {"word", one_based(r.base)}, {"source", one_based(r.source)},
            {"m", r.exponent}};
  if (r.t) j["t"] = *r.t;
  return j;
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const Relation& r : p.relations) rels.push_back(to_json(r));
  return {{"generators", p.generators}, {"relations", rels}};
}

Json to_json(const ChordlessCycle& c) {
  Json j = {{"vertices", one_based(c.vertices)}, {"oriented", c.oriented}};
  Json ts = Json::array();
  Json ms = Json::array();
  if (c.oriented) {
    for (int t : cycle_t_values(c)) {
      ts.push_back(t);
      if (t < 4) {
        ms.push_back(t == 0 ? 2 : t == 1 ? 3 : t == 2 ? 4 : 6);
      } else {
        ms.push_back(nullptr);
      }
    }
  }
  j["t"] = ts;
  j["m"] = ms;
  return j;
}

Json to_json(const PatternMatch& m) {
  Json j = {{"family", to_string(m.family)}, {"vertices", one_based(m.vertex_map)}, {"opposite", m.opposite}};
  if (m.param) j["param"] = m.param;
  return j;
}

std::string key_hex(const CanonicalKey& k) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(k.bytes.size() * 2);
  for (unsigned char c : k.bytes) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 15]);
  }
  return s;
}

Json to_json(const MutationClass& c) {
  Json reps = Json::array();
  for (const Diagram& d : c.representatives) reps.push_back(to_json(d));
  Json edges = Json::array();
  for (const ClassEdge& e : c.edges) {
    edges.push_back({key_hex(c.keys[e.from]), e.vertex + 1, key_hex(c.keys[e.to])});
  }
  Json j = {{"status", to_string(c.status)}, {"size", c.size()}, {"representatives", reps}, {"edges", edges}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json edges = Json::array();
  for (const EdgeReport& e : r.edges) {
    Json outs = Json::array();
    for (const RelationOutcome& o : e.outcomes) {
      Json x = to_json(o.relation);
      x["outcome"] = to_string(o.outcome);
      if (!o.witness.empty()) x["witness"] = o.witness;
      outs.push_back(std::move(x));
    }
    edges.push_back({{"from", to_json(e.from)},
                     {"vertex", e.vertex + 1},
                     {"direction", e.direction == 0 ? "forward" : "backward"},
                     {"failures", e.failures()},
                     {"outcomes", outs}});
  }
  return {{"backend", to_string(r.backend)},
          {"ruleset", to_string(r.ruleset)},
          {"convention", to_string(r.convention)},
          {"incomplete", r.incomplete},
          {"relations_checked", r.relations_checked()},
          {"failures", r.failures()},
          {"passed", r.passed()},
          {"notes", r.notes},
          {"edges", edges}};
}

namespace {

Json summary_json(const QuotientSummary& s) {
  Json j;
  j["presentation"] = to_json(s.presentation);
  j["status"] = s.order.complete() ? "complete" : "exceeded";
  j["order"] = s.order.complete() ? Json(s.order.index) : Json(nullptr);
  Json ab = Json::array();
  for (const mpz_class& f : s.abelian.factors) ab.push_back(f.get_str());
  j["abelian"] = ab;
  Json homs = Json::object();
  for (const auto& [k, v] : s.hom_counts) homs["S" + std::to_string(k)] = v;
  j["hom_counts"] = homs;
  if (s.target_homs) j["target_homs"] = *s.target_homs;
  return j;
}

Json words_json(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const Word& w : ws) a.push_back(one_based(w));
  return a;
}

}  // namespace

Json to_json(const CounterexampleReport& r) {
  const CounterexampleData& d = r.data;
  Json j;
  j["case"] = to_string(d.which);
  j["n"] = d.n;
  j["diagram"] = to_json(d.g);
  j["w_tilde"] = to_json(d.w_tilde);
  j["coxeter_matrix"] = d.w_matrix;
  j["phi"] = words_json(d.phi);
  j["h"] = one_based(d.h);
  j["cap"] = r.cap;
  j["presentation_consistent"] = r.presentation_consistent;
  j["phi_is_homomorphism"] = r.phi_is_homomorphism;
  j["tilde_side"] = summary_json(r.tilde_side);
  j["coxeter_side"] = summary_json(r.coxeter_side);
  if (!d.target_name.empty()) j["target"] = d.target_name;
  j["separations"] = r.separations;
  j["separated"] = r.separated();
  return j;
}

}  // namespace coxmut
