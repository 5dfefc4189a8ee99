#include "coxmut/service.hpp"

#include <httplib.h>

#include "coxmut/radical.hpp"

namespace coxmut {

Json session_state(const Session& s) {
  Json j;
  j["diagram"] = to_json(s.current);
  j["ruleset"] = to_string(s.ruleset);
  try {
    j["presentation"] = to_json(generate_presentation(s.current, s.ruleset));
  } catch (const std::exception& e) {
    j["presentation"] = nullptr;
    j["presentation_error"] = e.what();
  }
  Json cycles = Json::array();
  for (const ChordlessCycle& c : chordless_cycles(s.current)) cycles.push_back(to_json(c));
  j["cycles"] = cycles;
  Json matches = Json::array();
  for (const PatternMatch& m : match_patterns(s.current, families_for(s.ruleset))) matches.push_back(to_json(m));
  j["matches"] = matches;
  Json history = Json::array();
  for (const auto& h : s.history) history.push_back(h.second + 1);
  j["history"] = history;
  return j;
}

namespace {

Diagram checked_diagram(const Json& body) {
  if (!body.is_object() || !body.contains("diagram")) throw service_error(400, "body needs a \"diagram\"");
  Diagram d;
  try {
    d = diagram_from_json(body["diagram"]);
  } catch (const invalid_diagram& e) {
    throw service_error(400, e.what());
  }
  ValidationReport v = validate(d);
  if (!v.valid) {
    std::string msg = "invalid diagram";
    for (const std::string& p : v.problems) msg += ": " + p;
    throw service_error(400, msg);
  }
  return d;
}

Ruleset checked_ruleset(const Json& body, const Diagram& d) {
  std::string name = "auto";
  if (body.contains("ruleset")) {
    if (!body["ruleset"].is_string()) throw service_error(400, "\"ruleset\" must be a string");
    name = body["ruleset"].get<std::string>();
  }
  try {
    Ruleset r = ruleset_from_string(name);
    return r == Ruleset::Auto ? resolve_ruleset(d) : r;
  } catch (const std::invalid_argument& e) {
    throw service_error(400, e.what());
  }
}

int checked_vertex(const Json& body, const Diagram& d) {
  if (!body.is_object() || !body.contains("vertex") || !body["vertex"].is_number_integer()) {
    throw service_error(400, "body needs an integer \"vertex\"");
  }
  int v = body["vertex"].get<int>();
  if (v < 1 || v > d.size()) throw service_error(400, "vertex out of range");
  return v - 1;
}

}  // namespace

SessionStore::SessionStore(std::optional<std::string> journal) {
  if (!journal) return;
  replay(*journal);
  journal_.open(*journal, std::ios::app);
  if (!journal_) throw std::runtime_error("cannot open journal " + *journal);
}

void SessionStore::replay(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("op")) continue;
    const std::string op = j["op"].get<std::string>();
    const std::string id = j.value("id", "");
    if (op == "create") {
      create_session(diagram_from_json(j["diagram"]), ruleset_from_string(j["ruleset"].get<std::string>()), id);
    } else if (auto s = find(id); s && op == "mutate") {
      int v = j["vertex"].get<int>() - 1;
      s->history.push_back({s->current, v});
      s->current = coxmut::mutate(s->current, v);
    } else if (s && op == "undo" && !s->history.empty()) {
      s->current = s->history.back().first;
      s->history.pop_back();
    }
  }
}

void SessionStore::append(const Json& line) {
  std::lock_guard g(journal_mu_);
  if (!journal_.is_open()) return;
  journal_ << line.dump() << '\n';
  journal_.flush();
}

std::string SessionStore::create_session(const Diagram& d, Ruleset r, std::optional<std::string> id) {
  auto s = std::make_shared<Session>();
  s->seed = d;
  s->current = d;
  s->ruleset = r;
  std::unique_lock g(mu_);
  if (id) {
    s->id = *id;
    if (id->size() > 1 && (*id)[0] == 's') {
      next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(id->substr(1)) + 1);
    }
  } else {
    s->id = "s" + std::to_string(next_id_++);
  }
  sessions_[s->id] = s;
  return s->id;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock g(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::shared_lock g(mu_);
  return sessions_.size();
}

Json SessionStore::create(const Json& body) {
  Diagram d = checked_diagram(body);
  Ruleset r = checked_ruleset(body, d);
  std::string id = create_session(d, r, std::nullopt);
  append({{"op", "create"}, {"id", id}, {"diagram", to_json(d)}, {"ruleset", to_string(r)}});
  auto s = find(id);
  std::lock_guard g(s->lock);
  return {{"id", id}, {"state", session_state(*s)}};
}

Json SessionStore::mutate(const std::string& id, const Json& body) {
  auto s = find(id);
  if (!s) throw service_error(404, "unknown session " + id);
  std::lock_guard g(s->lock);
  int v = checked_vertex(body, s->current);
  Diagram next;
  try {
    next = coxmut::mutate(s->current, v);
  } catch (const radicand_mismatch& e) {
    throw service_error(400, e.what());
  }
  s->history.push_back({s->current, v});
  s->current = std::move(next);
  append({{"op", "mutate"}, {"id", id}, {"vertex", v + 1}});
  return session_state(*s);
}

Json SessionStore::undo(const std::string& id) {
  auto s = find(id);
  if (!s) throw service_error(404, "unknown session " + id);
  std::lock_guard g(s->lock);
  if (!s->history.empty()) {
    s->current = s->history.back().first;
    s->history.pop_back();
    append({{"op", "undo"}, {"id", id}});
  }
  return session_state(*s);
}

Json SessionStore::state(const std::string& id) {
  auto s = find(id);
  if (!s) throw service_error(404, "unknown session " + id);
  std::lock_guard g(s->lock);
  return session_state(*s);
}

Json SessionStore::mutation_class(const std::string& id, std::size_t cap) {
  auto s = find(id);
  if (!s) throw service_error(404, "unknown session " + id);
  Diagram d;
  {
    std::lock_guard g(s->lock);
    d = s->current;
  }
  MutationClass c = enumerate_class(d, cap);
  if (c.status == ClassStatus::CapExceeded) {
    throw service_error(409, "class exceeds the cap of " + std::to_string(cap) + " diagrams");
  }
  return to_json(c);
}

void install_routes(httplib::Server& server, SessionStore& store) {
  auto guarded = [](httplib::Response& res, auto&& f) {
    try {
      Json out = f();
      res.set_content(out.dump(), "application/json");
    } catch (const service_error& e) {
      res.status = e.status();
      res.set_content(Json{{"error", e.what()}}.dump(), "application/json");
    } catch (const Json::exception& e) {
      res.status = 400;
      res.set_content(Json{{"error", e.what()}}.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(Json{{"error", e.what()}}.dump(), "application/json");
    }
  };
  auto body_of = [](const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    Json j = Json::parse(req.body, nullptr, false);
    if (j.is_discarded()) throw service_error(400, "malformed JSON body");
    return j;
  };

  server.Post("/session", [&store, guarded, body_of](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.create(body_of(req)); });
  });
  server.Post(R"(/session/([^/]+)/mutate)",
              [&store, guarded, body_of](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] { return store.mutate(req.matches[1], body_of(req)); });
              });
  server.Post(R"(/session/([^/]+)/undo)", [&store, guarded](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.undo(req.matches[1]); });
  });
  server.Get(R"(/session/([^/]+)/state)", [&store, guarded](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.state(req.matches[1]); });
  });
  server.Get(R"(/session/([^/]+)/class)", [&store, guarded](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::size_t cap = cap_from_env(kDefaultServiceClassCap);
      if (req.has_param("cap")) {
        try {
          long long c = std::stoll(req.get_param_value("cap"));
          if (c < 1) throw service_error(400, "cap must be positive");
          cap = static_cast<std::size_t>(c);
        } catch (const std::logic_error&) {
          throw service_error(400, "cap must be an integer");
        }
      }
      return store.mutation_class(req.matches[1], cap);
    });
  });
}

}  // namespace coxmut
