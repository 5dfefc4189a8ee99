#include <catch_amalgamated.hpp>

#include <httplib.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "coxmut/service.hpp"

using namespace coxmut;

namespace {

Json diagram_body(const Diagram& d, const std::string& ruleset = "auto") {
  return {{"diagram", to_json(d)}, {"ruleset", ruleset}};
}

Diagram a3_path() { return Diagram(3, {{0, 1, 1}, {1, 2, 1}}); }
Diagram g2_triangle() { return Diagram(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 4}}); }

Diagram standard(const std::string& name, int n) {
  for (const StandardDiagram& s : standard_diagrams(n)) {
    if (s.tag.name == name) return s.diagram;
  }
  throw std::runtime_error("no standard diagram " + name);
}

int status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const service_error& e) {
    return e.status();
  }
  return 200;
}

}  // namespace

TEST_CASE("diagram JSON round-trips with sorted 1-based arrows") {
  Diagram d(3, {{2, 0, 4}, {0, 1, 3}, {1, 2, 3}});
  Json j = to_json(d);
  CHECK(j.dump() ==
        R"({"arrows":[{"from":1,"to":2,"weight":3},{"from":2,"to":3,"weight":3},{"from":3,"to":1,"weight":4}],"n":3})");
  CHECK(diagram_from_json(j) == d);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":2,"arrows":[{"from":1,"to":3}]})")), invalid_diagram);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":2,"arrows":[{"from":1,"to":2},{"from":2,"to":1}]})")),
                  invalid_diagram);
}

TEST_CASE("mutate then undo restores the initial state") {
  SessionStore store;
  Json created = store.create(diagram_body(a3_path()));
  std::string id = created["id"];
  Json initial = created["state"];
  Json mutated = store.mutate(id, {{"vertex", 2}});
  CHECK(mutated["history"] == Json::array({2}));
  CHECK(mutated["cycles"].size() == 1);
  CHECK(mutated["cycles"][0]["oriented"] == true);
  CHECK(store.undo(id) == initial);
  CHECK(store.state(id) == initial);
}

TEST_CASE("session presentation after mutating the G~2 triangle matches a direct call") {
  SessionStore store;
  std::string id = store.create(diagram_body(g2_triangle()))["id"];
  Json s = store.mutate(id, {{"vertex", 2}});
  Diagram m = mutate(g2_triangle(), 1);
  CHECK(s["presentation"] == to_json(generate_presentation(m, Ruleset::FiniteAffine)));
  CHECK(s["diagram"] == to_json(m));
}

TEST_CASE("replaying the same mutations gives the same state") {
  SessionStore store;
  std::string a = store.create(diagram_body(standard("D̃_4", 5)))["id"];
  std::string b = store.create(diagram_body(standard("D̃_4", 5)))["id"];
  for (int v : {1, 3, 5, 2}) {
    store.mutate(a, {{"vertex", v}});
    store.mutate(b, {{"vertex", v}});
  }
  CHECK(store.state(a) == store.state(b));
}

TEST_CASE("service errors") {
  SessionStore store;
  CHECK(status_of([&] { store.state("nope"); }) == 404);
  CHECK(status_of([&] { store.create(Json::object()); }) == 400);
  Json bad = {{"diagram", {{"n", 3}, {"arrows", {{{"from", 1}, {"to", 2}, {"weight", 2}},
                                                  {{"from", 2}, {"to", 3}, {"weight", 1}},
                                                  {{"from", 3}, {"to", 1}, {"weight", 1}}}}}}};
  CHECK(status_of([&] { store.create(bad); }) == 400);
  std::string id = store.create(diagram_body(a3_path()))["id"];
  CHECK(status_of([&] { store.mutate(id, {{"vertex", 4}}); }) == 400);
  CHECK(status_of([&] { store.mutate(id, {{"vertex", "x"}}); }) == 400);
  CHECK(status_of([&] { store.mutation_class(id, 2); }) == 409);
}

TEST_CASE("class request on an X6 session") {
  SessionStore store;
  std::string id = store.create(diagram_body(standard("X_6", 6)))["id"];
  Json c = store.mutation_class(id, kDefaultServiceClassCap);
  CHECK(c["size"] == 5);
  CHECK(c["status"] == "complete");
}

TEST_CASE("mutations on one session are serialized") {
  SessionStore store;
  std::string id = store.create(diagram_body(standard("Ã_{2,2}", 4)))["id"];
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) store.mutate(id, {{"vertex", 1 + (t + i) % 4}});
    });
  }
  for (std::thread& t : threads) t.join();
  Json s = store.state(id);
  CHECK(s["history"].size() == 100);
  Diagram replay = standard("Ã_{2,2}", 4);
  for (const Json& v : s["history"]) replay = mutate(replay, v.get<int>() - 1);
  CHECK(s["diagram"] == to_json(replay));
}

TEST_CASE("journal replay restores sessions") {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "coxmut_journal_test.jsonl";
  std::filesystem::remove(path);
  Json before;
  std::string id;
  {
    SessionStore store(path.string());
    id = store.create(diagram_body(a3_path()))["id"];
    store.mutate(id, {{"vertex", 2}});
    store.mutate(id, {{"vertex", 1}});
    before = store.undo(id);
  }
  SessionStore again(path.string());
  CHECK(again.state(id) == before);
  std::string next = again.create(diagram_body(a3_path()))["id"];
  CHECK(next != id);
  std::filesystem::remove(path);
}

TEST_CASE("HTTP endpoints") {
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto created = cli.Post("/session", diagram_body(a3_path()).dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 200);
  Json body = Json::parse(created->body);
  std::string id = body["id"];

  auto mutated = cli.Post("/session/" + id + "/mutate", R"({"vertex":2})", "application/json");
  REQUIRE(mutated);
  CHECK(mutated->status == 200);
  CHECK(Json::parse(mutated->body)["history"] == Json::array({2}));

  auto undone = cli.Post("/session/" + id + "/undo", "", "application/json");
  REQUIRE(undone);
  CHECK(Json::parse(undone->body) == body["state"]);

  auto state = cli.Get("/session/" + id + "/state");
  REQUIRE(state);
  CHECK(Json::parse(state->body) == body["state"]);

  auto cls = cli.Get("/session/" + id + "/class?cap=100");
  REQUIRE(cls);
  CHECK(cls->status == 200);
  CHECK(Json::parse(cls->body)["size"] == 4);

  auto capped = cli.Get("/session/" + id + "/class?cap=1");
  REQUIRE(capped);
  CHECK(capped->status == 409);

  auto missing = cli.Get("/session/zzz/state");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto bad = cli.Post("/session/" + id + "/mutate", R"({"vertex":9})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto garbage = cli.Post("/session", "{", "application/json");
  REQUIRE(garbage);
  CHECK(garbage->status == 400);

  server.stop();
  th.join();
}
