// Command-line front end: mutate, present, class, classify, verify,
// counterexample and serve.

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coxmut/invariance.hpp"
#include "coxmut/json.hpp"
#include "coxmut/service.hpp"

using namespace coxmut;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerificationFailed = 2;
constexpr int kCapExceeded = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Diagram read_diagram(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read " + path);
    buf << in.rdbuf();
  }
  Json j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw usage_error(path + ": malformed JSON");
  Diagram d = diagram_from_json(j);
  ValidationReport v = validate(d);
  if (!v.valid) {
    std::string msg = "invalid diagram";
    for (const std::string& p : v.problems) msg += ": " + p;
    throw usage_error(msg);
  }
  return d;
}

Ruleset pick_ruleset(const std::string& name, const Diagram& d) {
  Ruleset r = ruleset_from_string(name);
  return r == Ruleset::Auto ? resolve_ruleset(d) : r;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation-invariant groups of mutation-finite diagrams"};
  app.require_subcommand(1);

  std::string file;
  std::vector<int> vertices;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a diagram at vertices in order (1-based)");
  mutate_cmd->add_option("file", file, "Diagram JSON file, - for stdin")->required();
  mutate_cmd->add_option("k", vertices, "Vertices")->required();

  std::string ruleset = "auto";
  bool reduced = false;
  bool as_json = false;
  auto* present_cmd = app.add_subcommand("present", "Print the group presentation of a diagram");
  present_cmd->add_option("file", file, "Diagram JSON file, - for stdin")->required();
  present_cmd->add_option("--ruleset", ruleset, "finite-affine | unpunctured-surface | exceptional | auto");
  present_cmd->add_flag("--reduced", reduced, "Keep only the needed cycle relations");
  present_cmd->add_flag("--json", as_json, "JSON instead of text");

  std::size_t cap = cap_from_env(kDefaultClassCap);
  auto* class_cmd = app.add_subcommand("class", "Enumerate the mutation class");
  class_cmd->add_option("file", file, "Diagram JSON file, - for stdin")->required();
  class_cmd->add_option("--cap", cap, "Maximum number of diagrams");

  auto* classify_cmd = app.add_subcommand("classify", "Name the mutation type");
  classify_cmd->add_option("file", file, "Diagram JSON file, - for stdin")->required();
  classify_cmd->add_option("--cap", cap, "Maximum number of diagrams");

  int edge = 0;
  bool whole_class = false;
  std::string backend;
  std::string convention = "outgoing";
  int degree = 4;
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check invariance of the group under mutation");
  verify_cmd->add_option("file", file, "Diagram JSON file, - for stdin")->required();
  auto* edge_opt = verify_cmd->add_option("--edge", edge, "Single mutation at this vertex");
  auto* class_flag = verify_cmd->add_flag("--class", whole_class, "Every edge of the mutation class");
  edge_opt->excludes(class_flag);
  verify_cmd->add_option("--ruleset", ruleset, "finite-affine | unpunctured-surface | exceptional | auto");
  verify_cmd->add_option("--backend", backend, "exact | finite-quotient (default: by class)");
  verify_cmd->add_option("--convention", convention, "outgoing | incoming");
  verify_cmd->add_option("--degree", degree, "Largest symmetric group for finite quotients")->check(CLI::Range(2, 5));
  verify_cmd->add_option("--cap", cap, "Maximum class size");
  verify_cmd->add_option("--report", report_path, "Write the full JSON report here");

  std::string which;
  int n = 4;
  auto* cx_cmd = app.add_subcommand("counterexample", "Reproduce a counterexample without additional relations");
  cx_cmd->add_option("--case", which, "A3 | Dn | B3 | Bn | G2")->required();
  cx_cmd->add_option("--n", n, "Rank parameter for Dn and Bn")->check(CLI::Range(3, 6));
  cx_cmd->add_option("--cap", cap, "Coset enumeration cap");
  cx_cmd->add_flag("--json", as_json, "JSON report on standard output");

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string journal;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", port, "Port");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--journal", journal, "Append-only JSON-lines journal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*mutate_cmd) {
      Diagram d = read_diagram(file);
      for (int k : vertices) {
        if (k < 1 || k > d.size()) throw usage_error("vertex out of range");
        d = mutate(d, k - 1);
      }
      emit(to_json(d));
      return kOk;
    }

    if (*present_cmd) {
      Diagram d = read_diagram(file);
      Presentation p = generate_presentation(d, pick_ruleset(ruleset, d));
      if (reduced) p = reduce_cycle_relations(p, d);
      if (as_json) {
        emit(to_json(p));
      } else {
        std::cout << render_text(p);
      }
      return kOk;
    }

    if (*class_cmd) {
      Diagram d = read_diagram(file);
      MutationClass c = enumerate_class(d, cap);
      emit(to_json(c));
      std::cerr << "class: " << c.size() << " diagrams, " << to_string(c.status) << '\n';
      return c.status == ClassStatus::CapExceeded ? kCapExceeded : kOk;
    }

    if (*classify_cmd) {
      Diagram d = read_diagram(file);
      MutationClass c = enumerate_class(d, cap);
      if (c.status == ClassStatus::CapExceeded) {
        std::cerr << "class exceeds the cap of " << cap << " diagrams\n";
        return kCapExceeded;
      }
      std::optional<TypeTag> t = classify(c);
      std::cout << (t ? t->display() : std::string("other")) << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      Diagram d = read_diagram(file);
      BackendConfig cfg;
      if (!backend.empty()) {
        if (backend == "exact") {
          cfg.backend = Backend::Exact;
        } else if (backend == "finite-quotient") {
          cfg.backend = Backend::FiniteQuotient;
        } else {
          throw usage_error("unknown backend " + backend);
        }
      }
      if (convention != "outgoing" && convention != "incoming") throw usage_error("unknown convention " + convention);
      cfg.convention = convention == "outgoing" ? Convention::Outgoing : Convention::Incoming;
      cfg.max_degree = degree;
      cfg.class_cap = cap;
      Ruleset r = ruleset_from_string(ruleset);
      VerificationReport rep;
      if (edge_opt->count()) {
        if (edge < 1 || edge > d.size()) throw usage_error("vertex out of range");
        rep = verify_invariance_step(d, edge - 1, r, cfg);
      } else {
        rep = verify_class(d, r, cfg);
      }
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << to_json(rep).dump(2) << '\n';
      }
      std::cout << to_string(rep.backend) << ", ruleset " << to_string(rep.ruleset) << ": " << rep.edges.size()
                << " edge checks, " << rep.relations_checked() << " relations, " << rep.failures() << " failures\n";
      for (const std::string& note : rep.notes) std::cout << "note: " << note << '\n';
      for (const EdgeReport& e : rep.edges) {
        for (const RelationOutcome& o : e.outcomes) {
          if (o.outcome != Outcome::Fails) continue;
          std::cout << "FAIL vertex " << e.vertex + 1 << (e.direction == 0 ? " forward " : " backward ")
                    << to_string(o.relation.kind) << ' ' << render_relation(o.relation) << "  " << o.witness << '\n';
        }
      }
      if (rep.incomplete) return kCapExceeded;
      return rep.failures() ? kVerificationFailed : kOk;
    }

    if (*cx_cmd) {
      CounterexampleReport rep = reproduce_counterexample(counterexample_case_from_string(which), n, cap);
      if (as_json) {
        emit(to_json(rep));
      } else {
        auto order = [](const QuotientSummary& s) {
          return s.order.complete() ? std::to_string(s.order.index) : std::string("exceeds cap");
        };
        std::cout << "case " << to_string(rep.data.which) << '\n'
                  << "presentation consistent: " << (rep.presentation_consistent ? "yes" : "no") << '\n'
                  << "phi is a homomorphism: " << (rep.phi_is_homomorphism ? "yes" : "no") << '\n'
                  << "order of W~/H: " << order(rep.tilde_side) << '\n'
                  << "order of W/phi(H): " << order(rep.coxeter_side) << '\n';
        for (const std::string& s : rep.separations) std::cout << "separated by " << s << '\n';
      }
      return rep.separated() ? kOk : kVerificationFailed;
    }

    if (*serve_cmd) {
      SessionStore store(journal.empty() ? std::nullopt : std::optional<std::string>(journal));
      httplib::Server server;
      install_routes(server, store);
      std::cerr << "listening on " << host << ':' << port << '\n';
      if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ':' << port << '\n';
        return kUsage;
      }
      return kOk;
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
