#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxmut/json.hpp"

namespace httplib {
class Server;
}

namespace coxmut {

inline constexpr std::size_t kDefaultServiceClassCap = 10000;

/// Error carrying the HTTP status the service answers with.
class service_error : public std::runtime_error {
 public:
  service_error(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

struct Session {
  std::string id;
  Diagram seed;
  Diagram current;
  /// (diagram before the mutation, mutated vertex), oldest first.
  std::vector<std::pair<Diagram, int>> history;
  Ruleset ruleset = Ruleset::FiniteAffine;
  std::mutex lock;
};

/// Full session state: diagram, presentation, chordless cycles, pattern
/// matches and the mutated vertices (1-based).
Json session_state(const Session& s);

/// In-memory sessions. Requests on one session are serialized; sessions are
/// independent. With a journal path, every accepted change is appended as a
/// JSON line and the journal is replayed on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::string> journal = std::nullopt);

  /// Body {"diagram": ..., "ruleset": "auto" | ...}; returns {id, state}.
  Json create(const Json& body);
  /// Body {"vertex": int}, 1-based.
  Json mutate(const std::string& id, const Json& body);
  Json undo(const std::string& id);
  Json state(const std::string& id);
  /// Class export of the current diagram; 409 when the cap is hit.
  Json mutation_class(const std::string& id, std::size_t cap);

  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string create_session(const Diagram& d, Ruleset r, std::optional<std::string> id);
  void append(const Json& line);
  void replay(const std::string& path);

  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
  std::mutex journal_mu_;
  std::ofstream journal_;
};

/// Installs the session endpoints on `server`.
void install_routes(httplib::Server& server, SessionStore& store);

}  // namespace coxmut
