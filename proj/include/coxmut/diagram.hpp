#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxmut {

using Weight = std::int64_t;

class invalid_diagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class unliftable_diagram : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arrow between 0-based vertices.
struct Arrow {
  int from = 0;
  int to = 0;
  Weight weight = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Directed weighted graph with at most one arrow per unordered pair.
/// Stored as an antisymmetric matrix: entry (i,j) is +w for i->j and -w for
/// j->i.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n);
  Diagram(int n, std::span<const Arrow> arrows);
  Diagram(int n, std::initializer_list<Arrow> arrows);

  int size() const { return n_; }

  /// Signed weight: positive when i->j, negative when j->i.
  Weight signed_weight(int i, int j) const { return adj_[idx(i, j)]; }
  Weight weight(int i, int j) const {
    Weight w = adj_[idx(i, j)];
    return w < 0 ? -w : w;
  }
  bool has_arrow(int from, int to) const { return adj_[idx(from, to)] > 0; }
  bool adjacent(int i, int j) const { return adj_[idx(i, j)] != 0; }

  /// Adds or replaces the arrow on the pair {from, to}; weight 0 removes it.
  void set_arrow(int from, int to, Weight weight);

  /// Arrows sorted by (from, to).
  std::vector<Arrow> arrows() const;
  std::vector<int> neighbours(int v) const;
  Weight max_weight() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Weight> adj_;
};

/// Chordless cycle of an induced subdiagram. Oriented cycles list vertices in
/// arrow order starting at the least vertex; weights[i] sits between
/// vertices[i] and vertices[i+1].
struct ChordlessCycle {
  std::vector<int> vertices;
  bool oriented = false;
  std::vector<Weight> weights;

  friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;
  std::vector<ChordlessCycle> bad_cycles;
};

ValidationReport validate(const Diagram& d);

/// Mutation at vertex k. Throws radicand_mismatch on inputs violating the
/// perfect-square condition.
Diagram mutate(const Diagram& d, int k);

Diagram mutate_sequence(Diagram d, std::span<const int> vertices);

Diagram opposite(const Diagram& d);

/// Relabels vertex v as perm[v].
Diagram permute(const Diagram& d, std::span<const int> perm);

struct Subdiagram {
  Diagram diagram;
  std::vector<int> vertices;  // new index -> original vertex
};

Subdiagram induced_subdiagram(const Diagram& d, std::span<const int> vertices);

std::vector<ChordlessCycle> chordless_cycles(const Diagram& d);

bool is_connected(const Diagram& d);

/// True if the diagram has no oriented cycle at all.
bool is_acyclic(const Diagram& d);

struct ExchangeMatrix {
  std::vector<std::vector<std::int64_t>> b;
  std::vector<std::int64_t> d;

  int size() const { return static_cast<int>(b.size()); }
  bool skew_symmetrizable() const;
  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k);
Diagram diagram_of(const ExchangeMatrix& m);
/// Throws unliftable_diagram when no integer decomposition of the weights is
/// consistent with a symmetrizer.
ExchangeMatrix lift_to_matrix(const Diagram& d);

}  // namespace coxmut
