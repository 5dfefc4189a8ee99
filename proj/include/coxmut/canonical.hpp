#pragma once

#include <string>
#include <vector>

#include "coxmut/diagram.hpp"

namespace coxmut {

/// Identifies a diagram up to relabeling of vertices.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  CanonicalKey key;
  /// order[p] is the vertex placed at canonical position p.
  std::vector<int> order;
};

/// Colour refinement to a fixpoint, then the lexicographically least
/// adjacency encoding over orderings that respect the colour classes.
CanonicalForm canonical_form(const Diagram& d);
CanonicalKey canonical_key(const Diagram& d);

bool isomorphic(const Diagram& a, const Diagram& b);

/// Relabeled copy with vertex order[p] moved to p.
Diagram canonical_diagram(const Diagram& d);

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

}  // namespace coxmut
