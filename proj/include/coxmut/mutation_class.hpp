#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxmut/canonical.hpp"
#include "coxmut/diagram.hpp"
#include "coxmut/presentation.hpp"

namespace coxmut {

inline constexpr std::size_t kDefaultClassCap = 100000;

/// Value of COXMUT_CAP when set to a positive integer, else `fallback`.
std::size_t cap_from_env(std::size_t fallback);

enum class ClassStatus { Complete, WeightExceeded, CapExceeded };

std::string to_string(ClassStatus s);

struct ClassEdge {
  std::size_t from = 0;
  int vertex = 0;
  std::size_t to = 0;
};

/// Mutation class up to isomorphism. representatives[i] is the concrete
/// diagram reached from the seed by path_to(i); representatives[0] is the
/// seed itself.
struct MutationClass {
  ClassStatus status = ClassStatus::Complete;
  std::vector<Diagram> representatives;
  std::vector<CanonicalKey> keys;
  /// Filled only for complete classes.
  std::vector<ClassEdge> edges;
  /// (parent index, vertex); the seed has parent -1.
  std::vector<std::pair<std::ptrdiff_t, int>> parent;
  /// Diagram carrying an arrow of weight above 4.
  std::optional<Diagram> witness;

  std::size_t size() const { return representatives.size(); }
  bool complete() const { return status == ClassStatus::Complete; }
  std::optional<std::size_t> find(const Diagram& d) const;
  std::vector<int> path_to(std::size_t i) const;
};

/// Breadth-first search over single mutations, vertices ascending. For three
/// or more vertices the search stops at the first arrow of weight above 4.
MutationClass enumerate_class(const Diagram& seed, std::size_t cap = kDefaultClassCap);

struct FinitenessResult {
  /// Empty when the cap was hit first.
  std::optional<bool> finite;
  MutationClass mutation_class;
};

FinitenessResult is_mutation_finite(const Diagram& d, std::size_t cap = kDefaultClassCap);

enum class TypeFamily { Finite, Affine, Exceptional, Other };

struct TypeTag {
  TypeFamily family = TypeFamily::Other;
  /// e.g. "A_3", "Ã_{2,2}", "X_6", "G_2^{(*,+)}"; empty for Other.
  std::string name;

  std::string display() const;
  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

struct StandardDiagram {
  TypeTag tag;
  Diagram diagram;
};

/// Finite, affine and exceptional standard diagrams with n vertices.
std::vector<StandardDiagram> standard_diagrams(int n);

/// Looks for a standard diagram inside the mutation class. Empty when the
/// enumeration hits the cap.
std::optional<TypeTag> classify(const Diagram& d, std::size_t cap = kDefaultClassCap);
std::optional<TypeTag> classify(const MutationClass& c);

/// Ruleset for finite/affine/exceptional classes; throws std::invalid_argument
/// otherwise.
Ruleset resolve_ruleset(const Diagram& d);

/// Oriented chordless cycles with a non-simple arrow, up to isomorphism, as
/// canonical cycle diagrams.
std::vector<Diagram> cycle_census(std::span<const MutationClass> classes);

/// Mutation-finite oriented cycles of the given lengths with weights in
/// {1,2,3,4} and square weight product, up to isomorphism.
std::vector<Diagram> oriented_cycle_catalog(int min_length, int max_length, std::size_t cap = kDefaultClassCap);

/// Cycle on n vertices; arrow i -> i+1 when forward[i], else reversed.
Diagram cycle_orientation(std::span<const bool> forward);

/// Number of mutation classes among orientations of the simply-laced n-cycle.
/// The oriented cycle is left out unless include_oriented.
std::size_t cycle_orientation_classes(int n, bool include_oriented);

}  // namespace coxmut
