#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxmut/coset.hpp"
#include "coxmut/diagram.hpp"
#include "coxmut/invariants.hpp"
#include "coxmut/mutation_class.hpp"
#include "coxmut/presentation.hpp"
#include "coxmut/qfield.hpp"

namespace coxmut {

/// Which neighbours of the mutated vertex x get conjugated by s_x.
/// Outgoing: arrows x -> i. Incoming: arrows i -> x. The two choices differ
/// by conjugation with s_x, so either yields the same verification outcome.
enum class Convention { Outgoing, Incoming };

std::string to_string(Convention c);

struct SubstitutionStep {
  int vertex = 0;
  /// images[i] in the generators of the diagram before mutation.
  std::vector<Word> images;
};

SubstitutionStep substitution_step(const Diagram& g, int x, Convention c = Convention::Outgoing);

/// Words for the generators of mutate_sequence(seed, path) in the seed's
/// generators.
std::vector<Word> track_substitution(const Diagram& seed, std::span<const int> path,
                                     Convention c = Convention::Outgoing);

/// Applies one substitution step to images already given as matrices.
std::vector<QMatrix> step_images(std::span<const QMatrix> images, const Diagram& g, int x, Convention c);
std::vector<Perm> step_images(std::span<const Perm> images, const Diagram& g, int x, Convention c);

enum class Backend { Exact, FiniteQuotient };
enum class Outcome { Holds, Fails, NotDecided };

std::string to_string(Backend b);
std::string to_string(Outcome o);

struct BackendConfig {
  /// Empty: exact when the class has an acyclic representative without
  /// weight-4 arrows, finite quotients otherwise.
  std::optional<Backend> backend;
  int max_degree = 4;
  Convention convention = Convention::Outgoing;
  std::size_t class_cap = kDefaultClassCap;
};

struct RelationOutcome {
  Relation relation;
  Outcome outcome = Outcome::NotDecided;
  /// Non-empty only for failures.
  std::string witness;
};

/// Direction 0 checks the relations of mutate(from, vertex) on the images of
/// the substituted generators; direction 1 checks the relations of `from`
/// after stepping back.
struct EdgeReport {
  Diagram from;
  int vertex = 0;
  int direction = 0;
  std::vector<RelationOutcome> outcomes;

  std::size_t failures() const;
};

struct VerificationReport {
  Backend backend = Backend::Exact;
  Ruleset ruleset = Ruleset::FiniteAffine;
  Convention convention = Convention::Outgoing;
  std::vector<EdgeReport> edges;
  std::vector<std::string> notes;
  /// Set when the class could not be enumerated.
  bool incomplete = false;

  std::size_t relations_checked() const;
  std::size_t failures() const;
  bool passed() const { return !incomplete && failures() == 0; }
};

/// Least acyclic representative without weight-4 arrows, by canonical key.
std::optional<std::size_t> base_representative(const MutationClass& c);

VerificationReport verify_invariance_step(const Diagram& g, int x, Ruleset ruleset, const BackendConfig& cfg = {});
VerificationReport verify_class(const Diagram& seed, Ruleset ruleset, const BackendConfig& cfg = {});

/// Symmetric Coxeter matrix of an acyclic diagram without weight-4 arrows.
std::vector<std::vector<int>> coxeter_matrix(const Diagram& d);

enum class CounterexampleCase { A3, Dn, B3, Bn, G2 };

std::string to_string(CounterexampleCase c);
CounterexampleCase counterexample_case_from_string(const std::string& s);

/// Diagram, W~_G, the Coxeter group W, the epimorphism and the element whose
/// normal closure is factored out. Labels follow the displayed data of each
/// case.
struct CounterexampleData {
  CounterexampleCase which = CounterexampleCase::A3;
  int n = 0;
  Diagram g;
  Presentation w_tilde;
  std::vector<std::vector<int>> w_matrix;
  std::vector<Word> phi;
  Word h;
  /// Degree of the symmetric group used for hom-count separation.
  int hom_degree = 4;
  /// Extra finite target group for hom counts, given by generators; empty
  /// when symmetric groups suffice.
  std::vector<Perm> target;
  std::string target_name;
};

CounterexampleData counterexample_data(CounterexampleCase c, int n = 4);

struct QuotientSummary {
  Presentation presentation;
  CosetTable order;
  AbelianInvariants abelian;
  std::map<int, std::uint64_t> hom_counts;
  std::optional<std::uint64_t> target_homs;
};

struct CounterexampleReport {
  CounterexampleData data;
  std::size_t cap = 0;
  /// Every displayed relator of W~_G is among the generated R1-R3 relators.
  bool presentation_consistent = false;
  /// phi maps every relator of W~_G to the identity of W.
  bool phi_is_homomorphism = false;
  QuotientSummary tilde_side;
  QuotientSummary coxeter_side;
  std::vector<std::string> separations;

  bool separated() const { return !separations.empty(); }
};

CounterexampleReport reproduce_counterexample(CounterexampleCase c, int n = 4, std::size_t cap = 100000);

}  // namespace coxmut
