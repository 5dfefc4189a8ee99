#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxmut/diagram.hpp"
#include "coxmut/word.hpp"

namespace coxmut {

enum class RelationKind { R1, R2, R3, R4, R5, R5Star, Quotient };

enum class Ruleset { FiniteAffine, UnpuncturedSurface, Exceptional, Auto };

enum class PatternFamily { A22, Dn, B3, Bn, G2, Handle, X5 };

std::string to_string(RelationKind k);
std::string to_string(Ruleset r);
std::string to_string(PatternFamily f);
RelationKind relation_kind_from_string(const std::string& s);
Ruleset ruleset_from_string(const std::string& s);

/// Relator base^exponent.
struct Relation {
  RelationKind kind = RelationKind::R1;
  Word base;
  int exponent = 1;
  std::vector<int> source;
  std::optional<int> t;
  std::optional<int> m;
  /// Offset l within the cycle for R3.
  int cycle_offset = 0;

  Word word() const { return power(base, exponent); }
};

struct Presentation {
  int generators = 0;
  std::vector<Relation> relations;
  Ruleset ruleset = Ruleset::FiniteAffine;

  std::vector<Word> relators() const;
  std::size_t count(RelationKind k) const;
};

struct PatternMatch {
  PatternFamily family = PatternFamily::A22;
  /// vertex_map[label] is the diagram vertex playing pattern label `label`.
  std::vector<int> vertex_map;
  /// Family parameter for Dn and Bn; 0 otherwise.
  int param = 0;
  /// Matched against the opposite of the pattern diagram.
  bool opposite = false;
};

/// m_ij for an arrow weight (0 meaning no arrow); empty for weight 4.
/// Throws std::invalid_argument for weights outside 0..4.
std::optional<int> coxeter_exponent(Weight w);

struct CycleParam {
  int l = 0;
  int t = 0;
  int m = 0;
};

/// t(l) for every offset l of an oriented cycle.
std::vector<int> cycle_t_values(const ChordlessCycle& c);

/// Offsets l of an oriented cycle with t(l) < 4.
std::vector<CycleParam> cycle_relation_params(const ChordlessCycle& c);

/// Relator word for offset l of an oriented cycle, before raising to m.
Word cycle_relation_base(const ChordlessCycle& c, int l);

struct PatternSpec {
  PatternFamily family;
  int param = 0;
  Diagram diagram;
  RelationKind kind;
  std::vector<Word> bases;
  int exponent = 2;
};

/// Pattern diagrams with their relator bases in pattern labels.
PatternSpec pattern_spec(PatternFamily f, int param = 0);

std::vector<PatternMatch> match_patterns(const Diagram& d, std::span<const PatternFamily> families);

std::vector<PatternFamily> families_for(Ruleset r);

/// Throws std::invalid_argument for weights above 4 and for Auto when the
/// class cannot be classified.
Presentation generate_presentation(const Diagram& d, Ruleset ruleset);

Presentation omit_r4(const Presentation& p);

Presentation reduce_cycle_relations(const Presentation& p, const Diagram& d);

/// Appends relators of kind Quotient.
Presentation quotient(const Presentation& p, std::span<const Word> extra);

/// Standard Coxeter presentation from a symmetric matrix of exponents;
/// entries <= 0 mean no relation.
Presentation coxeter_presentation(const std::vector<std::vector<int>>& m);

std::string render_relation(const Relation& r);
std::string render_text(const Presentation& p);

}  // namespace coxmut
