#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coxmut/presentation.hpp"
#include "coxmut/word.hpp"

namespace coxmut {

inline constexpr std::size_t kDefaultCosetCap = 1000000;

enum class CosetStatus { Complete, Exceeded };

/// Coset table for a presentation on involutive generators, so each column is
/// its own inverse. Row 0 is the subgroup coset.
struct CosetTable {
  CosetStatus status = CosetStatus::Exceeded;
  std::size_t index = 0;
  std::size_t cap = 0;
  int generators = 0;
  /// table[c][g]; filled only on completion.
  std::vector<std::vector<int>> table;

  bool complete() const { return status == CosetStatus::Complete; }
};

/// HLT enumeration with lookahead when the table fills up. Exceeded means
/// the enumeration did not close within `cap` cosets.
CosetTable coset_enumerate(int generators, std::span<const Word> relators, std::span<const Word> subgroup,
                           std::size_t cap = kDefaultCosetCap);
CosetTable coset_enumerate(const Presentation& p, std::span<const Word> subgroup = {},
                           std::size_t cap = kDefaultCosetCap);

}  // namespace coxmut
