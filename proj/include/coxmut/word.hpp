#pragma once

#include <span>
#include <vector>

namespace coxmut {

/// Word in involutive generators, 0-based.
using Word = std::vector<int>;

/// Deletes adjacent equal letters until none remain.
Word free_reduce(std::span<const int> w);

/// Free reduction followed by cancelling equal first and last letters.
Word cyclic_reduce(std::span<const int> w);

/// Least word under cyclic rotation and reversal of the cyclically reduced
/// word. Reversal is inversion because every generator is an involution.
Word normalize_relator(std::span<const int> w);

Word power(std::span<const int> w, int m);

Word concat(std::span<const int> a, std::span<const int> b);

/// Replaces every letter g by images[g] and freely reduces.
Word substitute(std::span<const int> w, std::span<const Word> images);

Word conjugate(std::span<const int> w, int x);

}  // namespace coxmut
