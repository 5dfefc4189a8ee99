#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coxmut/presentation.hpp"

namespace coxmut {

/// Invariant factors of the abelianization, each dividing the next. Factors
/// equal to 1 are dropped; a free Z summand appears as 0 at the end.
struct AbelianInvariants {
  std::vector<mpz_class> factors;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form of an integer matrix: the nonzero diagonal entries,
/// normalized positive and each dividing the next.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

AbelianInvariants abelian_invariants(const Presentation& p);
std::string to_string(const AbelianInvariants& a);

inline constexpr int kMaxHomDegree = 5;
inline constexpr int kMaxPermPoints = 24;

/// Permutation of {0..kMaxPermPoints-1}; points beyond the degree in use are
/// fixed.
struct Perm {
  std::array<std::uint8_t, kMaxPermPoints> p = identity_array();

  static Perm from_images(std::span<const int> images);
  bool is_identity() const;
  /// Apply this, then o.
  Perm then(const Perm& o) const;
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  static constexpr std::array<std::uint8_t, kMaxPermPoints> identity_array() {
    std::array<std::uint8_t, kMaxPermPoints> a{};
    for (int i = 0; i < kMaxPermPoints; ++i) a[i] = static_cast<std::uint8_t>(i);
    return a;
  }
};

/// Identity and all involutions of S_degree.
std::vector<Perm> involutions(int degree);

/// Elements of the group generated by `gens`; throws std::length_error past
/// `limit` elements.
std::vector<Perm> group_elements(std::span<const Perm> gens, std::size_t limit = 1000000);

/// Identity and involutions among `elements`.
std::vector<Perm> involutions(std::span<const Perm> elements);

Perm evaluate_relator(std::span<const Perm> images, std::span<const int> base, int exponent);

/// Calls f for every assignment of elements of `candidates` to the generators
/// that satisfies every relator; stops early when f returns false.
void for_each_hom(const Presentation& p, std::span<const Perm> candidates,
                  const std::function<bool(std::span<const Perm>)>& f);

/// Same, with candidates the identity and involutions of S_degree.
void for_each_hom(const Presentation& p, int degree, const std::function<bool(std::span<const Perm>)>& f);

/// Simple reflections of the affine Weyl group of type A_{n-1} acting on
/// Z/(kn) as period-n affine permutations. The generated group has order
/// k^{n-1} n!.
std::vector<Perm> affine_permutation_generators(int n, int k);

std::uint64_t count_homs(const Presentation& p, int degree);
/// Homomorphisms into the group whose identity and involutions are `candidates`.
std::uint64_t count_homs(const Presentation& p, std::span<const Perm> candidates);

}  // namespace coxmut
