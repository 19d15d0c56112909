#pragma once

#include <cstdlib>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "freemod/semiring.hpp"
#include "freemod/structures.hpp"
#include "freemod/vectors.hpp"

namespace freemod::testsupport {

// gf(2) as an explicit Cayley table.
inline SemiringPtr gf2_table() {
  TableData t;
  t.labels = {"0", "1"};
  t.add = {0, 1, 1, 0};
  t.mul = {0, 0, 0, 1};
  t.zero = 0;
  t.one = 1;
  return Semiring::from_table(std::move(t));
}

// gf(3) as an explicit Cayley table.
inline SemiringPtr gf3_table() {
  TableData t;
  t.labels = {"0", "1", "2"};
  t.add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  t.mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  t.zero = 0;
  t.one = 1;
  return Semiring::from_table(std::move(t));
}

// The boolean semiring as a table.
inline SemiringPtr boolean_table() {
  TableData t;
  t.labels = {"0", "1"};
  t.add = {0, 1, 1, 1};
  t.mul = {0, 0, 0, 1};
  t.zero = 0;
  t.one = 1;
  return Semiring::from_table(std::move(t));
}

// Tropical min-plus truncated at 2: carrier {inf, 0, 1, 2}, addition is
// min, multiplication is integer addition saturated at 2 with inf
// absorbing. Satisfies all eight semiring conditions.
inline SemiringPtr tropical_truncated_table() {
  TableData t;
  t.labels = {"inf", "0", "1", "2"};
  t.add = {0, 1, 2, 3, 1, 1, 1, 1, 2, 1, 2, 2, 3, 1, 2, 3};
  t.mul = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 3, 0, 3, 3, 3};
  t.zero = 0;
  t.one = 1;
  return Semiring::from_table(std::move(t));
}

// gf(2) with a deliberately non-commutative addition (left projection):
// condition (3) fails with minimal witness (0, 1).
inline SemiringPtr corrupted_table() {
  TableData t;
  t.labels = {"0", "1"};
  t.add = {0, 0, 1, 1};
  t.mul = {0, 0, 0, 1};
  t.zero = 0;
  t.one = 1;
  return Semiring::from_table(std::move(t));
}

// Diamond lattice {bot, a, b, top} over the boolean semiring: addition
// is join, 1x = x, 0x = bot. Free of rank 2 with basis {a, b}.
inline StructurePtr diamond() {
  return std::make_shared<FiniteStructure>(
      Semiring::boolean(), std::vector<std::string>{"bot", "a", "b", "top"},
      std::vector<std::size_t>{0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3},
      std::vector<std::size_t>{0, 0, 0, 0, 0, 1, 2, 3});
}

// Three-element join chain bot < mid < top over the boolean semiring:
// satisfies (1)-(8), fails (9), not free (|X| = 3 is no power of 2).
inline StructurePtr chain3() {
  return std::make_shared<FiniteStructure>(
      Semiring::boolean(), std::vector<std::string>{"bot", "mid", "top"},
      std::vector<std::size_t>{0, 1, 2, 1, 1, 2, 2, 2, 2},
      std::vector<std::size_t>{0, 0, 0, 0, 1, 2});
}

// Left-projection addition x + y = x on two elements over the boolean
// semiring, scalar action the identity: condition (3) fails at (p, q).
inline StructurePtr left_projection() {
  return std::make_shared<FiniteStructure>(
      Semiring::boolean(), std::vector<std::string>{"p", "q"},
      std::vector<std::size_t>{0, 0, 1, 1}, std::vector<std::size_t>{0, 1, 0, 1});
}

// The Klein four-group as a gf(2)-structure with shuffled labels:
// t = (1,1), u = (0,1), v = (1,0), w = (0,0) under coordinatewise xor.
// Isomorphic to gf(2)^2; the identity element sits at index 3.
inline StructurePtr klein_permuted() {
  return std::make_shared<FiniteStructure>(
      Semiring::gfp(2), std::vector<std::string>{"t", "u", "v", "w"},
      std::vector<std::size_t>{3, 2, 1, 0, 2, 3, 0, 1, 1, 0, 3, 2, 0, 1, 2, 3},
      std::vector<std::size_t>{3, 3, 3, 3, 0, 1, 2, 3});
}

// One-element structure with forced tables: free with the empty basis.
inline StructurePtr singleton(SemiringPtr ring) {
  const std::size_t m = ring->carrier_size();
  return std::make_shared<FiniteStructure>(std::move(ring), std::vector<std::string>{"o"},
                                           std::vector<std::size_t>{0},
                                           std::vector<std::size_t>(m, 0));
}

// Uniformly random scalar, bounded so products stay small.
inline Scalar random_scalar(std::mt19937_64& rng, const SemiringPtr& ring) {
  if (ring->is_finite()) {
    std::uniform_int_distribution<std::size_t> d(0, ring->carrier_size() - 1);
    return ring->element(d(rng));
  }
  std::uniform_int_distribution<long> num(-50, 50);
  switch (ring->builtin_kind()) {
    case BuiltinKind::integers: return ring->from_int(num(rng));
    case BuiltinKind::naturals: return ring->from_int(std::abs(num(rng)));
    case BuiltinKind::rationals: {
      std::uniform_int_distribution<long> den(1, 20);
      return ring->from_rational(num(rng), den(rng));
    }
    case BuiltinKind::nonneg_rationals: {
      std::uniform_int_distribution<long> den(1, 20);
      return ring->from_rational(std::abs(num(rng)), den(rng));
    }
    case BuiltinKind::tropical_min_plus: {
      std::uniform_int_distribution<int> inf(0, 9);
      if (inf(rng) == 0) return ring->tropical_infinity();
      return ring->from_int(num(rng));
    }
    default: throw Error("unexpected builtin");
  }
}

// Random finitely-supported map with integer keys from 1..key_space.
inline FinSupp random_finsupp(std::mt19937_64& rng, const SemiringPtr& ring,
                              std::int64_t key_space = 1000000) {
  std::uniform_int_distribution<std::size_t> size_d(0, 6);
  std::uniform_int_distribution<std::int64_t> key_d(1, key_space);
  std::vector<std::pair<Key, Scalar>> entries;
  const std::size_t count = size_d(rng);
  std::set<std::int64_t> used;
  for (std::size_t i = 0; i < count; ++i) {
    std::int64_t k = key_d(rng);
    if (!used.insert(k).second) continue;
    entries.emplace_back(Key(k), random_scalar(rng, ring));
  }
  return FinSupp(ring, entries);
}

inline DenseVec random_dense(std::mt19937_64& rng, const SemiringPtr& ring, std::size_t n) {
  std::vector<Scalar> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back(random_scalar(rng, ring));
  return DenseVec(ring, std::move(entries));
}

}  // namespace freemod::testsupport
