#pragma once

// Brute-force oracles, written independently of the library's search
// code: straight nested loops and full enumerations only. These decide
// the same questions as freemod::find_basis and freemod::check_isomorphic
// so the two routes can be compared on every small structure.

#include <optional>
#include <vector>

#include "freemod/structures.hpp"

namespace freemod::oracles {

// Does some element z make the structure a standard R-semimodule, i.e.
// conditions (1)-(8) all hold with that z? Plain loops, no candidate
// bookkeeping shared with the library.
inline bool standard_semimodule(const FiniteStructure& s, std::size_t* zero_out = nullptr) {
  const std::size_t n = s.size();
  const std::size_t m = s.scalar_count();
  const auto& ring = *s.ring();

  std::vector<std::size_t> sadd(m * m), smul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      sadd[i * m + j] = ring.index_of(ring.add(ring.element(i), ring.element(j)));
      smul[i * m + j] = ring.index_of(ring.mul(ring.element(i), ring.element(j)));
    }
  const std::size_t zero_s = ring.index_of(ring.zero());
  const std::size_t one_s = ring.index_of(ring.one());

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (s.add(x, s.add(y, z)) != s.add(s.add(x, y), z)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.add(x, y) != s.add(y, x)) return false;
  for (std::size_t x = 0; x < n; ++x)
    if (s.act(one_s, x) != x) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (s.act(a, s.act(b, x)) != s.act(smul[a * m + b], x)) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (s.act(a, s.add(x, y)) != s.add(s.act(a, x), s.act(a, y))) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (s.act(sadd[a * m + b], x) != s.add(s.act(a, x), s.act(b, x))) return false;

  for (std::size_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = s.add(x, z) == x;
    for (std::size_t x = 0; x < n && ok; ++x) ok = s.act(zero_s, x) == z;
    for (std::size_t a = 0; a < m && ok; ++a) ok = s.act(a, z) == z;
    if (ok) {
      if (zero_out) *zero_out = z;
      return true;
    }
  }
  return false;
}

struct BruteFreeness {
  bool free = false;
  std::vector<std::size_t> basis;  // least valid subset, by size then lex
};

// Full subset x coefficient-tuple enumeration: every subset of every
// size, every tuple, bijectivity checked directly (injective onto the
// whole carrier). No cardinality prefilter.
inline BruteFreeness brute_force_freeness(const FiniteStructure& s) {
  BruteFreeness out;
  std::size_t zero = 0;
  if (!standard_semimodule(s, &zero)) return out;

  const std::size_t n = s.size();
  const std::size_t m = s.scalar_count();

  for (std::size_t k = 0; k <= n; ++k) {
    // all k-subsets of {0..n-1} via bitmask filtering, ordered
    // lexicographically on the ascending index tuples
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> pick;
    struct Rec {
      std::size_t n, k;
      std::vector<std::vector<std::size_t>>& subsets;
      std::vector<std::size_t>& pick;
      void go(std::size_t from) {
        if (pick.size() == k) {
          subsets.push_back(pick);
          return;
        }
        for (std::size_t i = from; i < n; ++i) {
          pick.push_back(i);
          go(i + 1);
          pick.pop_back();
        }
      }
    } rec{n, k, subsets, pick};
    rec.go(0);

    for (const auto& subset : subsets) {
      std::size_t tuples = 1;
      bool overflow = false;
      for (std::size_t i = 0; i < k; ++i) {
        tuples *= m;
        if (tuples > 4096) {
          overflow = true;
          break;
        }
      }
      if (overflow) continue;  // cannot be bijective onto a tiny carrier anyway

      std::vector<std::size_t> hits(n, 0);
      std::vector<std::size_t> digits(k, 0);
      for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t value = zero;
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t term = s.act(digits[i], subset[i]);
          value = i == 0 ? term : s.add(value, term);
        }
        hits[value]++;
        for (std::size_t i = k; i-- > 0;) {
          if (++digits[i] < m) break;
          digits[i] = 0;
        }
      }
      bool bijective = true;
      for (std::size_t x = 0; x < n && bijective; ++x) bijective = hits[x] == 1;
      if (bijective) {
        out.free = true;
        out.basis = subset;
        return out;
      }
    }
  }
  return out;
}

// Exhaustive isomorphism search: every one of the n^n maps in
// lexicographic table order, checked bijective and linear by direct
// loops. Returns the first hit. Only sensible for very small carriers.
inline std::optional<std::vector<std::size_t>> exhaustive_isomorphism(
    const FiniteStructure& x, const FiniteStructure& y) {
  const std::size_t n = x.size();
  if (y.size() != n) return std::nullopt;
  const std::size_t m = x.scalar_count();

  std::vector<std::size_t> f(n, 0);
  while (true) {
    bool bijective = true;
    {
      std::vector<bool> used(n, false);
      for (std::size_t i = 0; i < n && bijective; ++i) {
        if (used[f[i]]) bijective = false;
        used[f[i]] = true;
      }
    }
    if (bijective) {
      bool linear = true;
      for (std::size_t u = 0; u < n && linear; ++u)
        for (std::size_t v = 0; v < n && linear; ++v)
          linear = f[x.add(u, v)] == y.add(f[u], f[v]);
      for (std::size_t a = 0; a < m && linear; ++a)
        for (std::size_t u = 0; u < n && linear; ++u)
          linear = f[x.act(a, u)] == y.act(a, f[u]);
      if (linear) return f;
    }
    std::size_t i = n;
    bool carried_out = true;
    while (i-- > 0) {
      if (++f[i] < n) {
        carried_out = false;
        break;
      }
      f[i] = 0;
    }
    if (carried_out) return std::nullopt;
  }
}

}  // namespace freemod::oracles
