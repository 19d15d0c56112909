#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "freemod/semiring.hpp"

namespace freemod {

/// Ordered coordinate vector in R^N. N = 0 is the one-element space.
class DenseVec {
 public:
  DenseVec(SemiringPtr ring, std::vector<Scalar> entries);
  static DenseVec zeros(SemiringPtr ring, std::size_t n);

  const SemiringPtr& ring() const { return ring_; }
  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Scalar>& entries() const { return entries_; }

  /// Literal form "[a1,a2,...,aN]"; "[]" when N = 0.
  std::string str() const;

  bool operator==(const DenseVec& other) const;
  bool operator!=(const DenseVec& other) const { return !(*this == other); }

 private:
  SemiringPtr ring_;
  std::vector<Scalar> entries_;
};

DenseVec dense_add(const DenseVec& s, const DenseVec& t);
DenseVec dense_scale(const Scalar& a, const DenseVec& s);

/// Sparse map key: an integer or an opaque string. std::variant's
/// ordering (integers before strings, then by value) is the total order
/// used for iteration and printing.
using Key = std::variant<std::int64_t, std::string>;

std::string key_str(const Key& k);

/// Finitely-supported map J -> R in canonical form: no stored value is
/// the semiring zero, keys are unique. Structural equality therefore
/// coincides with mathematical equality.
class FinSupp {
 public:
  explicit FinSupp(SemiringPtr ring);
  FinSupp(SemiringPtr ring, const std::vector<std::pair<Key, Scalar>>& entries);

  const SemiringPtr& ring() const { return ring_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Value at a key; the semiring zero when the key is outside the support.
  Scalar at(const Key& k) const;
  const std::map<Key, Scalar>& entries() const { return entries_; }

  /// True iff no stored value equals the semiring zero (the canonical
  /// form invariant; constructors and operations maintain it).
  bool is_canonical() const;

  /// Literal form "{k1:v1, k2:v2}" with keys ascending; "{}" when empty.
  std::string str() const;

  bool operator==(const FinSupp& other) const;
  bool operator!=(const FinSupp& other) const { return !(*this == other); }

 private:
  SemiringPtr ring_;
  std::map<Key, Scalar> entries_;
};

FinSupp finsupp_add(const FinSupp& s, const FinSupp& t);
FinSupp finsupp_scale(const Scalar& a, const FinSupp& s);

/// The Example-1 isomorphism between R^N and R^{1..N}: n-th coordinate
/// goes to integer key n (1-based). Mutually inverse with
/// finsupp_to_dense and preserves both operations.
FinSupp dense_to_finsupp(const DenseVec& s);

/// Inverse direction; every key must be an integer in 1..n.
DenseVec finsupp_to_dense(const FinSupp& s, std::size_t n);

}  // namespace freemod
