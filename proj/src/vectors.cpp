#include "freemod/vectors.hpp"

#include <sstream>

namespace freemod {

// ---------------------------------------------------------------------------
// DenseVec

DenseVec::DenseVec(SemiringPtr ring, std::vector<Scalar> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (!ring_->owns(e))
      throw DomainMismatchError("vector entry from " + e.ring()->name() +
                                " in a vector over " + ring_->name());
}

DenseVec DenseVec::zeros(SemiringPtr ring, std::size_t n) {
  std::vector<Scalar> entries(n, ring->zero());
  return DenseVec(std::move(ring), std::move(entries));
}

std::string DenseVec::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].str();
  }
  out += ']';
  return out;
}

bool DenseVec::operator==(const DenseVec& other) const {
  if (!same_semiring(ring_, other.ring_)) return false;
  return entries_ == other.entries_;
}

DenseVec dense_add(const DenseVec& s, const DenseVec& t) {
  if (!same_semiring(s.ring(), t.ring()))
    throw DomainMismatchError("adding vectors over " + s.ring()->name() + " and " +
                              t.ring()->name());
  if (s.dim() != t.dim())
    throw DimensionMismatchError("adding vectors of dimension " + std::to_string(s.dim()) +
                                 " and " + std::to_string(t.dim()));
  std::vector<Scalar> entries;
  entries.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) entries.push_back(s[i] + t[i]);
  return DenseVec(s.ring(), std::move(entries));
}

DenseVec dense_scale(const Scalar& a, const DenseVec& s) {
  if (!same_semiring(a.ring(), s.ring()))
    throw DomainMismatchError("scaling a vector over " + s.ring()->name() +
                              " by a scalar from " + a.ring()->name());
  std::vector<Scalar> entries;
  entries.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) entries.push_back(a * s[i]);
  return DenseVec(s.ring(), std::move(entries));
}

// ---------------------------------------------------------------------------
// FinSupp

std::string key_str(const Key& k) {
  if (std::holds_alternative<std::int64_t>(k)) return std::to_string(std::get<std::int64_t>(k));
  return std::get<std::string>(k);
}

FinSupp::FinSupp(SemiringPtr ring) : ring_(std::move(ring)) {}

FinSupp::FinSupp(SemiringPtr ring, const std::vector<std::pair<Key, Scalar>>& entries)
    : ring_(std::move(ring)) {
  for (const auto& [k, v] : entries) {
    if (!ring_->owns(v))
      throw DomainMismatchError("value from " + v.ring()->name() + " in a map over " +
                                ring_->name());
    if (entries_.count(k)) throw Error("duplicate key '" + key_str(k) + "'");
    if (!v.is_zero()) entries_.emplace(k, v);
  }
}

Scalar FinSupp::at(const Key& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? ring_->zero() : it->second;
}

bool FinSupp::is_canonical() const {
  for (const auto& [k, v] : entries_)
    if (v.is_zero()) return false;
  return true;
}

std::string FinSupp::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += key_str(k);
    out += ':';
    out += v.str();
  }
  out += '}';
  return out;
}

bool FinSupp::operator==(const FinSupp& other) const {
  if (!same_semiring(ring_, other.ring_)) return false;
  return entries_ == other.entries_;
}

FinSupp finsupp_add(const FinSupp& s, const FinSupp& t) {
  if (!same_semiring(s.ring(), t.ring()))
    throw DomainMismatchError("adding maps over " + s.ring()->name() + " and " +
                              t.ring()->name());
  std::vector<std::pair<Key, Scalar>> merged;
  auto is = s.entries().begin(), es = s.entries().end();
  auto it = t.entries().begin(), et = t.entries().end();
  while (is != es || it != et) {
    if (it == et || (is != es && is->first < it->first)) {
      merged.emplace_back(*is++);
    } else if (is == es || it->first < is->first) {
      merged.emplace_back(*it++);
    } else {
      merged.emplace_back(is->first, is->second + it->second);
      ++is;
      ++it;
    }
  }
  return FinSupp(s.ring(), merged);
}

FinSupp finsupp_scale(const Scalar& a, const FinSupp& s) {
  if (!same_semiring(a.ring(), s.ring()))
    throw DomainMismatchError("scaling a map over " + s.ring()->name() +
                              " by a scalar from " + a.ring()->name());
  std::vector<std::pair<Key, Scalar>> scaled;
  scaled.reserve(s.support_size());
  // a * v can be zero even for nonzero a and v (zero divisors); the
  // constructor strips those.
  for (const auto& [k, v] : s.entries()) scaled.emplace_back(k, a * v);
  return FinSupp(s.ring(), scaled);
}

FinSupp dense_to_finsupp(const DenseVec& s) {
  std::vector<std::pair<Key, Scalar>> entries;
  for (std::size_t i = 0; i < s.dim(); ++i)
    entries.emplace_back(Key(static_cast<std::int64_t>(i + 1)), s[i]);
  return FinSupp(s.ring(), entries);
}

DenseVec finsupp_to_dense(const FinSupp& s, std::size_t n) {
  std::vector<Scalar> entries(n, s.ring()->zero());
  for (const auto& [k, v] : s.entries()) {
    if (!std::holds_alternative<std::int64_t>(k))
      throw Error("key '" + key_str(k) + "' is not an integer in 1.." + std::to_string(n));
    const std::int64_t i = std::get<std::int64_t>(k);
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw Error("key " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    entries[static_cast<std::size_t>(i - 1)] = v;
  }
  return DenseVec(s.ring(), std::move(entries));
}

}  // namespace freemod
