#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freemod/semiring.hpp"

namespace freemod {

class LinearMapTable;  // linmap.hpp

/// A finite set equipped with an addition table and a scalar-action
/// table over a finite semiring. No algebraic laws are assumed; both
/// maps are merely required to be total and closed over the carrier.
class FiniteStructure {
 public:
  FiniteStructure(SemiringPtr ring, std::vector<std::string> labels,
                  std::vector<std::size_t> add_table,
                  std::vector<std::size_t> action_table);

  const SemiringPtr& ring() const { return ring_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t scalar_count() const { return ring_->carrier_size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }

  /// x + y, by carrier index.
  std::size_t add(std::size_t x, std::size_t y) const { return add_[x * size() + y]; }
  /// a . x for the a-th scalar in the semiring's enumeration order.
  std::size_t act(std::size_t a, std::size_t x) const { return action_[a * size() + x]; }

  const std::vector<std::size_t>& add_table() const { return add_; }
  const std::vector<std::size_t>& action_table() const { return action_; }

  std::optional<std::size_t> index_of_label(std::string_view label) const;

  /// Compact single-line rendering of both tables, for reports.
  std::string dump() const;

  bool operator==(const FiniteStructure& other) const;

 private:
  SemiringPtr ring_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> action_;
};

using StructurePtr = std::shared_ptr<const FiniteStructure>;

/// R^n over a finite semiring, realized as tables. Carrier elements are
/// coordinate tuples in lexicographic order (first coordinate most
/// significant), labeled "(a1,...,an)" from the scalar labels.
class RealizedPower {
 public:
  RealizedPower(SemiringPtr ring, std::size_t dim);

  const SemiringPtr& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const StructurePtr& structure() const { return structure_; }

  /// Index of the all-zeros tuple.
  std::size_t zero_index() const { return zero_index_; }

  /// Scalar indices of the tuple at a carrier index, length dim().
  std::vector<std::size_t> digits_of(std::size_t index) const;
  std::size_t index_of_digits(const std::vector<std::size_t>& digits) const;

 private:
  SemiringPtr ring_;
  std::size_t dim_;
  StructurePtr structure_;
  std::size_t zero_index_ = 0;
};

/// Variable bindings of a failed check, e.g. x=mid, a=1. Element
/// bindings index the structure carrier, scalar bindings the semiring
/// enumeration.
struct Witness {
  std::vector<std::pair<std::string, std::size_t>> elems;
  std::vector<std::pair<std::string, std::size_t>> scalars;

  bool operator==(const Witness&) const = default;
};

struct ConditionReport {
  bool pass = true;
  std::optional<Witness> witness;
};

/// Names of the nine structure conditions, index 0 holding condition (1).
extern const std::array<const char*, 9> kStructureConditionLaws;

/// Per-candidate results for the conditions that mention the zero
/// element. 8a is "0x = zero for all x", 8b is "a zero = zero for all
/// a", 9 is "every x has an additive inverse w.r.t. zero".
struct ZeroCandidateDetail {
  std::size_t zero = 0;
  bool cond8a = true, cond8b = true, cond9 = true;
  std::optional<Witness> w8a, w8b, w9;
};

/// Report of the nine conditions. The zero element is not part of the
/// input: candidates are all z with x + z = x for every x, and the
/// z-dependent conditions (1), (8), (9) are evaluated per candidate.
/// The top-level entry for (8) (resp. (9)) passes iff some candidate
/// satisfies it.
struct StructureAxiomReport {
  std::vector<std::size_t> zero_candidates;
  std::vector<ZeroCandidateDetail> per_candidate;
  std::array<ConditionReport, 9> conditions;

  /// First candidate zero satisfying (8a) and (8b), if any.
  std::optional<std::size_t> standard_zero;

  /// Conditions (1)-(8) hold with one common zero: the standard notion
  /// of an R-semimodule.
  bool passes_1_to_8() const;
  /// All nine conditions hold with one common zero.
  bool passes_all() const;
};

StructureAxiomReport check_axioms(const FiniteStructure& s);

/// Conditions (1)-(8) evaluated against one distinguished zero element
/// (no candidate search). Index 0 holds condition (1).
std::array<ConditionReport, 8> check_conditions_with_zero(const FiniteStructure& s,
                                                          std::size_t zero);

/// Result of transporting conditions (1')-(8') from R^N back through an
/// isomorphism psi, with zero := psi^{-1}(zero').
struct TransportReport {
  std::size_t codomain_zero = 0;     // all-zeros tuple in R^N
  std::size_t transported_zero = 0;  // psi^{-1} of it
  std::array<ConditionReport, 8> codomain_conditions;  // (1')-(8')
  std::array<ConditionReport, 8> domain_conditions;    // (1)-(8)

  bool all_pass() const;
};

/// Requires psi: s -> codomain.structure() verified linear and
/// invertible over the same finite semiring; throws PreconditionError
/// otherwise.
TransportReport transport_axioms(const FiniteStructure& s, const LinearMapTable& psi,
                                 const RealizedPower& codomain);

enum class LemmaStatus {
  premise_not_met,         // structure-side premise fails
  premise_not_applicable,  // scalar-side premise fails (semiring is not a ring)
  holds,
  counterexample,  // would contradict the footnote proof
};

struct LemmaReport {
  LemmaStatus status = LemmaStatus::holds;
  std::string detail;
  std::optional<Witness> witness;
  std::string structure_dump;  // set on counterexample
};

/// Footnote equivalence: when (2)-(7) hold and scalars form a ring,
/// [0x = z for all x] iff [(1) and (9) w.r.t. z], for every element z.
LemmaReport lemma_8_iff_1_and_9(const FiniteStructure& s);

/// Footnote consequence: when (1), (9) and (2)-(7) hold, a.zero = zero
/// for every scalar a. Needs no ring structure (inverses come from (9)).
LemmaReport lemma_a_zero(const FiniteStructure& s);

/// Supplemental-2 footnote: over a ring, a two-sided identity plus
/// (2), (4)-(9) force commutativity (3).
LemmaReport lemma_commutativity_derivable(const FiniteStructure& s);

/// Enumerates every addition table x action table combination over a
/// fixed carrier size, lexicographically (addition digits major).
/// Construction throws BudgetError with the would-be count when the
/// total exceeds `budget`.
class StructureEnumerator {
 public:
  StructureEnumerator(SemiringPtr ring, std::size_t carrier_size, const Int& budget);

  static Int total_count(std::size_t carrier_size, std::size_t ring_size);

  const Int& total() const { return total_; }

  /// Next structure, or nullopt when exhausted.
  std::optional<FiniteStructure> next();

 private:
  SemiringPtr ring_;
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> digits_;  // add table then action table
  Int total_;
  bool done_ = false;
  bool first_ = true;
};

}  // namespace freemod
