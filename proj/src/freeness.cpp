#include "freemod/freeness.hpp"

#include <algorithm>

namespace freemod {

namespace {

// All k with |R|^k == n, ascending. More than one only in the
// degenerate |R| = 1 case, where the least is listed first.
std::vector<std::size_t> feasible_ranks(std::size_t ring_size, std::size_t n) {
  std::vector<std::size_t> ks;
  if (ring_size == 1) {
    if (n == 1) ks.push_back(0);
    return ks;
  }
  Int power = 1;
  for (std::size_t k = 0;; ++k) {
    if (power == static_cast<unsigned long>(n)) ks.push_back(k);
    if (power > static_cast<unsigned long>(n)) break;
    power *= static_cast<unsigned long>(ring_size);
  }
  return ks;
}

// Lexicographic successor of an ascending k-subset of {0..n-1}.
bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (subset[i] + 1 <= n - (k - i)) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Images of every coefficient tuple over a candidate subset, first
// coefficient most significant. Returns nullopt when the budget runs
// out; `bijective` tells whether all images were distinct.
struct EvaluationResult {
  bool bijective = false;
  std::vector<std::size_t> image;  // tuple index -> carrier element
};

std::optional<EvaluationResult> evaluate_subset(const FiniteStructure& s,
                                                const std::vector<std::size_t>& subset,
                                                std::size_t zero, std::uint64_t& budget_left) {
  const std::size_t m = s.scalar_count();
  const std::size_t k = subset.size();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= m;

  EvaluationResult res;
  res.image.resize(tuples);
  std::vector<bool> hit(s.size(), false);
  res.bijective = true;
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t t = 0; t < tuples; ++t) {
    if (budget_left == 0) return std::nullopt;
    --budget_left;
    std::size_t value = zero;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t term = s.act(digits[i], subset[i]);
      value = i == 0 ? term : s.add(value, term);
    }
    res.image[t] = value;
    if (hit[value]) {
      res.bijective = false;
      break;
    }
    hit[value] = true;
    // next tuple, last digit fastest
    std::size_t i = k;
    while (i-- > 0) {
      if (++digits[i] < m) break;
      digits[i] = 0;
    }
  }
  return res;
}

std::vector<std::size_t> tuple_digits(std::size_t t, std::size_t k, std::size_t m) {
  std::vector<std::size_t> d(k);
  for (std::size_t i = k; i-- > 0;) {
    d[i] = t % m;
    t /= m;
  }
  return d;
}

}  // namespace

FreenessVerdict find_basis(const StructurePtr& s, std::uint64_t budget) {
  FreenessVerdict verdict;
  verdict.axiom_report = check_axioms(*s);
  if (!verdict.axiom_report->passes_1_to_8()) {
    verdict.status = FreenessStatus::not_free;
    verdict.certificate =
        "conditions (1)-(8) fail; the structure is not a standard R-semimodule";
    return verdict;
  }
  const std::size_t n = s->size();
  const std::size_t m = s->scalar_count();
  const auto ks = feasible_ranks(m, n);
  if (ks.empty()) {
    verdict.status = FreenessStatus::not_free;
    verdict.certificate = "cardinality obstruction: |X| = " + std::to_string(n) +
                          " is not |R|^k for any k (|R| = " + std::to_string(m) + ")";
    return verdict;
  }
  const std::size_t zero = *verdict.axiom_report->standard_zero;

  std::uint64_t budget_left = budget;
  for (std::size_t k : ks) {
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    do {
      ++verdict.subsets_tried;
      auto eval = evaluate_subset(*s, subset, zero, budget_left);
      if (!eval) {
        verdict.status = FreenessStatus::undecided_budget;
        verdict.certificate = "budget of " + std::to_string(budget) +
                              " evaluations exhausted after " +
                              std::to_string(verdict.subsets_tried) + " subsets";
        return verdict;
      }
      if (eval->bijective) {
        Basis basis;
        basis.structure = s;
        basis.elements = subset;
        basis.coordinates.resize(n);
        for (std::size_t t = 0; t < eval->image.size(); ++t)
          basis.coordinates[eval->image[t]] = tuple_digits(t, k, m);
        verdict.status = FreenessStatus::free_with_basis;
        verdict.rank = k;
        verdict.basis = std::move(basis);
        verdict.certificate = "basis found after " + std::to_string(verdict.subsets_tried) +
                              " subset(s)";
        return verdict;
      }
    } while (next_subset(subset, n));
  }
  verdict.status = FreenessStatus::not_free;
  verdict.certificate = "no basis: all " + std::to_string(verdict.subsets_tried) +
                        " candidate subset(s) lack a bijective evaluation map";
  return verdict;
}

Coordinatization coordinatize(const StructurePtr& s, const Basis& basis) {
  if (!basis.structure || !(*basis.structure == *s))
    throw PreconditionError("basis belongs to a different structure");
  const std::size_t n = s->size();
  const std::size_t m = s->scalar_count();
  const std::size_t k = basis.elements.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (basis.elements[i] >= n) throw PreconditionError("basis element index out of range");
    for (std::size_t j = i + 1; j < k; ++j)
      if (basis.elements[i] == basis.elements[j])
        throw PreconditionError("duplicate basis element '" + s->label(basis.elements[i]) +
                                "'");
  }

  const StructureAxiomReport axioms = check_axioms(*s);
  if (!axioms.passes_1_to_8())
    throw PreconditionError("structure fails conditions (1)-(8); no coordinatization exists");

  // Count representations of every element independently of the basis's
  // claimed coordinate table.
  std::uint64_t unlimited = ~std::uint64_t{0};
  auto eval = evaluate_subset(*s, basis.elements, *axioms.standard_zero, unlimited);
  std::vector<std::size_t> reps(n, 0);
  std::vector<std::size_t> tuple_of(n, 0);
  if (eval->bijective) {
    for (std::size_t t = 0; t < eval->image.size(); ++t) {
      reps[eval->image[t]]++;
      tuple_of[eval->image[t]] = t;
    }
  } else {
    // evaluate_subset stops early on a collision; redo the count in full
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < k; ++i) tuples *= m;
    for (std::size_t t = 0; t < tuples; ++t) {
      const auto digits = tuple_digits(t, k, m);
      std::size_t value = *axioms.standard_zero;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t term = s->act(digits[i], basis.elements[i]);
        value = i == 0 ? term : s->add(value, term);
      }
      reps[value]++;
      tuple_of[value] = t;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (reps[x] != 1)
      throw PreconditionError("not a basis: element '" + s->label(x) + "' has " +
                              std::to_string(reps[x]) + " representations");

  RealizedPower power(s->ring(), k);
  std::vector<std::size_t> table(n);
  for (std::size_t x = 0; x < n; ++x) table[x] = tuple_of[x];
  LinearMapTable psi = verified(LinearMapTable(s, power.structure(), std::move(table)));
  if (psi.linear_state() != TriState::yes || psi.invertible_state() != TriState::yes)
    throw Error("coordinatization failed its soundness cross-check");
  return Coordinatization{std::move(psi), std::move(power)};
}

EquivalenceReport verify_free_iff_standard(const StructurePtr& s, std::uint64_t budget) {
  EquivalenceReport report;

  // Side (i): isomorphism existence against realized R^k.
  const auto ks = feasible_ranks(s->scalar_count(), s->size());
  if (ks.empty()) {
    report.iso_status = IsoStatus::not_isomorphic;
    report.iso_detail = "cardinality obstruction: no k with |R|^k = |X|";
  } else {
    for (std::size_t k : ks) {
      RealizedPower power(s->ring(), k);
      IsoSearchResult iso = check_isomorphic(s, power.structure(), budget);
      if (iso.status == IsoStatus::isomorphic) {
        report.iso_status = IsoStatus::isomorphic;
        report.iso_rank = k;
        report.iso_detail = "isomorphic to R^" + std::to_string(k);
        break;
      }
      report.iso_status = iso.status;
      report.iso_detail = iso.obstruction;
      if (iso.status == IsoStatus::undecided_budget) break;
    }
  }

  // Side (ii): axioms + basis search.
  FreenessVerdict fb = find_basis(s, budget);
  report.basis_status = fb.status;
  report.basis_rank = fb.rank;
  return report;
}

}  // namespace freemod
