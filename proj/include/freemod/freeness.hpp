#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freemod/linmap.hpp"
#include "freemod/structures.hpp"

namespace freemod {

/// An ordered subset Y of a carrier together with the coordinate table:
/// coordinates[x] is the unique scalar-index tuple (c_1,...,c_k) with
/// x = c_1 y_1 + ... + c_k y_k (summed left to right).
struct Basis {
  StructurePtr structure;
  // Carrier indices in evaluation order; find_basis returns them
  // ascending, coordinatize accepts any order.
  std::vector<std::size_t> elements;
  std::vector<std::vector<std::size_t>> coordinates;   // one tuple per carrier element

  std::size_t rank() const { return elements.size(); }
};

enum class FreenessStatus { free_with_basis, not_free, undecided_budget };

struct FreenessVerdict {
  FreenessStatus status = FreenessStatus::not_free;
  std::optional<Basis> basis;               // set iff free_with_basis
  std::optional<std::size_t> rank;          // = basis->rank()
  std::string certificate;                  // why not free / search summary
  std::optional<StructureAxiomReport> axiom_report;
  std::uint64_t subsets_tried = 0;
};

/// Decides freeness by basis search. Preconditions (1)-(8) are checked
/// first and a failure is reported in the verdict; then the carrier size
/// must be |R|^k for some k (else not free); then size-k subsets are
/// tried in lexicographic order, accepting the first whose evaluation
/// map R^k -> X is a bijection. `budget` caps coefficient-tuple
/// evaluations.
FreenessVerdict find_basis(const StructurePtr& s, std::uint64_t budget = 1000000);

struct Coordinatization {
  LinearMapTable psi;      // verified linear + invertible
  RealizedPower codomain;  // R^rank realized as tables
};

/// Builds the coordinatization x = sum a_n u_n |-> (a_1,...,a_n) from a
/// basis, verifying exhaustively that it is linear and invertible.
/// Throws PreconditionError naming the first carrier element with zero
/// or multiple representations if the claimed basis is not one.
Coordinatization coordinatize(const StructurePtr& s, const Basis& basis);

/// Extensional check of the paper's equivalence: decides freeness both
/// by isomorphism search against realized R^k and by axioms + basis
/// search, and reports whether the verdicts agree.
struct EquivalenceReport {
  IsoStatus iso_status = IsoStatus::not_isomorphic;
  std::optional<std::size_t> iso_rank;
  std::string iso_detail;
  FreenessStatus basis_status = FreenessStatus::not_free;
  std::optional<std::size_t> basis_rank;

  bool decided() const {
    return iso_status != IsoStatus::undecided_budget &&
           basis_status != FreenessStatus::undecided_budget;
  }
  bool agree() const {
    if (!decided()) return false;
    const bool iso_free = iso_status == IsoStatus::isomorphic;
    const bool basis_free = basis_status == FreenessStatus::free_with_basis;
    if (iso_free != basis_free) return false;
    if (iso_free && iso_rank != basis_rank) return false;
    return true;
  }
};

EquivalenceReport verify_free_iff_standard(const StructurePtr& s,
                                           std::uint64_t budget = 1000000);

}  // namespace freemod
