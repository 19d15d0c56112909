#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freemod/structures.hpp"

namespace freemod {

enum class TriState { unchecked, yes, no };

/// A total map between two finite carriers, stored extensionally:
/// table[x] is the codomain index of the image of domain element x.
/// Verification state travels with the value; freshly built maps are
/// unchecked. If invertible_state() is yes, inverse_table() composes to
/// the identity both ways by construction.
class LinearMapTable {
 public:
  LinearMapTable(StructurePtr domain, StructurePtr codomain, std::vector<std::size_t> table);

  const FiniteStructure& domain() const { return *domain_; }
  const FiniteStructure& codomain() const { return *codomain_; }
  const StructurePtr& domain_ptr() const { return domain_; }
  const StructurePtr& codomain_ptr() const { return codomain_; }

  std::size_t operator()(std::size_t x) const { return table_.at(x); }
  const std::vector<std::size_t>& table() const { return table_; }

  TriState linear_state() const { return linear_; }
  TriState invertible_state() const { return invertible_; }
  const std::optional<Witness>& linear_witness() const { return linear_witness_; }
  const std::optional<std::vector<std::size_t>>& inverse_table() const { return inverse_; }

  bool operator==(const LinearMapTable& other) const;

 private:
  friend LinearMapTable verified(const LinearMapTable&);
  friend LinearMapTable compose(const LinearMapTable&, const LinearMapTable&);
  friend LinearMapTable inverse(const LinearMapTable&);

  StructurePtr domain_;
  StructurePtr codomain_;
  std::vector<std::size_t> table_;
  TriState linear_ = TriState::unchecked;
  TriState invertible_ = TriState::unchecked;
  std::optional<Witness> linear_witness_;
  std::optional<std::vector<std::size_t>> inverse_;
};

LinearMapTable identity_map(StructurePtr s);

/// Outcome of the exhaustive linearity check. Witnesses are the
/// lexicographically first failing pairs of each kind.
struct LinearityVerdict {
  bool linear = true;
  std::optional<Witness> add_witness;    // f(x+y) != f(x)+f(y) at (x,y)
  std::optional<Witness> scale_witness;  // f(ax) != a f(x) at (a,x)
};

/// Checks preservation of addition over all pairs and of scalar
/// multiplication over all (scalar, element) pairs. Domain and codomain
/// must share the same finite semiring.
LinearityVerdict check_linear(const LinearMapTable& f);

struct InvertibilityVerdict {
  bool invertible = false;
  std::optional<std::vector<std::size_t>> inverse;
  std::optional<Witness> collision;  // two domain elements with equal image
  std::optional<std::size_t> missed;  // codomain index never hit
};

/// The table is invertible iff it is a bijection; the returned inverse
/// composes to the identity both ways by construction.
InvertibilityVerdict check_invertible(const LinearMapTable& f);

/// Copy of f with both verification flags computed and, when bijective,
/// the inverse table attached.
LinearMapTable verified(const LinearMapTable& f);

/// f after g. Verified-linear propagates (linear of linear is linear);
/// other states degrade to unchecked.
LinearMapTable compose(const LinearMapTable& f, const LinearMapTable& g);

/// Inverse of a map with invertible_state() == yes. Linearity of the
/// inverse is re-verified, not assumed; a violation would be recorded
/// on the returned map as linear_state() == no with a witness.
LinearMapTable inverse(const LinearMapTable& f);

enum class IsoStatus { isomorphic, not_isomorphic, undecided_budget };

struct IsoSearchResult {
  IsoStatus status = IsoStatus::not_isomorphic;
  std::optional<LinearMapTable> witness;  // verified; lexicographically least table
  std::string obstruction;                // why not / why undecided
  std::uint64_t nodes_visited = 0;
};

/// Searches for a bijective linear map from X to Y by pruned
/// backtracking: cardinality first, then zero-candidate counts, then
/// DFS over images in increasing index order with forced-image
/// propagation, so the first solution found is the lexicographically
/// least. `budget` caps visited assignments; exceeding it yields
/// undecided_budget, never a silent failure.
IsoSearchResult check_isomorphic(StructurePtr x, StructurePtr y, std::uint64_t budget = 1000000);

}  // namespace freemod
