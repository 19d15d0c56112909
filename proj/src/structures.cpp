#include "freemod/structures.hpp"

#include <algorithm>
#include <set>

#include "freemod/linmap.hpp"

namespace freemod {

const std::array<const char*, 9> kStructureConditionLaws = {
    "x + 0 = x",
    "x + (y + z) = (x + y) + z",
    "x + y = y + x",
    "1x = x",
    "a(bx) = (ab)x",
    "a(x + y) = ax + ay",
    "(a + b)x = ax + bx",
    "0x = 0 = a0",
    "x + (-x) = 0 exists",
};

// ---------------------------------------------------------------------------
// FiniteStructure

FiniteStructure::FiniteStructure(SemiringPtr ring, std::vector<std::string> labels,
                                 std::vector<std::size_t> add_table,
                                 std::vector<std::size_t> action_table)
    : ring_(std::move(ring)),
      labels_(std::move(labels)),
      add_(std::move(add_table)),
      action_(std::move(action_table)) {
  if (!ring_->is_finite())
    throw Error("structure tables require a finite semiring, got " + ring_->name());
  const std::size_t n = labels_.size();
  if (n == 0) throw Error("structure carrier must be non-empty");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error("carrier labels must be non-empty");
    if (!seen.insert(l).second) throw Error("duplicate carrier label '" + l + "'");
  }
  const std::size_t m = ring_->carrier_size();
  if (add_.size() != n * n)
    throw Error("add table must have " + std::to_string(n * n) + " entries, got " +
                std::to_string(add_.size()));
  if (action_.size() != m * n)
    throw Error("action table must have " + std::to_string(m * n) + " entries, got " +
                std::to_string(action_.size()));
  for (std::size_t v : add_)
    if (v >= n) throw Error("add table entry out of range");
  for (std::size_t v : action_)
    if (v >= n) throw Error("action table entry out of range");
}

std::optional<std::size_t> FiniteStructure::index_of_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string FiniteStructure::dump() const {
  const std::size_t n = size();
  std::string out = "carrier=[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ',';
    out += labels_[i];
  }
  out += "] add=[";
  for (std::size_t x = 0; x < n; ++x) {
    if (x) out += ',';
    out += '[';
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ',';
      out += labels_[add(x, y)];
    }
    out += ']';
  }
  out += "] action=[";
  for (std::size_t a = 0; a < scalar_count(); ++a) {
    if (a) out += ',';
    out += '[';
    for (std::size_t x = 0; x < n; ++x) {
      if (x) out += ',';
      out += labels_[act(a, x)];
    }
    out += ']';
  }
  out += ']';
  return out;
}

bool FiniteStructure::operator==(const FiniteStructure& other) const {
  return same_semiring(ring_, other.ring_) && labels_ == other.labels_ &&
         add_ == other.add_ && action_ == other.action_;
}

// ---------------------------------------------------------------------------
// RealizedPower

RealizedPower::RealizedPower(SemiringPtr ring, std::size_t dim)
    : ring_(std::move(ring)), dim_(dim) {
  if (!ring_->is_finite()) throw Error("realizing R^n requires a finite semiring");
  const std::size_t m = ring_->carrier_size();

  Int count = 1;
  for (std::size_t i = 0; i < dim_; ++i) count *= static_cast<unsigned long>(m);
  if (count > 1 << 24) throw Error("R^" + std::to_string(dim_) + " too large to realize");
  const std::size_t n = static_cast<std::size_t>(count.get_ui());

  // scalar Cayley tables by enumeration index
  std::vector<std::size_t> sadd(m * m), smul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      sadd[i * m + j] = ring_->index_of(ring_->add(ring_->element(i), ring_->element(j)));
      smul[i * m + j] = ring_->index_of(ring_->mul(ring_->element(i), ring_->element(j)));
    }

  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto d = digits_of(v);
    std::string l = "(";
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) l += ',';
      l += ring_->element(d[i]).str();
    }
    l += ')';
    labels[v] = std::move(l);
  }

  std::vector<std::size_t> add(n * n), action(m * n);
  for (std::size_t v = 0; v < n; ++v) {
    auto dv = digits_of(v);
    for (std::size_t w = 0; w < n; ++w) {
      auto dw = digits_of(w);
      std::vector<std::size_t> ds(dim_);
      for (std::size_t i = 0; i < dim_; ++i) ds[i] = sadd[dv[i] * m + dw[i]];
      add[v * n + w] = index_of_digits(ds);
    }
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<std::size_t> ds(dim_);
      for (std::size_t i = 0; i < dim_; ++i) ds[i] = smul[a * m + dv[i]];
      action[a * n + v] = index_of_digits(ds);
    }
  }

  const std::size_t zero_digit = ring_->index_of(ring_->zero());
  zero_index_ = index_of_digits(std::vector<std::size_t>(dim_, zero_digit));
  structure_ = std::make_shared<FiniteStructure>(ring_, std::move(labels), std::move(add),
                                                 std::move(action));
}

std::vector<std::size_t> RealizedPower::digits_of(std::size_t index) const {
  const std::size_t m = ring_->carrier_size();
  std::vector<std::size_t> d(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    d[i] = index % m;
    index /= m;
  }
  return d;
}

std::size_t RealizedPower::index_of_digits(const std::vector<std::size_t>& digits) const {
  const std::size_t m = ring_->carrier_size();
  std::size_t v = 0;
  for (std::size_t d : digits) v = v * m + d;
  return v;
}

// ---------------------------------------------------------------------------
// Axiom checking

namespace {

// Scalar Cayley tables by enumeration index, plus the indices of 0 and 1.
struct ScalarTables {
  std::size_t m = 0;
  std::vector<std::size_t> add, mul;
  std::size_t zero = 0, one = 0;

  explicit ScalarTables(const Semiring& ring) {
    m = ring.carrier_size();
    add.resize(m * m);
    mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        add[i * m + j] = ring.index_of(ring.add(ring.element(i), ring.element(j)));
        mul[i * m + j] = ring.index_of(ring.mul(ring.element(i), ring.element(j)));
      }
    zero = ring.index_of(ring.zero());
    one = ring.index_of(ring.one());
  }
};

Witness elem_witness(std::initializer_list<std::pair<const char*, std::size_t>> elems,
                     std::initializer_list<std::pair<const char*, std::size_t>> scalars = {}) {
  Witness w;
  for (const auto& [name, v] : elems) w.elems.emplace_back(name, v);
  for (const auto& [name, v] : scalars) w.scalars.emplace_back(name, v);
  return w;
}

// Conditions (2)-(7); index by condition number.
ConditionReport check_condition_2(const FiniteStructure& s) {
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (s.add(x, s.add(y, z)) != s.add(s.add(x, y), z))
          return {false, elem_witness({{"x", x}, {"y", y}, {"z", z}})};
  return {};
}

ConditionReport check_condition_3(const FiniteStructure& s) {
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.add(x, y) != s.add(y, x)) return {false, elem_witness({{"x", x}, {"y", y}})};
  return {};
}

ConditionReport check_condition_4(const FiniteStructure& s, const ScalarTables& t) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.act(t.one, x) != x) return {false, elem_witness({{"x", x}})};
  return {};
}

ConditionReport check_condition_5(const FiniteStructure& s, const ScalarTables& t) {
  for (std::size_t a = 0; a < t.m; ++a)
    for (std::size_t b = 0; b < t.m; ++b)
      for (std::size_t x = 0; x < s.size(); ++x)
        if (s.act(a, s.act(b, x)) != s.act(t.mul[a * t.m + b], x))
          return {false, elem_witness({{"x", x}}, {{"a", a}, {"b", b}})};
  return {};
}

ConditionReport check_condition_6(const FiniteStructure& s, const ScalarTables& t) {
  for (std::size_t a = 0; a < t.m; ++a)
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y)
        if (s.act(a, s.add(x, y)) != s.add(s.act(a, x), s.act(a, y)))
          return {false, elem_witness({{"x", x}, {"y", y}}, {{"a", a}})};
  return {};
}

ConditionReport check_condition_7(const FiniteStructure& s, const ScalarTables& t) {
  for (std::size_t a = 0; a < t.m; ++a)
    for (std::size_t b = 0; b < t.m; ++b)
      for (std::size_t x = 0; x < s.size(); ++x)
        if (s.act(t.add[a * t.m + b], x) != s.add(s.act(a, x), s.act(b, x)))
          return {false, elem_witness({{"x", x}}, {{"a", a}, {"b", b}})};
  return {};
}

// First x with x + z != x, if any.
std::optional<std::size_t> right_identity_violation(const FiniteStructure& s, std::size_t z) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.add(x, z) != x) return x;
  return std::nullopt;
}

std::optional<std::size_t> cond8a_violation(const FiniteStructure& s, const ScalarTables& t,
                                            std::size_t z) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.act(t.zero, x) != z) return x;
  return std::nullopt;
}

std::optional<std::size_t> cond8b_violation(const FiniteStructure& s, const ScalarTables& t,
                                            std::size_t z) {
  for (std::size_t a = 0; a < t.m; ++a)
    if (s.act(a, z) != z) return a;
  return std::nullopt;
}

std::optional<std::size_t> cond9_violation(const FiniteStructure& s, std::size_t z) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < s.size() && !has_inverse; ++y)
      has_inverse = s.add(x, y) == z;
    if (!has_inverse) return x;
  }
  return std::nullopt;
}

}  // namespace

StructureAxiomReport check_axioms(const FiniteStructure& s) {
  const ScalarTables t(*s.ring());
  StructureAxiomReport r;

  for (std::size_t z = 0; z < s.size(); ++z)
    if (!right_identity_violation(s, z)) r.zero_candidates.push_back(z);

  r.conditions[1] = check_condition_2(s);
  r.conditions[2] = check_condition_3(s);
  r.conditions[3] = check_condition_4(s, t);
  r.conditions[4] = check_condition_5(s, t);
  r.conditions[5] = check_condition_6(s, t);
  r.conditions[6] = check_condition_7(s, t);

  if (r.zero_candidates.empty()) {
    // No element is a zero; (1), (8), (9) all fail. The witness shows the
    // first element refuting the first candidate.
    const std::size_t x = *right_identity_violation(s, 0);
    Witness w = elem_witness({{"x", x}, {"zero", 0}});
    r.conditions[0] = {false, w};
    r.conditions[7] = {false, w};
    r.conditions[8] = {false, w};
    return r;
  }

  r.conditions[0] = {};  // (1) passes: candidates exist

  for (std::size_t z : r.zero_candidates) {
    ZeroCandidateDetail d;
    d.zero = z;
    if (auto x = cond8a_violation(s, t, z)) {
      d.cond8a = false;
      d.w8a = elem_witness({{"x", *x}});
    }
    if (auto a = cond8b_violation(s, t, z)) {
      d.cond8b = false;
      d.w8b = elem_witness({}, {{"a", *a}});
    }
    if (auto x = cond9_violation(s, z)) {
      d.cond9 = false;
      d.w9 = elem_witness({{"x", *x}});
    }
    r.per_candidate.push_back(std::move(d));
  }

  for (const auto& d : r.per_candidate)
    if (d.cond8a && d.cond8b) {
      r.standard_zero = d.zero;
      break;
    }

  if (!r.standard_zero) {
    const auto& d = r.per_candidate.front();
    Witness w = d.w8a ? *d.w8a : *d.w8b;
    w.elems.emplace_back("zero", d.zero);
    r.conditions[7] = {false, std::move(w)};
  }

  bool any9 = false;
  for (const auto& d : r.per_candidate) any9 = any9 || d.cond9;
  if (!any9) {
    const auto& d = r.per_candidate.front();
    Witness w = *d.w9;
    w.elems.emplace_back("zero", d.zero);
    r.conditions[8] = {false, std::move(w)};
  }

  return r;
}

bool StructureAxiomReport::passes_1_to_8() const {
  for (int i = 1; i <= 6; ++i)
    if (!conditions[static_cast<std::size_t>(i)].pass) return false;
  return standard_zero.has_value();
}

bool StructureAxiomReport::passes_all() const {
  if (!passes_1_to_8()) return false;
  for (const auto& d : per_candidate)
    if (d.cond8a && d.cond8b && d.cond9) return true;
  return false;
}

std::array<ConditionReport, 8> check_conditions_with_zero(const FiniteStructure& s,
                                                          std::size_t zero) {
  const ScalarTables t(*s.ring());
  std::array<ConditionReport, 8> r;
  if (auto x = right_identity_violation(s, zero))
    r[0] = {false, elem_witness({{"x", *x}, {"zero", zero}})};
  r[1] = check_condition_2(s);
  r[2] = check_condition_3(s);
  r[3] = check_condition_4(s, t);
  r[4] = check_condition_5(s, t);
  r[5] = check_condition_6(s, t);
  r[6] = check_condition_7(s, t);
  if (auto x = cond8a_violation(s, t, zero)) {
    r[7] = {false, elem_witness({{"x", *x}, {"zero", zero}})};
  } else if (auto a = cond8b_violation(s, t, zero)) {
    r[7] = {false, elem_witness({{"zero", zero}}, {{"a", *a}})};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Transport along an isomorphism

bool TransportReport::all_pass() const {
  for (const auto& c : codomain_conditions)
    if (!c.pass) return false;
  for (const auto& c : domain_conditions)
    if (!c.pass) return false;
  return true;
}

TransportReport transport_axioms(const FiniteStructure& s, const LinearMapTable& psi,
                                 const RealizedPower& codomain) {
  if (psi.linear_state() != TriState::yes || psi.invertible_state() != TriState::yes)
    throw PreconditionError("psi must be verified linear and invertible before transport");
  if (!(psi.domain() == s))
    throw PreconditionError("psi's domain is not the given structure");
  if (!(psi.codomain() == *codomain.structure()))
    throw PreconditionError("psi's codomain is not the realized power");
  if (!same_semiring(s.ring(), codomain.ring()))
    throw PreconditionError("structure and power use different semirings");

  TransportReport r;
  r.codomain_zero = codomain.zero_index();
  r.codomain_conditions = check_conditions_with_zero(*codomain.structure(), r.codomain_zero);
  r.transported_zero = psi.inverse_table()->at(r.codomain_zero);
  r.domain_conditions = check_conditions_with_zero(s, r.transported_zero);
  return r;
}

// ---------------------------------------------------------------------------
// Footnote lemmas

namespace {

// Returns the number (2..7) of the first failing condition among
// (2)-(7), or 0 when all hold.
int first_failing_2_to_7(const FiniteStructure& s, const ScalarTables& t) {
  if (!check_condition_2(s).pass) return 2;
  if (!check_condition_3(s).pass) return 3;
  if (!check_condition_4(s, t).pass) return 4;
  if (!check_condition_5(s, t).pass) return 5;
  if (!check_condition_6(s, t).pass) return 6;
  if (!check_condition_7(s, t).pass) return 7;
  return 0;
}

}  // namespace

LemmaReport lemma_8_iff_1_and_9(const FiniteStructure& s) {
  const ScalarTables t(*s.ring());
  LemmaReport r;
  if (int k = first_failing_2_to_7(s, t)) {
    r.status = LemmaStatus::premise_not_met;
    r.detail = "condition (" + std::to_string(k) + ") fails";
    return r;
  }
  if (!check_ring(s.ring()).is_ring) {
    // The forward proof multiplies by -1; without additive inverses of
    // scalars the footnote does not apply.
    r.status = LemmaStatus::premise_not_applicable;
    r.detail = "scalar semiring " + s.ring()->name() + " is not a ring";
    return r;
  }
  for (std::size_t z = 0; z < s.size(); ++z) {
    const bool lhs = !cond8a_violation(s, t, z).has_value();
    const auto v1 = right_identity_violation(s, z);
    const auto v9 = cond9_violation(s, z);
    const bool rhs = !v1 && !v9;
    if (lhs == rhs) continue;
    r.status = LemmaStatus::counterexample;
    r.structure_dump = s.dump();
    if (lhs) {
      const std::size_t x = v1 ? *v1 : *v9;
      r.detail = std::string("0x = ") + s.label(z) + " for all x, but condition (" +
                 (v1 ? "1" : "9") + ") fails at x = " + s.label(x);
      r.witness = elem_witness({{"x", x}, {"zero", z}});
    } else {
      const std::size_t x = *cond8a_violation(s, t, z);
      r.detail = "conditions (1) and (9) hold with zero = " + s.label(z) +
                 ", but 0x != zero at x = " + s.label(x);
      r.witness = elem_witness({{"x", x}, {"zero", z}});
    }
    return r;
  }
  r.status = LemmaStatus::holds;
  r.detail = "equivalence verified for every candidate zero";
  return r;
}

LemmaReport lemma_a_zero(const FiniteStructure& s) {
  const ScalarTables t(*s.ring());
  LemmaReport r;
  if (int k = first_failing_2_to_7(s, t)) {
    r.status = LemmaStatus::premise_not_met;
    r.detail = "condition (" + std::to_string(k) + ") fails";
    return r;
  }
  std::vector<std::size_t> zeros;
  for (std::size_t z = 0; z < s.size(); ++z)
    if (!right_identity_violation(s, z) && !cond9_violation(s, z)) zeros.push_back(z);
  if (zeros.empty()) {
    r.status = LemmaStatus::premise_not_met;
    r.detail = "no element satisfies conditions (1) and (9)";
    return r;
  }
  for (std::size_t z : zeros) {
    if (auto a = cond8b_violation(s, t, z)) {
      r.status = LemmaStatus::counterexample;
      r.detail = "a0 != 0 at a = " + s.ring()->element(*a).str() + ", zero = " + s.label(z);
      r.witness = elem_witness({{"zero", z}}, {{"a", *a}});
      r.structure_dump = s.dump();
      return r;
    }
  }
  r.status = LemmaStatus::holds;
  r.detail = "a0 = 0 for every scalar and every qualifying zero";
  return r;
}

LemmaReport lemma_commutativity_derivable(const FiniteStructure& s) {
  LemmaReport r;
  if (!check_ring(s.ring()).is_ring) {
    r.status = LemmaStatus::premise_not_applicable;
    r.detail = "scalar semiring " + s.ring()->name() + " is not a ring";
    return r;
  }
  const ScalarTables t(*s.ring());
  if (!check_condition_2(s).pass || !check_condition_4(s, t).pass ||
      !check_condition_5(s, t).pass || !check_condition_6(s, t).pass ||
      !check_condition_7(s, t).pass) {
    r.status = LemmaStatus::premise_not_met;
    r.detail = "one of conditions (2), (4)-(7) fails";
    return r;
  }
  // candidate zeros must be two-sided identities here
  std::vector<std::size_t> zeros;
  for (std::size_t z = 0; z < s.size(); ++z) {
    bool two_sided = true;
    for (std::size_t x = 0; x < s.size() && two_sided; ++x)
      two_sided = s.add(x, z) == x && s.add(z, x) == x;
    if (two_sided && !cond8a_violation(s, t, z) && !cond8b_violation(s, t, z) &&
        !cond9_violation(s, z))
      zeros.push_back(z);
  }
  if (zeros.empty()) {
    r.status = LemmaStatus::premise_not_met;
    r.detail = "no two-sided identity satisfies conditions (8) and (9)";
    return r;
  }
  if (auto c3 = check_condition_3(s); !c3.pass) {
    r.status = LemmaStatus::counterexample;
    r.detail = "commutativity fails despite the premise";
    r.witness = c3.witness;
    r.structure_dump = s.dump();
    return r;
  }
  r.status = LemmaStatus::holds;
  r.detail = "commutativity follows as the footnote derives";
  return r;
}

// ---------------------------------------------------------------------------
// Structure enumeration

Int StructureEnumerator::total_count(std::size_t carrier_size, std::size_t ring_size) {
  Int total;
  const unsigned long exponent =
      static_cast<unsigned long>(carrier_size * carrier_size + ring_size * carrier_size);
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(carrier_size), exponent);
  return total;
}

StructureEnumerator::StructureEnumerator(SemiringPtr ring, std::size_t carrier_size,
                                         const Int& budget)
    : ring_(std::move(ring)), n_(carrier_size) {
  if (!ring_->is_finite()) throw Error("enumeration requires a finite semiring");
  if (n_ == 0) throw Error("carrier size must be positive");
  const std::size_t m = ring_->carrier_size();
  total_ = total_count(n_, m);
  if (total_ > budget)
    throw BudgetError("enumeration of " + total_.get_str() + " structures exceeds budget " +
                          budget.get_str(),
                      total_);
  for (std::size_t i = 0; i < n_; ++i) labels_.push_back("x" + std::to_string(i));
  digits_.assign(n_ * n_ + m * n_, 0);
}

std::optional<FiniteStructure> StructureEnumerator::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    // odometer increment, last digit fastest
    std::size_t i = digits_.size();
    while (i > 0) {
      --i;
      if (++digits_[i] < n_) break;
      digits_[i] = 0;
      if (i == 0) {
        done_ = true;
        return std::nullopt;
      }
    }
  }
  first_ = false;
  std::vector<std::size_t> add(digits_.begin(),
                               digits_.begin() + static_cast<std::ptrdiff_t>(n_ * n_));
  std::vector<std::size_t> action(digits_.begin() + static_cast<std::ptrdiff_t>(n_ * n_),
                                  digits_.end());
  return FiniteStructure(ring_, labels_, std::move(add), std::move(action));
}

}  // namespace freemod
