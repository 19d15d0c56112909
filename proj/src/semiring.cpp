#include "freemod/semiring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freemod {

namespace {

const char* builtin_name(BuiltinKind k) {
  switch (k) {
    case BuiltinKind::gfp: return "gf";
    case BuiltinKind::integers: return "integers";
    case BuiltinKind::rationals: return "rationals";
    case BuiltinKind::nonneg_rationals: return "nonneg-rationals";
    case BuiltinKind::boolean: return "boolean";
    case BuiltinKind::tropical_min_plus: return "tropical-min-plus";
    case BuiltinKind::naturals: return "naturals";
  }
  return "?";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int parse_int(std::string_view text) {
  try {
    return Int(std::string(text));
  } catch (const std::invalid_argument&) {
    throw Error("not an integer: '" + std::string(text) + "'");
  }
}

}  // namespace

const std::array<const char*, 8> kSemiringConditionLaws = {
    "a + 0 = a",
    "a + (b + c) = (a + b) + c",
    "a + b = b + a",
    "1a = a = a1",
    "a(bc) = (ab)c",
    "a(b + c) = ab + ac",
    "(a + b)c = ac + bc",
    "0a = 0 = a0",
};

const std::array<int, 8> kSemiringConditionArity = {1, 3, 2, 1, 3, 3, 3, 1};

// ---------------------------------------------------------------------------
// Scalar

bool Scalar::is_zero() const { return *this == ring_->zero(); }
bool Scalar::is_one() const { return *this == ring_->one(); }

bool Scalar::operator==(const Scalar& other) const {
  if (ring_.get() != other.ring_.get() && !ring_->same(*other.ring_)) return false;
  return value_ == other.value_;
}

std::string Scalar::str() const {
  struct Renderer {
    const Semiring* ring;
    std::string operator()(bool b) const { return b ? "1" : "0"; }
    std::string operator()(const Int& v) const { return v.get_str(); }
    std::string operator()(const Rat& v) const { return v.get_str(); }
    std::string operator()(const TropicalInf&) const { return "inf"; }
    std::string operator()(const TableElem& e) const { return ring->table().labels.at(e.index); }
  };
  return std::visit(Renderer{ring_.get()}, value_);
}

// ---------------------------------------------------------------------------
// Semiring factories

SemiringPtr Semiring::gfp(const Int& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw Error("gf(p) requires p prime, got " + p.get_str());
  auto r = std::make_shared<Semiring>();
  r->kind_ = Kind::builtin;
  r->builtin_ = BuiltinKind::gfp;
  r->prime_ = p;
  return r;
}

SemiringPtr Semiring::integers() {
  auto r = std::make_shared<Semiring>();
  r->builtin_ = BuiltinKind::integers;
  return r;
}
SemiringPtr Semiring::rationals() {
  auto r = std::make_shared<Semiring>();
  r->builtin_ = BuiltinKind::rationals;
  return r;
}
SemiringPtr Semiring::nonneg_rationals() {
  auto r = std::make_shared<Semiring>();
  r->builtin_ = BuiltinKind::nonneg_rationals;
  return r;
}
SemiringPtr Semiring::boolean() {
  auto r = std::make_shared<Semiring>();
  r->builtin_ = BuiltinKind::boolean;
  return r;
}
SemiringPtr Semiring::tropical_min_plus() {
  auto r = std::make_shared<Semiring>();
  r->builtin_ = BuiltinKind::tropical_min_plus;
  return r;
}
SemiringPtr Semiring::naturals() {
  auto r = std::make_shared<Semiring>();
  r->builtin_ = BuiltinKind::naturals;
  return r;
}

SemiringPtr Semiring::from_table(TableData table) {
  const std::size_t n = table.labels.size();
  if (n == 0) throw Error("table semiring needs a non-empty carrier");
  std::set<std::string> seen;
  for (const auto& l : table.labels) {
    if (l.empty()) throw Error("table semiring labels must be non-empty");
    if (!seen.insert(l).second) throw Error("duplicate carrier label '" + l + "'");
  }
  if (table.add.size() != n * n)
    throw Error("add table must have " + std::to_string(n * n) + " entries");
  if (table.mul.size() != n * n)
    throw Error("mul table must have " + std::to_string(n * n) + " entries");
  for (std::size_t v : table.add)
    if (v >= n) throw Error("add table entry out of range");
  for (std::size_t v : table.mul)
    if (v >= n) throw Error("mul table entry out of range");
  if (table.zero >= n) throw Error("zero index out of range");
  if (table.one >= n) throw Error("one index out of range");
  auto r = std::make_shared<Semiring>();
  r->kind_ = Kind::table;
  r->table_ = std::move(table);
  return r;
}

SemiringPtr Semiring::builtin_by_name(std::string_view name) {
  if (name == "integers") return integers();
  if (name == "rationals") return rationals();
  if (name == "nonneg-rationals") return nonneg_rationals();
  if (name == "boolean") return boolean();
  if (name == "tropical-min-plus") return tropical_min_plus();
  if (name == "naturals") return naturals();
  if (name.size() > 4 && name.substr(0, 3) == "gf(" && name.back() == ')') {
    auto inside = name.substr(3, name.size() - 4);
    return gfp(parse_int(inside));
  }
  return nullptr;
}

BuiltinKind Semiring::builtin_kind() const {
  if (!is_builtin()) throw Error("not a builtin semiring");
  return builtin_;
}

const TableData& Semiring::table() const {
  if (!is_table()) throw Error("not a table semiring");
  return table_;
}

const Int& Semiring::characteristic_p() const {
  if (!is_builtin() || builtin_ != BuiltinKind::gfp) throw Error("not gf(p)");
  return prime_;
}

std::string Semiring::name() const {
  if (is_table()) return "table[" + std::to_string(table_.labels.size()) + "]";
  if (builtin_ == BuiltinKind::gfp) return "gf(" + prime_.get_str() + ")";
  return builtin_name(builtin_);
}

// ---------------------------------------------------------------------------
// Identities and arithmetic

Scalar Semiring::make(ScalarValue v) const {
  return Scalar(shared_from_this(), std::move(v));
}

Scalar Semiring::zero() const {
  if (is_table()) return make(TableElem{table_.zero});
  switch (builtin_) {
    case BuiltinKind::gfp:
    case BuiltinKind::integers:
    case BuiltinKind::naturals: return make(Int(0));
    case BuiltinKind::rationals:
    case BuiltinKind::nonneg_rationals: return make(Rat(0));
    case BuiltinKind::boolean: return make(false);
    case BuiltinKind::tropical_min_plus: return make(TropicalInf{});
  }
  throw Error("unreachable");
}

Scalar Semiring::one() const {
  if (is_table()) return make(TableElem{table_.one});
  switch (builtin_) {
    case BuiltinKind::gfp:
    case BuiltinKind::integers:
    case BuiltinKind::naturals: return make(Int(1));
    case BuiltinKind::rationals:
    case BuiltinKind::nonneg_rationals: return make(Rat(1));
    case BuiltinKind::boolean: return make(true);
    case BuiltinKind::tropical_min_plus: return make(Int(0));
  }
  throw Error("unreachable");
}

bool Semiring::owns(const Scalar& a) const {
  return a.ring().get() == this || a.ring()->same(*this);
}

void Semiring::require_owned(const Scalar& a) const {
  if (!owns(a))
    throw DomainMismatchError("scalar from " + a.ring()->name() +
                              " used in " + name());
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  require_owned(a);
  require_owned(b);
  if (is_table()) {
    const auto& x = std::get<TableElem>(a.value());
    const auto& y = std::get<TableElem>(b.value());
    return make(TableElem{table_.add[x.index * table_.labels.size() + y.index]});
  }
  switch (builtin_) {
    case BuiltinKind::gfp: {
      Int s = std::get<Int>(a.value()) + std::get<Int>(b.value());
      mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), prime_.get_mpz_t());
      return make(std::move(s));
    }
    case BuiltinKind::integers:
    case BuiltinKind::naturals:
      return make(Int(std::get<Int>(a.value()) + std::get<Int>(b.value())));
    case BuiltinKind::rationals:
    case BuiltinKind::nonneg_rationals:
      return make(Rat(std::get<Rat>(a.value()) + std::get<Rat>(b.value())));
    case BuiltinKind::boolean:
      return make(std::get<bool>(a.value()) || std::get<bool>(b.value()));
    case BuiltinKind::tropical_min_plus: {
      // min; +infinity is the additive identity
      if (std::holds_alternative<TropicalInf>(a.value())) return b;
      if (std::holds_alternative<TropicalInf>(b.value())) return a;
      return make(std::min(std::get<Int>(a.value()), std::get<Int>(b.value())));
    }
  }
  throw Error("unreachable");
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  require_owned(a);
  require_owned(b);
  if (is_table()) {
    const auto& x = std::get<TableElem>(a.value());
    const auto& y = std::get<TableElem>(b.value());
    return make(TableElem{table_.mul[x.index * table_.labels.size() + y.index]});
  }
  switch (builtin_) {
    case BuiltinKind::gfp: {
      Int s = std::get<Int>(a.value()) * std::get<Int>(b.value());
      mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), prime_.get_mpz_t());
      return make(std::move(s));
    }
    case BuiltinKind::integers:
    case BuiltinKind::naturals:
      return make(Int(std::get<Int>(a.value()) * std::get<Int>(b.value())));
    case BuiltinKind::rationals:
    case BuiltinKind::nonneg_rationals:
      return make(Rat(std::get<Rat>(a.value()) * std::get<Rat>(b.value())));
    case BuiltinKind::boolean:
      return make(std::get<bool>(a.value()) && std::get<bool>(b.value()));
    case BuiltinKind::tropical_min_plus: {
      // integer addition; +infinity absorbs
      if (std::holds_alternative<TropicalInf>(a.value()) ||
          std::holds_alternative<TropicalInf>(b.value()))
        return make(TropicalInf{});
      return make(Int(std::get<Int>(a.value()) + std::get<Int>(b.value())));
    }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Finite carriers

bool Semiring::is_finite() const {
  if (is_table()) return true;
  return builtin_ == BuiltinKind::gfp || builtin_ == BuiltinKind::boolean;
}

std::size_t Semiring::carrier_size() const {
  if (is_table()) return table_.labels.size();
  if (builtin_ == BuiltinKind::boolean) return 2;
  if (builtin_ == BuiltinKind::gfp) {
    if (!prime_.fits_ulong_p()) throw Error("carrier too large to enumerate");
    return static_cast<std::size_t>(prime_.get_ui());
  }
  throw Error(name() + " has an infinite carrier");
}

Scalar Semiring::element(std::size_t index) const {
  if (index >= carrier_size()) throw Error("carrier index out of range");
  if (is_table()) return make(TableElem{index});
  if (builtin_ == BuiltinKind::boolean) return make(index != 0);
  return make(Int(static_cast<unsigned long>(index)));  // gfp
}

std::size_t Semiring::index_of(const Scalar& a) const {
  require_owned(a);
  if (is_table()) return std::get<TableElem>(a.value()).index;
  if (builtin_ == BuiltinKind::boolean) return std::get<bool>(a.value()) ? 1 : 0;
  if (builtin_ == BuiltinKind::gfp) {
    const Int& v = std::get<Int>(a.value());
    return static_cast<std::size_t>(v.get_ui());
  }
  throw Error(name() + " has an infinite carrier");
}

// ---------------------------------------------------------------------------
// Element construction and parsing

Scalar Semiring::from_int(const Int& v) const {
  if (is_table()) throw Error("table semiring elements are indexed by label");
  switch (builtin_) {
    case BuiltinKind::gfp: {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), prime_.get_mpz_t());
      return make(std::move(r));
    }
    case BuiltinKind::integers: return make(v);
    case BuiltinKind::naturals:
      if (v < 0) throw Error(v.get_str() + " is not a natural number");
      return make(v);
    case BuiltinKind::rationals: return make(Rat(v));
    case BuiltinKind::nonneg_rationals:
      if (v < 0) throw Error(v.get_str() + " is negative");
      return make(Rat(v));
    case BuiltinKind::boolean:
      if (v == 0) return make(false);
      if (v == 1) return make(true);
      throw Error("boolean elements are 0 and 1");
    case BuiltinKind::tropical_min_plus: return make(v);
  }
  throw Error("unreachable");
}

Scalar Semiring::from_rational(const Int& num, const Int& den) const {
  Rat q = make_rat(num, den);
  if (builtin_ == BuiltinKind::rationals) return make(std::move(q));
  if (builtin_ == BuiltinKind::nonneg_rationals) {
    if (q < 0) throw Error(q.get_str() + " is negative");
    return make(std::move(q));
  }
  if (q.get_den() == 1) return from_int(q.get_num());
  throw Error(name() + " has no element " + q.get_str());
}

Scalar Semiring::tropical_infinity() const {
  if (is_builtin() && builtin_ == BuiltinKind::tropical_min_plus) return make(TropicalInf{});
  throw Error(name() + " has no infinity element");
}

Scalar Semiring::table_element(std::size_t index) const {
  if (!is_table()) throw Error("not a table semiring");
  if (index >= table_.labels.size()) throw Error("carrier index out of range");
  return make(TableElem{index});
}

Scalar Semiring::parse(std::string_view text) const {
  if (text.empty()) throw Error("empty scalar literal");
  if (is_table()) {
    auto it = std::find(table_.labels.begin(), table_.labels.end(), std::string(text));
    if (it == table_.labels.end())
      throw Error("unknown element label '" + std::string(text) + "'");
    return make(TableElem{static_cast<std::size_t>(it - table_.labels.begin())});
  }
  switch (builtin_) {
    case BuiltinKind::boolean:
      if (text == "0") return make(false);
      if (text == "1") return make(true);
      throw Error("boolean elements are 0 and 1");
    case BuiltinKind::tropical_min_plus:
      if (text == "inf") return make(TropicalInf{});
      return make(parse_int(text));
    case BuiltinKind::rationals:
    case BuiltinKind::nonneg_rationals: {
      auto slash = text.find('/');
      if (slash == std::string_view::npos) return from_rational(parse_int(text), 1);
      return from_rational(parse_int(text.substr(0, slash)),
                           parse_int(text.substr(slash + 1)));
    }
    default:
      return from_int(parse_int(text));
  }
}

bool Semiring::same(const Semiring& other) const {
  if (kind_ != other.kind_) return false;
  if (is_table()) {
    return table_.labels == other.table_.labels && table_.add == other.table_.add &&
           table_.mul == other.table_.mul && table_.zero == other.table_.zero &&
           table_.one == other.table_.one;
  }
  if (builtin_ != other.builtin_) return false;
  if (builtin_ == BuiltinKind::gfp) return prime_ == other.prime_;
  return true;
}

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b) {
  return a.get() == b.get() || a->same(*b);
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a.ring()->add(a, b); }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a.ring()->mul(a, b); }

// ---------------------------------------------------------------------------
// Axiom checking

namespace {

// Evaluates semiring condition `idx` (0-based) at a triple.
bool holds_at(const Semiring& R, int idx, const Scalar& a, const Scalar& b, const Scalar& c) {
  const Scalar zero = R.zero();
  const Scalar one = R.one();
  switch (idx) {
    case 0: return R.add(a, zero) == a;
    case 1: return R.add(a, R.add(b, c)) == R.add(R.add(a, b), c);
    case 2: return R.add(a, b) == R.add(b, a);
    case 3: return R.mul(one, a) == a && R.mul(a, one) == a;
    case 4: return R.mul(a, R.mul(b, c)) == R.mul(R.mul(a, b), c);
    case 5: return R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c));
    case 6: return R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c));
    case 7: return R.mul(zero, a) == zero && R.mul(a, zero) == zero;
  }
  throw Error("unreachable");
}

}  // namespace

SemiringAxiomReport check_semiring_axioms(const SemiringPtr& ring,
                                          const std::vector<Scalar>& sample) {
  SemiringAxiomReport report;
  std::vector<Scalar> elems;
  if (ring->is_finite()) {
    report.mode = CheckMode::exhaustive;
    elems.reserve(ring->carrier_size());
    for (std::size_t i = 0; i < ring->carrier_size(); ++i) elems.push_back(ring->element(i));
  } else {
    if (sample.empty())
      throw PreconditionError("a non-empty sample is required to probe " + ring->name());
    report.mode = CheckMode::sampled;
    for (const auto& s : sample) {
      if (!ring->owns(s)) throw DomainMismatchError("sample scalar not in " + ring->name());
      elems.push_back(s);
    }
  }

  const std::size_t n = elems.size();
  for (int cond = 0; cond < 8; ++cond) {
    auto& out = report.conditions[static_cast<std::size_t>(cond)];
    const int arity = kSemiringConditionArity[static_cast<std::size_t>(cond)];
    for (std::size_t ia = 0; ia < n && out.pass; ++ia)
      for (std::size_t ib = 0; ib < (arity >= 2 ? n : 1) && out.pass; ++ib)
        for (std::size_t ic = 0; ic < (arity >= 3 ? n : 1) && out.pass; ++ic) {
          const Scalar& a = elems[ia];
          const Scalar& b = elems[arity >= 2 ? ib : 0];
          const Scalar& c = elems[arity >= 3 ? ic : 0];
          if (!holds_at(*ring, cond, a, b, c)) {
            out.pass = false;
            out.witness = ScalarTriple{a, b, c};
          }
        }
  }
  return report;
}

RingReport check_ring(const SemiringPtr& ring) {
  RingReport report;
  if (ring->is_finite()) {
    report.mode = CheckMode::exhaustive;
    report.is_ring = true;
    const Scalar zero = ring->zero();
    const std::size_t n = ring->carrier_size();
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar a = ring->element(i);
      bool has_inverse = false;
      for (std::size_t j = 0; j < n && !has_inverse; ++j)
        has_inverse = ring->add(a, ring->element(j)) == zero;
      if (!has_inverse) {
        report.is_ring = false;
        report.witness = a;
        break;
      }
    }
    return report;
  }
  report.mode = CheckMode::exhaustive;  // classification, not sampling
  switch (ring->builtin_kind()) {
    case BuiltinKind::integers:
    case BuiltinKind::rationals:
      report.is_ring = true;
      break;
    case BuiltinKind::nonneg_rationals:
    case BuiltinKind::naturals:
    case BuiltinKind::tropical_min_plus:
      report.is_ring = false;
      report.witness = ring->one();  // the unit has no additive inverse
      break;
    default:
      throw Error("unreachable");
  }
  return report;
}

FieldReport check_field(const SemiringPtr& ring) {
  FieldReport report;
  report.ring = check_ring(ring);
  report.mode = report.ring.mode;
  if (!report.ring.is_ring) {
    report.is_field = false;
    report.witness = report.ring.witness;
    report.reason = "not a ring";
    return report;
  }
  if (ring->is_finite()) {
    const Scalar zero = ring->zero();
    const Scalar one = ring->one();
    if (zero == one) {
      report.reason = "0 = 1";
      return report;
    }
    const std::size_t n = ring->carrier_size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar a = ring->element(i), b = ring->element(j);
        if (ring->mul(a, b) != ring->mul(b, a)) {
          report.witness = a;
          report.reason = "multiplication not commutative at (" + a.str() + ", " + b.str() + ")";
          return report;
        }
      }
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar a = ring->element(i);
      if (a == zero) continue;
      bool has_inverse = false;
      for (std::size_t j = 0; j < n && !has_inverse; ++j) {
        const Scalar b = ring->element(j);
        has_inverse = ring->mul(a, b) == one && ring->mul(b, a) == one;
      }
      if (!has_inverse) {
        report.witness = a;
        report.reason = "no multiplicative inverse for " + a.str();
        return report;
      }
    }
    report.is_field = true;
    return report;
  }
  switch (ring->builtin_kind()) {
    case BuiltinKind::rationals:
      report.is_field = true;
      break;
    case BuiltinKind::integers:
      report.is_field = false;
      report.witness = ring->from_int(2);
      report.reason = "no multiplicative inverse for 2";
      break;
    default:
      throw Error("unreachable");
  }
  return report;
}

}  // namespace freemod
