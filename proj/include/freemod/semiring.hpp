#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace freemod {

/// Exact unbounded integer / rational scalars (GMP-backed).
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to two different scalar systems.
class DomainMismatchError : public Error {
 public:
  explicit DomainMismatchError(const std::string& msg) : Error(msg) {}
};

class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// An enumeration or search would exceed the configured budget.
/// `count` is the number of candidates that would have been generated.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& msg, Int n) : Error(msg), count(std::move(n)) {}
  Int count;
};

enum class BuiltinKind {
  gfp,
  integers,
  rationals,
  nonneg_rationals,
  boolean,
  tropical_min_plus,
  naturals,
};

/// Cayley-table presentation of a finite scalar system. Tables are
/// row-major: add[i * n + j] is the index of carrier[i] + carrier[j].
struct TableData {
  std::vector<std::string> labels;
  std::vector<std::size_t> add;
  std::vector<std::size_t> mul;
  std::size_t zero = 0;
  std::size_t one = 0;
};

/// Carrier element of a table semiring, stored by index.
struct TableElem {
  std::size_t index = 0;
  auto operator<=>(const TableElem&) const = default;
};

/// The +infinity element of the tropical min-plus semiring.
struct TropicalInf {
  auto operator<=>(const TropicalInf&) const = default;
};

using ScalarValue = std::variant<bool, Int, Rat, TropicalInf, TableElem>;

class Semiring;
using SemiringPtr = std::shared_ptr<const Semiring>;

/// An element of a fixed semiring. Immutable; carries a reference to the
/// semiring it belongs to. Two scalars compare equal iff their semirings
/// are structurally equal and their values coincide.
class Scalar {
 public:
  const SemiringPtr& ring() const { return ring_; }
  const ScalarValue& value() const { return value_; }

  bool is_zero() const;
  bool is_one() const;

  /// Canonical textual form, also accepted by Semiring::parse.
  std::string str() const;

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

 private:
  friend class Semiring;
  Scalar(SemiringPtr ring, ScalarValue value)
      : ring_(std::move(ring)), value_(std::move(value)) {}

  SemiringPtr ring_;
  ScalarValue value_;
};

/// A scalar system: one of the exact built-in semirings, or a finite
/// semiring given by Cayley tables. Construction validates shape only
/// (closure, index ranges, primality of p); whether the tables actually
/// satisfy the semiring laws is the job of check_semiring_axioms.
class Semiring : public std::enable_shared_from_this<Semiring> {
 public:
  static SemiringPtr gfp(const Int& p);
  static SemiringPtr integers();
  static SemiringPtr rationals();
  static SemiringPtr nonneg_rationals();
  static SemiringPtr boolean();
  static SemiringPtr tropical_min_plus();
  static SemiringPtr naturals();
  static SemiringPtr from_table(TableData table);

  /// Builtin by its canonical name, e.g. "gf(5)", "boolean". Unknown
  /// names yield nullptr.
  static SemiringPtr builtin_by_name(std::string_view name);

  bool is_table() const { return kind_ == Kind::table; }
  bool is_builtin() const { return kind_ == Kind::builtin; }
  BuiltinKind builtin_kind() const;
  const TableData& table() const;
  const Int& characteristic_p() const;  // pre: builtin gfp

  /// Canonical display name: "gf(5)", "integers", "table[4]", ...
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;

  /// Semiring sum / product. Throws DomainMismatchError unless both
  /// operands belong to this semiring. Always exact.
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;

  bool is_finite() const;
  std::size_t carrier_size() const;          // pre: finite
  Scalar element(std::size_t index) const;   // pre: finite
  std::size_t index_of(const Scalar& a) const;

  Scalar from_int(const Int& v) const;
  Scalar from_rational(const Int& num, const Int& den) const;
  Scalar tropical_infinity() const;  // pre: tropical-min-plus
  Scalar table_element(std::size_t index) const;

  /// Parses the canonical textual form of an element. Throws Error on
  /// malformed input or values outside the carrier.
  Scalar parse(std::string_view text) const;

  /// Structural equality of scalar systems.
  bool same(const Semiring& other) const;

  bool owns(const Scalar& a) const;

 private:
  enum class Kind { builtin, table };

  Scalar make(ScalarValue v) const;
  void require_owned(const Scalar& a) const;

  Kind kind_ = Kind::builtin;
  BuiltinKind builtin_ = BuiltinKind::integers;
  Int prime_ = 0;  // gfp only
  TableData table_;
};

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b);

/// Semiring sum of two scalars of the same semiring.
Scalar scalar_add(const Scalar& a, const Scalar& b);
/// Semiring product of two scalars of the same semiring.
Scalar scalar_mul(const Scalar& a, const Scalar& b);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_add(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_mul(a, b); }

enum class CheckMode { exhaustive, sampled };

struct ScalarTriple {
  Scalar a, b, c;
};

struct SemiringConditionResult {
  bool pass = true;
  std::optional<ScalarTriple> witness;  // lexicographically least failure
};

/// Names of the eight semiring conditions, index 0 holding condition (1).
extern const std::array<const char*, 8> kSemiringConditionLaws;
/// How many of the variables a, b, c each condition mentions.
extern const std::array<int, 8> kSemiringConditionArity;

/// Outcome of checking the eight semiring conditions. `mode` records
/// whether the check enumerated the whole carrier or only a sample;
/// sampled runs are smoke tests, never proofs.
struct SemiringAxiomReport {
  CheckMode mode = CheckMode::exhaustive;
  std::array<SemiringConditionResult, 8> conditions;

  bool all_pass() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
};

/// Checks conditions (1)-(8) on `ring`. Finite carriers are checked
/// exhaustively and `sample` is ignored; infinite builtins require a
/// non-empty sample of elements of `ring`.
SemiringAxiomReport check_semiring_axioms(const SemiringPtr& ring,
                                          const std::vector<Scalar>& sample = {});

struct RingReport {
  CheckMode mode = CheckMode::exhaustive;
  bool is_ring = false;
  std::optional<Scalar> witness;  // element with no additive inverse
};

struct FieldReport {
  CheckMode mode = CheckMode::exhaustive;
  bool is_field = false;
  RingReport ring;
  std::optional<Scalar> witness;  // first offending element (or pair lhs)
  std::string reason;             // empty iff is_field
};

/// Does every element have an additive inverse? Exhaustive for finite
/// carriers, answered from the known classification for builtins.
RingReport check_ring(const SemiringPtr& ring);

/// Ring + commutative multiplication + multiplicative inverses for all
/// nonzero elements + 0 != 1.
FieldReport check_field(const SemiringPtr& ring);

}  // namespace freemod
