#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freemod/format.hpp"
#include "freemod/freeness.hpp"
#include "freemod/linmap.hpp"
#include "freemod/semiring.hpp"
#include "freemod/structures.hpp"
#include "freemod/vectors.hpp"

namespace py = pybind11;
using namespace freemod;

namespace {

// pybind11 holders are non-const shared_ptr; the API hands out
// shared_ptr<const T>. Everything bound here is immutable, so shedding
// the const qualifier for the holder is harmless.
std::shared_ptr<Semiring> mut(const SemiringPtr& p) {
  return std::const_pointer_cast<Semiring>(p);
}
std::shared_ptr<FiniteStructure> mut(const StructurePtr& p) {
  return std::const_pointer_cast<FiniteStructure>(p);
}

}  // namespace

PYBIND11_MODULE(_freemod, m) {
  m.doc() = "semiring-generic free semimodule toolkit";

  auto err = py::register_exception<Error>(m, "FreemodError");
  py::register_exception<DomainMismatchError>(m, "DomainMismatchError", err);
  py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", err);
  py::register_exception<PreconditionError>(m, "PreconditionError", err);
  py::register_exception<BudgetError>(m, "BudgetError", err);
  py::register_exception<ParseError>(m, "FileParseError", err);

  py::enum_<CheckMode>(m, "CheckMode")
      .value("exhaustive", CheckMode::exhaustive)
      .value("sampled", CheckMode::sampled);
  py::enum_<TriState>(m, "TriState")
      .value("unchecked", TriState::unchecked)
      .value("yes", TriState::yes)
      .value("no", TriState::no);
  py::enum_<IsoStatus>(m, "IsoStatus")
      .value("isomorphic", IsoStatus::isomorphic)
      .value("not_isomorphic", IsoStatus::not_isomorphic)
      .value("undecided_budget", IsoStatus::undecided_budget);
  py::enum_<FreenessStatus>(m, "FreenessStatus")
      .value("free_with_basis", FreenessStatus::free_with_basis)
      .value("not_free", FreenessStatus::not_free)
      .value("undecided_budget", FreenessStatus::undecided_budget);
  py::enum_<LemmaStatus>(m, "LemmaStatus")
      .value("premise_not_met", LemmaStatus::premise_not_met)
      .value("premise_not_applicable", LemmaStatus::premise_not_applicable)
      .value("holds", LemmaStatus::holds)
      .value("counterexample", LemmaStatus::counterexample);

  py::class_<Scalar>(m, "Scalar")
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("is_zero", &Scalar::is_zero)
      .def("is_one", &Scalar::is_one)
      .def_property_readonly("ring", [](const Scalar& s) { return mut(s.ring()); });

  py::class_<Semiring, std::shared_ptr<Semiring>>(m, "Semiring")
      .def_static("gfp", [](long p) { return mut(Semiring::gfp(p)); }, py::arg("p"))
      .def_static("integers", [] { return mut(Semiring::integers()); })
      .def_static("rationals", [] { return mut(Semiring::rationals()); })
      .def_static("nonneg_rationals", [] { return mut(Semiring::nonneg_rationals()); })
      .def_static("boolean", [] { return mut(Semiring::boolean()); })
      .def_static("tropical_min_plus", [] { return mut(Semiring::tropical_min_plus()); })
      .def_static("naturals", [] { return mut(Semiring::naturals()); })
      .def_static(
          "from_table",
          [](std::vector<std::string> labels, std::vector<std::size_t> add,
             std::vector<std::size_t> mul, std::size_t zero, std::size_t one) {
            TableData t{std::move(labels), std::move(add), std::move(mul), zero, one};
            return mut(Semiring::from_table(std::move(t)));
          },
          py::arg("labels"), py::arg("add"), py::arg("mul"), py::arg("zero"), py::arg("one"))
      .def_static("by_name",
                  [](const std::string& name) {
                    auto r = Semiring::builtin_by_name(name);
                    return r ? mut(r) : nullptr;
                  })
      .def("__repr__", [](const Semiring& r) { return "Semiring(" + r.name() + ")"; })
      .def("name", &Semiring::name)
      .def("zero", &Semiring::zero)
      .def("one", &Semiring::one)
      .def("add", &Semiring::add)
      .def("mul", &Semiring::mul)
      .def("is_finite", &Semiring::is_finite)
      .def("carrier_size", &Semiring::carrier_size)
      .def("element", &Semiring::element)
      .def("index_of", &Semiring::index_of)
      .def("from_int", [](const Semiring& r, long v) { return r.from_int(v); })
      .def("from_rational",
           [](const Semiring& r, long num, long den) { return r.from_rational(num, den); })
      .def("infinity", &Semiring::tropical_infinity)
      .def("parse", [](const Semiring& r, const std::string& s) { return r.parse(s); })
      .def("same", &Semiring::same);

  py::class_<DenseVec>(m, "DenseVec")
      .def(py::init([](std::shared_ptr<Semiring> ring, std::vector<Scalar> entries) {
             return DenseVec(std::move(ring), std::move(entries));
           }),
           py::arg("ring"), py::arg("entries"))
      .def_static("zeros",
                  [](std::shared_ptr<Semiring> ring, std::size_t n) {
                    return DenseVec::zeros(std::move(ring), n);
                  })
      .def("__str__", &DenseVec::str)
      .def("__repr__", [](const DenseVec& v) { return "DenseVec(" + v.str() + ")"; })
      .def("__eq__", [](const DenseVec& a, const DenseVec& b) { return a == b; })
      .def("__len__", &DenseVec::dim)
      .def("__getitem__", [](const DenseVec& v, std::size_t i) {
        if (i >= v.dim()) throw py::index_error();
        return v[i];
      })
      .def("__add__", &dense_add)
      .def("__rmul__", [](const DenseVec& v, const Scalar& a) { return dense_scale(a, v); });

  py::class_<FinSupp>(m, "FinSupp")
      .def(py::init([](std::shared_ptr<Semiring> ring) { return FinSupp(std::move(ring)); }))
      .def(py::init([](std::shared_ptr<Semiring> ring,
                       std::vector<std::pair<Key, Scalar>> entries) {
             return FinSupp(std::move(ring), entries);
           }),
           py::arg("ring"), py::arg("entries"))
      .def("__str__", &FinSupp::str)
      .def("__repr__", [](const FinSupp& v) { return "FinSupp(" + v.str() + ")"; })
      .def("__eq__", [](const FinSupp& a, const FinSupp& b) { return a == b; })
      .def("__len__", &FinSupp::support_size)
      .def("at", &FinSupp::at)
      .def("items",
           [](const FinSupp& v) {
             std::vector<std::pair<Key, Scalar>> out(v.entries().begin(), v.entries().end());
             return out;
           })
      .def("is_canonical", &FinSupp::is_canonical)
      .def("__add__", &finsupp_add)
      .def("__rmul__", [](const FinSupp& v, const Scalar& a) { return finsupp_scale(a, v); });

  m.def("dense_add", &dense_add);
  m.def("dense_scale", &dense_scale);
  m.def("finsupp_add", &finsupp_add);
  m.def("finsupp_scale", &finsupp_scale);
  m.def("dense_to_finsupp", &dense_to_finsupp);
  m.def("finsupp_to_dense", &finsupp_to_dense, py::arg("s"), py::arg("n"));
  m.def("parse_dense", [](std::shared_ptr<Semiring> ring, const std::string& text) {
    return parse_dense_literal(ring, text);
  });
  m.def("parse_finsupp", [](std::shared_ptr<Semiring> ring, const std::string& text) {
    return parse_finsupp_literal(ring, text);
  });

  py::class_<FiniteStructure, std::shared_ptr<FiniteStructure>>(m, "FiniteStructure")
      .def(py::init([](std::shared_ptr<Semiring> ring, std::vector<std::string> labels,
                       std::vector<std::size_t> add, std::vector<std::size_t> action) {
             return FiniteStructure(std::move(ring), std::move(labels), std::move(add),
                                    std::move(action));
           }),
           py::arg("ring"), py::arg("labels"), py::arg("add"), py::arg("action"))
      .def("__repr__",
           [](const FiniteStructure& s) {
             return "FiniteStructure(" + std::to_string(s.size()) + " elements over " +
                    s.ring()->name() + ")";
           })
      .def("__eq__", [](const FiniteStructure& a, const FiniteStructure& b) { return a == b; })
      .def("__len__", &FiniteStructure::size)
      .def("labels", &FiniteStructure::labels)
      .def("label", &FiniteStructure::label)
      .def("index_of_label", &FiniteStructure::index_of_label)
      .def("add", &FiniteStructure::add)
      .def("act", &FiniteStructure::act)
      .def("dump", &FiniteStructure::dump)
      .def_property_readonly("ring", [](const FiniteStructure& s) { return mut(s.ring()); });

  py::class_<RealizedPower>(m, "RealizedPower")
      .def(py::init([](std::shared_ptr<Semiring> ring, std::size_t dim) {
             return RealizedPower(std::move(ring), dim);
           }),
           py::arg("ring"), py::arg("dim"))
      .def("dim", &RealizedPower::dim)
      .def("zero_index", &RealizedPower::zero_index)
      .def("digits_of", &RealizedPower::digits_of)
      .def("index_of_digits", &RealizedPower::index_of_digits)
      .def_property_readonly("structure",
                             [](const RealizedPower& p) { return mut(p.structure()); });

  py::class_<Witness>(m, "Witness")
      .def_readonly("elems", &Witness::elems)
      .def_readonly("scalars", &Witness::scalars);

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("passed", &ConditionReport::pass)
      .def_readonly("witness", &ConditionReport::witness);

  py::class_<StructureAxiomReport>(m, "StructureAxiomReport")
      .def_readonly("zero_candidates", &StructureAxiomReport::zero_candidates)
      .def_readonly("conditions", &StructureAxiomReport::conditions)
      .def_readonly("standard_zero", &StructureAxiomReport::standard_zero)
      .def("passes_1_to_8", &StructureAxiomReport::passes_1_to_8)
      .def("passes_all", &StructureAxiomReport::passes_all);

  m.def("check_axioms", [](std::shared_ptr<FiniteStructure> s) { return check_axioms(*s); });

  py::class_<LemmaReport>(m, "LemmaReport")
      .def_readonly("status", &LemmaReport::status)
      .def_readonly("detail", &LemmaReport::detail)
      .def_readonly("structure_dump", &LemmaReport::structure_dump);

  m.def("lemma_8_iff_1_and_9",
        [](std::shared_ptr<FiniteStructure> s) { return lemma_8_iff_1_and_9(*s); });
  m.def("lemma_a_zero", [](std::shared_ptr<FiniteStructure> s) { return lemma_a_zero(*s); });
  m.def("lemma_commutativity_derivable",
        [](std::shared_ptr<FiniteStructure> s) { return lemma_commutativity_derivable(*s); });

  py::class_<LinearMapTable>(m, "LinearMapTable")
      .def(py::init([](std::shared_ptr<FiniteStructure> domain,
                       std::shared_ptr<FiniteStructure> codomain,
                       std::vector<std::size_t> table) {
             return LinearMapTable(std::move(domain), std::move(codomain), std::move(table));
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("table"))
      .def("__call__", &LinearMapTable::operator())
      .def("__eq__",
           [](const LinearMapTable& a, const LinearMapTable& b) { return a == b; })
      .def("table", &LinearMapTable::table)
      .def("linear_state", &LinearMapTable::linear_state)
      .def("invertible_state", &LinearMapTable::invertible_state)
      .def("inverse_table", &LinearMapTable::inverse_table)
      .def_property_readonly("domain",
                             [](const LinearMapTable& f) { return mut(f.domain_ptr()); })
      .def_property_readonly("codomain",
                             [](const LinearMapTable& f) { return mut(f.codomain_ptr()); });

  py::class_<LinearityVerdict>(m, "LinearityVerdict")
      .def_readonly("linear", &LinearityVerdict::linear)
      .def_readonly("add_witness", &LinearityVerdict::add_witness)
      .def_readonly("scale_witness", &LinearityVerdict::scale_witness);

  py::class_<InvertibilityVerdict>(m, "InvertibilityVerdict")
      .def_readonly("invertible", &InvertibilityVerdict::invertible)
      .def_readonly("inverse", &InvertibilityVerdict::inverse)
      .def_readonly("collision", &InvertibilityVerdict::collision)
      .def_readonly("missed", &InvertibilityVerdict::missed);

  m.def("check_linear", &check_linear);
  m.def("check_invertible", &check_invertible);
  m.def("verified", &verified);
  m.def("compose", &compose);
  m.def("inverse", &inverse);
  m.def("identity_map",
        [](std::shared_ptr<FiniteStructure> s) { return identity_map(std::move(s)); });

  py::class_<IsoSearchResult>(m, "IsoSearchResult")
      .def_readonly("status", &IsoSearchResult::status)
      .def_readonly("witness", &IsoSearchResult::witness)
      .def_readonly("obstruction", &IsoSearchResult::obstruction)
      .def_readonly("nodes_visited", &IsoSearchResult::nodes_visited);

  m.def(
      "check_isomorphic",
      [](std::shared_ptr<FiniteStructure> x, std::shared_ptr<FiniteStructure> y,
         std::uint64_t budget) { return check_isomorphic(std::move(x), std::move(y), budget); },
      py::arg("x"), py::arg("y"), py::arg("budget") = 1000000);

  py::class_<TransportReport>(m, "TransportReport")
      .def_readonly("codomain_zero", &TransportReport::codomain_zero)
      .def_readonly("transported_zero", &TransportReport::transported_zero)
      .def_readonly("codomain_conditions", &TransportReport::codomain_conditions)
      .def_readonly("domain_conditions", &TransportReport::domain_conditions)
      .def("all_pass", &TransportReport::all_pass);

  m.def("transport_axioms",
        [](std::shared_ptr<FiniteStructure> s, const LinearMapTable& psi,
           const RealizedPower& power) { return transport_axioms(*s, psi, power); });

  py::class_<Basis>(m, "Basis")
      .def_readonly("elements", &Basis::elements)
      .def_readonly("coordinates", &Basis::coordinates)
      .def("rank", &Basis::rank)
      .def_property_readonly("structure", [](const Basis& b) { return mut(b.structure); });

  py::class_<FreenessVerdict>(m, "FreenessVerdict")
      .def_readonly("status", &FreenessVerdict::status)
      .def_readonly("basis", &FreenessVerdict::basis)
      .def_readonly("rank", &FreenessVerdict::rank)
      .def_readonly("certificate", &FreenessVerdict::certificate)
      .def_readonly("axiom_report", &FreenessVerdict::axiom_report)
      .def_readonly("subsets_tried", &FreenessVerdict::subsets_tried);

  m.def(
      "find_basis",
      [](std::shared_ptr<FiniteStructure> s, std::uint64_t budget) {
        return find_basis(s, budget);
      },
      py::arg("s"), py::arg("budget") = 1000000);

  py::class_<Coordinatization>(m, "Coordinatization")
      .def_readonly("psi", &Coordinatization::psi)
      .def_readonly("codomain", &Coordinatization::codomain);

  m.def("coordinatize", [](std::shared_ptr<FiniteStructure> s, const Basis& b) {
    return coordinatize(s, b);
  });

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("iso_status", &EquivalenceReport::iso_status)
      .def_readonly("iso_rank", &EquivalenceReport::iso_rank)
      .def_readonly("iso_detail", &EquivalenceReport::iso_detail)
      .def_readonly("basis_status", &EquivalenceReport::basis_status)
      .def_readonly("basis_rank", &EquivalenceReport::basis_rank)
      .def("decided", &EquivalenceReport::decided)
      .def("agree", &EquivalenceReport::agree);

  m.def(
      "verify_free_iff_standard",
      [](std::shared_ptr<FiniteStructure> s, std::uint64_t budget) {
        return verify_free_iff_standard(s, budget);
      },
      py::arg("s"), py::arg("budget") = 1000000);

  py::class_<StructureEnumerator>(m, "StructureEnumerator")
      .def(py::init([](std::shared_ptr<Semiring> ring, std::size_t carrier_size,
                       unsigned long budget) {
             return StructureEnumerator(std::move(ring), carrier_size, Int(budget));
           }),
           py::arg("ring"), py::arg("carrier_size"), py::arg("budget") = 1000000)
      .def("total", [](const StructureEnumerator& e) { return e.total().get_str(); })
      .def("next", &StructureEnumerator::next)
      .def("__iter__", [](StructureEnumerator& e) -> StructureEnumerator& { return e; })
      .def("__next__", [](StructureEnumerator& e) {
        auto s = e.next();
        if (!s) throw py::stop_iteration();
        return *s;
      });

  // semiring-level checks and file formats
  py::class_<ScalarTriple>(m, "ScalarTriple")
      .def_readonly("a", &ScalarTriple::a)
      .def_readonly("b", &ScalarTriple::b)
      .def_readonly("c", &ScalarTriple::c);
  py::class_<SemiringConditionResult>(m, "SemiringConditionResult")
      .def_readonly("passed", &SemiringConditionResult::pass)
      .def_readonly("witness", &SemiringConditionResult::witness);
  py::class_<SemiringAxiomReport>(m, "SemiringAxiomReport")
      .def_readonly("mode", &SemiringAxiomReport::mode)
      .def_readonly("conditions", &SemiringAxiomReport::conditions)
      .def("all_pass", &SemiringAxiomReport::all_pass);
  py::class_<RingReport>(m, "RingReport")
      .def_readonly("is_ring", &RingReport::is_ring)
      .def_readonly("witness", &RingReport::witness);
  py::class_<FieldReport>(m, "FieldReport")
      .def_readonly("is_field", &FieldReport::is_field)
      .def_readonly("ring", &FieldReport::ring)
      .def_readonly("witness", &FieldReport::witness)
      .def_readonly("reason", &FieldReport::reason);

  m.def(
      "check_semiring_axioms",
      [](std::shared_ptr<Semiring> ring, const std::vector<Scalar>& sample) {
        return check_semiring_axioms(ring, sample);
      },
      py::arg("ring"), py::arg("sample") = std::vector<Scalar>{});
  m.def("check_ring", [](std::shared_ptr<Semiring> r) { return check_ring(r); });
  m.def("check_field", [](std::shared_ptr<Semiring> r) { return check_field(r); });

  m.def("parse_semiring", [](const std::string& text) { return mut(parse_semiring_file(text)); });
  m.def("parse_structure",
        [](const std::string& text) { return mut(parse_structure_file(text)); });
  m.def("serialize_semiring", [](std::shared_ptr<Semiring> r) { return serialize_semiring(*r); });
  m.def("serialize_structure",
        [](std::shared_ptr<FiniteStructure> s) { return serialize_structure(*s); });
}
