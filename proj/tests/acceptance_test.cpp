// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run from the repository root with FREEMOD_CLI pointing at the CLI
// binary (ctest does both).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "freemod/format.hpp"
#include "freemod/freeness.hpp"
#include "freemod/linmap.hpp"
#include "freemod/semiring.hpp"
#include "freemod/structures.hpp"
#include "freemod/vectors.hpp"
#include "golden_runner.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace freemod;
namespace ts = freemod::testsupport;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 = no limit
  std::function<void(std::vector<std::string>&)> run;  // push failure messages
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

// --------------------------------------------------------------------------

void criterion1(std::vector<std::string>& failures) {
  struct Named {
    const char* name;
    SemiringPtr ring;
  };
  for (const auto& [name, ring] :
       {Named{"gf(2)", ts::gf2_table()}, Named{"gf(3)", ts::gf3_table()},
        Named{"boolean", ts::boolean_table()},
        Named{"tropical-truncated", ts::tropical_truncated_table()}}) {
    const auto report = check_semiring_axioms(ring);
    expect(failures, report.mode == CheckMode::exhaustive,
           std::string(name) + ": check not exhaustive");
    expect(failures, report.all_pass(), std::string(name) + ": some condition fails");
  }
  const auto corrupted = check_semiring_axioms(ts::corrupted_table());
  expect(failures, !corrupted.all_pass(), "corrupted table passes");
  const auto& c3 = corrupted.conditions[2];
  expect(failures, !c3.pass && c3.witness.has_value(), "corrupted table: (3) has no witness");
  if (c3.witness) {
    expect(failures, c3.witness->a.str() == "0" && c3.witness->b.str() == "1",
           "corrupted table: witness is not minimal, got (" + c3.witness->a.str() + "," +
               c3.witness->b.str() + ")");
  }
}

void criterion2(std::vector<std::string>& failures) {
  for (const auto& ring : {Semiring::boolean(), Semiring::gfp(2)}) {
    StructureEnumerator en(ring, 2, Int(100000));
    expect(failures, en.total() == 256, ring->name() + ": expected 256 structures");
    std::size_t disagreements = 0, seen = 0;
    while (auto s = en.next()) {
      ++seen;
      const auto sp = std::make_shared<FiniteStructure>(std::move(*s));
      const EquivalenceReport r = verify_free_iff_standard(sp);
      if (!r.agree()) ++disagreements;
    }
    expect(failures, seen == 256, ring->name() + ": enumerated " + std::to_string(seen));
    expect(failures, disagreements == 0,
           ring->name() + ": " + std::to_string(disagreements) + " disagreements");
  }
}

void criterion3(std::vector<std::string>& failures) {
  struct Case {
    SemiringPtr ring;
    std::size_t max_k;
  };
  for (const auto& [ring, max_k] : {Case{Semiring::gfp(2), 3}, Case{Semiring::gfp(3), 2}}) {
    for (std::size_t k = 0; k <= max_k; ++k) {
      const std::string tag = ring->name() + "^" + std::to_string(k);
      RealizedPower power(ring, k);
      const FreenessVerdict verdict = find_basis(power.structure());
      expect(failures, verdict.status == FreenessStatus::free_with_basis, tag + ": not free");
      expect(failures, verdict.rank == k, tag + ": wrong rank");
      if (verdict.status != FreenessStatus::free_with_basis) continue;
      const Coordinatization coord = coordinatize(power.structure(), *verdict.basis);
      expect(failures, coord.psi.linear_state() == TriState::yes, tag + ": psi not linear");
      expect(failures, coord.psi.invertible_state() == TriState::yes,
             tag + ": psi not invertible");
      const TransportReport transported =
          transport_axioms(*power.structure(), coord.psi, coord.codomain);
      expect(failures, transported.all_pass(), tag + ": transported conditions fail");
    }
  }
}

void criterion4(std::vector<std::string>& failures) {
  for (const auto& ring : {Semiring::gfp(2), Semiring::boolean()}) {
    StructureEnumerator en(ring, 2, Int(100000));
    std::size_t counterexamples = 0, premise_ok = 0, vacuous = 0;
    while (auto s = en.next()) {
      for (const LemmaReport& r :
           {lemma_8_iff_1_and_9(*s), lemma_a_zero(*s), lemma_commutativity_derivable(*s)}) {
        switch (r.status) {
          case LemmaStatus::counterexample: ++counterexamples; break;
          case LemmaStatus::holds: ++premise_ok; break;
          case LemmaStatus::premise_not_met:
          case LemmaStatus::premise_not_applicable: ++vacuous; break;
        }
      }
    }
    expect(failures, counterexamples == 0,
           ring->name() + ": " + std::to_string(counterexamples) + " lemma counterexamples");
    expect(failures, vacuous > 0, ring->name() + ": no vacuous case was flagged");
    if (check_ring(ring).is_ring)
      expect(failures, premise_ok > 0, ring->name() + ": lemma sweep was entirely vacuous");
  }
}

void criterion5(std::vector<std::string>& failures) {
  std::size_t compared = 0;
  const auto compare = [&](const StructurePtr& sp, const std::string& tag) {
    const FreenessVerdict fast = find_basis(sp);
    const oracles::BruteFreeness slow = oracles::brute_force_freeness(*sp);
    expect(failures, (fast.status == FreenessStatus::free_with_basis) == slow.free,
           tag + ": verdicts differ");
    if (slow.free && fast.basis)
      expect(failures, fast.basis->elements == slow.basis, tag + ": bases differ");
    ++compared;
  };
  for (const auto& ring : {Semiring::boolean(), Semiring::gfp(2)}) {
    StructureEnumerator en(ring, 2, Int(100000));
    std::size_t idx = 0;
    while (auto s = en.next()) {
      compare(std::make_shared<FiniteStructure>(std::move(*s)),
              ring->name() + "#" + std::to_string(idx));
      ++idx;
    }
  }
  compare(ts::diamond(), "diamond");
  compare(ts::chain3(), "chain3");
  expect(failures, compared == 514, "expected 514 comparisons");

  const FreenessVerdict diamond = find_basis(ts::diamond());
  expect(failures,
         diamond.status == FreenessStatus::free_with_basis && diamond.rank == 2,
         "diamond: expected free of rank 2");
  expect(failures, find_basis(ts::chain3()).status == FreenessStatus::not_free,
         "chain3: expected not free");
}

void criterion6(std::vector<std::string>& failures) {
  for (const auto& ring : {Semiring::integers(), Semiring::rationals(), Semiring::gfp(2),
                           Semiring::boolean()}) {
    std::mt19937_64 rng(0x5eed + ring->name().size());
    for (int i = 0; i < 1000; ++i) {
      const FinSupp x = ts::random_finsupp(rng, ring);
      const FinSupp y = ts::random_finsupp(rng, ring);
      const FinSupp z = ts::random_finsupp(rng, ring);
      const Scalar a = ts::random_scalar(rng, ring);
      const Scalar b = ts::random_scalar(rng, ring);

      const FinSupp xy = finsupp_add(x, y);
      const FinSupp assoc_l = finsupp_add(x, finsupp_add(y, z));
      const FinSupp assoc_r = finsupp_add(xy, z);
      const FinSupp ax = finsupp_scale(a, x);
      const FinSupp dist_l = finsupp_scale(a, xy);
      const FinSupp dist_r = finsupp_add(ax, finsupp_scale(a, y));
      const FinSupp dist2_l = finsupp_scale(a + b, x);
      const FinSupp dist2_r = finsupp_add(ax, finsupp_scale(b, x));
      const FinSupp mul_assoc_l = finsupp_scale(a, finsupp_scale(b, x));
      const FinSupp mul_assoc_r = finsupp_scale(a * b, x);

      bool ok = xy == finsupp_add(y, x) && assoc_l == assoc_r && dist_l == dist_r &&
                dist2_l == dist2_r && mul_assoc_l == mul_assoc_r &&
                finsupp_scale(ring->one(), x) == x && finsupp_scale(ring->zero(), x).empty();
      for (const FinSupp* f : {&xy, &assoc_l, &assoc_r, &ax, &dist_l, &dist_r, &dist2_l,
                               &dist2_r, &mul_assoc_l, &mul_assoc_r})
        ok = ok && f->is_canonical();
      if (!ok) {
        failures.push_back(ring->name() + ": law violated at iteration " + std::to_string(i));
        break;
      }
    }
  }
}

void criterion7(std::vector<std::string>& failures) {
  for (const auto& ring : {Semiring::gfp(2), Semiring::gfp(3)}) {
    const std::size_t m = ring->carrier_size();
    for (std::size_t n = 0; n <= 3; ++n) {
      const std::string tag = ring->name() + " N=" + std::to_string(n);
      std::size_t count = 1;
      for (std::size_t i = 0; i < n; ++i) count *= m;
      std::vector<DenseVec> all;
      for (std::size_t v = 0; v < count; ++v) {
        std::vector<Scalar> entries;
        std::size_t rem = v;
        for (std::size_t i = n; i-- > 0;) {
          entries.insert(entries.begin(), ring->element(rem % m));
          rem /= m;
        }
        all.push_back(DenseVec(ring, std::move(entries)));
      }
      std::set<std::string> images;
      bool ok = true;
      for (const auto& s : all) {
        const FinSupp f = dense_to_finsupp(s);
        images.insert(f.str());
        ok = ok && finsupp_to_dense(f, n) == s;
      }
      ok = ok && images.size() == count;
      for (const auto& s : all)
        for (const auto& t : all)
          ok = ok && dense_to_finsupp(dense_add(s, t)) ==
                         finsupp_add(dense_to_finsupp(s), dense_to_finsupp(t));
      for (std::size_t a = 0; a < m; ++a)
        for (const auto& s : all)
          ok = ok && dense_to_finsupp(dense_scale(ring->element(a), s)) ==
                         finsupp_scale(ring->element(a), dense_to_finsupp(s));
      expect(failures, ok, tag + ": isomorphism property violated");
    }
  }
}

void criterion8(std::vector<std::string>& failures) {
  const auto outcomes = golden::run_all();
  expect(failures, !outcomes.empty(), "no golden cases found");
  for (const auto& o : outcomes)
    expect(failures, o.ok, o.name + ": " + o.message);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "semiring axiom suite (exhaustive tables + corrupted witness)", 1.0, criterion1},
      {2, "proposition 1/3 equivalence on all 512 two-element structures", 60.0, criterion2},
      {3, "proposition 1 pipeline over gf(2)^k and gf(3)^k", 0.0, criterion3},
      {4, "footnote lemmas: no counterexamples, vacuous cases flagged", 0.0, criterion4},
      {5, "freeness agrees with the brute-force oracle (514 structures)", 0.0, criterion5},
      {6, "sparse-space laws on 1000 random triples per semiring", 5.0, criterion6},
      {7, "dense/sparse isomorphism exhaustive over gf(2), gf(3), N <= 3", 0.0, criterion7},
      {8, "CLI golden files byte-identical with documented exit codes", 0.0, criterion8},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> failures;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds)
      failures.push_back("runtime " + std::to_string(seconds) + "s exceeds " +
                         std::to_string(c.limit_seconds) + "s");
    const bool ok = failures.empty();
    passed += ok;
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds);
    for (const auto& f : failures) std::printf("       - %s\n", f.c_str());
  }
  std::printf("acceptance: %d/8 criteria passed\n", passed);
  return passed == 8 ? 0 : 1;
}
