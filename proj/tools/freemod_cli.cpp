// freemod: checks semiring/structure files, decides freeness, builds and
// verifies coordinatizations. Reports are byte-stable for golden testing.
//
// Exit codes: 0 ok, 2 mathematical failure, 3 input error, 4 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freemod/format.hpp"
#include "freemod/freeness.hpp"
#include "freemod/linmap.hpp"
#include "freemod/semiring.hpp"
#include "freemod/structures.hpp"

using json = nlohmann::ordered_json;
using namespace freemod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

struct Report {
  std::string human;
  json machine = json::object();
  int exit_code = kExitOk;

  void line(const std::string& s) {
    human += s;
    human += '\n';
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void start_report(Report& r, const std::string& command,
                  const std::vector<std::string>& args,
                  const std::vector<std::pair<std::string, std::string>>& inputs) {
  r.line("freemod/1 report");
  r.line("command: " + command);
  std::string joined;
  for (const auto& a : args) {
    if (!joined.empty()) joined += ' ';
    joined += a;
  }
  r.line("args: " + joined);
  r.machine["schema"] = "freemod/1";
  r.machine["command"] = command;
  r.machine["args"] = args;
  r.machine["inputs"] = json::array();
  for (const auto& [path, text] : inputs) {
    const std::string digest = fnv1a_hex(text);
    r.line("input: " + path + " fnv1a=" + digest);
    r.machine["inputs"].push_back({{"path", path}, {"fnv1a", digest}});
  }
}

void finish_report(Report& r, const std::string& format) {
  r.line("exit: " + std::to_string(r.exit_code));
  r.machine["exit"] = r.exit_code;
  if (format == "machine")
    std::cout << r.machine.dump(2) << "\n";
  else
    std::cout << r.human;
}

std::string scalar_name(const Semiring& ring, std::size_t index) {
  return ring.element(index).str();
}

std::string render_witness(const Witness& w, const FiniteStructure& s) {
  std::string out;
  for (const auto& [name, idx] : w.elems) {
    if (!out.empty()) out += ", ";
    out += name + "=" + s.label(idx);
  }
  for (const auto& [name, idx] : w.scalars) {
    if (!out.empty()) out += ", ";
    out += name + "=" + scalar_name(*s.ring(), idx);
  }
  return out;
}

json witness_json(const Witness& w, const FiniteStructure& s) {
  json j = json::object();
  for (const auto& [name, idx] : w.elems) j[name] = s.label(idx);
  for (const auto& [name, idx] : w.scalars) j[name] = scalar_name(*s.ring(), idx);
  return j;
}

std::string structure_summary(const FiniteStructure& s) {
  return std::to_string(s.size()) + " elements over " + s.ring()->name();
}

// Deterministic probe sets for the infinite builtins.
std::vector<Scalar> default_sample(const SemiringPtr& ring) {
  std::vector<Scalar> sample;
  switch (ring->builtin_kind()) {
    case BuiltinKind::integers:
      for (int v : {-2, -1, 0, 1, 2, 3}) sample.push_back(ring->from_int(v));
      break;
    case BuiltinKind::naturals:
      for (int v : {0, 1, 2, 3}) sample.push_back(ring->from_int(v));
      break;
    case BuiltinKind::rationals:
      sample = {ring->from_int(-2), ring->from_rational(-1, 2), ring->zero(),
                ring->from_rational(1, 3), ring->one(), ring->from_int(2)};
      break;
    case BuiltinKind::nonneg_rationals:
      sample = {ring->zero(), ring->from_rational(1, 2), ring->one(), ring->from_int(2)};
      break;
    case BuiltinKind::tropical_min_plus:
      sample = {ring->tropical_infinity(), ring->from_int(-2), ring->from_int(0),
                ring->from_int(3)};
      break;
    default:
      break;
  }
  return sample;
}

// ---------------------------------------------------------------------------

int cmd_check_semiring(const std::string& path, const std::string& format) {
  Report r;
  const std::string text = read_file(path);
  start_report(r, "check-semiring", {path}, {{path, text}});
  const SemiringPtr ring = parse_semiring_file(text);
  r.line("semiring: " + ring->name());
  r.machine["semiring"] = ring->name();

  const auto report = check_semiring_axioms(
      ring, ring->is_finite() ? std::vector<Scalar>{} : default_sample(ring));
  r.line(std::string("mode: ") +
         (report.mode == CheckMode::exhaustive ? "exhaustive" : "sampled"));
  r.machine["mode"] = report.mode == CheckMode::exhaustive ? "exhaustive" : "sampled";

  int passed = 0;
  r.machine["conditions"] = json::array();
  for (int i = 0; i < 8; ++i) {
    const auto& c = report.conditions[static_cast<std::size_t>(i)];
    std::string line = "condition (" + std::to_string(i + 1) + ") " +
                       kSemiringConditionLaws[static_cast<std::size_t>(i)] + ": ";
    json jc = {{"condition", i + 1}, {"law", kSemiringConditionLaws[static_cast<std::size_t>(i)]}};
    if (c.pass) {
      line += "PASS";
      jc["status"] = "pass";
      ++passed;
    } else {
      const int arity = kSemiringConditionArity[static_cast<std::size_t>(i)];
      std::string w = "a=" + c.witness->a.str();
      json jw = {{"a", c.witness->a.str()}};
      if (arity >= 2) {
        w += ", b=" + c.witness->b.str();
        jw["b"] = c.witness->b.str();
      }
      if (arity >= 3) {
        w += ", c=" + c.witness->c.str();
        jw["c"] = c.witness->c.str();
      }
      line += "FAIL witness " + w;
      jc["status"] = "fail";
      jc["witness"] = jw;
    }
    r.line(line);
    r.machine["conditions"].push_back(jc);
  }
  r.line("semiring-conditions: " + std::string(passed == 8 ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/8)");
  r.machine["semiring_pass"] = passed == 8;

  const RingReport ring_report = check_ring(ring);
  std::string ring_line = std::string("ring: ") + (ring_report.is_ring ? "yes" : "no");
  if (!ring_report.is_ring && ring_report.witness)
    ring_line += " (witness " + ring_report.witness->str() + ")";
  r.line(ring_line);
  r.machine["ring"] = ring_report.is_ring;
  if (!ring_report.is_ring && ring_report.witness)
    r.machine["ring_witness"] = ring_report.witness->str();

  const FieldReport field_report = check_field(ring);
  std::string field_line = std::string("field: ") + (field_report.is_field ? "yes" : "no");
  if (!field_report.is_field) field_line += " (" + field_report.reason + ")";
  r.line(field_line);
  r.machine["field"] = field_report.is_field;
  if (!field_report.is_field) r.machine["field_reason"] = field_report.reason;

  r.exit_code = passed == 8 ? kExitOk : kExitMath;
  finish_report(r, format);
  return r.exit_code;
}

void append_axiom_sections(Report& r, const FiniteStructure& s,
                           const StructureAxiomReport& report) {
  std::string zc = "[";
  json jz = json::array();
  for (std::size_t i = 0; i < report.zero_candidates.size(); ++i) {
    if (i) zc += ", ";
    zc += s.label(report.zero_candidates[i]);
    jz.push_back(s.label(report.zero_candidates[i]));
  }
  zc += "]";
  r.line("zero-candidates: " + zc);
  r.machine["zero_candidates"] = jz;

  int passed = 0;
  r.machine["conditions"] = json::array();
  for (int i = 0; i < 9; ++i) {
    const auto& c = report.conditions[static_cast<std::size_t>(i)];
    std::string line = "condition (" + std::to_string(i + 1) + ") " +
                       kStructureConditionLaws[static_cast<std::size_t>(i)] + ": ";
    json jc = {{"condition", i + 1},
               {"law", kStructureConditionLaws[static_cast<std::size_t>(i)]}};
    if (c.pass) {
      line += "PASS";
      jc["status"] = "pass";
      ++passed;
      if (i == 7 && report.standard_zero) {
        line += " (zero " + s.label(*report.standard_zero) + ")";
        jc["zero"] = s.label(*report.standard_zero);
      }
    } else {
      line += "FAIL";
      jc["status"] = "fail";
      if (c.witness) {
        line += " witness " + render_witness(*c.witness, s);
        jc["witness"] = witness_json(*c.witness, s);
      }
    }
    r.line(line);
    r.machine["conditions"].push_back(jc);
  }
  r.line("conditions: " + std::to_string(passed) + "/9 pass");
  r.machine["conditions_passed"] = passed;

  if (report.passes_1_to_8()) {
    r.line("standard-semimodule: yes (zero " + s.label(*report.standard_zero) + ")");
    r.machine["standard_semimodule"] = true;
    r.machine["zero"] = s.label(*report.standard_zero);
  } else {
    r.line("standard-semimodule: no");
    r.machine["standard_semimodule"] = false;
  }
}

int cmd_check_axioms(const std::string& path, const std::string& format) {
  Report r;
  const std::string text = read_file(path);
  start_report(r, "check-axioms", {path}, {{path, text}});
  const StructurePtr s = parse_structure_file(text);
  r.line("structure: " + structure_summary(*s));
  r.machine["structure"] = structure_summary(*s);

  const auto report = check_axioms(*s);
  append_axiom_sections(r, *s, report);

  bool all = true;
  for (const auto& c : report.conditions) all = all && c.pass;
  r.exit_code = all ? kExitOk : kExitMath;
  finish_report(r, format);
  return r.exit_code;
}

std::string tuple_label(const RealizedPower& power, const std::vector<std::size_t>& digits) {
  return power.structure()->label(power.index_of_digits(digits));
}

int cmd_find_basis(const std::string& path, std::uint64_t budget, const std::string& format) {
  Report r;
  const std::string text = read_file(path);
  start_report(r, "find-basis", {path}, {{path, text}});
  const StructurePtr s = parse_structure_file(text);
  r.line("structure: " + structure_summary(*s));
  r.machine["structure"] = structure_summary(*s);

  const FreenessVerdict verdict = find_basis(s, budget);
  if (verdict.axiom_report->passes_1_to_8()) {
    r.line("axioms: PASS (1)-(8), zero " +
           s->label(*verdict.axiom_report->standard_zero));
    r.machine["axioms"] = "pass";
  } else {
    std::string failing;
    json jf = json::array();
    for (int i = 0; i < 8; ++i)
      if (!verdict.axiom_report->conditions[static_cast<std::size_t>(i)].pass) {
        if (!failing.empty()) failing += ",";
        failing += "(" + std::to_string(i + 1) + ")";
        jf.push_back(i + 1);
      }
    r.line("axioms: FAIL " + failing);
    r.machine["axioms"] = "fail";
    r.machine["failing_conditions"] = jf;
  }

  switch (verdict.status) {
    case FreenessStatus::free_with_basis: {
      r.line("verdict: FREE rank " + std::to_string(*verdict.rank));
      r.machine["verdict"] = "free";
      r.machine["rank"] = *verdict.rank;
      std::string basis = "[";
      json jb = json::array();
      for (std::size_t i = 0; i < verdict.basis->elements.size(); ++i) {
        if (i) basis += ", ";
        basis += s->label(verdict.basis->elements[i]);
        jb.push_back(s->label(verdict.basis->elements[i]));
      }
      basis += "]";
      r.line("basis: " + basis);
      r.machine["basis"] = jb;
      r.line("coordinates:");
      r.machine["coordinates"] = json::object();
      for (std::size_t x = 0; x < s->size(); ++x) {
        std::string tuple = "(";
        json jt = json::array();
        for (std::size_t i = 0; i < verdict.basis->coordinates[x].size(); ++i) {
          if (i) tuple += ",";
          const std::string v = scalar_name(*s->ring(), verdict.basis->coordinates[x][i]);
          tuple += v;
          jt.push_back(v);
        }
        tuple += ")";
        r.line("  " + s->label(x) + " = " + tuple);
        r.machine["coordinates"][s->label(x)] = jt;
      }
      r.exit_code = kExitOk;
      break;
    }
    case FreenessStatus::not_free:
      r.line("verdict: NOT FREE");
      r.line("certificate: " + verdict.certificate);
      r.machine["verdict"] = "not-free";
      r.machine["certificate"] = verdict.certificate;
      r.exit_code = kExitMath;
      break;
    case FreenessStatus::undecided_budget:
      r.line("verdict: UNDECIDED (budget)");
      r.line("certificate: " + verdict.certificate);
      r.machine["verdict"] = "undecided-budget";
      r.machine["certificate"] = verdict.certificate;
      r.exit_code = kExitBudget;
      break;
  }
  finish_report(r, format);
  return r.exit_code;
}

int cmd_coordinatize(const std::string& path, const std::string& basis_arg,
                     const std::string& format) {
  Report r;
  const std::string text = read_file(path);
  start_report(r, "coordinatize", {path, "--basis", basis_arg}, {{path, text}});
  const StructurePtr s = parse_structure_file(text);
  r.line("structure: " + structure_summary(*s));
  r.machine["structure"] = structure_summary(*s);

  Basis basis;
  basis.structure = s;
  std::string token;
  std::istringstream parts(basis_arg);
  while (std::getline(parts, token, ',')) {
    if (token.empty()) throw Error("empty basis label");
    const auto idx = s->index_of_label(token);
    if (!idx) throw Error("basis label '" + token + "' is not in the carrier");
    basis.elements.push_back(*idx);
  }

  std::string basis_line = "basis: [";
  json jb = json::array();
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    if (i) basis_line += ", ";
    basis_line += s->label(basis.elements[i]);
    jb.push_back(s->label(basis.elements[i]));
  }
  basis_line += "]";
  r.line(basis_line);
  r.machine["basis"] = jb;

  try {
    const Coordinatization coord = coordinatize(s, basis);
    r.line("psi:");
    r.machine["psi"] = json::object();
    for (std::size_t x = 0; x < s->size(); ++x) {
      const std::string img = coord.codomain.structure()->label(coord.psi(x));
      r.line("  " + s->label(x) + " -> " + img);
      r.machine["psi"][s->label(x)] = img;
    }
    r.line("linearity: PASS");
    r.line("invertibility: PASS");
    r.machine["linear"] = true;
    r.machine["invertible"] = true;
    const TransportReport transported = transport_axioms(*s, coord.psi, coord.codomain);
    if (transported.all_pass()) {
      r.line("transport: conditions (1)-(8) hold with zero " +
             s->label(transported.transported_zero));
      r.machine["transport"] = "pass";
      r.machine["transported_zero"] = s->label(transported.transported_zero);
    } else {
      r.line("transport: FAIL");
      r.machine["transport"] = "fail";
    }
    r.exit_code = kExitOk;
  } catch (const PreconditionError& e) {
    r.line(std::string("error: ") + e.what());
    r.machine["error"] = e.what();
    r.exit_code = kExitMath;
  }
  finish_report(r, format);
  return r.exit_code;
}

int cmd_verify_isomorphism(const std::string& path, const std::string& map_path,
                           const std::string& format) {
  Report r;
  const std::string text = read_file(path);
  const std::string map_text = read_file(map_path);
  start_report(r, "verify-isomorphism", {path, "--map", map_path},
               {{path, text}, {map_path, map_text}});
  const StructurePtr domain = parse_structure_file(text);
  const MapDoc doc = parse_map_file(map_text);
  r.line("domain: " + structure_summary(*domain));
  r.machine["domain"] = structure_summary(*domain);

  StructurePtr codomain;
  if (doc.codomain == MapDoc::Codomain::self) {
    codomain = domain;
    r.line("codomain: self");
    r.machine["codomain"] = "self";
  } else {
    RealizedPower power(domain->ring(), doc.power_dim);
    codomain = power.structure();
    r.line("codomain: power " + std::to_string(doc.power_dim));
    r.machine["codomain"] = "power " + std::to_string(doc.power_dim);
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(domain->size(), kUnset);
  for (const auto& [from, to] : doc.pairs) {
    const auto fi = domain->index_of_label(from);
    if (!fi) throw Error("map uses unknown domain label '" + from + "'");
    const auto ti = codomain->index_of_label(to);
    if (!ti) throw Error("map uses unknown codomain label '" + to + "'");
    if (table[*fi] != kUnset) throw Error("map assigns '" + from + "' twice");
    table[*fi] = *ti;
  }
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table[x] == kUnset) throw Error("map does not assign element '" + domain->label(x) + "'");

  const LinearMapTable f(domain, codomain, std::move(table));
  const LinearityVerdict lv = check_linear(f);
  if (lv.linear) {
    r.line("linearity: PASS");
    r.machine["linear"] = true;
  } else {
    const Witness& w = lv.add_witness ? *lv.add_witness : *lv.scale_witness;
    r.line("linearity: FAIL witness " + render_witness(w, *domain));
    r.machine["linear"] = false;
    r.machine["linearity_witness"] = witness_json(w, *domain);
  }
  const InvertibilityVerdict iv = check_invertible(f);
  if (iv.invertible) {
    r.line("invertibility: PASS");
    r.machine["invertible"] = true;
  } else {
    std::string why = iv.collision ? "not injective: " + render_witness(*iv.collision, *domain)
                                   : "not surjective: misses " + codomain->label(*iv.missed);
    r.line("invertibility: FAIL (" + why + ")");
    r.machine["invertible"] = false;
    r.machine["invertibility_reason"] = why;
  }

  std::string verdict = lv.linear && iv.invertible ? "ISOMORPHISM"
                        : !lv.linear              ? "NOT LINEAR"
                                                  : "NOT INVERTIBLE";
  r.line("verdict: " + verdict);
  r.machine["verdict"] = verdict;
  r.exit_code = lv.linear && iv.invertible ? kExitOk : kExitMath;
  finish_report(r, format);
  return r.exit_code;
}

int cmd_lemmas(const std::string& path, const std::string& format) {
  Report r;
  const std::string text = read_file(path);
  start_report(r, "lemmas", {path}, {{path, text}});
  const StructurePtr s = parse_structure_file(text);
  r.line("structure: " + structure_summary(*s));
  r.machine["structure"] = structure_summary(*s);

  const auto render = [&](const char* name, const char* key, const LemmaReport& report) {
    std::string status;
    switch (report.status) {
      case LemmaStatus::holds: status = "holds"; break;
      case LemmaStatus::premise_not_met: status = "premise not met"; break;
      case LemmaStatus::premise_not_applicable: status = "premise not applicable"; break;
      case LemmaStatus::counterexample: status = "COUNTEREXAMPLE"; break;
    }
    r.line(std::string("lemma ") + name + ": " + status + " -- " + report.detail);
    json j = {{"status", status}, {"detail", report.detail}};
    if (report.status == LemmaStatus::counterexample) {
      j["structure"] = report.structure_dump;
      if (report.witness) j["witness"] = witness_json(*report.witness, *s);
      r.line("  counterexample structure: " + report.structure_dump);
    }
    r.machine[key] = j;
    return report.status == LemmaStatus::counterexample;
  };

  bool broken = false;
  broken |= render("0x=0 <=> (1)&(9)", "lemma_8_iff_1_and_9", lemma_8_iff_1_and_9(*s));
  broken |= render("a0=0", "lemma_a_zero", lemma_a_zero(*s));
  broken |= render("(3) derivable", "lemma_commutativity", lemma_commutativity_derivable(*s));

  r.exit_code = broken ? kExitMath : kExitOk;
  finish_report(r, format);
  return r.exit_code;
}

int cmd_enumerate(std::size_t size, const std::string& semiring_name, std::uint64_t budget,
                  const std::string& format) {
  Report r;
  start_report(r, "enumerate",
               {"--size", std::to_string(size), "--semiring", semiring_name}, {});
  SemiringPtr ring = Semiring::builtin_by_name(semiring_name);
  if (!ring) {
    const std::string text = read_file(semiring_name);
    ring = parse_semiring_file(text);
  }
  if (!ring->is_finite()) throw Error("enumeration requires a finite semiring");
  r.line("semiring: " + ring->name());
  r.line("carrier-size: " + std::to_string(size));
  r.machine["semiring"] = ring->name();
  r.machine["carrier_size"] = size;

  StructureEnumerator en(ring, size, Int(static_cast<unsigned long>(budget)));
  r.line("total: " + en.total().get_str());
  r.machine["total"] = en.total().get_str();
  r.machine["structures"] = json::array();
  std::size_t idx = 0;
  while (auto s = en.next()) {
    r.line("structure " + std::to_string(idx) + ": " + s->dump());
    r.machine["structures"].push_back(s->dump());
    ++idx;
  }
  r.exit_code = kExitOk;
  finish_report(r, format);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiring-generic free semimodule toolkit"};
  app.require_subcommand(1);

  std::uint64_t budget = 1000000;
  std::string format = "human";
  app.add_option("--budget", budget, "candidate-evaluation cap for searches")
      ->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();

  std::string file, map_file, basis_arg, semiring_name;
  std::size_t size = 2;

  auto* check_semiring = app.add_subcommand("check-semiring", "check the 8 semiring conditions");
  check_semiring->add_option("file", file, "semiring file")->required();

  auto* check_ax = app.add_subcommand("check-axioms", "check conditions (1)-(9) on a structure");
  check_ax->add_option("file", file, "structure file")->required();

  auto* find_basis_cmd = app.add_subcommand("find-basis", "decide freeness by basis search");
  find_basis_cmd->add_option("file", file, "structure file")->required();

  auto* coordinatize_cmd =
      app.add_subcommand("coordinatize", "build the coordinatization for a given basis");
  coordinatize_cmd->add_option("file", file, "structure file")->required();
  coordinatize_cmd->add_option("--basis", basis_arg, "comma-separated basis labels")
      ->required();

  auto* verify_iso = app.add_subcommand("verify-isomorphism", "verify a map file");
  verify_iso->add_option("file", file, "structure file")->required();
  verify_iso->add_option("--map", map_file, "map file")->required();

  auto* lemmas_cmd = app.add_subcommand("lemmas", "run the footnote lemma checks");
  lemmas_cmd->add_option("file", file, "structure file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate all structures of a size");
  enumerate_cmd->add_option("--size", size, "carrier size")->required();
  enumerate_cmd->add_option("--semiring", semiring_name, "builtin name or semiring file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_semiring->parsed()) return cmd_check_semiring(file, format);
    if (check_ax->parsed()) return cmd_check_axioms(file, format);
    if (find_basis_cmd->parsed()) return cmd_find_basis(file, budget, format);
    if (coordinatize_cmd->parsed()) return cmd_coordinatize(file, basis_arg, format);
    if (verify_iso->parsed()) return cmd_verify_isomorphism(file, map_file, format);
    if (lemmas_cmd->parsed()) return cmd_lemmas(file, format);
    if (enumerate_cmd->parsed()) return cmd_enumerate(size, semiring_name, budget, format);
  } catch (const ParseError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
