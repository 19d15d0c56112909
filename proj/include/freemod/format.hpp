#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freemod/structures.hpp"
#include "freemod/vectors.hpp"

namespace freemod {

/// Malformed input text. Lines and columns are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  std::size_t line, col;
};

// All files share one UTF-8 text format with the schema header
// "freemod/1 <kind>", kind in {semiring, structure, map}. '#' starts a
// comment. Sections are keyword-driven; tables are rows of labels.

SemiringPtr parse_semiring_file(std::string_view text);

StructurePtr parse_structure_file(std::string_view text);

/// A parsed map file: label pairs plus the declared codomain, which is
/// either the domain structure itself or realized R^k ("codomain power k").
struct MapDoc {
  enum class Codomain { self, power };
  Codomain codomain = Codomain::self;
  std::size_t power_dim = 0;
  std::vector<std::pair<std::string, std::string>> pairs;
};

MapDoc parse_map_file(std::string_view text);

std::string serialize_semiring(const Semiring& ring);
std::string serialize_structure(const FiniteStructure& s);

/// Textual vector literals: dense "[a1,...,aN]", sparse
/// "{key:value, ...}" with keys ascending.
DenseVec parse_dense_literal(const SemiringPtr& ring, std::string_view text);
FinSupp parse_finsupp_literal(const SemiringPtr& ring, std::string_view text);

/// FNV-1a 64-bit digest, for stable input fingerprints in reports.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1a_hex(std::string_view data);

}  // namespace freemod
