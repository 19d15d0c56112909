#include "freemod/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace freemod {

namespace {

struct Token {
  std::string text;
  std::size_t line, col;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t number;

  const std::string& keyword() const { return tokens.front().text; }
};

// Comment-stripped, tokenized, non-blank lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line;
    line.number = line_no;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)),
                                            line_no, start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw ParseError(line.number, line.tokens.empty() ? 1 : line.tokens.front().col, msg);
}

[[noreturn]] void fail_at(const Token& tok, const std::string& msg) {
  throw ParseError(tok.line, tok.col, msg);
}

std::size_t parse_index(const Token& tok, std::size_t limit, const char* what) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc{} || p != tok.text.data() + tok.text.size())
    fail_at(tok, std::string("expected a ") + what + " index, got '" + tok.text + "'");
  if (v >= limit)
    fail_at(tok, std::string(what) + " index " + tok.text + " out of range (have " +
                     std::to_string(limit) + ")");
  return v;
}

void check_header(const std::vector<Line>& lines, const char* kind) {
  if (lines.empty()) throw ParseError(1, 1, "empty file; expected header 'freemod/1 <kind>'");
  const Line& h = lines.front();
  if (h.keyword() != "freemod/1")
    fail(h, "expected schema header 'freemod/1', got '" + h.keyword() + "'");
  if (h.tokens.size() != 2 || h.tokens[1].text != kind)
    fail(h, std::string("expected file kind '") + kind + "'");
}

const std::string kLabelForbidden = "[]{}:,";

void check_scalar_label(const Token& tok) {
  for (char c : tok.text)
    if (kLabelForbidden.find(c) != std::string::npos)
      fail_at(tok, "scalar label '" + tok.text + "' contains reserved character '" +
                       std::string(1, c) + "'");
}

// Parses a table-semiring block: carrier / zero / one / add / mul, in
// that order, starting at lines[i]. Advances i past the block; when
// `until_end` the block must close with a lone 'end'.
SemiringPtr parse_table_block(const std::vector<Line>& lines, std::size_t& i, bool until_end) {
  TableData data;
  auto need = [&](const char* what) -> const Line& {
    if (i >= lines.size())
      throw ParseError(lines.back().number + 1, 1, std::string("expected ") + what);
    return lines[i];
  };

  {
    const Line& line = need("'carrier' line");
    if (line.keyword() != "carrier") fail(line, "expected 'carrier', got '" + line.keyword() + "'");
    if (line.tokens.size() < 2) fail(line, "carrier needs at least one label");
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      check_scalar_label(line.tokens[t]);
      data.labels.push_back(line.tokens[t].text);
    }
    ++i;
  }
  const std::size_t n = data.labels.size();
  auto label_index = [&](const Token& tok) -> std::size_t {
    const auto it = std::find(data.labels.begin(), data.labels.end(), tok.text);
    if (it == data.labels.end()) fail_at(tok, "unknown carrier label '" + tok.text + "'");
    return static_cast<std::size_t>(it - data.labels.begin());
  };
  auto parse_single = [&](const char* name) -> std::size_t {
    const Line& line = need(name);
    if (line.keyword() != name)
      fail(line, std::string("expected '") + name + "', got '" + line.keyword() + "'");
    if (line.tokens.size() != 2) fail(line, std::string("'") + name + "' needs one label");
    const std::size_t v = label_index(line.tokens[1]);
    ++i;
    return v;
  };
  data.zero = parse_single("zero");
  data.one = parse_single("one");
  auto parse_matrix = [&](const char* name, std::vector<std::size_t>& out) {
    const Line& head = need(name);
    if (head.keyword() != name)
      fail(head, std::string("expected '") + name + "', got '" + head.keyword() + "'");
    if (head.tokens.size() != 1) fail(head, std::string("'") + name + "' starts a table block");
    ++i;
    for (std::size_t row = 0; row < n; ++row) {
      const Line& line = need("table row");
      if (line.tokens.size() != n)
        fail(line, "table row needs " + std::to_string(n) + " labels, got " +
                       std::to_string(line.tokens.size()));
      for (const Token& tok : line.tokens) out.push_back(label_index(tok));
      ++i;
    }
  };
  parse_matrix("add", data.add);
  parse_matrix("mul", data.mul);
  if (until_end) {
    const Line& line = need("'end'");
    if (line.keyword() != "end" || line.tokens.size() != 1)
      fail(line, "expected 'end' closing the semiring table block");
    ++i;
  }
  try {
    return Semiring::from_table(std::move(data));
  } catch (const Error& e) {
    throw ParseError(lines[std::min(i, lines.size() - 1)].number, 1, e.what());
  }
}

SemiringPtr parse_builtin(const Line& line, std::size_t name_at) {
  if (line.tokens.size() != name_at + 1) fail(line, "expected one builtin semiring name");
  const Token& tok = line.tokens[name_at];
  SemiringPtr ring;
  try {
    ring = Semiring::builtin_by_name(tok.text);
  } catch (const Error& e) {
    fail_at(tok, e.what());
  }
  if (!ring) fail_at(tok, "unknown builtin semiring '" + tok.text + "'");
  return ring;
}

}  // namespace

SemiringPtr parse_semiring_file(std::string_view text) {
  const auto lines = tokenize(text);
  check_header(lines, "semiring");
  if (lines.size() < 2) throw ParseError(lines.front().number + 1, 1, "expected semiring body");
  std::size_t i = 1;
  const Line& first = lines[i];
  SemiringPtr ring;
  if (first.keyword() == "builtin") {
    ring = parse_builtin(first, 1);
    ++i;
  } else {
    ring = parse_table_block(lines, i, /*until_end=*/false);
  }
  if (i < lines.size()) fail(lines[i], "unexpected trailing content");
  return ring;
}

StructurePtr parse_structure_file(std::string_view text) {
  const auto lines = tokenize(text);
  check_header(lines, "structure");
  std::size_t i = 1;
  auto need = [&](const char* what) -> const Line& {
    if (i >= lines.size())
      throw ParseError(lines.back().number + 1, 1, std::string("expected ") + what);
    return lines[i];
  };

  SemiringPtr ring;
  {
    const Line& line = need("'semiring' line");
    if (line.keyword() != "semiring")
      fail(line, "expected 'semiring', got '" + line.keyword() + "'");
    if (line.tokens.size() < 2) fail(line, "expected 'semiring builtin <name>' or 'semiring table'");
    if (line.tokens[1].text == "builtin") {
      ring = parse_builtin(line, 2);
      ++i;
    } else if (line.tokens[1].text == "table") {
      if (line.tokens.size() != 2) fail(line, "'semiring table' takes no further tokens");
      ++i;
      ring = parse_table_block(lines, i, /*until_end=*/true);
    } else {
      fail(line, "expected 'builtin' or 'table', got '" + line.tokens[1].text + "'");
    }
  }
  if (!ring->is_finite()) {
    const Line& line = lines[1];
    fail(line, "structure tables require a finite semiring, got " + ring->name());
  }

  std::vector<std::string> labels;
  {
    const Line& line = need("'carrier' line");
    if (line.keyword() != "carrier") fail(line, "expected 'carrier', got '" + line.keyword() + "'");
    if (line.tokens.size() < 2) fail(line, "carrier needs at least one label");
    for (std::size_t t = 1; t < line.tokens.size(); ++t) labels.push_back(line.tokens[t].text);
    ++i;
  }
  const std::size_t n = labels.size();
  auto label_index = [&](const Token& tok) -> std::size_t {
    const auto it = std::find(labels.begin(), labels.end(), tok.text);
    if (it == labels.end()) fail_at(tok, "unknown carrier label '" + tok.text + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };

  std::vector<std::size_t> add;
  {
    const Line& head = need("'add' table");
    if (head.keyword() != "add" || head.tokens.size() != 1)
      fail(head, "expected 'add' starting the addition table");
    ++i;
    for (std::size_t row = 0; row < n; ++row) {
      const Line& line = need("add table row");
      if (line.tokens.size() != n)
        fail(line, "add row needs " + std::to_string(n) + " labels, got " +
                       std::to_string(line.tokens.size()));
      for (const Token& tok : line.tokens) add.push_back(label_index(tok));
      ++i;
    }
  }
  std::vector<std::size_t> action;
  {
    const Line& head = need("'action' table");
    if (head.keyword() != "action" || head.tokens.size() != 1)
      fail(head, "expected 'action' starting the scalar action table");
    ++i;
    const std::size_t m = ring->carrier_size();
    for (std::size_t row = 0; row < m; ++row) {
      const Line& line = need("action table row (one per scalar)");
      if (line.tokens.size() != n)
        fail(line, "action row needs " + std::to_string(n) + " labels, got " +
                       std::to_string(line.tokens.size()));
      for (const Token& tok : line.tokens) action.push_back(label_index(tok));
      ++i;
    }
  }
  if (i < lines.size()) fail(lines[i], "unexpected trailing content");
  try {
    return std::make_shared<FiniteStructure>(ring, std::move(labels), std::move(add),
                                             std::move(action));
  } catch (const Error& e) {
    throw ParseError(lines.back().number, 1, e.what());
  }
}

MapDoc parse_map_file(std::string_view text) {
  const auto lines = tokenize(text);
  check_header(lines, "map");
  MapDoc doc;
  std::size_t i = 1;
  if (i < lines.size() && lines[i].keyword() == "codomain") {
    const Line& line = lines[i];
    if (line.tokens.size() == 2 && line.tokens[1].text == "self") {
      doc.codomain = MapDoc::Codomain::self;
    } else if (line.tokens.size() == 3 && line.tokens[1].text == "power") {
      doc.codomain = MapDoc::Codomain::power;
      doc.power_dim = parse_index(line.tokens[2], 64, "power dimension");
    } else {
      fail(line, "expected 'codomain self' or 'codomain power <k>'");
    }
    ++i;
  }
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[1].text != "->")
      fail(line, "expected '<domain-label> -> <codomain-label>'");
    doc.pairs.emplace_back(line.tokens[0].text, line.tokens[2].text);
  }
  if (doc.pairs.empty())
    throw ParseError(lines.back().number, 1, "map file lists no assignments");
  return doc;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void append_table_body(std::string& out, const Semiring& ring) {
  const TableData& t = ring.table();
  const std::size_t n = t.labels.size();
  out += "carrier";
  for (const auto& l : t.labels) {
    out += ' ';
    out += l;
  }
  out += "\nzero " + t.labels[t.zero] + "\none " + t.labels[t.one] + "\nadd\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += t.labels[t.add[i * n + j]];
    }
    out += '\n';
  }
  out += "mul\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += t.labels[t.mul[i * n + j]];
    }
    out += '\n';
  }
}

}  // namespace

std::string serialize_semiring(const Semiring& ring) {
  std::string out = "freemod/1 semiring\n";
  if (ring.is_builtin()) {
    out += "builtin " + ring.name() + "\n";
  } else {
    append_table_body(out, ring);
  }
  return out;
}

std::string serialize_structure(const FiniteStructure& s) {
  std::string out = "freemod/1 structure\n";
  if (s.ring()->is_builtin()) {
    out += "semiring builtin " + s.ring()->name() + "\n";
  } else {
    out += "semiring table\n";
    append_table_body(out, *s.ring());
    out += "end\n";
  }
  out += "carrier";
  for (const auto& l : s.labels()) {
    out += ' ';
    out += l;
  }
  out += "\nadd\n";
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ' ';
      out += s.label(s.add(x, y));
    }
    out += '\n';
  }
  out += "action\n";
  for (std::size_t a = 0; a < s.scalar_count(); ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x) out += ' ';
      out += s.label(s.act(a, x));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vector literals

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top(std::string_view body) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      parts.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

}  // namespace

DenseVec parse_dense_literal(const SemiringPtr& ring, std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw Error("dense literal must look like [a1,...,aN]");
  std::vector<Scalar> entries;
  for (const auto part : split_top(t.substr(1, t.size() - 2))) {
    if (part.empty()) throw Error("empty entry in dense literal");
    entries.push_back(ring->parse(part));
  }
  return DenseVec(ring, std::move(entries));
}

FinSupp parse_finsupp_literal(const SemiringPtr& ring, std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw Error("sparse literal must look like {key:value, ...}");
  std::vector<std::pair<Key, Scalar>> entries;
  for (const auto part : split_top(t.substr(1, t.size() - 2))) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw Error("sparse entry '" + std::string(part) + "' needs key:value");
    const std::string_view key_text = trim(part.substr(0, colon));
    const std::string_view val_text = trim(part.substr(colon + 1));
    if (key_text.empty()) throw Error("empty key in sparse literal");
    std::int64_t int_key = 0;
    const auto [p, ec] =
        std::from_chars(key_text.data(), key_text.data() + key_text.size(), int_key);
    Key key = (ec == std::errc{} && p == key_text.data() + key_text.size())
                  ? Key(int_key)
                  : Key(std::string(key_text));
    entries.emplace_back(std::move(key), ring->parse(val_text));
  }
  return FinSupp(ring, entries);
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out(16, '0');
  for (std::size_t i = 16; i-- > 0;) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace freemod
