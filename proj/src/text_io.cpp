#include "tensordeg/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

GroupPtr parse_group_text(std::istream& in, std::string label) {
  std::string raw;
  std::size_t line = 0;
  if (!std::getline(in, raw)) throw ParseError(1, "missing order line");
  ++line;
  const auto n = parse_number<std::size_t>(trim(raw), line);
  if (n == 0) throw ParseError(line, "order must be positive");

  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::getline(in, raw)) throw ParseError(line + 1, "expected " + std::to_string(n) + " table rows");
    ++line;
    std::istringstream row(raw);
    std::string tok;
    std::size_t count = 0;
    while (row >> tok) {
      const auto v = parse_number<std::size_t>(tok, line);
      if (v >= n) throw ParseError(line, "index " + tok + " out of range");
      table.push_back(static_cast<Elem>(v));
      ++count;
    }
    if (count != n)
      throw ParseError(line, "row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
  }
  while (std::getline(in, raw)) {
    ++line;
    if (!trim(raw).empty()) throw ParseError(line, "trailing content after the table");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != x) throw ParseError(2, "row 0 is not the identity row");
    if (table[x * n] != x) throw ParseError(2 + x, "column 0 is not the identity column");
  }
  return build_group(n, std::move(table), std::move(label));
}

GroupPtr parse_group_file(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  try {
    return parse_group_text(in, path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.line(), e.reason());
  }
}

std::string format_group_text(const FiniteGroup& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

Presentation parse_presentation_text(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  if (!std::getline(in, raw)) throw ParseError(1, "missing 'gens k' line");
  ++line;
  const std::string_view head = trim(raw);
  if (head.substr(0, 5) != "gens ") throw ParseError(line, "expected 'gens k'");
  const auto ngens = parse_number<std::size_t>(trim(head.substr(5)), line);

  std::vector<Word> rels;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view body = trim(raw);
    if (body.empty()) continue;
    Word w;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const std::string_view tok = trim(body.substr(start, comma == body.npos ? body.npos : comma - start));
      const auto v = parse_number<std::int32_t>(tok, line);
      if (v == 0 || static_cast<std::size_t>(v < 0 ? -std::int64_t(v) : v) > ngens)
        throw ParseError(line, "generator " + std::string(tok) + " out of range");
      w.push_back(v);
      if (comma == body.npos) break;
      start = comma + 1;
    }
    rels.push_back(std::move(w));
  }
  return Presentation(ngens, std::move(rels));
}

Presentation parse_presentation_file(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  try {
    return parse_presentation_text(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.line(), e.reason());
  }
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens " + std::to_string(p.ngens()) + "\n";
  for (const Word& r : p.relators()) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(r[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tdeg
