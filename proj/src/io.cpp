#include "wordcount/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wordcount/builtin.hpp"
#include "wordcount/error.hpp"

namespace wordcount {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::size_t to_index(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    parse_fail(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace

GroupTable parse_group(std::string_view text) {
  std::vector<Line> lines;
  std::vector<std::pair<std::size_t, std::string>> labels;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') {
      std::istringstream c(raw.substr(first + 1));
      std::string word;
      std::size_t idx = 0;
      if (c >> word && word == "label" && c >> idx) {
        std::string rest;
        std::getline(c, rest);
        const auto s = rest.find_first_not_of(' ');
        labels.emplace_back(idx, s == std::string::npos ? "" : rest.substr(s));
      }
      continue;
    }
    Line l{number, {}};
    std::istringstream ts(raw);
    std::string tok;
    while (ts >> tok) l.tokens.push_back(tok);
    lines.push_back(std::move(l));
  }
  if (lines.empty()) parse_fail(number + 1, "missing header");
  const Line& head = lines[0];
  const std::string& kind = head.tokens[0];
  auto rows = [&](std::size_t count, std::size_t width) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t r = 0; r < count; ++r) {
      if (r + 1 >= lines.size()) {
        parse_fail(number + 1, "file ends after " + std::to_string(r) + " of " +
                                   std::to_string(count) + " rows");
      }
      const Line& l = lines[r + 1];
      if (l.tokens.size() != width) {
        parse_fail(l.number, "expected " + std::to_string(width) + " entries, got " +
                                 std::to_string(l.tokens.size()));
      }
      std::vector<std::size_t> row;
      for (const auto& t : l.tokens) {
        const std::size_t v = to_index(t, l.number);
        if (v >= width) parse_fail(l.number, "index " + t + " out of range");
        row.push_back(v);
      }
      out.push_back(std::move(row));
    }
    if (lines.size() > count + 1) parse_fail(lines[count + 1].number, "unexpected trailing data");
    return out;
  };
  if (kind == "cayley") {
    if (head.tokens.size() != 2) parse_fail(head.number, "expected 'cayley <n>'");
    const std::size_t n = to_index(head.tokens[1], head.number);
    if (n == 0) parse_fail(head.number, "order must be positive");
    if (n > kDefaultOrderCap) {
      throw Error(Errc::order_limit_exceeded, "order " + std::to_string(n) + " exceeds cap");
    }
    const auto table = rows(n, n);
    std::vector<std::vector<Element>> t(n);
    for (std::size_t a = 0; a < n; ++a) t[a].assign(table[a].begin(), table[a].end());
    std::vector<std::string> names;
    if (!labels.empty()) {
      names.resize(n);
      for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
      for (const auto& [i, s] : labels) {
        if (i < n) names[i] = s;
      }
    }
    return GroupTable::from_cayley_table(t, std::move(names));
  }
  if (kind == "perm") {
    if (head.tokens.size() != 3) parse_fail(head.number, "expected 'perm <degree> <k>'");
    const std::size_t degree = to_index(head.tokens[1], head.number);
    const std::size_t k = to_index(head.tokens[2], head.number);
    if (degree == 0) parse_fail(head.number, "degree must be positive");
    return GroupTable::from_permutation_generators(degree, rows(k, degree));
  }
  parse_fail(head.number, "unknown header '" + kind + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::parse_error, "cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::parse_error, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(Errc::parse_error, "write failed for " + path.string());
}

GroupTable import_group(const std::filesystem::path& path) { return parse_group(read_file(path)); }

std::string format_cayley(const GroupTable& g) {
  std::ostringstream out;
  out << "cayley " << g.order() << '\n';
  for (Element i = 0; i < g.order(); ++i) out << "# label " << i << ' ' << g.label(i) << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

void export_group(const GroupTable& g, const std::filesystem::path& path) {
  write_file(path, format_cayley(g));
}

GroupTable load_group(std::string_view source) {
  if (source.rfind("builtin:", 0) == 0) return build_builtin(source);
  return import_group(std::filesystem::path(std::string(source)));
}

Subgroup parse_subgroup(const GroupTable& g, std::string_view spec) {
  const std::string s(spec);
  auto level = [&](std::size_t prefix) {
    const std::string digits = s.substr(prefix);
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
      throw Error(Errc::bad_subgroup, "bad subgroup spec '" + s + "'");
    }
    return v;
  };
  if (s == "whole") return Subgroup::whole(g);
  if (s == "trivial") return Subgroup::trivial(g);
  if (s == "derived") return commutator_subgroup(g);
  if (s == "center") return center(g);
  if (s.rfind("lower", 0) == 0) {
    const std::size_t i = level(5);
    if (i == 0) throw Error(Errc::bad_subgroup, "lower central terms start at 1");
    return lower_central_term(g, i);
  }
  if (s.rfind("upper", 0) == 0) return upper_central_term(g, level(5));
  if (s.rfind("gen:", 0) == 0) {
    std::vector<Element> gens;
    std::istringstream in(s.substr(4));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::size_t v = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v >= g.order()) {
        throw Error(Errc::bad_subgroup, "bad element index '" + tok + "'");
      }
      gens.push_back(static_cast<Element>(v));
    }
    if (gens.empty()) throw Error(Errc::bad_subgroup, "gen: needs at least one element index");
    return Subgroup::generated_by(g, gens);
  }
  throw Error(Errc::bad_subgroup, "unknown subgroup '" + s + "'");
}

}  // namespace wordcount
