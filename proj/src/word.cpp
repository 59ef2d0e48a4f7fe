#include "wordcount/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wordcount/error.hpp"

namespace wordcount {

namespace {

void check_length(std::size_t n) {
  if (n > kMaxWordLength) {
    throw Error(Errc::syntax_error, "expanded word exceeds " + std::to_string(kMaxWordLength) +
                                        " letters");
  }
}

// u^k, freely reduced. Conjugating parts are peeled off so a large exponent
// on a cyclically reduced core with one letter stays cheap.
std::vector<Letter> word_power(std::vector<Letter> u, std::int64_t k) {
  u = freely_reduce(std::move(u));
  if (k == 0 || u.empty()) return {};
  if (k < 0) {
    u = inverse_letters(u);
    k = -k;
  }
  std::size_t peel = 0;
  while (2 * peel + 1 < u.size() && u[peel].var == u[u.size() - 1 - peel].var &&
         u[peel].exp == -u[u.size() - 1 - peel].exp) {
    ++peel;
  }
  std::vector<Letter> prefix(u.begin(), u.begin() + peel);
  std::vector<Letter> core(u.begin() + peel, u.end() - peel);
  std::vector<Letter> suffix(u.end() - peel, u.end());
  std::vector<Letter> body;
  if (core.size() == 1) {
    const __int128 e = static_cast<__int128>(core[0].exp) * k;
    if (e > kMaxExponent || e < -kMaxExponent) {
      throw Error(Errc::syntax_error, "exponent exceeds 2^31-1 after expansion");
    }
    body.push_back({core[0].var, static_cast<std::int64_t>(e)});
  } else {
    check_length(static_cast<std::size_t>(std::min<std::int64_t>(k, kMaxWordLength + 1)) *
                 core.size());
    for (std::int64_t i = 0; i < k; ++i) body.insert(body.end(), core.begin(), core.end());
  }
  std::vector<Letter> out = prefix;
  out.insert(out.end(), body.begin(), body.end());
  out.insert(out.end(), suffix.begin(), suffix.end());
  return freely_reduce(std::move(out));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Letter> parse_all() {
    std::vector<Letter> w = word({});
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::syntax_error, "at position " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) fail("integer exceeds 2^31-1");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return neg ? -v : v;
  }

  std::int64_t optional_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    return integer(true);
  }

  // Terms until a closing bracket, comma or end of input.
  std::vector<Letter> word(std::vector<Letter> acc) {
    bool any = false;
    for (;;) {
      const char c = peek();
      if (c == '\0' || c == ']' || c == ',' || c == ')') break;
      std::vector<Letter> t = term();
      acc.insert(acc.end(), t.begin(), t.end());
      acc = freely_reduce(std::move(acc));
      check_length(acc.size());
      any = true;
    }
    if (!any) fail("expected a term");
    return acc;
  }

  std::vector<Letter> term() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a variable index after 'x'");
      }
      const std::int64_t var = integer(false);
      if (var < 1) fail("variable indices start at 1");
      const std::int64_t e = optional_exponent();
      if (e == 0) return {};
      return {{static_cast<std::uint32_t>(var), e}};
    }
    if (c == '[') {
      ++pos_;
      std::vector<Letter> u = word({});
      expect(',');
      std::vector<Letter> v = word({});
      expect(']');
      std::vector<Letter> out = inverse_letters(u);
      const std::vector<Letter> vi = inverse_letters(v);
      out.insert(out.end(), vi.begin(), vi.end());
      out.insert(out.end(), u.begin(), u.end());
      out.insert(out.end(), v.begin(), v.end());
      check_length(out.size());
      return freely_reduce(std::move(out));
    }
    if (c == '(') {
      ++pos_;
      std::vector<Letter> u = word({});
      expect(')');
      return word_power(std::move(u), optional_exponent());
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> freely_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().var == l.var) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<Letter> inverse_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out(letters.rbegin(), letters.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return out;
}

Word Word::from_letters(std::vector<Letter> letters) {
  Word w;
  w.letters_ = freely_reduce(std::move(letters));
  if (w.letters_.empty()) throw Error(Errc::empty_word, "word reduces to the identity");
  std::uint32_t max_var = 0;
  for (const Letter& l : w.letters_) {
    if (l.var == 0) throw Error(Errc::syntax_error, "variable indices start at 1");
    if (l.exp > kMaxExponent || l.exp < -kMaxExponent) {
      throw Error(Errc::syntax_error, "exponent exceeds 2^31-1");
    }
    if (l.var > kMaxArity) {
      throw Error(Errc::syntax_error, "at most " + std::to_string(kMaxArity) + " variables");
    }
    max_var = std::max(max_var, l.var);
  }
  std::vector<bool> seen(max_var + 1, false);
  for (const Letter& l : w.letters_) seen[l.var] = true;
  for (std::uint32_t v = 1; v <= max_var; ++v) {
    if (!seen[v]) {
      throw Error(Errc::syntax_error, "variables must be x1..x" + std::to_string(max_var) +
                                          " without gaps; x" + std::to_string(v) + " is missing");
    }
  }
  w.arity_ = max_var;
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.var);
    if (l.exp != 1) out += '^' + std::to_string(l.exp);
  }
  return out;
}

Word parse_word(std::string_view text) {
  return Word::from_letters(Parser(text).parse_all());
}

Word wn(std::size_t n) {
  if (n < 2) throw Error(Errc::arity_too_small, "w_n needs n >= 2");
  std::vector<Letter> w{{1, 1}};
  for (std::uint32_t i = 2; i <= n; ++i) {
    std::vector<Letter> next = inverse_letters(w);
    next.push_back({i, -1});
    next.insert(next.end(), w.begin(), w.end());
    next.push_back({i, 1});
    w = freely_reduce(std::move(next));
    check_length(w.size());
  }
  return Word::from_letters(std::move(w));
}

Element evaluate(const Word& w, const GroupTable& g, std::span<const Element> assignment) {
  if (assignment.size() != w.arity()) {
    throw Error(Errc::arity_mismatch, "word has arity " + std::to_string(w.arity()) + " but " +
                                          std::to_string(assignment.size()) + " values were given");
  }
  Element acc = g.identity();
  for (const Letter& l : w.letters()) acc = g.mul(acc, g.power(assignment[l.var - 1], l.exp));
  return acc;
}

}  // namespace wordcount
