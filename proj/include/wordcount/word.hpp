#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordcount/group.hpp"

namespace wordcount {

struct Letter {
  std::uint32_t var;  // 1-based
  std::int64_t exp;   // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline constexpr std::int64_t kMaxExponent = 2147483647;  // 2^31 - 1
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 20;
inline constexpr std::uint32_t kMaxArity = 64;

/// A freely reduced word in x1..xn. Every variable x1..xn occurs.
class Word {
 public:
  /// Reduces `letters`, then checks exponent bounds and that the variables are
  /// exactly 1..n. Throws empty_word or syntax_error.
  static Word from_letters(std::vector<Letter> letters);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  /// Parseable text, e.g. "x1^-1 x2^-1 x1 x2".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word() = default;
  std::vector<Letter> letters_;
  std::size_t arity_ = 0;
};

/// Free reduction; keeps zero-length results.
std::vector<Letter> freely_reduce(std::vector<Letter> letters);
std::vector<Letter> inverse_letters(const std::vector<Letter>& letters);

/// Grammar:
///   word := term+
///   term := var | var '^' int | '[' word ',' word ']' | '(' word ')' | '(' word ')' '^' int
///   var  := 'x' positive-integer
/// [u,v] = u^-1 v^-1 u v. Whitespace separates terms.
Word parse_word(std::string_view text);

/// Left-normed commutator [x1, x2, ..., xn]; throws arity_too_small for n < 2.
Word wn(std::size_t n);

/// Product of the assigned elements with exponents, left to right.
Element evaluate(const Word& w, const GroupTable& g, std::span<const Element> assignment);

}  // namespace wordcount
