#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmw/error.hpp"

namespace bmw {

// g_i, g_i^{-1} and the hook pair e_i.
enum class LetterKind { Positive, Negative, Hook };

struct Letter {
  int index = 1;
  LetterKind kind = LetterKind::Positive;

  static Letter g(int i, int sign = +1) {
    return {i, sign > 0 ? LetterKind::Positive : LetterKind::Negative};
  }
  static Letter e(int i) { return {i, LetterKind::Hook}; }

  bool is_hook() const { return kind == LetterKind::Hook; }
  bool is_crossing() const { return kind != LetterKind::Hook; }
  // +1 / -1 for crossings, 0 for hooks.
  int sign() const {
    return kind == LetterKind::Positive ? 1 : kind == LetterKind::Negative ? -1 : 0;
  }
  Letter inverse() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& l);
Letter parse_letter(std::string_view token, int degree);

// A BMW tangle of degree n, presented by its unique word in the free
// semigroup on {g_i, g_i^{-1}, e_i}. The empty sequence is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(int degree);
  Word(int degree, std::vector<Letter> letters);

  int degree() const { return degree_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }

  // Replaces letters [pos, pos + count) by `replacement`.
  Word splice(std::size_t pos, std::size_t count, std::span<const Letter> replacement) const;
  bool has_factor(std::size_t pos, std::span<const Letter> factor) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int degree_ = 1;
  std::vector<Letter> letters_;
};

// Tokens `gI`, `GI`, `eI` separated by whitespace, or the single token `1`.
Word parse_word(std::string_view text, int degree);
std::string word_to_text(const Word& w);
std::string letters_to_text(std::span<const Letter> letters);

Word concat(const Word& a, const Word& b);

}  // namespace bmw
