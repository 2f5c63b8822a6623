#include "bmw/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bmw {

Letter Letter::inverse() const {
  switch (kind) {
    case LetterKind::Positive: return {index, LetterKind::Negative};
    case LetterKind::Negative: return {index, LetterKind::Positive};
    case LetterKind::Hook: break;
  }
  return *this;
}

std::string to_string(const Letter& l) {
  char c = l.kind == LetterKind::Positive ? 'g' : l.kind == LetterKind::Negative ? 'G' : 'e';
  return c + std::to_string(l.index);
}

Letter parse_letter(std::string_view token, int degree) {
  if (token.size() < 2) throw ParseError("malformed letter token '" + std::string(token) + "'");
  LetterKind kind;
  switch (token[0]) {
    case 'g': kind = LetterKind::Positive; break;
    case 'G': kind = LetterKind::Negative; break;
    case 'e': kind = LetterKind::Hook; break;
    default: throw ParseError("malformed letter token '" + std::string(token) + "'");
  }
  int index = 0;
  auto digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits[0] == '+' || digits[0] == '0')
    throw ParseError("malformed letter token '" + std::string(token) + "'");
  if (index < 1 || index > degree - 1)
    throw ParseError("letter '" + std::string(token) + "' out of range for degree " +
                     std::to_string(degree));
  return {index, kind};
}

Word::Word(int degree) : degree_(degree) {
  if (degree < 1) throw RewriteError("degree must be at least 1");
}

Word::Word(int degree, std::vector<Letter> letters) : degree_(degree), letters_(std::move(letters)) {
  if (degree < 1) throw RewriteError("degree must be at least 1");
  for (const auto& l : letters_)
    if (l.index < 1 || l.index > degree - 1)
      throw RewriteError("letter " + to_string(l) + " out of range for degree " + std::to_string(degree));
}

Word Word::splice(std::size_t pos, std::size_t count, std::span<const Letter> replacement) const {
  if (pos > letters_.size() || count > letters_.size() - pos)
    throw RewriteError("splice range out of bounds");
  std::vector<Letter> out;
  out.reserve(letters_.size() - count + replacement.size());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos + count), letters_.end());
  return Word(degree_, std::move(out));
}

bool Word::has_factor(std::size_t pos, std::span<const Letter> factor) const {
  if (pos > letters_.size() || factor.size() > letters_.size() - pos) return false;
  return std::equal(factor.begin(), factor.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

Word parse_word(std::string_view text, int degree) {
  if (degree < 1) throw ParseError("degree must be at least 1");
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw ParseError("empty word text (use '1' for the identity)");
  if (tokens.size() == 1 && tokens[0] == "1") return Word(degree);
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (tok == "1") throw ParseError("'1' must stand alone");
    letters.push_back(parse_letter(tok, degree));
  }
  return Word(degree, std::move(letters));
}

std::string letters_to_text(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += to_string(letters[k]);
  }
  return out;
}

std::string word_to_text(const Word& w) { return letters_to_text(w.letters()); }

Word concat(const Word& a, const Word& b) {
  if (a.degree() != b.degree())
    throw RewriteError("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  return a.splice(a.size(), 0, b.letters());
}

}  // namespace bmw
