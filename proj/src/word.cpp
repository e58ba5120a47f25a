#include "milnor4/word.hpp"

#include <cctype>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

void check_letter(int n, const Letter& l) {
  if (l.gen < 1 || l.gen > n)
    throw SemanticError("generator index " + std::to_string(l.gen) +
                        " outside 1.." + std::to_string(n));
  if (l.sign != 1 && l.sign != -1)
    throw SemanticError("letter sign must be +1 or -1");
}

void check_same_group(const Word& a, const Word& b) {
  if (a.strands() != b.strands())
    throw SemanticError("words live in free groups of different rank (" +
                        std::to_string(a.strands()) + " vs " +
                        std::to_string(b.strands()) + ")");
}

}  // namespace

Word::Word(int n) : n_(n) {
  if (n < 1) throw SemanticError("strand count must be positive");
}

Word::Word(int n, std::span<const Letter> letters) : Word(n) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push_back(l);
}

Word::Word(int n, std::initializer_list<Letter> letters)
    : Word(n, std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator(int n, int i, int sign) {
  Word w(n);
  w.push_back({i, sign});
  return w;
}

void Word::push_back(Letter l) {
  check_letter(n_, l);
  if (!letters_.empty() && letters_.back().gen == l.gen &&
      letters_.back().sign == -l.sign)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Word& Word::operator*=(const Word& rhs) {
  check_same_group(*this, rhs);
  // Both sides are reduced, so cancellation only happens at the seam.
  std::size_t j = 0;
  const auto& r = rhs.letters_;
  while (j < r.size() && !letters_.empty() && letters_.back().gen == r[j].gen &&
         letters_.back().sign == -r[j].sign) {
    letters_.pop_back();
    ++j;
  }
  letters_.insert(letters_.end(), r.begin() + static_cast<std::ptrdiff_t>(j),
                  r.end());
  return *this;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out *= b;
  return out;
}

Word invert(const Word& a) {
  Word out(a.strands());
  auto ls = a.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

Word commutator(const Word& a, const Word& b) {
  check_same_group(a, b);
  return invert(a) * invert(b) * a * b;
}

Word power(const Word& a, int e) {
  Word base = e < 0 ? invert(a) : a;
  Word out(a.strands());
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  return out;
}

int exponent_sum(const Word& a, int i) {
  if (i < 1 || i > a.strands())
    throw SemanticError("generator index " + std::to_string(i) +
                        " outside 1.." + std::to_string(a.strands()));
  int s = 0;
  for (const Letter& l : a.letters())
    if (l.gen == i) s += l.sign;
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.sign > 0 ? 'x' : 'X';
    out += std::to_string(l.gen);
  }
  return out;
}

Word parse_word(std::string_view text, int n) {
  Word w(n);
  std::size_t pos = 0;
  bool saw_identity = false;
  bool saw_letter = false;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  for (skip_ws(); pos < text.size(); skip_ws()) {
    const std::size_t start = pos;
    const char c = text[pos];
    if (c == '1' && (pos + 1 == text.size() ||
                     std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      saw_identity = true;
      ++pos;
      continue;
    }
    if (c != 'x' && c != 'X')
      throw ParseError("word: unexpected character '" + std::string(1, c) +
                           "' at offset " + std::to_string(pos),
                       pos);
    ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (digits == pos)
      throw ParseError("word: missing generator index at offset " +
                           std::to_string(digits),
                       digits);
    if (pos - digits > 6)
      throw ParseError("word: generator index too long at offset " +
                           std::to_string(digits),
                       digits);
    const int gen = std::stoi(std::string(text.substr(digits, pos - digits)));
    if (gen < 1 || gen > n)
      throw ParseError("word: generator x" + std::to_string(gen) +
                           " outside 1.." + std::to_string(n) + " at offset " +
                           std::to_string(start),
                       start);
    w.push_back({gen, c == 'x' ? 1 : -1});
    saw_letter = true;
  }
  if (saw_identity && saw_letter)
    throw ParseError("word: '1' cannot be mixed with letters", 0);
  return w;
}

}  // namespace milnor4
