#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace milnor4 {

/// One letter x_gen^sign of a free-group word; gen is 1-based.
struct Letter {
  int gen = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group on x_1..x_n.
///
/// The strand count n travels with the value so that products of words
/// living in different free groups are rejected instead of silently mixed.
/// Every constructor reduces eagerly: a Word never holds an adjacent
/// x_i x_i^-1 pair.
class Word {
 public:
  explicit Word(int n);
  Word(int n, std::span<const Letter> letters);
  Word(int n, std::initializer_list<Letter> letters);

  /// x_i^sign as a one-letter word.
  static Word generator(int n, int i, int sign = 1);

  int strands() const noexcept { return n_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Appends one letter, cancelling against the tail if possible.
  void push_back(Letter l);
  /// Appends a whole word in place (same reduction as concat).
  Word& operator*=(const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);
inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }
Word invert(const Word& a);
/// a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, int e);
/// Signed number of occurrences of x_i.
int exponent_sum(const Word& a, int i);

/// Text form: `x3 X2 x1`, capital letter = inverse, `1` = empty word.
std::string to_string(const Word& w);
/// Parses the text form; letters must lie in 1..n.
Word parse_word(std::string_view text, int n);

}  // namespace milnor4
