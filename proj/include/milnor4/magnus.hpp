#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "milnor4/word.hpp"

namespace milnor4 {

using Integer = boost::multiprecision::cpp_int;

/// Index sequence i_1..i_m (1-based); names both monomials X_{i_1}..X_{i_m}
/// and Milnor sequences.
using Sequence = std::vector<int>;

/// Orders sequences by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Sequence& a, const Sequence& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Integer polynomial in noncommuting X_1..X_n with every monomial of total
/// degree above `degree()` discarded. Zero coefficients are never stored.
class Series {
 public:
  using Terms = std::map<Sequence, Integer, ShortLex>;

  Series(int n, int degree);
  static Series one(int n, int degree);
  /// 1 + X_i
  static Series generator(int n, int degree, int i);

  int variables() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Coefficient of the monomial `mono`; 0 if absent.
  Integer coefficient(const Sequence& mono) const;
  /// Adds `c` to the coefficient of `mono`; monomials above the truncation
  /// are dropped.
  void add(const Sequence& mono, const Integer& c);

  bool is_one() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  int n_;
  int degree_;
  Terms terms_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
/// Noncommutative product, truncated at min(a.degree(), b.degree()).
Series mul(const Series& a, const Series& b);
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// Magnus expansion: x_j -> 1 + X_j, x_j^-1 -> 1 - X_j + X_j^2 - ...,
/// truncated at `degree`.
Series magnus(const Word& w, int degree);

/// Coefficient lookup that rejects monomials longer than the truncation.
Integer coefficient(const Series& s, const Sequence& mono);

struct DegreeBelow {
  int k;
};
struct NonRepeated {};
struct WithoutIndex {
  int i;
};
using StripMode = std::variant<DegreeBelow, NonRepeated, WithoutIndex>;

/// Keeps terms of degree < k, keeps only monomials with pairwise distinct
/// indices, or drops every monomial containing X_i.
Series strip(const Series& s, const StripMode& mode);

bool is_repeated(const Sequence& seq);

/// `c * X[i1,i2,...]` summands joined by ` + `, ordered by ShortLex; the
/// constant term is printed bare.
std::string to_string(const Series& s);

}  // namespace milnor4
