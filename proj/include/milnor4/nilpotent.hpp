#pragma once

#include <string>

#include "milnor4/word.hpp"

namespace milnor4 {

/// Which quotient of F_n equality is decided in: the nilpotent quotient
/// N_k F_n = F_n / Gamma_k, or the reduced free group RF_n.
class QuotientContext {
 public:
  enum class Grade { Nilpotent, Reduced };

  static QuotientContext nilpotent(int n, int k);
  static QuotientContext reduced(int n);

  int strands() const noexcept { return n_; }
  Grade grade() const noexcept { return grade_; }
  bool is_reduced() const noexcept { return grade_ == Grade::Reduced; }
  /// Nilpotent class bound k; only meaningful for Grade::Nilpotent.
  int k() const noexcept { return k_; }

  /// Magnus truncation that decides equality: k-1, or n in reduced mode
  /// (a non-repeated monomial in n variables has degree at most n).
  int truncation() const noexcept;
  /// Substitution passes needed by the arc-colour solvers so that every
  /// colour is exact in this quotient.
  int passes() const noexcept;

  friend bool operator==(const QuotientContext&,
                         const QuotientContext&) = default;

 private:
  QuotientContext(int n, Grade g, int k) : n_(n), grade_(g), k_(k) {}

  int n_;
  Grade grade_;
  int k_;
};

std::string to_string(const QuotientContext& ctx);

bool is_trivial(const Word& w, const QuotientContext& ctx);
bool equal(const Word& u, const Word& v, const QuotientContext& ctx);
/// A word equal to `w` in the quotient (in fact modulo Gamma_{K+1}, K the
/// truncation), rebuilt layer by layer from the Magnus coefficients as a
/// product of powers of Lyndon commutators. Used to keep iterated
/// substitutions short; the result is not meant as a canonical form.
Word representative(const Word& w, const QuotientContext& ctx);

/// True iff [x_i, w] is trivial in the quotient.
bool centralizes_generator(const Word& w, int i, const QuotientContext& ctx);

}  // namespace milnor4
