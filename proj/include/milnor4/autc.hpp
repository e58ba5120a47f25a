#pragma once

#include <span>
#include <vector>

#include "milnor4/gauss.hpp"
#include "milnor4/nilpotent.hpp"
#include "milnor4/word.hpp"

namespace milnor4 {

/// Basis-conjugating automorphism x_i -> l_i^-1 x_i l_i of a quotient of
/// F_n, stored by its conjugator tuple. Conjugators are only defined up to
/// left powers of x_i and the quotient; compare with `equal`, not `==`.
class ConjAut {
 public:
  static ConjAut identity(const QuotientContext& ctx);
  ConjAut(QuotientContext ctx, std::vector<Word> conjugators);

  const QuotientContext& context() const noexcept { return ctx_; }
  int strands() const noexcept { return ctx_.strands(); }
  std::span<const Word> conjugators() const noexcept { return conj_; }
  const Word& conjugator(int i) const;

  /// Image of x_i, as a word.
  Word image(int i) const;
  /// Letterwise image of a word; no quotient reduction is applied.
  Word apply(const Word& w) const;

 private:
  QuotientContext ctx_;
  std::vector<Word> conj_;
};

/// phi(d): conjugators are the preferred longitudes of d.
ConjAut from_gauss(const GaussData& d, const QuotientContext& ctx);

/// Composite that applies g first and then f, i.e. w -> f(g(w)). With this
/// order compose(from_gauss(b), from_gauss(a)) is the automorphism of the
/// stack a.b (a below b). Conjugators of the result are replaced by their
/// `representative` when that is shorter.
ConjAut compose(const ConjAut& g, const ConjAut& f);

bool equal(const ConjAut& f, const ConjAut& g);

/// Inverse obtained by fixed-point iteration m_i <- h(l_i^-1), h being the
/// current approximation with conjugators m; each round is exact one
/// lower-central-series step deeper.
ConjAut inverse(const ConjAut& f);

/// f^-1 g^-1 f g, read in the composition order of `compose`.
ConjAut group_commutator(const ConjAut& f, const ConjAut& g);

}  // namespace milnor4
