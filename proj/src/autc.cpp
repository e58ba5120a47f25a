#include "milnor4/autc.hpp"

#include <string>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

void check_same_context(const ConjAut& a, const ConjAut& b) {
  if (!(a.context() == b.context()))
    throw SemanticError("automorphisms of different quotients: " +
                        to_string(a.context()) + " vs " +
                        to_string(b.context()));
}

Word shorter(Word w, const QuotientContext& ctx) {
  Word r = representative(w, ctx);
  return r.size() < w.size() ? r : w;
}

}  // namespace

ConjAut::ConjAut(QuotientContext ctx, std::vector<Word> conjugators)
    : ctx_(ctx), conj_(std::move(conjugators)) {
  if (static_cast<int>(conj_.size()) != ctx_.strands())
    throw SemanticError("expected " + std::to_string(ctx_.strands()) +
                        " conjugators, got " + std::to_string(conj_.size()));
  for (const Word& w : conj_)
    if (w.strands() != ctx_.strands())
      throw SemanticError("conjugator lives in F_" +
                          std::to_string(w.strands()) + ", expected F_" +
                          std::to_string(ctx_.strands()));
}

ConjAut ConjAut::identity(const QuotientContext& ctx) {
  return ConjAut(ctx, std::vector<Word>(static_cast<std::size_t>(ctx.strands()),
                                        Word(ctx.strands())));
}

const Word& ConjAut::conjugator(int i) const {
  if (i < 1 || i > strands())
    throw SemanticError("generator index " + std::to_string(i) +
                        " outside 1.." + std::to_string(strands()));
  return conj_[static_cast<std::size_t>(i - 1)];
}

Word ConjAut::image(int i) const {
  const Word& l = conjugator(i);
  return invert(l) * Word::generator(strands(), i) * l;
}

Word ConjAut::apply(const Word& w) const {
  if (w.strands() != strands())
    throw SemanticError("word rank does not match automorphism rank");
  std::vector<Word> images, inverse_images;
  images.reserve(conj_.size());
  for (int i = 1; i <= strands(); ++i) {
    images.push_back(image(i));
    inverse_images.push_back(invert(images.back()));
  }
  Word out(strands());
  for (const Letter& l : w.letters())
    out *= l.sign > 0 ? images[static_cast<std::size_t>(l.gen - 1)]
                      : inverse_images[static_cast<std::size_t>(l.gen - 1)];
  return out;
}

ConjAut from_gauss(const GaussData& d, const QuotientContext& ctx) {
  return ConjAut(ctx, solve(d, ctx).longitudes.preferred);
}

ConjAut compose(const ConjAut& g, const ConjAut& f) {
  check_same_context(g, f);
  // f(g(x_i)) = f(l_g)^-1 f(x_i) f(l_g), so the conjugator is l_f f(l_g).
  std::vector<Word> conj;
  conj.reserve(static_cast<std::size_t>(g.strands()));
  for (int i = 1; i <= g.strands(); ++i)
    conj.push_back(
        shorter(f.conjugator(i) * f.apply(g.conjugator(i)), g.context()));
  return ConjAut(g.context(), std::move(conj));
}

bool equal(const ConjAut& f, const ConjAut& g) {
  check_same_context(f, g);
  for (int i = 1; i <= f.strands(); ++i)
    if (!centralizes_generator(f.conjugator(i) * invert(g.conjugator(i)), i,
                               f.context()))
      return false;
  return true;
}

ConjAut inverse(const ConjAut& f) {
  // h = f^-1 satisfies h(f(x_i)) = x_i, i.e. m_i = h(l_i^-1).
  std::vector<Word> targets;
  for (int i = 1; i <= f.strands(); ++i)
    targets.push_back(invert(f.conjugator(i)));
  ConjAut h(f.context(), targets);
  const int rounds = f.context().passes();
  for (int r = 1; r < rounds; ++r) {
    std::vector<Word> next;
    next.reserve(targets.size());
    for (const Word& t : targets)
      next.push_back(shorter(h.apply(t), f.context()));
    h = ConjAut(f.context(), std::move(next));
  }
  return h;
}

ConjAut group_commutator(const ConjAut& f, const ConjAut& g) {
  return compose(compose(compose(inverse(f), inverse(g)), f), g);
}

}  // namespace milnor4
