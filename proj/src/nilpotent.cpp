#include "milnor4/nilpotent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "milnor4/error.hpp"
#include "milnor4/magnus.hpp"

namespace milnor4 {

namespace {

void check_rank(const Word& w, const QuotientContext& ctx) {
  if (w.strands() != ctx.strands())
    throw SemanticError("word in F_" + std::to_string(w.strands()) +
                        " tested in a quotient of F_" +
                        std::to_string(ctx.strands()));
}

// Lyndon words over 1..n up to length K with their standard bracketing,
// both as a homogeneous Lie polynomial and as an iterated group commutator.
struct LyndonBasis {
  struct Element {
    Sequence word;
    Series lie;
    Word group;
    const Element* left = nullptr;   // standard factorization, if degree > 1
    const Element* right = nullptr;
  };
  std::vector<std::vector<Element>> by_degree;  // index d-1, increasing lex
};

// A word whose Magnus expansion starts 1 + c * lie(e): the exponent is
// pushed into the innermost generator, [[x^c, y], z] instead of [[x, y], z]^c.
Word scaled_commutator(const LyndonBasis::Element& e, int c) {
  if (!e.left) return power(e.group, c);
  return commutator(scaled_commutator(*e.left, c), e.right->group);
}

Series bracket(const Series& a, const Series& b) { return a * b - b * a; }

std::shared_ptr<const LyndonBasis> lyndon_basis(int n, int K) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const LyndonBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, K}];
  if (slot) return slot;

  auto basis = std::make_shared<LyndonBasis>();
  basis->by_degree.resize(static_cast<std::size_t>(K));
  std::map<Sequence, std::size_t> position;  // word -> index in its degree
  auto element = [&basis, &position](const Sequence& w)
      -> const LyndonBasis::Element& {
    return basis->by_degree[w.size() - 1][position.at(w)];
  };

  // Duval's algorithm yields Lyndon words in increasing lex order; a stable
  // sort by length keeps that order inside each degree.
  std::vector<Sequence> words;
  for (Sequence w{1}; !w.empty();) {
    words.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < K) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(words.begin(), words.end(),
                   [](const Sequence& a, const Sequence& b) {
                     return a.size() < b.size();
                   });

  for (const Sequence& w : words) {
    LyndonBasis::Element e{w, Series(n, K), Word(n)};
    if (w.size() == 1) {
      e.lie.add(w, 1);
      e.group = Word::generator(n, w.front());
    } else {
      // standard factorization w = uv, v the longest proper Lyndon suffix
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        const Sequence v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        if (!position.count(v)) continue;
        const Sequence u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        const auto& pu = element(u);
        const auto& pv = element(v);
        e.lie = bracket(pu.lie, pv.lie);
        e.group = commutator(pu.group, pv.group);
        e.left = &pu;
        e.right = &pv;
        break;
      }
    }
    auto& level = basis->by_degree[w.size() - 1];
    position[w] = level.size();
    level.push_back(std::move(e));
  }
  slot = std::move(basis);
  return slot;
}

int small_exponent(const Integer& c) {
  if (c > std::numeric_limits<int>::max() || c < -std::numeric_limits<int>::max())
    throw SemanticError("commutator exponent too large for a word");
  return static_cast<int>(c);
}

}  // namespace

QuotientContext QuotientContext::nilpotent(int n, int k) {
  if (n < 1) throw SemanticError("strand count must be positive");
  if (k < 1) throw SemanticError("nilpotent grade must be >= 1");
  return {n, Grade::Nilpotent, k};
}

QuotientContext QuotientContext::reduced(int n) {
  if (n < 1) throw SemanticError("strand count must be positive");
  return {n, Grade::Reduced, 0};
}

int QuotientContext::truncation() const noexcept {
  return is_reduced() ? n_ : k_ - 1;
}

int QuotientContext::passes() const noexcept {
  return is_reduced() ? n_ : k_ - 1;
}

std::string to_string(const QuotientContext& ctx) {
  if (ctx.is_reduced()) return "R F_" + std::to_string(ctx.strands());
  return "N_" + std::to_string(ctx.k()) + " F_" +
         std::to_string(ctx.strands());
}

bool is_trivial(const Word& w, const QuotientContext& ctx) {
  check_rank(w, ctx);
  if (w.empty()) return true;
  const Series e = magnus(w, ctx.truncation());
  if (ctx.is_reduced()) return strip(e, NonRepeated{}).is_one();
  return e.is_one();
}

Word representative(const Word& w, const QuotientContext& ctx) {
  check_rank(w, ctx);
  const int n = ctx.strands();
  const int K = ctx.truncation();
  Word out(n);
  if (K < 1 || w.empty()) return K < 1 ? out : w;
  const auto basis = lyndon_basis(n, K);
  Series rest = magnus(w, K);
  for (int d = 1; d <= K; ++d) {
    // `rest` has no terms of degree 1..d-1; its degree-d part is a Lie
    // polynomial, peeled off in the Lyndon basis.
    Series lie(n, K);
    for (const auto& [mono, c] : rest.terms())
      if (static_cast<int>(mono.size()) == d) lie.add(mono, c);
    Word layer(n);
    for (const auto& e : basis->by_degree[static_cast<std::size_t>(d - 1)]) {
      const Integer c = lie.coefficient(e.word);
      if (c.is_zero()) continue;
      Series scaled(n, K);
      for (const auto& [mono, v] : e.lie.terms()) scaled.add(mono, c * v);
      lie = lie - scaled;
      layer *= scaled_commutator(e, small_exponent(c));
    }
    if (!lie.terms().empty())
      throw std::logic_error("representative: degree part is not a Lie element");
    if (layer.empty()) continue;
    rest = magnus(invert(layer), K) * rest;
    out *= layer;
  }
  return out;
}

bool equal(const Word& u, const Word& v, const QuotientContext& ctx) {
  return is_trivial(u * invert(v), ctx);
}

bool centralizes_generator(const Word& w, int i, const QuotientContext& ctx) {
  check_rank(w, ctx);
  if (i < 1 || i > ctx.strands())
    throw SemanticError("generator index " + std::to_string(i) +
                        " outside 1.." + std::to_string(ctx.strands()));
  return is_trivial(commutator(Word::generator(ctx.strands(), i), w), ctx);
}

}  // namespace milnor4
