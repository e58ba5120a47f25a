#include "milnor4/magnus.hpp"

#include <algorithm>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

void check_compatible(const Series& a, const Series& b) {
  if (a.variables() != b.variables())
    throw SemanticError("series in different variable counts (" +
                        std::to_string(a.variables()) + " vs " +
                        std::to_string(b.variables()) + ")");
}

// Per-degree dense coefficient arrays; degree d holds n^d slots addressed by
// the base-n digits of the monomial (most significant digit = first index).
class DenseExpansion {
 public:
  DenseExpansion(int n, int degree) : n_(n), layers_(degree + 1) {
    std::size_t width = 1;
    for (auto& layer : layers_) {
      layer.assign(width, Integer(0));
      width *= static_cast<std::size_t>(n);
    }
    layers_[0][0] = 1;
  }

  // S <- S (1 + X_j)
  void times_generator(int j) {
    for (std::size_t d = layers_.size() - 1; d >= 1; --d) {
      const auto& below = layers_[d - 1];
      auto& here = layers_[d];
      for (std::size_t s = 0; s < below.size(); ++s)
        if (!below[s].is_zero()) here[s * n_ + (j - 1)] += below[s];
    }
  }

  // S <- S (1 + X_j)^-1, i.e. T with T = S - T X_j solved degree by degree.
  void times_inverse_generator(int j) {
    for (std::size_t d = 1; d < layers_.size(); ++d) {
      const auto& below = layers_[d - 1];
      auto& here = layers_[d];
      for (std::size_t s = 0; s < below.size(); ++s)
        if (!below[s].is_zero()) here[s * n_ + (j - 1)] -= below[s];
    }
  }

  Series to_series(int degree) const {
    Series out(n_, degree);
    for (std::size_t d = 0; d < layers_.size(); ++d) {
      const auto& layer = layers_[d];
      for (std::size_t idx = 0; idx < layer.size(); ++idx) {
        if (layer[idx].is_zero()) continue;
        Sequence mono(d);
        std::size_t rest = idx;
        for (std::size_t p = d; p-- > 0;) {
          mono[p] = static_cast<int>(rest % n_) + 1;
          rest /= n_;
        }
        out.add(mono, layer[idx]);
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Integer>> layers_;
};

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

bool fits_dense(int n, int degree) {
  std::size_t total = 0, width = 1;
  for (int d = 0; d <= degree; ++d) {
    total += width;
    if (total > kDenseLimit) return false;
    width *= static_cast<std::size_t>(n);
  }
  return true;
}

Series inverse_generator(int n, int degree, int j) {
  Series s(n, degree);
  Sequence mono;
  for (int d = 0; d <= degree; ++d) {
    s.add(mono, d % 2 == 0 ? 1 : -1);
    mono.push_back(j);
  }
  return s;
}

}  // namespace

Series::Series(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw SemanticError("series needs at least one variable");
  if (degree < 0) throw SemanticError("truncation degree must be >= 0");
}

Series Series::one(int n, int degree) {
  Series s(n, degree);
  s.add({}, 1);
  return s;
}

Series Series::generator(int n, int degree, int i) {
  Series s = one(n, degree);
  s.add({i}, 1);
  return s;
}

Integer Series::coefficient(const Sequence& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Series::add(const Sequence& mono, const Integer& c) {
  if (static_cast<int>(mono.size()) > degree_ || c.is_zero()) return;
  for (int i : mono)
    if (i < 1 || i > n_)
      throw SemanticError("monomial index " + std::to_string(i) +
                          " outside 1.." + std::to_string(n_));
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Series::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

Series operator+(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series out(a.variables(), std::min(a.degree(), b.degree()));
  for (const auto& [m, c] : a.terms()) out.add(m, c);
  for (const auto& [m, c] : b.terms()) out.add(m, c);
  return out;
}

Series operator-(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series out(a.variables(), std::min(a.degree(), b.degree()));
  for (const auto& [m, c] : a.terms()) out.add(m, c);
  for (const auto& [m, c] : b.terms()) out.add(m, -c);
  return out;
}

Series mul(const Series& a, const Series& b) {
  check_compatible(a, b);
  const int degree = std::min(a.degree(), b.degree());
  Series out(a.variables(), degree);
  for (const auto& [ma, ca] : a.terms()) {
    if (static_cast<int>(ma.size()) > degree) break;  // ShortLex: sorted by size
    for (const auto& [mb, cb] : b.terms()) {
      if (static_cast<int>(ma.size() + mb.size()) > degree) break;
      Sequence m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

Series magnus(const Word& w, int degree) {
  const int n = w.strands();
  if (degree < 0) throw SemanticError("truncation degree must be >= 0");
  if (fits_dense(n, degree)) {
    DenseExpansion acc(n, degree);
    for (const Letter& l : w.letters()) {
      if (l.sign > 0)
        acc.times_generator(l.gen);
      else
        acc.times_inverse_generator(l.gen);
    }
    return acc.to_series(degree);
  }
  Series acc = Series::one(n, degree);
  for (const Letter& l : w.letters())
    acc = mul(acc, l.sign > 0 ? Series::generator(n, degree, l.gen)
                              : inverse_generator(n, degree, l.gen));
  return acc;
}

Integer coefficient(const Series& s, const Sequence& mono) {
  if (static_cast<int>(mono.size()) > s.degree())
    throw SemanticError("monomial of degree " + std::to_string(mono.size()) +
                        " exceeds truncation degree " +
                        std::to_string(s.degree()));
  return s.coefficient(mono);
}

bool is_repeated(const Sequence& seq) {
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] == seq[b]) return true;
  return false;
}

Series strip(const Series& s, const StripMode& mode) {
  Series out(s.variables(), s.degree());
  for (const auto& [m, c] : s.terms()) {
    const bool keep = std::visit(
        [&m](const auto& how) {
          using T = std::decay_t<decltype(how)>;
          if constexpr (std::is_same_v<T, DegreeBelow>)
            return static_cast<int>(m.size()) < how.k;
          else if constexpr (std::is_same_v<T, NonRepeated>)
            return !is_repeated(m);
          else
            return std::find(m.begin(), m.end(), how.i) == m.end();
        },
        mode);
    if (keep) out.add(m, c);
  }
  return out;
}

std::string to_string(const Series& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (m.empty()) continue;
    out += " * X[";
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(m[k]);
    }
    out += ']';
  }
  return out;
}

}  // namespace milnor4
