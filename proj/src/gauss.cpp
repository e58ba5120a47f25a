#include "milnor4/gauss.hpp"

#include <algorithm>
#include <string>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

void check_same_strands(const GaussData& a, const GaussData& b) {
  if (a.strands() != b.strands())
    throw SemanticError("string links on different strand counts (" +
                        std::to_string(a.strands()) + " vs " +
                        std::to_string(b.strands()) + ")");
}

}  // namespace

GaussData::GaussData(int n) {
  if (n < 1) throw SemanticError("strand count must be positive");
  events_.resize(static_cast<std::size_t>(n));
}

GaussData::GaussData(int n, std::vector<std::vector<UnderEvent>> events)
    : events_(std::move(events)) {
  if (n < 1) throw SemanticError("strand count must be positive");
  if (static_cast<int>(events_.size()) != n)
    throw SemanticError("expected event lists for " + std::to_string(n) +
                        " strands, got " + std::to_string(events_.size()));
  for (int i = 1; i <= n; ++i) {
    const auto& list = events_[static_cast<std::size_t>(i - 1)];
    for (std::size_t t = 0; t < list.size(); ++t) {
      const UnderEvent& e = list[t];
      const std::string where = "strand " + std::to_string(i) + " event " +
                                std::to_string(t);
      if (e.over_strand < 1 || e.over_strand > n)
        throw SemanticError(where + ": over strand " +
                            std::to_string(e.over_strand) + " outside 1.." +
                            std::to_string(n));
      const auto arcs =
          events_[static_cast<std::size_t>(e.over_strand - 1)].size() + 1;
      if (e.over_arc < 0 || static_cast<std::size_t>(e.over_arc) >= arcs)
        throw SemanticError(where + ": strand " +
                            std::to_string(e.over_strand) + " has no arc " +
                            std::to_string(e.over_arc));
      if (e.sign != 1 && e.sign != -1)
        throw SemanticError(where + ": sign must be +1 or -1");
    }
  }
}

const std::vector<UnderEvent>& GaussData::events(int i) const {
  if (i < 1 || i > strands())
    throw SemanticError("strand index " + std::to_string(i) + " outside 1.." +
                        std::to_string(strands()));
  return events_[static_cast<std::size_t>(i - 1)];
}

std::size_t GaussData::total_events() const noexcept {
  std::size_t s = 0;
  for (const auto& list : events_) s += list.size();
  return s;
}

Word preferred_longitude(const Word& raw, int i) {
  const int e = exponent_sum(raw, i);
  return power(Word::generator(raw.strands(), i), -e) * raw;
}

GaussSolution solve(const GaussData& d, const QuotientContext& ctx) {
  if (ctx.strands() != d.strands())
    throw SemanticError("quotient context rank does not match strand count");
  return solve(d, ctx.passes());
}

GaussSolution solve(const GaussData& d, int passes) {
  const int n = d.strands();
  GaussSolution out;
  out.colors.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    out.colors[static_cast<std::size_t>(j - 1)].assign(
        static_cast<std::size_t>(d.arc_count(j)), Word::generator(n, j));

  auto color = [&out](int strand, int arc) -> const Word& {
    return out.colors[static_cast<std::size_t>(strand - 1)]
                     [static_cast<std::size_t>(arc)];
  };

  for (int pass = 0; pass < passes; ++pass) {
    for (int i = 1; i <= n; ++i) {
      const auto& list = d.events(i);
      auto& arcs = out.colors[static_cast<std::size_t>(i - 1)];
      for (std::size_t t = 0; t < list.size(); ++t) {
        const UnderEvent& e = list[t];
        const Word c = color(e.over_strand, e.over_arc);
        const Word ci = invert(c);
        arcs[t + 1] = e.sign > 0 ? ci * arcs[t] * c : c * arcs[t] * ci;
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    Word raw(n);
    for (const UnderEvent& e : d.events(i)) {
      const Word& c = color(e.over_strand, e.over_arc);
      raw *= e.sign > 0 ? c : invert(c);
    }
    out.longitudes.preferred.push_back(preferred_longitude(raw, i));
    out.longitudes.raw.push_back(std::move(raw));
  }
  return out;
}

GaussData stack(const GaussData& a, const GaussData& b) {
  check_same_strands(a, b);
  const int n = a.strands();
  std::vector<std::vector<UnderEvent>> events(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& list = events[static_cast<std::size_t>(i - 1)];
    list = a.events(i);
    for (UnderEvent e : b.events(i)) {
      // Arc 0 of b's strand j continues the top arc of a's strand j.
      e.over_arc += static_cast<int>(a.events(e.over_strand).size());
      list.push_back(e);
    }
  }
  return GaussData(n, std::move(events));
}

GaussData mirror(const GaussData& d) {
  const int n = d.strands();
  std::vector<std::vector<UnderEvent>> events(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto& src = d.events(i);
    auto& list = events[static_cast<std::size_t>(i - 1)];
    for (auto it = src.rbegin(); it != src.rend(); ++it) {
      const int m = static_cast<int>(d.events(it->over_strand).size());
      list.push_back({it->over_strand, m - it->over_arc, -it->sign});
    }
  }
  return GaussData(n, std::move(events));
}

GaussData realize(std::span<const Word> conjugators) {
  if (conjugators.empty())
    throw SemanticError("realize needs at least one conjugator");
  const int n = static_cast<int>(conjugators.size());
  std::vector<std::vector<UnderEvent>> events(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Word& l = conjugators[static_cast<std::size_t>(i - 1)];
    if (l.strands() != n)
      throw SemanticError("conjugator " + std::to_string(i) + " lives in F_" +
                          std::to_string(l.strands()) + ", expected F_" +
                          std::to_string(n));
    for (const Letter& x : l.letters())
      events[static_cast<std::size_t>(i - 1)].push_back({x.gen, 0, x.sign});
  }
  return GaussData(n, std::move(events));
}

GaussData conjugate_by(const GaussData& x, const GaussData& c) {
  check_same_strands(x, c);
  return stack(stack(x, c), mirror(x));
}

}  // namespace milnor4
