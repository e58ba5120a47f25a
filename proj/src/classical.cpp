#include "milnor4/classical.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

struct Occurrence {
  int crossing;
  int slot;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct RawStep {
  int arc;
  int crossing;
  int in_slot;
};

std::vector<RawStep> walk_from(int start, const Occurrence& head,
                               const std::vector<PDCrossing>& crossings,
                               const std::map<int, std::vector<Occurrence>>& occ) {
  std::vector<RawStep> steps;
  int arc = start;
  Occurrence at = head;
  while (true) {
    steps.push_back({arc, at.crossing, at.slot});
    const int out_slot = at.slot ^ 2;
    const int next = crossings[static_cast<std::size_t>(at.crossing)]
                         .arcs[static_cast<std::size_t>(out_slot)];
    if (next == start) break;
    const auto& o = occ.at(next);
    const Occurrence tail{at.crossing, out_slot};
    at = o[0] == tail ? o[1] : o[0];
    arc = next;
  }
  return steps;
}

}  // namespace

PDDiagram::PDDiagram(std::vector<PDCrossing> crossings,
                     std::vector<PDComponentSpec> specs)
    : crossings_(std::move(crossings)) {
  if (crossings_.empty()) throw SemanticError("PD code has no crossings");

  std::map<int, std::vector<Occurrence>> occ;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const PDCrossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1)
      throw SemanticError("crossing " + std::to_string(c) +
                          ": sign must be + or -");
    for (int s = 0; s < 4; ++s) {
      const int label = x.arcs[static_cast<std::size_t>(s)];
      if (label < 1)
        throw SemanticError("arc label " + std::to_string(label) +
                            " must be positive");
      occ[label].push_back({static_cast<int>(c), s});
    }
  }
  for (const auto& [label, list] : occ)
    if (list.size() != 2)
      throw SemanticError("arc " + std::to_string(label) + " appears " +
                          std::to_string(list.size()) +
                          " time(s); every arc must appear exactly twice");

  std::vector<std::vector<RawStep>> raw_walks;
  std::set<int> visited;
  for (const auto& [label, list] : occ) {
    if (visited.count(label)) continue;
    auto steps = walk_from(label, list[1], crossings_, occ);

    std::optional<bool> forward;
    for (const RawStep& s : steps) {
      if (s.in_slot % 2 != 0) continue;
      const bool f = s.in_slot == 0;
      if (forward && *forward != f)
        throw SemanticError("arc " + std::to_string(s.arc) +
                            ": under passages of its component disagree on "
                            "orientation");
      forward = f;
    }
    if (!forward) {
      const RawStep& s = steps.front();
      const int sign = crossings_[static_cast<std::size_t>(s.crossing)].sign;
      forward = (sign > 0) == (s.in_slot == 3);
    }
    if (!*forward) steps = walk_from(label, list[0], crossings_, occ);
    for (const RawStep& s : steps) visited.insert(s.arc);
    raw_walks.push_back(std::move(steps));
  }

  auto owner_of = [&raw_walks](int arc) -> int {
    for (std::size_t w = 0; w < raw_walks.size(); ++w)
      for (const RawStep& s : raw_walks[w])
        if (s.arc == arc) return static_cast<int>(w);
    return -1;
  };

  // Component order and base arcs.
  std::vector<std::pair<int, int>> order;  // (raw walk index, base arc)
  if (specs.empty()) {
    // raw walks were started from increasing smallest labels already
    for (std::size_t w = 0; w < raw_walks.size(); ++w) {
      int lowest = raw_walks[w].front().arc;
      for (const RawStep& s : raw_walks[w]) lowest = std::min(lowest, s.arc);
      order.emplace_back(static_cast<int>(w), lowest);
    }
  } else {
    if (specs.size() != raw_walks.size())
      throw SemanticError("component table lists " +
                          std::to_string(specs.size()) +
                          " components, diagram has " +
                          std::to_string(raw_walks.size()));
    std::set<int> taken;
    for (const PDComponentSpec& spec : specs) {
      if (spec.arcs.empty())
        throw SemanticError("empty component row in component table");
      const int w = owner_of(spec.arcs.front());
      if (w < 0)
        throw SemanticError("arc " + std::to_string(spec.arcs.front()) +
                            " in component table does not occur in the PD code");
      for (int a : spec.arcs)
        if (owner_of(a) != w)
          throw SemanticError("arc " + std::to_string(a) +
                              " is not on the same component as arc " +
                              std::to_string(spec.arcs.front()));
      if (!taken.insert(w).second)
        throw SemanticError("arc " + std::to_string(spec.arcs.front()) +
                            ": component listed twice in component table");
      int base = spec.base;
      if (base == 0) {
        base = raw_walks[static_cast<std::size_t>(w)].front().arc;
        for (const RawStep& s : raw_walks[static_cast<std::size_t>(w)])
          base = std::min(base, s.arc);
      } else if (owner_of(base) != w) {
        throw SemanticError("base arc " + std::to_string(base) +
                            " is not on its component");
      }
      order.emplace_back(w, base);
    }
  }

  over_in_.assign(crossings_.size(), 0);
  for (const auto& [w, base] : order) {
    const auto& steps = raw_walks[static_cast<std::size_t>(w)];
    auto start = std::find_if(steps.begin(), steps.end(),
                              [base](const RawStep& s) { return s.arc == base; });
    std::vector<Step> walk;
    for (std::size_t t = 0; t < steps.size(); ++t) {
      const RawStep& s =
          steps[(static_cast<std::size_t>(start - steps.begin()) + t) %
                steps.size()];
      const bool under = s.in_slot % 2 == 0;
      walk.push_back({s.arc, s.crossing, under});
      if (!under) over_in_[static_cast<std::size_t>(s.crossing)] = s.arc;
      component_of_[s.arc] = static_cast<int>(walks_.size()) + 1;
    }
    walks_.push_back(std::move(walk));
  }
}

const std::vector<PDDiagram::Step>& PDDiagram::walk(int i) const {
  if (i < 1 || i > components())
    throw SemanticError("component index " + std::to_string(i) +
                        " outside 1.." + std::to_string(components()));
  return walks_[static_cast<std::size_t>(i - 1)];
}

int PDDiagram::component_of(int arc) const {
  auto it = component_of_.find(arc);
  if (it == component_of_.end())
    throw SemanticError("no arc " + std::to_string(arc) + " in diagram");
  return it->second;
}

namespace {

class PDParser {
 public:
  explicit PDParser(std::string_view text) : text_(text) {}

  PDDiagram parse() {
    std::vector<PDCrossing> crossings;
    std::vector<PDComponentSpec> components;
    for (skip(); pos_ < text_.size(); skip()) {
      const char c = text_[pos_];
      if (c == 'X') {
        ++pos_;
        crossings.push_back(crossing());
      } else if (c == 'C') {
        ++pos_;
        components.push_back(component());
      } else {
        fail(std::string("expected 'X[' or 'C[', found '") + c + "'");
      }
    }
    return PDDiagram(std::move(crossings), std::move(components));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t p = 0; p < pos_ && p < text_.size(); ++p) {
      if (text_[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("PD code " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + what,
                     pos_);
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' ||
                 c == ';') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an arc label");
    if (pos_ - start > 9) fail("arc label too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  PDCrossing crossing() {
    PDCrossing x;
    expect('[');
    for (int s = 0; s < 4; ++s) {
      inline_space();
      if (s) {
        expect(',');
        inline_space();
      }
      x.arcs[static_cast<std::size_t>(s)] = integer();
    }
    inline_space();
    expect(']');
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      x.sign = text_[pos_] == '+' ? 1 : -1;
      ++pos_;
    } else {
      fail("crossing needs an explicit sign '+' or '-'");
    }
    return x;
  }

  PDComponentSpec component() {
    PDComponentSpec spec;
    expect('[');
    while (true) {
      inline_space();
      spec.arcs.push_back(integer());
      inline_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (pos_ < text_.size() && text_[pos_] == ';') {
      ++pos_;
      inline_space();
      spec.base = integer();
      inline_space();
    }
    expect(']');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PDDiagram parse_pd(std::string_view text) { return PDParser(text).parse(); }

std::map<int, Word> chen_solve(const PDDiagram& d, int k) {
  if (k < 2) throw SemanticError("Chen solve needs k >= 2");
  const int n = d.components();
  std::map<int, Word> colors;
  for (int i = 1; i <= n; ++i)
    for (const auto& step : d.walk(i))
      colors.insert_or_assign(step.arc, Word::generator(n, i));

  for (int pass = 1; pass < k; ++pass) {
    for (int i = 1; i <= n; ++i) {
      const auto& walk = d.walk(i);
      Word current = colors.at(walk.front().arc);
      for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
        const auto& step = walk[t];
        if (step.under) {
          const Word& o = colors.at(d.incoming_over_arc(step.crossing));
          const int sign =
              d.crossings()[static_cast<std::size_t>(step.crossing)].sign;
          current = sign > 0 ? invert(o) * current * o
                             : o * current * invert(o);
        }
        colors.insert_or_assign(walk[t + 1].arc, current);
      }
    }
  }
  return colors;
}

std::vector<Word> link_longitudes(const PDDiagram& d, int k) {
  const auto colors = chen_solve(d, k);
  const int n = d.components();
  std::vector<Word> out;
  for (int i = 1; i <= n; ++i) {
    Word raw(n);
    for (const auto& step : d.walk(i)) {
      if (!step.under) continue;
      const Word& o = colors.at(d.incoming_over_arc(step.crossing));
      raw *= d.crossings()[static_cast<std::size_t>(step.crossing)].sign > 0
                 ? o
                 : invert(o);
    }
    out.push_back(preferred_longitude(raw, i));
  }
  return out;
}

MilnorTable mu_link(const PDDiagram& d, int max_length) {
  if (max_length < 2) throw SemanticError("max length must be >= 2");
  const auto longitudes = link_longitudes(d, max_length);
  const MilnorTable raw = mu4_from_longitudes(longitudes, max_length);
  MilnorTable out(raw.strands(), max_length);
  for (const auto& [seq, r] : raw.entries())
    out.set(seq, Residue(r.value(), delta(raw, seq)));
  return out;
}

}  // namespace milnor4
