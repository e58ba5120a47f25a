#pragma once

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "milnor4/milnor.hpp"
#include "milnor4/word.hpp"

namespace milnor4 {

/// One PD crossing: arc labels counterclockwise starting at the incoming
/// under-arc (so slots 0 -> 2 is the under passage, 1 <-> 3 the over
/// passage), and its sign as given by the input.
struct PDCrossing {
  std::array<int, 4> arcs{};
  int sign = 1;
};

/// Optional component ordering row: the arcs naming a component, and an
/// optional base arc (0 = lowest label).
struct PDComponentSpec {
  std::vector<int> arcs;
  int base = 0;
};

/// A link diagram given as a signed PD code. Construction orients every
/// component, orders components and fixes a base arc for each.
///
/// The crossing sign is taken from the input; orientation is inferred from
/// the under passages (incoming slot 0, outgoing slot 2). A component that
/// never passes under is oriented d -> b at positive crossings.
class PDDiagram {
 public:
  PDDiagram(std::vector<PDCrossing> crossings,
            std::vector<PDComponentSpec> components = {});

  struct Step {
    int arc;          ///< label of the arc being left
    int crossing;     ///< index of the crossing at its head
    bool under;       ///< whether the component passes under there
  };

  int components() const noexcept {
    return static_cast<int>(walks_.size());
  }
  const std::vector<PDCrossing>& crossings() const noexcept {
    return crossings_;
  }
  /// Traversal of component i (1-based) starting at its base arc.
  const std::vector<Step>& walk(int i) const;
  int base_arc(int i) const { return walk(i).front().arc; }
  /// Component owning an arc label.
  int component_of(int arc) const;
  /// Label of the over-arc entering crossing c.
  int incoming_over_arc(int c) const {
    return over_in_[static_cast<std::size_t>(c)];
  }

 private:
  std::vector<PDCrossing> crossings_;
  std::vector<std::vector<Step>> walks_;
  std::map<int, int> component_of_;
  std::vector<int> over_in_;
};

/// Parses crossings `X[a,b,c,d]+` / `X[a,b,c,d]-` and optional component
/// rows `C[arcs...]` or `C[arcs...;base]`; `#` starts a comment.
PDDiagram parse_pd(std::string_view text);

/// Wirtinger colour of every arc as a word in the base meridians, exact
/// modulo Gamma_k (k-1 substitution passes).
std::map<int, Word> chen_solve(const PDDiagram& d, int k);

/// Preferred longitudes (x_i exponent sum zero) modulo Gamma_k.
std::vector<Word> link_longitudes(const PDDiagram& d, int k);

/// Classical Milnor invariants, each reduced modulo Delta(I).
MilnorTable mu_link(const PDDiagram& d, int max_length);

}  // namespace milnor4
