#pragma once

#include <span>
#include <vector>

#include "milnor4/nilpotent.hpp"
#include "milnor4/word.hpp"

namespace milnor4 {

/// One classical crossing seen from below: the strand carrying the event
/// passes under arc `over_arc` (0-based, counted bottom to top) of strand
/// `over_strand` with crossing sign `sign`.
struct UnderEvent {
  int over_strand = 1;
  int over_arc = 0;
  int sign = 1;

  friend bool operator==(const UnderEvent&, const UnderEvent&) = default;
};

/// A welded string link on n strands, oriented bottom to top, stored as the
/// ordered under-crossing events of each strand. Virtual crossings and
/// over-crossing positions carry no group information and are not stored.
///
/// Strand j with m under-events is cut into m+1 arcs; arc 0 starts at the
/// bottom and carries the bottom meridian x_j.
class GaussData {
 public:
  /// The trivial string link on n strands.
  explicit GaussData(int n);
  GaussData(int n, std::vector<std::vector<UnderEvent>> events);

  int strands() const noexcept { return static_cast<int>(events_.size()); }
  /// Events of strand i (1-based), bottom to top.
  const std::vector<UnderEvent>& events(int i) const;
  int arc_count(int i) const { return static_cast<int>(events(i).size()) + 1; }
  std::size_t total_events() const noexcept;

  friend bool operator==(const GaussData&, const GaussData&) = default;

 private:
  std::vector<std::vector<UnderEvent>> events_;
};

/// Longitudes in bottom meridians. `raw[i-1]` is the product of the
/// over-arc colours met along strand i; `preferred[i-1]` is raw
/// left-multiplied by the power of x_i that zeroes its x_i exponent sum.
struct LongitudeSet {
  std::vector<Word> raw;
  std::vector<Word> preferred;
};

struct GaussSolution {
  /// colors[i-1][t]: colour of arc t of strand i as a word in x_1..x_n.
  std::vector<std::vector<Word>> colors;
  LongitudeSet longitudes;
};

/// Colours every arc by iterated substitution through the crossing rule
///   colour(arc t+1) = c^-sign * colour(arc t) * c^sign,
/// c being the current colour of the over-arc. Each pass makes every colour
/// exact one lower-central-series step deeper; `ctx.passes()` passes make
/// the colours exact in the quotient `ctx`.
GaussSolution solve(const GaussData& d, const QuotientContext& ctx);
GaussSolution solve(const GaussData& d, int passes);

/// x_i^-e * raw with e the x_i exponent sum of raw.
Word preferred_longitude(const Word& raw, int i);

/// a below b.
GaussData stack(const GaussData& a, const GaussData& b);
/// Image under t -> 1-t: event lists reversed, signs flipped, arc indices
/// mirrored.
GaussData mirror(const GaussData& d);
/// Diagram whose strand i passes, in order, under the bottom arcs of the
/// strands named by the letters of conjugators[i-1]; its raw longitudes are
/// the conjugators verbatim.
GaussData realize(std::span<const Word> conjugators);
/// x . c . mirror(x)
GaussData conjugate_by(const GaussData& x, const GaussData& c);

}  // namespace milnor4
