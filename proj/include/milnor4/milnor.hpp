#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "milnor4/gauss.hpp"
#include "milnor4/magnus.hpp"

namespace milnor4 {

/// Residue class `value mod modulus`; modulus 0 means an exact integer.
/// For modulus > 0 the representative lies in [0, modulus).
class Residue {
 public:
  Residue() = default;
  explicit Residue(Integer value, Integer modulus = 0);

  const Integer& value() const noexcept { return value_; }
  const Integer& modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Integer value_ = 0;
  Integer modulus_ = 0;
};

std::string to_string(const Residue& r);

/// Milnor invariants indexed by sequences of length 2..max_length over
/// 1..n. The last index of a sequence selects the longitude, the prefix
/// selects the monomial.
class MilnorTable {
 public:
  using Entries = std::map<Sequence, Residue, ShortLex>;

  MilnorTable(int n, int max_length);

  int strands() const noexcept { return n_; }
  int max_length() const noexcept { return max_length_; }
  const Entries& entries() const noexcept { return entries_; }

  /// Throws SemanticError if `seq` is not stored.
  const Residue& at(const Sequence& seq) const;
  const Residue* find(const Sequence& seq) const;
  void set(const Sequence& seq, Residue r);

  friend bool operator==(const MilnorTable&, const MilnorTable&) = default;

 private:
  int n_;
  int max_length_;
  Entries entries_;
};

/// All sequences over 1..n with lengths in [min_length, max_length], in
/// ShortLex order.
std::vector<Sequence> all_sequences(int n, int min_length, int max_length);

/// Delta(I): gcd of the table values over every sequence obtained from I by
/// deleting at least one index and rotating cyclically. Length-1 sequences
/// contribute 0; the gcd of nothing is 0.
Integer delta(const MilnorTable& classical, const Sequence& seq);
/// gcd(mu(I), Delta(I)).
Integer delta_bar(const MilnorTable& classical, const Sequence& seq);
inline Integer indeterminacy(const MilnorTable& classical, const Sequence& seq) {
  return delta_bar(classical, seq);
}

/// Table from preferred longitudes: entry I = i_1..i_{m-1} i is the
/// coefficient of X_{i_1}..X_{i_{m-1}} in E(l_i), reduced modulo
/// delta_bar(I) when a classical table of the boundary link is supplied.
MilnorTable mu4_from_longitudes(std::span<const Word> preferred, int max_length,
                                const MilnorTable* indeterminacy = nullptr);

/// Milnor mu^(4) table of a welded string link (boundary O_n unless an
/// indeterminacy table is given).
MilnorTable mu4(const GaussData& d, int max_length,
                const MilnorTable* indeterminacy = nullptr);

/// Result of a classification query: the first sequence (ShortLex) on which
/// the two tables differ, if any.
struct Comparison {
  bool equal = true;
  std::optional<Sequence> witness;
  Residue left;
  Residue right;
};

/// Link-homotopy: compares mu4 on non-repeated sequences of length 2..n.
Comparison compare_link_homotopy(const GaussData& a, const GaussData& b);
/// Concordance up to length k: compares mu4 on every sequence of length
/// 2..k. Agrees with equality of phi in N_{k+1} F_n.
Comparison compare_concordance(const GaussData& a, const GaussData& b, int k);

inline bool classify_link_homotopy(const GaussData& a, const GaussData& b) {
  return compare_link_homotopy(a, b).equal;
}
inline bool classify_concordance_k(const GaussData& a, const GaussData& b,
                                   int k) {
  return compare_concordance(a, b, k).equal;
}

/// `12` when every index is a single digit (n <= 9), `1,12` otherwise.
std::string sequence_to_string(const Sequence& seq, int n);

}  // namespace milnor4
