#include "milnor4/milnor.hpp"

#include <set>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Comparison compare_tables(const MilnorTable& a, const MilnorTable& b,
                          bool non_repeated_only) {
  Comparison out;
  for (const auto& [seq, ra] : a.entries()) {
    if (non_repeated_only && is_repeated(seq)) continue;
    const Residue& rb = b.at(seq);
    if (!(ra == rb)) {
      out.equal = false;
      out.witness = seq;
      out.left = ra;
      out.right = rb;
      return out;
    }
  }
  return out;
}

void check_same_strands(const GaussData& a, const GaussData& b) {
  if (a.strands() != b.strands())
    throw SemanticError("cannot compare string links on " +
                        std::to_string(a.strands()) + " and " +
                        std::to_string(b.strands()) + " strands");
}

}  // namespace

Residue::Residue(Integer value, Integer modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ < 0) throw SemanticError("residue modulus must be >= 0");
  if (modulus_ > 0) {
    value_ %= modulus_;
    if (value_ < 0) value_ += modulus_;
  }
}

std::string to_string(const Residue& r) {
  if (r.modulus().is_zero()) return r.value().str();
  return r.value().str() + " mod " + r.modulus().str();
}

MilnorTable::MilnorTable(int n, int max_length)
    : n_(n), max_length_(max_length) {
  if (n < 1) throw SemanticError("strand count must be positive");
}

const Residue& MilnorTable::at(const Sequence& seq) const {
  if (const Residue* r = find(seq)) return *r;
  throw SemanticError("table has no entry for sequence " +
                      sequence_to_string(seq, n_));
}

const Residue* MilnorTable::find(const Sequence& seq) const {
  auto it = entries_.find(seq);
  return it == entries_.end() ? nullptr : &it->second;
}

void MilnorTable::set(const Sequence& seq, Residue r) {
  for (int i : seq)
    if (i < 1 || i > n_)
      throw SemanticError("sequence index " + std::to_string(i) +
                          " outside 1.." + std::to_string(n_));
  entries_.insert_or_assign(seq, std::move(r));
}

std::vector<Sequence> all_sequences(int n, int min_length, int max_length) {
  std::vector<Sequence> out;
  for (int len = std::max(min_length, 0); len <= max_length; ++len) {
    Sequence s(static_cast<std::size_t>(len), 1);
    while (true) {
      out.push_back(s);
      int p = len - 1;
      while (p >= 0 && s[static_cast<std::size_t>(p)] == n) {
        s[static_cast<std::size_t>(p)] = 1;
        --p;
      }
      if (p < 0) break;
      ++s[static_cast<std::size_t>(p)];
    }
  }
  return out;
}

Integer delta(const MilnorTable& classical, const Sequence& seq) {
  const std::size_t len = seq.size();
  if (len > 20) throw SemanticError("sequence too long for indeterminacy");
  std::set<Sequence> seen;
  Integer g = 0;
  const std::size_t full = (std::size_t{1} << len) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    Sequence sub;
    for (std::size_t p = 0; p < len; ++p)
      if (mask & (std::size_t{1} << p)) sub.push_back(seq[p]);
    if (sub.size() < 2) continue;  // mu of a single index is 0
    for (std::size_t r = 0; r < sub.size(); ++r) {
      Sequence rot(sub.begin() + static_cast<std::ptrdiff_t>(r), sub.end());
      rot.insert(rot.end(), sub.begin(),
                 sub.begin() + static_cast<std::ptrdiff_t>(r));
      if (!seen.insert(rot).second) continue;
      g = gcd(g, classical.at(rot).value());
    }
  }
  return g;
}

Integer delta_bar(const MilnorTable& classical, const Sequence& seq) {
  return gcd(classical.at(seq).value(), delta(classical, seq));
}

MilnorTable mu4_from_longitudes(std::span<const Word> preferred, int max_length,
                                const MilnorTable* indeterminacy) {
  if (max_length < 2) throw SemanticError("max length must be >= 2");
  if (preferred.empty()) throw SemanticError("no longitudes given");
  const int n = static_cast<int>(preferred.size());
  if (indeterminacy) {
    if (indeterminacy->strands() != n)
      throw SemanticError("indeterminacy table is for " +
                          std::to_string(indeterminacy->strands()) +
                          " components, expected " + std::to_string(n));
    if (indeterminacy->max_length() < max_length)
      throw SemanticError("indeterminacy table stops at length " +
                          std::to_string(indeterminacy->max_length()) +
                          ", need " + std::to_string(max_length));
  }
  std::vector<Series> expansions;
  expansions.reserve(preferred.size());
  for (const Word& l : preferred) {
    if (l.strands() != n)
      throw SemanticError("longitude rank does not match component count");
    expansions.push_back(magnus(l, max_length - 1));
  }
  MilnorTable table(n, max_length);
  for (const Sequence& seq : all_sequences(n, 2, max_length)) {
    const Sequence prefix(seq.begin(), seq.end() - 1);
    Integer value =
        expansions[static_cast<std::size_t>(seq.back() - 1)].coefficient(prefix);
    Integer modulus = indeterminacy ? delta_bar(*indeterminacy, seq) : Integer(0);
    table.set(seq, Residue(std::move(value), std::move(modulus)));
  }
  return table;
}

MilnorTable mu4(const GaussData& d, int max_length,
                const MilnorTable* indeterminacy) {
  if (max_length < 2) throw SemanticError("max length must be >= 2");
  const auto ctx = QuotientContext::nilpotent(d.strands(), max_length);
  const GaussSolution sol = solve(d, ctx);
  return mu4_from_longitudes(sol.longitudes.preferred, max_length,
                             indeterminacy);
}

Comparison compare_link_homotopy(const GaussData& a, const GaussData& b) {
  check_same_strands(a, b);
  const int n = a.strands();
  if (n < 2) return {};
  return compare_tables(mu4(a, n), mu4(b, n), true);
}

Comparison compare_concordance(const GaussData& a, const GaussData& b, int k) {
  check_same_strands(a, b);
  if (k < 1) throw SemanticError("concordance grade must be >= 1");
  if (k < 2) return {};
  return compare_tables(mu4(a, k), mu4(b, k), false);
}

std::string sequence_to_string(const Sequence& seq, int n) {
  std::string out;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (n > 9 && p) out += ',';
    out += std::to_string(seq[p]);
  }
  return out;
}

}  // namespace milnor4
