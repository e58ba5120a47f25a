#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor4/autc.hpp"
#include "milnor4/gauss.hpp"
#include "milnor4/milnor.hpp"

namespace milnor4 {

/// Braid DSL: whitespace-separated `a[i,j]` (strand j passes positively
/// under arc 0 of strand i, the generator x_j -> x_i^-1 x_j x_i) and
/// `A[i,j]` (its inverse), stacked bottom to top. Without `strands` the
/// strand count is the largest index used (2 for the empty word).
GaussData parse_braid(std::string_view text,
                      std::optional<int> strands = std::nullopt);

/// `{"n": 3, "strands": [[{"over": 1, "arc": 0, "sign": 1}, ...], ...]}`
GaussData gauss_from_json(std::string_view text);
std::string gauss_to_json(const GaussData& d);

/// Either Gauss JSON (first non-blank character `{`) or the braid DSL.
GaussData parse_string_link(std::string_view text,
                            std::optional<int> strands = std::nullopt);

/// Conjugator text: one `i: <word>` entry per generator, separated by
/// newlines, `/` or `;`. Every index 1..n must appear exactly once, where n
/// is the largest index present unless given.
std::vector<Word> parse_conjugators(std::string_view text,
                                    std::optional<int> strands = std::nullopt);
std::string conjugators_to_text(std::span<const Word> conjugators);

/// `sequence<TAB>value<TAB>modulus` lines in ShortLex order.
std::string table_to_tsv(const MilnorTable& t);
std::string table_to_json(const MilnorTable& t);
/// Reads the TSV form back; n and max length are taken from the entries
/// unless given.
MilnorTable table_from_tsv(std::string_view text,
                           std::optional<int> strands = std::nullopt);

}  // namespace milnor4
