#include "milnor4/io.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "milnor4/error.hpp"

namespace milnor4 {

namespace {

using nlohmann::json;

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::size_t skip_blank(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_blank(text[pos])) ++pos;
  return pos;
}

int read_index(std::string_view text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (start == pos || pos - start > 6)
    throw ParseError(std::string(what) + ": expected an index at offset " +
                         std::to_string(start),
                     start);
  return std::stoi(std::string(text.substr(start, pos - start)));
}

void expect(std::string_view text, std::size_t& pos, char c, const char* what) {
  if (pos >= text.size() || text[pos] != c)
    throw ParseError(std::string(what) + ": expected '" + c + "' at offset " +
                         std::to_string(pos),
                     pos);
  ++pos;
}

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

}  // namespace

GaussData parse_braid(std::string_view text, std::optional<int> strands) {
  struct Token {
    int over, under, sign;
    std::size_t offset;
  };
  std::vector<Token> tokens;
  int largest = 0;
  for (std::size_t pos = skip_blank(text, 0); pos < text.size();
       pos = skip_blank(text, pos)) {
    const std::size_t start = pos;
    const char c = text[pos];
    if (c != 'a' && c != 'A')
      throw ParseError("braid: expected 'a[' or 'A[' at offset " +
                           std::to_string(pos),
                       pos);
    ++pos;
    expect(text, pos, '[', "braid");
    pos = skip_blank(text, pos);
    const int i = read_index(text, pos, "braid");
    pos = skip_blank(text, pos);
    expect(text, pos, ',', "braid");
    pos = skip_blank(text, pos);
    const int j = read_index(text, pos, "braid");
    pos = skip_blank(text, pos);
    expect(text, pos, ']', "braid");
    if (i < 1 || j < 1)
      throw ParseError("braid: strand indices start at 1 (offset " +
                           std::to_string(start) + ")",
                       start);
    tokens.push_back({i, j, c == 'a' ? 1 : -1, start});
    largest = std::max({largest, i, j});
  }
  const int n = strands.value_or(std::max(largest, tokens.empty() ? 2 : 1));
  if (n < 1) throw SemanticError("strand count must be positive");
  GaussData out(n);
  for (const Token& t : tokens) {
    if (t.over > n || t.under > n)
      throw SemanticError("braid: generator at offset " +
                          std::to_string(t.offset) + " uses a strand above " +
                          std::to_string(n));
    std::vector<std::vector<UnderEvent>> ev(static_cast<std::size_t>(n));
    ev[static_cast<std::size_t>(t.under - 1)].push_back({t.over, 0, t.sign});
    out = stack(out, GaussData(n, std::move(ev)));
  }
  return out;
}

GaussData gauss_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("Gauss JSON: ") + e.what(), e.byte);
  }
  try {
    const int n = doc.at("n").get<int>();
    const auto& strands = doc.at("strands");
    if (!strands.is_array())
      throw ParseError("Gauss JSON: \"strands\" must be an array", 0);
    std::vector<std::vector<UnderEvent>> events;
    for (const auto& strand : strands) {
      if (!strand.is_array())
        throw ParseError("Gauss JSON: each strand must be an array", 0);
      auto& list = events.emplace_back();
      for (const auto& e : strand)
        list.push_back({e.at("over").get<int>(), e.at("arc").get<int>(),
                        e.at("sign").get<int>()});
    }
    return GaussData(n, std::move(events));
  } catch (const json::exception& e) {
    throw ParseError(std::string("Gauss JSON: ") + e.what(), 0);
  }
}

std::string gauss_to_json(const GaussData& d) {
  std::ostringstream out;
  out << "{\n  \"n\": " << d.strands() << ",\n  \"strands\": [";
  for (int i = 1; i <= d.strands(); ++i) {
    out << (i == 1 ? "\n    [" : ",\n    [");
    bool first = true;
    for (const UnderEvent& e : d.events(i)) {
      out << (first ? "" : ", ") << "{\"over\": " << e.over_strand
          << ", \"arc\": " << e.over_arc << ", \"sign\": " << e.sign << "}";
      first = false;
    }
    out << "]";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

GaussData parse_string_link(std::string_view text, std::optional<int> strands) {
  const std::size_t pos = skip_blank(text, 0);
  if (pos < text.size() && text[pos] == '{') {
    GaussData d = gauss_from_json(text);
    if (strands && *strands != d.strands())
      throw SemanticError("Gauss JSON has " + std::to_string(d.strands()) +
                          " strands, expected " + std::to_string(*strands));
    return d;
  }
  return parse_braid(text, strands);
}

std::vector<Word> parse_conjugators(std::string_view text,
                                    std::optional<int> strands) {
  struct Entry {
    int index;
    std::size_t word_offset;
    std::string_view word;
  };
  std::vector<Entry> entries;
  int largest = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find_first_of("\n/;", begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(begin, end - begin);
    std::size_t p = skip_blank(line, 0);
    if (p < line.size() && line[p] != '#') {
      std::size_t pos = p;
      const int i = read_index(line, pos, "automorphism");
      pos = skip_blank(line, pos);
      if (pos >= line.size() || line[pos] != ':')
        throw ParseError("automorphism: expected ':' at offset " +
                             std::to_string(begin + pos),
                         begin + pos);
      ++pos;
      if (i < 1)
        throw ParseError("automorphism: generator indices start at 1", begin + p);
      entries.push_back({i, begin + pos, line.substr(pos)});
      largest = std::max(largest, i);
    }
    begin = end + 1;
  }
  const int n = strands.value_or(largest);
  if (n < 1) throw ParseError("automorphism: no entries", 0);
  std::vector<std::optional<Word>> conj(static_cast<std::size_t>(n));
  for (const Entry& e : entries) {
    if (e.index > n)
      throw SemanticError("automorphism: generator " + std::to_string(e.index) +
                          " above " + std::to_string(n));
    auto& slot = conj[static_cast<std::size_t>(e.index - 1)];
    if (slot)
      throw SemanticError("automorphism: generator " + std::to_string(e.index) +
                          " given twice");
    try {
      slot = parse_word(e.word, n);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), e.word_offset + err.position());
    }
  }
  std::vector<Word> out;
  for (int i = 1; i <= n; ++i) {
    auto& slot = conj[static_cast<std::size_t>(i - 1)];
    if (!slot)
      throw SemanticError("automorphism: no conjugator for generator " +
                          std::to_string(i));
    out.push_back(std::move(*slot));
  }
  return out;
}

std::string conjugators_to_text(std::span<const Word> conjugators) {
  std::string out;
  for (std::size_t i = 0; i < conjugators.size(); ++i)
    out += std::to_string(i + 1) + ": " + to_string(conjugators[i]) + "\n";
  return out;
}

std::string table_to_tsv(const MilnorTable& t) {
  std::string out;
  for (const auto& [seq, r] : t.entries())
    out += sequence_to_string(seq, t.strands()) + "\t" + r.value().str() +
           "\t" + r.modulus().str() + "\n";
  return out;
}

std::string table_to_json(const MilnorTable& t) {
  nlohmann::ordered_json doc;
  doc["n"] = t.strands();
  doc["max_length"] = t.max_length();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [seq, r] : t.entries()) {
    nlohmann::ordered_json e;
    e["sequence"] = seq;
    e["value"] = integer_to_json(r.value());
    e["modulus"] = integer_to_json(r.modulus());
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

MilnorTable table_from_tsv(std::string_view text, std::optional<int> strands) {
  struct Row {
    Sequence seq;
    Integer value, modulus;
  };
  std::vector<Row> rows;
  int largest = 0;
  std::size_t max_len = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(text.substr(begin, end - begin));
    std::istringstream fields(line);
    std::string seq_text, value_text, modulus_text, extra;
    if (!(fields >> seq_text) || seq_text.front() == '#') {
      begin = end + 1;
      continue;
    }
    if (!(fields >> value_text >> modulus_text) || (fields >> extra))
      throw ParseError("table: expected `sequence value modulus` at offset " +
                           std::to_string(begin),
                       begin);
    Row row;
    try {
      if (seq_text.find(',') != std::string::npos) {
        std::istringstream parts(seq_text);
        std::string part;
        while (std::getline(parts, part, ','))
          row.seq.push_back(std::stoi(part));
      } else {
        for (char c : seq_text) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("digit");
          row.seq.push_back(c - '0');
        }
      }
      row.value = Integer(value_text);
      row.modulus = Integer(modulus_text);
    } catch (const std::exception&) {
      throw ParseError("table: malformed row at offset " + std::to_string(begin),
                       begin);
    }
    for (int i : row.seq) largest = std::max(largest, i);
    max_len = std::max(max_len, row.seq.size());
    rows.push_back(std::move(row));
    begin = end + 1;
  }
  if (rows.empty()) throw ParseError("table: no rows", 0);
  MilnorTable t(strands.value_or(largest), static_cast<int>(max_len));
  for (Row& r : rows) t.set(r.seq, Residue(r.value, r.modulus));
  return t;
}

}  // namespace milnor4
