// milnor4: Artin- and Milnor-type invariants of welded string links and
// classical Milnor invariants of PD diagrams.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "milnor4/autc.hpp"
#include "milnor4/classical.hpp"
#include "milnor4/error.hpp"
#include "milnor4/gauss.hpp"
#include "milnor4/io.hpp"
#include "milnor4/milnor.hpp"
#include "milnor4/nilpotent.hpp"

namespace {

using namespace milnor4;

enum class Format { Tsv, Json };

/// An I/O failure on an input named on the command line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `-` is stdin, an existing path is read, anything else is the text itself.
std::string read_source(const std::string& arg) {
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw InputError("cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Same integer convention as the table JSON: numbers when they fit.
nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::ordered_json residue_json(const Residue& r) {
  nlohmann::ordered_json j;
  j["value"] = integer_json(r.value());
  j["modulus"] = integer_json(r.modulus());
  return j;
}

std::string print_table(const MilnorTable& t, Format f) {
  return f == Format::Json ? table_to_json(t) : table_to_tsv(t);
}

std::string print_comparison(const Comparison& c, int n, Format f) {
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["equal"] = c.equal;
    if (c.witness) {
      j["witness"] = *c.witness;
      j["left"] = residue_json(c.left);
      j["right"] = residue_json(c.right);
    }
    return j.dump(2) + "\n";
  }
  if (c.equal) return "EQUAL\n";
  return "DISTINCT\t" + sequence_to_string(*c.witness, n) + "\t" +
         to_string(c.left) + "\t" + to_string(c.right) + "\n";
}

std::string print_conjugators(const ConjAut& f, Format fmt) {
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["quotient"] = to_string(f.context());
    auto list = nlohmann::ordered_json::array();
    for (const Word& w : f.conjugators()) list.push_back(to_string(w));
    j["conjugators"] = std::move(list);
    return j.dump(2) + "\n";
  }
  return conjugators_to_text(f.conjugators());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor invariants of welded string links and link diagrams",
               "milnor4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "milnor4 0.1.0");

  Format format = Format::Tsv;
  const std::map<std::string, Format> formats{{"tsv", Format::Tsv},
                                              {"json", Format::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  std::optional<int> strands;
  auto add_strands = [&](CLI::App* sub) {
    sub->add_option("-n,--strands", strands,
                    "Strand count for braid words (default: largest index)")
        ->check(CLI::PositiveNumber);
  };

  std::string input, other, ind_file, mode = "lh";
  int max_length = 0, grade = 0;
  bool reduced = false;

  auto* mu4_cmd = app.add_subcommand("mu4", "Milnor mu4 table of a string link");
  mu4_cmd->add_option("input", input, "Braid word, Gauss JSON, file or -")
      ->required();
  mu4_cmd->add_option("-m,--max-length", max_length, "Longest sequence")
      ->required();
  mu4_cmd->add_option("--indeterminacy", ind_file,
                      "Classical table (TSV) of the boundary link");
  add_strands(mu4_cmd);
  add_format(mu4_cmd);

  auto* cmp_cmd = app.add_subcommand("compare", "Compare two string links");
  cmp_cmd->add_option("a", input, "First string link")->required();
  cmp_cmd->add_option("b", other, "Second string link")->required();
  cmp_cmd->add_option("--mode", mode, "lh (link-homotopy) or conc")
      ->check(CLI::IsMember({"lh", "conc"}));
  auto* cmp_k = cmp_cmd->add_option("-k", grade,
                                    "Compare sequences up to this length");
  add_strands(cmp_cmd);
  add_format(cmp_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "Basis-conjugating automorphism");
  phi_cmd->add_option("input", input, "String link")->required();
  auto* phi_k = phi_cmd->add_option("-k", grade, "Nilpotent grade")
                    ->check(CLI::PositiveNumber);
  auto* phi_r = phi_cmd->add_flag("--reduced", reduced, "Reduced free group");
  phi_k->excludes(phi_r);
  add_strands(phi_cmd);
  add_format(phi_cmd);

  auto* rlz_cmd = app.add_subcommand("realize", "Gauss JSON realizing conjugators");
  rlz_cmd->add_option("input", input, "Conjugator text, file or -")->required();
  add_strands(rlz_cmd);

  auto* stk_cmd = app.add_subcommand("stack", "Stack a below b");
  stk_cmd->add_option("a", input, "Bottom string link")->required();
  stk_cmd->add_option("b", other, "Top string link")->required();
  add_strands(stk_cmd);

  auto* mir_cmd = app.add_subcommand("mirror", "Mirror image t -> 1-t");
  mir_cmd->add_option("input", input, "String link")->required();
  add_strands(mir_cmd);

  auto* cls_cmd = app.add_subcommand("classical", "Milnor invariants of a PD code");
  cls_cmd->add_option("input", input, "PD code, file or -")->required();
  cls_cmd->add_option("-m,--max-length", max_length, "Longest sequence")
      ->required();
  add_format(cls_cmd);

  try {
    app.parse(argc, argv);
    if (*cmp_cmd && mode == "conc" && cmp_k->count() == 0)
      throw CLI::ValidationError("--mode conc", "needs -k");
    if (*cmp_cmd && mode == "lh" && cmp_k->count() != 0)
      throw CLI::ValidationError("-k", "only applies to --mode conc");
    if (*phi_cmd && phi_k->count() == 0 && !reduced)
      throw CLI::ValidationError("phi", "needs -k or --reduced");
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    std::string out;
    if (*mu4_cmd) {
      const GaussData d = parse_string_link(read_source(input), strands);
      std::optional<MilnorTable> ind;
      if (!ind_file.empty())
        ind = table_from_tsv(read_file(ind_file), d.strands());
      out = print_table(mu4(d, max_length, ind ? &*ind : nullptr), format);
    } else if (*cmp_cmd) {
      const GaussData a = parse_string_link(read_source(input), strands);
      const GaussData b = parse_string_link(read_source(other), strands);
      const Comparison c = mode == "lh" ? compare_link_homotopy(a, b)
                                        : compare_concordance(a, b, grade);
      out = print_comparison(c, a.strands(), format);
    } else if (*phi_cmd) {
      const GaussData d = parse_string_link(read_source(input), strands);
      const auto ctx = reduced ? QuotientContext::reduced(d.strands())
                               : QuotientContext::nilpotent(d.strands(), grade);
      out = print_conjugators(from_gauss(d, ctx), format);
    } else if (*rlz_cmd) {
      out = gauss_to_json(realize(parse_conjugators(read_source(input), strands)));
    } else if (*stk_cmd) {
      const GaussData a = parse_string_link(read_source(input), strands);
      const GaussData b = parse_string_link(read_source(other), strands);
      out = gauss_to_json(stack(a, b));
    } else if (*mir_cmd) {
      out = gauss_to_json(mirror(parse_string_link(read_source(input), strands)));
    } else if (*cls_cmd) {
      out = print_table(mu_link(parse_pd(read_source(input)), max_length), format);
    }
    std::cout << out;
    std::cout.flush();
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "milnor4: parse error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "milnor4: " << e.what() << "\n";
    return 1;
  } catch (const SemanticError& e) {
    std::cerr << "milnor4: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "milnor4: internal error: " << e.what() << "\n";
    return 2;
  }
}
