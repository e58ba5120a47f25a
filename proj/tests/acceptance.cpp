// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "milnor4/autc.hpp"
#include "milnor4/classical.hpp"
#include "milnor4/error.hpp"
#include "milnor4/gauss.hpp"
#include "milnor4/io.hpp"
#include "milnor4/milnor.hpp"
#include "milnor4/nilpotent.hpp"
#include "support/oracles.hpp"

using namespace milnor4;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(MILNOR4_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GaussData braid(const char* text) { return parse_braid(text); }

std::string str(const Integer& v) { return v.str(); }

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<Word> commutator_tuple(std::mt19937& rng, int n, int weight) {
  std::vector<Word> f;
  for (int i = 1; i <= n; ++i)
    f.push_back(oracle::random_commutator(rng, n, weight));
  return f;
}

Outcome two_strand_pattern() {
  const auto ab = mu4(braid("a[1,2] a[2,1]"), 3);
  const auto ba = mu4(braid("a[2,1] a[1,2]"), 3);
  bool ok = true;
  for (const auto* t : {&ab, &ba})
    ok = ok && t->at({1, 2}) == Residue(1) && t->at({2, 1}) == Residue(1);
  const std::set<Integer> values{ab.at({1, 2, 2}).value(),
                                 ba.at({1, 2, 2}).value()};
  ok = ok && values == std::set<Integer>{0, 1};
  return {ok, "mu(122) = " + str(ab.at({1, 2, 2}).value()) + ", " +
                  str(ba.at({1, 2, 2}).value())};
}

Outcome homotopic_not_concordant() {
  const auto a = braid("a[1,2] a[2,1]");
  const auto b = braid("a[2,1] a[1,2]");
  const auto lh = compare_link_homotopy(a, b);
  const auto conc = compare_concordance(a, b, 3);
  std::string detail = std::string("lh ") + (lh.equal ? "EQUAL" : "DISTINCT") +
                       ", conc -k 3 " + (conc.equal ? "EQUAL" : "DISTINCT");
  if (conc.witness)
    detail += " witness " + sequence_to_string(*conc.witness, 2) + " (" +
              to_string(conc.left) + " vs " + to_string(conc.right) + ")";
  const bool ok = lh.equal && !conc.equal && conc.witness &&
                  *conc.witness == Sequence{1, 2, 2};
  if (!ok) detail += "; expected witness 122";
  return {ok, detail};
}

Outcome three_strand_pattern() {
  const auto x = mu4(braid("a[1,2] a[2,3]"), 3).at({1, 2, 3});
  const auto y = mu4(braid("a[2,3] a[1,2]"), 3).at({1, 2, 3});
  const std::set<Integer> values{x.value(), y.value()};
  const bool ok = x.modulus() == 0 && y.modulus() == 0 &&
                  values == std::set<Integer>{0, -1};
  return {ok, "mu(123) = " + to_string(x) + ", " + to_string(y)};
}

Outcome realization_round_trip() {
  const auto f = parse_conjugators(slurp("sl2.aut"));
  const auto d = realize(f);
  const auto normalized = parse_conjugators("1: x3\n2: 1\n3: x3 X2 X3\n");
  bool ok = gauss_to_json(d) == slurp("sl2.json");
  const auto sol = solve(d, QuotientContext::reduced(3));
  ok = ok && sol.longitudes.raw == f && sol.longitudes.preferred == normalized;
  std::vector<QuotientContext> contexts{QuotientContext::reduced(3)};
  for (int k = 1; k <= 4; ++k) contexts.push_back(QuotientContext::nilpotent(3, k));
  for (const auto& ctx : contexts) {
    const ConjAut phi = from_gauss(d, ctx);
    ok = ok && equal(phi, ConjAut(ctx, f)) &&
         std::vector<Word>(phi.conjugators().begin(), phi.conjugators().end()) ==
             normalized;
  }
  return {ok, "raw longitudes verbatim, preferred 1: x3 2: 1 3: x3 X2 X3"};
}

Outcome composition_law() {
  std::mt19937 rng(501);
  int pairs = 0, failures = 0;
  for (int t = 0; t < 600; ++t, ++pairs) {
    const int n = 1 + t % 3;
    const int k = 2 + (t / 3) % 3;
    const auto a = oracle::random_gauss(rng, n, 6);
    const auto b = oracle::random_gauss(rng, n, 6);
    const auto ctx = QuotientContext::nilpotent(n, k);
    if (!equal(from_gauss(stack(a, b), ctx),
               compose(from_gauss(b, ctx), from_gauss(a, ctx))))
      ++failures;
  }
  return {failures == 0, std::to_string(pairs) + " pairs, " +
                             std::to_string(failures) + " failures"};
}

Outcome inverse_law() {
  std::vector<GaussData> corpus;
  std::istringstream lines(slurp("corpus.txt"));
  for (std::string line; std::getline(lines, line);)
    if (!line.empty() && line.front() != '#')
      corpus.push_back(parse_string_link(line, 3));
  corpus.push_back(parse_string_link(slurp("sl2.json")));
  std::mt19937 rng(601);
  for (int t = 0; t < 200; ++t)
    corpus.push_back(oracle::random_gauss(rng, 2 + t % 3, 6));
  int failures = 0;
  for (const auto& d : corpus) {
    const auto both = stack(d, mirror(d));
    for (int k = 1; k <= 4; ++k) {
      const auto ctx = QuotientContext::nilpotent(d.strands(), k);
      if (!equal(from_gauss(both, ctx), ConjAut::identity(ctx))) ++failures;
    }
  }
  return {failures == 0, std::to_string(corpus.size()) + " diagrams x k = 1..4, " +
                             std::to_string(failures) + " failures"};
}

Outcome additivity() {
  std::mt19937 rng(701);
  int cases = 0, entries = 0, failures = 0;
  for (int n = 2; n <= 4; ++n)
    for (int l1 = 1; l1 <= 3; ++l1)
      for (int l2 = 1; l2 <= 3; ++l2)
        for (int rep = 0; rep < 3; ++rep, ++cases) {
          const int m = l1 + l2;
          const auto a = realize(commutator_tuple(rng, n, l1));
          const auto b = realize(commutator_tuple(rng, n, l2));
          const auto ta = mu4(a, m), tb = mu4(b, m), tab = mu4(stack(a, b), m);
          for (const auto& [seq, r] : tab.entries()) {
            ++entries;
            if (r.value() != ta.at(seq).value() + tb.at(seq).value()) ++failures;
          }
        }
  return {failures == 0, std::to_string(cases) + " pairs, " +
                             std::to_string(entries) + " entries, " +
                             std::to_string(failures) + " failures"};
}

Outcome classification_consistency() {
  std::mt19937 rng(801);
  int pairs = 0, agree = 0, equal_pairs = 0;
  for (int t = 0; t < 600; ++t, ++pairs) {
    const int n = 2 + t % 2;
    const auto a = oracle::random_gauss(rng, n, 5);
    const auto b = t % 3 ? oracle::random_gauss(rng, n, 5)
                         : stack(a, realize(commutator_tuple(rng, n, n)));
    const auto R = QuotientContext::reduced(n);
    const bool lh = classify_link_homotopy(a, b);
    if (lh == equal(from_gauss(a, R), from_gauss(b, R))) ++agree;
    if (lh) ++equal_pairs;
  }
  return {agree == pairs, std::to_string(agree) + "/" + std::to_string(pairs) +
                              " agree (" + std::to_string(equal_pairs) +
                              " homotopic)"};
}

Outcome reduced_nilpotency() {
  std::mt19937 rng(901);
  int samples = 0, failures = 0, shorter_nontrivial = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto R = QuotientContext::reduced(n);
    for (int t = 0; t < 60; ++t, ++samples) {
      ConjAut c = from_gauss(oracle::random_gauss(rng, n, 6), R);
      for (int j = 1; j < n; ++j) {
        if (j == n - 1 && !equal(c, ConjAut::identity(R))) ++shorter_nontrivial;
        c = group_commutator(c, from_gauss(oracle::random_gauss(rng, n, 6), R));
      }
      if (!equal(c, ConjAut::identity(R))) ++failures;
    }
  }
  return {failures == 0, std::to_string(samples) + " n-fold commutators, " +
                             std::to_string(failures) + " nontrivial; " +
                             std::to_string(shorter_nontrivial) +
                             " (n-1)-fold ones nontrivial"};
}

Outcome quotient_oracle() {
  std::vector<std::vector<Letter>> all{{}}, layer{{}};
  const Letter alphabet[] = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& s : layer)
      for (const auto& l : alphabet) {
        next.push_back(s);
        next.back().push_back(l);
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  int mismatches = 0;
  for (int k = 1; k <= 3; ++k) {
    const auto ctx = QuotientContext::nilpotent(2, k);
    for (const auto& s : all)
      if (is_trivial(Word(2, s), ctx) != oracle::in_lower_central_term(s, k))
        ++mismatches;
  }
  return {mismatches == 0, std::to_string(all.size()) + " words x k = 1..3, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome classical_links() {
  const int m = 5;
  const auto hopf = mu_link(parse_pd(slurp("hopf.pd")), m);
  bool ok = hopf.at({1, 2}) == Residue(1) && hopf.at({2, 1}) == Residue(1);
  int mixed = 0;
  for (const auto& [seq, r] : hopf.entries()) {
    const std::set<int> used(seq.begin(), seq.end());
    if (seq.size() >= 3 && used.size() == 2) {
      ++mixed;
      ok = ok && r.modulus() == 1;
    }
  }

  const auto bd = parse_pd(slurp("borromean.pd"));
  const auto borr = mu_link(bd, 3);
  const auto& r = borr.at({1, 2, 3});
  ok = ok && r.modulus() == 0 && abs(r.value()) == 1;
  const auto c = commutator(Word::generator(3, 1), Word::generator(3, 2));
  const auto e = oracle::magnus({c.letters().begin(), c.letters().end()}, 3, 2);
  const int s = r.value() == e.at({1, 2}) ? 1 : -1;
  ok = ok && equal(link_longitudes(bd, 3)[2], power(c, s),
                   QuotientContext::nilpotent(3, 3));
  return {ok, "Hopf mu(12) = " + to_string(hopf.at({1, 2})) + ", mu(21) = " +
                  to_string(hopf.at({2, 1})) + ", " + std::to_string(mixed) +
                  " mixed sequences mod 1; Borromean mu(123) = " + to_string(r)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "two-strand non-commutativity", 1, two_strand_pattern},
      {2, "link-homotopic, not concordant", 1, homotopic_not_concordant},
      {3, "three-strand non-commutativity", 1, three_strand_pattern},
      {4, "realization round trip", 1, realization_round_trip},
      {5, "stacking is composition", 60, composition_law},
      {6, "mirror is the inverse", 60, inverse_law},
      {7, "additivity", 60, additivity},
      {8, "classification consistency", 120, classification_consistency},
      {9, "reduced McCool nilpotency", 60, reduced_nilpotency},
      {10, "quotient oracle", 120, quotient_oracle},
      {11, "classical Hopf and Borromean", 5, classical_links},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %2d %s: %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL",
                c.id, c.name, o.detail.c_str(), secs, c.limit_seconds,
                in_time ? "" : ", too slow");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
