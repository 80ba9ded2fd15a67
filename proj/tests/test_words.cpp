#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "wrvar/constructions.hpp"
#include "wrvar/structure.hpp"
#include "wrvar/words.hpp"

using namespace wrvar;
using wrvar_tests::catalog_upto;

namespace {

// Witt's necklace count: the number of basic commutators of weight w on k
// generators, (1/w) * sum over d | w of mu(d) * k^(w/d).
std::uint64_t witt(std::uint32_t k, std::uint32_t w) {
  auto mu = [](std::uint32_t n) -> std::int64_t {
    std::int64_t m = 1;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  std::int64_t total = 0;
  for (std::uint32_t d = 1; d <= w; ++d) {
    if (w % d) continue;
    std::int64_t pw = 1;
    for (std::uint32_t i = 0; i < w / d; ++i) pw *= k;
    total += mu(d) * pw;
  }
  return static_cast<std::uint64_t>(total / w);
}

// Tuple scan with no caching, in the same canonical order as the library:
// over the used variables, ascending variable index, last one fastest.
LawCheckResult is_law_naive(const FiniteGroup& G, const Word& w) {
  std::set<std::uint32_t> used_set;
  for (const Syllable& s : w.syllables()) used_set.insert(s.var);
  std::vector<std::uint32_t> used(used_set.begin(), used_set.end());

  LawCheckResult res;
  res.exhaustive = true;
  std::vector<std::uint32_t> idx(used.size(), 0);
  std::vector<Perm> tuple(w.rank(), G.identity());
  while (true) {
    ++res.tuples_checked;
    for (std::size_t i = 0; i < used.size(); ++i) tuple[used[i]] = G.element(idx[i]);
    if (!evaluate(G, w, tuple).is_identity()) {
      res.status = LawStatus::Violated;
      res.violating_tuple = tuple;
      return res;
    }
    std::size_t v = used.size();
    while (v > 0) {
      --v;
      if (++idx[v] < G.order()) break;
      idx[v] = 0;
      if (v == 0) {
        res.status = LawStatus::Law;
        return res;
      }
    }
    if (used.empty()) {
      res.status = LawStatus::Law;
      return res;
    }
  }
}

Word random_word(std::mt19937_64& rng, std::uint32_t max_rank, std::uint32_t max_syllables) {
  std::uint32_t len = 1 + static_cast<std::uint32_t>(rng() % max_syllables);
  std::vector<Syllable> raw;
  for (std::uint32_t i = 0; i < len; ++i) {
    std::uint32_t var = static_cast<std::uint32_t>(rng() % max_rank);
    std::int32_t exp = static_cast<std::int32_t>(rng() % 5) - 2;
    raw.push_back({var, exp});
  }
  return Word(max_rank, std::move(raw));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce({{0, 1}, {0, -1}}).empty());
  CHECK(reduce({{0, 2}, {0, 3}}).syllables() == std::vector<Syllable>{{0, 5}});
  CHECK(reduce({{0, 1}, {1, 1}, {1, -1}, {0, 1}}).syllables() == std::vector<Syllable>{{0, 2}});
  CHECK(reduce({{0, 2}, {0, -2}, {1, 1}}).syllables() == std::vector<Syllable>{{1, 1}});

  Word w(0, {{0, 1}, {1, -2}});
  CHECK(w.rank() == 2);  // inferred from the largest variable
  CHECK(w.length() == 3);
  CHECK(w.used_vars() == 2);
  CHECK(Word(5, {{0, 1}}).rank() == 5);
  CHECK(Word(5, {{0, 1}}).used_vars() == 1);

  CHECK(w.inverse().syllables() == std::vector<Syllable>{{1, 2}, {0, -1}});
  CHECK(w.inverse().inverse() == w);
  CHECK(Word().empty());
}

TEST_CASE("commutator words") {
  Word x1(1, {{0, 1}});
  Word x2(2, {{1, 1}});
  CHECK(commutator_word(x1, x1).empty());
  CHECK(commutator_word(x1, x2).syllables() ==
        std::vector<Syllable>{{0, -1}, {1, -1}, {0, 1}, {1, 1}});
  CHECK(word_text(commutator_word(x1, x2)) == "x1^-1 x2^-1 x1 x2");

  CHECK(left_normed_commutator(1) == x1);
  CHECK(left_normed_commutator(2) == commutator_word(x1, x2));
  CHECK(left_normed_commutator(3).syllables().size() == 10);
  CHECK(left_normed_commutator(3).used_vars() == 3);
  CHECK_THROWS_AS(left_normed_commutator(0), BadParameter);
}

TEST_CASE("word text round trips") {
  CHECK(word_text(Word()) == "");
  CHECK(parse_word("").empty());
  CHECK(parse_word("x1") == Word(1, {{0, 1}}));
  CHECK(parse_word("x1^-1 x2") == Word(2, {{0, -1}, {1, 1}}));
  CHECK(parse_word("x1^2 x1^3") == Word(1, {{0, 5}}));
  CHECK(parse_word("x2 x2") == Word(2, {{1, 2}}));
  CHECK(parse_word("[x1,x2]") == commutator_word(Word(1, {{0, 1}}), Word(2, {{1, 1}})));
  CHECK(parse_word("[[x1,x2],x3]") == left_normed_commutator(3));
  CHECK(parse_word("[x1, x2]^2").length() == 8);
  CHECK(parse_word("[x1,x2]^-1") == commutator_word(Word(1, {{0, 1}}), Word(2, {{1, 1}})).inverse());
  CHECK(parse_word("x1^0").empty());
  CHECK(parse_word("x3^-4").syllables() == std::vector<Syllable>{{2, -4}});

  for (const char* text : {"x1^-1 x2^-1 x1 x2", "x1^5", "x2 x1^-3 x2", "x1"}) {
    Word w = parse_word(text);
    CHECK(word_text(w) == text);
    CHECK(parse_word(word_text(w)) == w);
  }

  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("x0"), ParseError);
  CHECK_THROWS_AS(parse_word("y1"), ParseError);
  CHECK_THROWS_AS(parse_word("[x1 x2]"), ParseError);
  CHECK_THROWS_AS(parse_word("[x1,x2"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^"), ParseError);
  CHECK_THROWS_AS(parse_word("x1]"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^99999999999999"), ParseError);
  CHECK_THROWS_AS(parse_word("[x1,x2]^999999"), ParseError);

  bool threw = false;
  try {
    parse_word("x1 ^^2");
  } catch (const ParseError& e) {
    threw = true;
    CHECK(e.position() == 4);
  }
  CHECK(threw);
}

TEST_CASE("hall basis") {
  // Weight-by-weight counts match the Witt formula.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    auto basis = basic_commutators(k, 5);
    for (const BasicCommutator& b : basis) ++counts[{k, b.weight}];
    // Collection order: weight first, then the printed bracket form.
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
      CHECK((basis[i].weight < basis[i + 1].weight ||
             (basis[i].weight == basis[i + 1].weight && basis[i].printed < basis[i + 1].printed)));
    }
  }
  std::vector<std::uint64_t> rank2 = {2, 1, 2, 3, 6};
  for (std::uint32_t w = 1; w <= 5; ++w) {
    CHECK(counts[{2, w}] == rank2[w - 1]);
    for (std::uint32_t k = 1; k <= 3; ++k) CHECK(counts[{k, w}] == witt(k, w));
  }

  auto b23 = basic_commutators(2, 3);
  REQUIRE(b23.size() == 5);
  CHECK(b23[0].printed == "x1");
  CHECK(b23[1].printed == "x2");
  CHECK(b23[2].printed == "[x2,x1]");
  CHECK(b23[3].printed == "[[x2,x1],x1]");
  CHECK(b23[4].printed == "[[x2,x1],x2]");
  CHECK(b23[2].word == commutator_word(Word(2, {{1, 1}}), Word(1, {{0, 1}})));
  CHECK_THROWS_AS(basic_commutators(0, 3), BadParameter);
}

TEST_CASE("word enumeration") {
  auto k1 = enumerate_words(1, 2);
  REQUIRE(k1.size() == 4);
  CHECK(word_text(k1[0]) == "x1");
  CHECK(word_text(k1[1]) == "x1^-1");
  CHECK(word_text(k1[2]) == "x1^2");
  CHECK(word_text(k1[3]) == "x1^-2");

  CHECK(enumerate_words(2, 1).size() == 4);
  CHECK(enumerate_words(2, 3).size() == 52);

  // Exactly-length-l counts: 2k(2k-1)^(l-1); every word reduced, none repeated.
  for (std::uint32_t k = 1; k <= 3; ++k) {
    auto words = enumerate_words(k, 3);
    std::map<std::uint64_t, std::uint64_t> by_len;
    std::set<std::string> texts;
    for (const Word& w : words) {
      ++by_len[w.length()];
      CHECK(texts.insert(word_text(w)).second);
      for (std::size_t i = 0; i + 1 < w.syllables().size(); ++i)
        CHECK(w.syllables()[i].var != w.syllables()[i + 1].var);
    }
    for (std::uint64_t l = 1; l <= 3; ++l) {
      std::uint64_t expect = 2 * k;
      for (std::uint64_t i = 1; i < l; ++i) expect *= 2 * k - 1;
      CHECK(by_len[l] == expect);
    }
  }

  WordEnumerator en(2, 0);
  CHECK_FALSE(en.next().has_value());
  CHECK_THROWS_AS(WordEnumerator(0, 3), BadParameter);
}

TEST_CASE("evaluation") {
  FiniteGroup d4 = dihedral_group(4);
  Perm r({1, 2, 3, 0});  // the rotation (1 2 3 4)
  Perm f({2, 1, 0, 3});  // the flip (1 3)
  REQUIRE(d4.contains(r));
  REQUIRE(d4.contains(f));
  Perm comm = evaluate(d4, parse_word("[x1,x2]"), {r, f});
  CHECK_FALSE(comm.is_identity());
  CHECK(comm == r * r);  // [r, f] = r^-2 = r^2, the central rotation

  CHECK(evaluate(d4, Word(), {}).is_identity());
  CHECK(evaluate(d4, parse_word("x1^4"), {r}).is_identity());
  CHECK_THROWS_AS(evaluate(d4, parse_word("x1 x2"), {r}), ArityMismatch);
  FiniteGroup c3 = cyclic_group(3);
  CHECK_THROWS_AS(evaluate(c3, parse_word("x1"), {Perm({1, 0, 2})}), ForeignElement);

  // Evaluation respects free reduction.
  std::mt19937_64 rng(99);
  for (const auto& [name, G] : catalog_upto(12)) {
    for (int t = 0; t < 30; ++t) {
      std::vector<Syllable> raw;
      std::uint32_t len = 1 + static_cast<std::uint32_t>(rng() % 6);
      for (std::uint32_t i = 0; i < len; ++i)
        raw.push_back({static_cast<std::uint32_t>(rng() % 3),
                       static_cast<std::int32_t>(rng() % 5) - 2});
      std::vector<Perm> tuple;
      for (int v = 0; v < 3; ++v)
        tuple.push_back(G.element(static_cast<std::uint32_t>(rng() % G.order())));
      Perm direct = G.identity();
      for (const Syllable& s : raw) direct = direct * tuple[s.var].power(s.exp);
      CHECK(evaluate(G, Word(3, raw), tuple) == direct);
    }
  }
}

TEST_CASE("exhaustive law checking") {
  FiniteGroup c6 = cyclic_group(6);
  LawCheckResult r1 = is_law(c6, parse_word("[x1,x2]"), ExhaustiveMode{});
  CHECK(r1.status == LawStatus::Law);
  CHECK(r1.exhaustive);
  CHECK(r1.tuples_checked == 36);
  CHECK_FALSE(r1.violating_tuple.has_value());

  FiniteGroup d4 = dihedral_group(4);
  LawCheckResult r2 = is_law(d4, parse_word("x1^4"), ExhaustiveMode{});
  CHECK(r2.status == LawStatus::Law);
  CHECK(r2.tuples_checked == 8);

  LawCheckResult r3 = is_law(d4, parse_word("[x1,x2]"), ExhaustiveMode{});
  CHECK(r3.status == LawStatus::Violated);
  REQUIRE(r3.violating_tuple.has_value());
  CHECK(r3.violating_tuple->size() == 2);
  // First violating pair in canonical element order, found without scanning
  // the full 64 tuples.
  CHECK(r3.tuples_checked == 11);
  CHECK((*r3.violating_tuple)[0].cycle_string() == "(2 4)");
  CHECK((*r3.violating_tuple)[1].cycle_string() == "(1 2)(3 4)");
  CHECK_FALSE(evaluate(d4, parse_word("[x1,x2]"), *r3.violating_tuple).is_identity());

  // Unused variables do not blow up the scan, and violating tuples come back
  // at full rank with identity padding.
  LawCheckResult r4 = is_law(c6, parse_word("x1 x3"), ExhaustiveMode{});
  CHECK(r4.status == LawStatus::Violated);
  REQUIRE(r4.violating_tuple.has_value());
  CHECK(r4.violating_tuple->size() == 3);
  CHECK((*r4.violating_tuple)[1].is_identity());

  LawCheckResult r5 = is_law(c6, Word(), ExhaustiveMode{});
  CHECK(r5.status == LawStatus::Law);

  CHECK_THROWS_AS(is_law(d4, parse_word("[x1,x2]"), ExhaustiveMode{}, 10), ScanCapExceeded);

  // x1^e is a law exactly when the exponent divides e.
  for (const auto& [name, G] : catalog_upto(16)) {
    INFO(name);
    std::uint64_t e = exponent(G);
    CHECK(is_law(G, Word(1, {{0, static_cast<std::int32_t>(e)}}), ExhaustiveMode{}).status ==
          LawStatus::Law);
    for (std::uint64_t d = 1; d < e; ++d) {
      auto res = is_law(G, Word(1, {{0, static_cast<std::int32_t>(d)}}), ExhaustiveMode{});
      CHECK((res.status == LawStatus::Law) == (d % e == 0));
    }
  }
}

TEST_CASE("sampled law checking") {
  FiniteGroup c6 = cyclic_group(6);
  LawCheckResult r1 = is_law(c6, parse_word("[x1,x2]"), SampledMode{500, 7});
  CHECK(r1.status == LawStatus::SampledNoViolation);  // sampling can never certify a law
  CHECK_FALSE(r1.exhaustive);
  CHECK(r1.tuples_checked == 500);
  CHECK(r1.seed == 7);

  FiniteGroup d4 = dihedral_group(4);
  LawCheckResult r2 = is_law(d4, parse_word("[x1,x2]"), SampledMode{10000, 3});
  CHECK(r2.status == LawStatus::Violated);
  REQUIRE(r2.violating_tuple.has_value());
  CHECK_FALSE(evaluate(d4, parse_word("[x1,x2]"), *r2.violating_tuple).is_identity());

  // Deterministic replay: the same seed and count reproduce the same tuple.
  LawCheckResult r3 = is_law(d4, parse_word("[x1,x2]"), SampledMode{r2.tuples_checked, 3});
  CHECK(r3.status == LawStatus::Violated);
  CHECK(r3.tuples_checked == r2.tuples_checked);
  CHECK(*r3.violating_tuple == *r2.violating_tuple);
}

TEST_CASE("exhaustive scan agrees with the naive loop") {
  std::mt19937_64 rng(2026);
  std::vector<wrvar_tests::NamedGroup> groups;
  for (auto& g : catalog_upto(12)) groups.push_back(std::move(g));
  for (int t = 0; t < 50; ++t) {
    Word w = random_word(rng, 3, 5);
    const auto& [name, G] = groups[t % groups.size()];
    INFO(name << " word " << word_text(w));
    LawCheckResult fast = is_law(G, w, ExhaustiveMode{});
    LawCheckResult naive = is_law_naive(G, w);
    CHECK(fast.status == naive.status);
    CHECK(fast.tuples_checked == naive.tuples_checked);
    CHECK(fast.violating_tuple == naive.violating_tuple);
  }
}

TEST_CASE("class-2 groups are exactly the ones satisfying the weight-3 commutator law") {
  Word gamma3 = left_normed_commutator(3);
  for (const auto& [name, G] : catalog_upto(100)) {
    INFO(name);
    auto cls = nilpotency_class(G);
    bool law = is_law(G, gamma3, ExhaustiveMode{}).status == LawStatus::Law;
    CHECK(law == (cls.has_value() && *cls <= 2));
  }
}
