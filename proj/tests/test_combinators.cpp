#include <doctest.h>

#include "lawforge/catalog.hpp"
#include "lawforge/combinators.hpp"
#include "lawforge/errors.hpp"
#include "lawforge/eval.hpp"
#include "support.hpp"

using namespace lawforge;
using namespace lawforge::testing;

namespace {

Word W(const char* s) { return Word::parse(s); }

const std::vector<PermGroup>& small_groups() {
  static const std::vector<PermGroup> groups = [] {
    std::vector<PermGroup> out;
    for (const auto& e : catalog()) {
      if (e.order <= 24) out.push_back(build_entry(e));
    }
    return out;
  }();
  return groups;
}

std::vector<Word> random_tuple(Rng& rng, std::size_t m, std::size_t max_len) {
  std::vector<Word> ws;
  for (std::size_t i = 0; i < m; ++i) ws.push_back(Word::reduce(rng.nontrivial(max_len)));
  return ws;
}

}  // namespace

TEST_CASE("combine examples") {
  CHECK(combine(std::vector<Word>{W("abAB")}) == W("abAB"));
  const Word w = combine(std::vector<Word>{W("aa"), W("bb")});
  CHECK(w.str() == "aaabbAABBA");
  CHECK(w.length() == 10);
  // [a^2, c b^2 c^-1] with c = a, reduced by the naive model.
  CHECK(w.letters() == naive_commutator(flat_of("aa"), naive_conjugate(flat_of("bb"), flat_of("a"))));
  const Word psl = combine(std::vector<Word>{power(W("a"), 4), power(W("a"), 5), power(W("a"), 6)});
  CHECK(is_law(psl, build_named("PSL2(5)")).holds);
  CHECK_THROWS_AS(combine(std::vector<Word>{}), EmptyInput);
  CHECK_THROWS_AS(combine(std::vector<Word>{W("a"), Word()}), TrivialInput);
}

TEST_CASE("conjugator candidates in the fixed order") {
  std::vector<std::string> got;
  for (const Expr& c : conjugator_candidates()) got.push_back(c.word().str());
  CHECK(got == std::vector<std::string>{"a", "b", "A", "B", "aa", "ab", "aB", "ba", "bb", "bA", "Ab", "AB",
                                        "AA", "Ba", "BA", "BB"});
}

TEST_CASE("combine: superset, budget and nontriviality over 10^4 tuples") {
  Rng rng(41);
  const auto& groups = small_groups();
  for (int i = 0; i < 10000; ++i) {
    const std::size_t m = 1 + rng.below(4);
    const auto ws = random_tuple(rng, m, 6);
    const Word w = combine(ws);
    REQUIRE_FALSE(w.empty());
    Length max_len = 0;
    for (const auto& x : ws) max_len = std::max(max_len, x.length());
    REQUIRE(w.length() <= 16 * m * m * max_len);
    const PermGroup& g = groups[rng.below(groups.size())];
    const auto zw = vanishing_set(w, g);
    std::vector<bool> any(zw.size(), false);
    for (const auto& x : ws) {
      const auto zx = vanishing_set(x, g);
      for (std::size_t p = 0; p < zx.size(); ++p) any[p] = any[p] || zx[p];
    }
    for (std::size_t p = 0; p < zw.size(); ++p) {
      if (any[p] && !zw[p]) FAIL("superset violated on " << g.name());
    }
  }
}

TEST_CASE("combine budget on longer tuples") {
  Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t m = 1 + rng.below(12);
    const auto ws = random_tuple(rng, m, 30);
    std::vector<Bounded> parts;
    for (const auto& x : ws) parts.push_back({Expr::literal(x), BigInt(x.length())});
    const Bounded w = combine(parts);
    Length max_len = 0;
    for (const auto& x : ws) max_len = std::max(max_len, x.length());
    CHECK(w.word().length() <= 16 * m * m * max_len);
    CHECK(BigInt(w.word().length()) <= w.budget);
  }
}

TEST_CASE("conjugator existence over 10^5 random pairs") {
  Rng rng(43);
  std::size_t beyond_generators = 0;
  for (int i = 0; i < 100000; ++i) {
    const Word u = Word::reduce(rng.nontrivial(8)), v = Word::reduce(rng.nontrivial(8));
    bool found = false;
    for (std::size_t c = 0; c < conjugator_candidates().size() && !found; ++c) {
      found = !commute_in_free(u, conjugate(v, conjugator_candidates()[c].word()));
      if (found && c >= 4) ++beyond_generators;
    }
    REQUIRE(found);
    CHECK_NOTHROW(combine(std::vector<Word>{u, v}));
  }
  MESSAGE("pairs needing a length-2 conjugator: " << beyond_generators);
}

TEST_CASE("compose examples") {
  const Word w = compose(W("aa"), W("abAB"));
  CHECK(w == power(W("abAB"), 2));
  CHECK(w.length() == 8);
  CHECK(w.length() <= 2 * (4 + 2));
  CHECK(is_law(w, build_named("D4")).holds);
  CHECK(is_law(w, build_named("Q8")).holds);
  CHECK(is_law(w, build_named("D4")).pairs_checked == 64);
  CHECK_THROWS_AS(compose(Word(), W("a")), TrivialInput);
  CHECK_THROWS_AS(compose(W("a"), Word()), TrivialInput);
}

TEST_CASE("compose budget over 10^4 random pairs") {
  Rng rng(44);
  for (int i = 0; i < 10000; ++i) {
    const Word k = Word::reduce(rng.nontrivial(8)), q = Word::reduce(rng.nontrivial(8));
    const Word w = compose(k, q);
    REQUIRE_FALSE(w.empty());
    REQUIRE(w.length() <= k.length() * (q.length() + 2));
    // Equal to the substitution with the first separating generator.
    for (Letter x : {Letter::a, Letter::b, Letter::A, Letter::B}) {
      const Word qx = conjugate(q, Word::generator(x));
      if (!commute_in_free(q, qx)) {
        CHECK(w.letters() == naive_substitute(k.letters(), q.letters(), qx.letters()));
        break;
      }
    }
  }
}

TEST_CASE("compose on extension fixtures") {
  struct Fixture {
    const char* kernel;
    const char* quotient;
    const char* group;
    Word kernel_law;
    Word quotient_law;
  };
  const std::vector<Fixture> fixtures{
      {"C2xC2", "S3", "S4", W("aa"), derived_word(2)},
      {"C2", "C2xC2", "D4", W("aa"), W("abAB")},
      {"C2", "C2xC2", "Q8", W("aa"), W("abAB")},
  };
  for (const auto& f : fixtures) {
    CAPTURE(f.group);
    REQUIRE(is_law(f.kernel_law, build_named(f.kernel)).holds);
    REQUIRE(is_law(f.quotient_law, build_named(f.quotient)).holds);
    const PermGroup g = build_named(f.group);
    CHECK_FALSE(is_law(f.kernel_law, g).holds);
    CHECK_FALSE(is_law(f.quotient_law, g).holds);
    const LawReport r = is_law(compose(f.kernel_law, f.quotient_law), g);
    CHECK(r.holds);
    CHECK(r.pairs_checked == g.order() * g.order());
  }
}

TEST_CASE("series words: examples and lengths") {
  CHECK(lower_central_word(1) == W("a"));
  CHECK(lower_central_word(2).str() == "abAB");
  CHECK(derived_word(0) == W("a"));
  CHECK(derived_word(1).str() == "abAB");
  // Naive iteration of e_{k+1} = [e_k, b].
  Flat e = flat_of("a");
  for (unsigned k = 1; k <= 16; ++k) {
    CAPTURE(k);
    CHECK(lower_central_word(k).letters() == e);
    if (k >= 2) CHECK(e.size() == (std::size_t{1} << k));
    e = naive_commutator(e, flat_of("b"));
  }
  Length prev = 1;
  for (unsigned k = 1; k <= 8; ++k) {
    const Word d = derived_word(k);
    CHECK_FALSE(d.empty());
    CHECK(d.length() <= 4 * prev + 8);
    CHECK(d.length() <= Length(12) << (2 * k));
    prev = d.length();
  }
  // Naive iteration of d_{k+1} = [d_k, x d_k x^-1].
  Flat d = naive_commutator(flat_of("a"), flat_of("b"));
  for (unsigned k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(derived_word(k).letters() == d);
    for (const char* x : {"a", "b", "A", "B"}) {
      const Flat next = naive_commutator(d, naive_conjugate(d, flat_of(x)));
      if (!next.empty()) {
        d = next;
        break;
      }
    }
  }
}

TEST_CASE("series words vanish where the series ends") {
  CHECK(is_law(baseline_provider()->lower_central(3).expr, build_named("D4")).holds);
  CHECK(is_law(baseline_provider()->lower_central(3).expr, build_named("Q8")).holds);
  CHECK(is_law(derived_word(2), build_named("S3")).pairs_checked == 36);
  CHECK(is_law(derived_word(2), build_named("S3")).holds);
  CHECK(is_law(baseline_provider()->derived(3).expr, build_named("S4")).holds);
  CHECK_FALSE(is_law(baseline_provider()->derived(2).expr, build_named("S4")).holds);
  for (const auto& e : catalog()) {
    if (e.order > 200) continue;
    const PermGroup g = build_entry(e);
    for (unsigned k = 1; k <= 6; ++k) {
      if (e.nilpotency_class && *e.nilpotency_class < k) {
        CHECK_MESSAGE(is_law(baseline_provider()->lower_central(k).expr, g).holds, e.name << " k=" << k);
      }
    }
    for (unsigned k = 0; k <= 4; ++k) {
      if (e.derived_length && *e.derived_length <= k) {
        CHECK_MESSAGE(is_law(baseline_provider()->derived(k).expr, g).holds, e.name << " k=" << k);
      }
    }
  }
}

TEST_CASE("series words are not laws one step too early") {
  // e_k fails on a group of class exactly k, d_k on derived length k + 1.
  CHECK_FALSE(is_law(baseline_provider()->lower_central(2).expr, build_named("D4")).holds);
  CHECK_FALSE(is_law(baseline_provider()->lower_central(3).expr, build_named("D8")).holds);
  CHECK_FALSE(is_law(baseline_provider()->lower_central(4).expr, build_named("D16")).holds);
  CHECK_FALSE(is_law(baseline_provider()->derived(1).expr, build_named("S3")).holds);
}
