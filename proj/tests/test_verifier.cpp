#include <doctest.h>

#include "lawforge/catalog.hpp"
#include "lawforge/errors.hpp"
#include "lawforge/verifier.hpp"
#include "support.hpp"

using namespace lawforge;
using namespace lawforge::testing;

namespace {

// Every reduced word of the given length, lexicographic in a < A < b < B.
std::vector<Flat> all_words(std::size_t len) {
  std::vector<Flat> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Flat> next;
    for (const Flat& w : out) {
      for (Letter l : {Letter::a, Letter::A, Letter::b, Letter::B}) {
        if (!w.empty() && w.back() == inverse(l)) continue;
        Flat x = w;
        x.push_back(l);
        next.push_back(x);
      }
    }
    out = std::move(next);
  }
  return out;
}

bool brute_is_law(const Flat& w, const PermGroup& g) {
  for (const Perm& x : g.elements()) {
    for (const Perm& y : g.elements()) {
      if (!naive_eval(w, x, y).is_identity()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("family names and scopes") {
  for (Family f : {Family::Nilpotent, Family::Solvable, Family::Simple, Family::Semisimple, Family::Master}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_FALSE(parse_family("abelian").has_value());
  CHECK(scope_entries(Family::Master, 15).size() == 28);
  CHECK(scope_entries(Family::Simple, 59).empty());
  CHECK(scope_entries(Family::Simple, 60).size() == 3);
  for (const auto* e : scope_entries(Family::Nilpotent, 8)) CHECK(e->is_nilpotent());
}

TEST_CASE("verify_scope reports") {
  const VerifyResult r = verify_scope(Family::Master, 15);
  CHECK(r.reports.size() == 28);
  CHECK(r.all_hold());
  CHECK(r.notices.empty());
  CHECK(r.reports.front().group == "C1");
  CHECK(r.reports.back().group == "C15");
  const VerifyResult empty = verify_scope(Family::Simple, 59);
  CHECK(empty.reports.empty());
  CHECK(empty.all_hold());
  CHECK(format_reports(empty) == "note: no groups in scope\n");
}

TEST_CASE("entries over the enumeration cap are skipped with a notice") {
  VerifyOptions options;
  options.max_order = 100;
  const VerifyResult r = verify_entries(Expr::gen(Letter::a), scope_entries(Family::Simple, 200), options);
  CHECK(r.reports.size() == 3);
  CHECK(r.skipped == 1);
  REQUIRE(r.notices.size() == 1);
  CHECK(r.notices[0].rfind("skipped PSL2(7)", 0) == 0);
}

TEST_CASE("report formats") {
  const VerifyResult r = verify_groups(Expr::literal(Word::parse("aa")), {"C2", "S3"});
  const std::string text = format_reports(r);
  CHECK(text.find("C2  order=2  holds  pairs=4/4") != std::string::npos);
  CHECK(text.find("S3  order=6  FAILS  witness g=(") != std::string::npos);
  const std::string csv = to_csv(r);
  CHECK(csv.rfind(std::string(kReportCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find("C2,2,true,,,4,4,exhaustive\n") != std::string::npos);
  CHECK(csv.find("S3,6,false,(") != std::string::npos);
  CHECK(csv == to_csv(verify_groups(Expr::literal(Word::parse("aa")), {"C2", "S3"})));
  CHECK_THROWS_AS(verify_groups(Expr::gen(Letter::a), {"Z7"}), UnknownName);
}

TEST_CASE("shortest law search examples") {
  const SearchResult c2 = shortest_law_search(build_named("C2"), 4);
  REQUIRE(c2.min_length);
  CHECK(*c2.min_length == 2);
  CHECK(c2.witness->str() == "aa");
  const SearchResult psl = shortest_law_search(build_named("PSL2(5)"), 4);
  CHECK_FALSE(psl.min_length.has_value());
  CHECK(psl.words_tested + psl.words_skipped == 4 + 12 + 36 + 108);
  CHECK_THROWS_AS(shortest_law_search(build_named("C2"), 13), CapExceeded);
  CHECK_THROWS_AS(shortest_law_search(build_named("C2"), 0), InvalidArgument);
}

TEST_CASE("no word of length <= 3 is a law on S3") {
  const PermGroup s3 = build_named("S3");
  for (std::size_t len = 1; len <= 3; ++len) {
    for (const Flat& w : all_words(len)) CHECK_FALSE(brute_is_law(w, s3));
  }
  CHECK_FALSE(shortest_law_search(s3, 3).min_length.has_value());
}

TEST_CASE("search agrees with brute force, with and without pruning") {
  for (const char* name : {"C2", "C3", "C2xC2", "S3", "C4", "D4"}) {
    CAPTURE(name);
    const PermGroup g = build_named(name);
    std::optional<Flat> first;
    for (std::size_t len = 1; len <= 6 && !first; ++len) {
      for (const Flat& w : all_words(len)) {
        if (brute_is_law(w, g)) {
          first = w;
          break;
        }
      }
    }
    const SearchResult pruned = shortest_law_search(g, 6, true);
    const SearchResult full = shortest_law_search(g, 6, false);
    CHECK(pruned.min_length == full.min_length);
    CHECK(pruned.witness == full.witness);
    if (first) {
      REQUIRE(pruned.witness);
      CHECK(pruned.witness->letters() == *first);
    } else {
      CHECK_FALSE(pruned.min_length.has_value());
    }
    // A larger cap never finds a shorter law.
    for (unsigned cap = 1; cap <= 6; ++cap) {
      const SearchResult r = shortest_law_search(g, cap);
      if (r.min_length) CHECK(r.min_length == pruned.min_length);
    }
  }
  CHECK(shortest_law_search(build_named("S3"), 6).min_length == 6u);
}
