// Fixtures shared by the unit suites and the acceptance runner.

#ifndef LAWFORGE_TESTS_ORACLES_HPP_
#define LAWFORGE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "lawforge/combinators.hpp"
#include "lawforge/expr.hpp"
#include "support.hpp"

namespace lawforge::testing {

// Expressions exercising every node kind, with flat forms small enough to
// evaluate letter by letter.
inline std::vector<Expr> corpus() {
  const Expr a = Expr::gen(Letter::a);
  const Expr b = Expr::gen(Letter::b);
  std::vector<Expr> out{
      Expr(),
      a,
      Expr::literal(Word::parse("abAAbbB")),
      Expr::pow(a, 5),
      Expr::pow(Expr::prod({a, b}), -7),
      Expr::comm(a, b),
      Expr::comm(Expr::pow(a, 2), Expr::conj(b, a)),
      Expr::subst(Expr::comm(a, b), Expr::pow(a, 2), Expr::pow(b, 2)),
      Expr::subst(Expr::literal(Word::parse("aabAB")), Expr::comm(a, b), Expr::conj(Expr::pow(b, 3), a)),
      combine(std::vector<Expr>{Expr::pow(a, 4), Expr::pow(a, 5), Expr::pow(a, 6)}),
      compose(Expr::pow(a, 2), Expr::comm(a, b)),
      compose(Expr::comm(a, b), Expr::pow(a, 3)),
  };
  for (unsigned k = 1; k <= 6; ++k) out.push_back(baseline_provider()->lower_central(k).expr);
  for (unsigned k = 0; k <= 3; ++k) out.push_back(baseline_provider()->derived(k).expr);
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    std::vector<Expr> parts;
    for (std::uint64_t j = 0, m = 1 + rng.below(4); j < m; ++j) {
      parts.push_back(Expr::literal(Word::reduce(rng.nontrivial(6))));
    }
    out.push_back(combine(parts));
    out.push_back(compose(parts.front(), parts.back()));
  }
  return out;
}

// All partitions of k by recursion over the largest part.
inline std::set<std::uint64_t> brute_force_lcms(unsigned k) {
  std::set<std::uint64_t> out;
  std::function<void(unsigned, unsigned, std::uint64_t)> rec = [&](unsigned left, unsigned max_part,
                                                                   std::uint64_t l) {
    if (left == 0) {
      out.insert(l);
      return;
    }
    for (unsigned part = std::min(left, max_part); part >= 1; --part) {
      rec(left - part, part, std::lcm(l, std::uint64_t{part}));
    }
  };
  rec(k, k, 1);
  return out;
}

}  // namespace lawforge::testing

#endif  // LAWFORGE_TESTS_ORACLES_HPP_
