// Laws for nilpotent, solvable, simple, semi-simple and all groups of size
// at most n, each with the numeric plan it was built from.

#ifndef LAWFORGE_LAW_BUILDERS_HPP_
#define LAWFORGE_LAW_BUILDERS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lawforge/combinators.hpp"
#include "lawforge/expr.hpp"
#include "lawforge/numtheory.hpp"

namespace lawforge {

struct Config {
  double c0 = 6;          // ladder constant
  unsigned log_base = 2;  // fixed; any other value is rejected
  std::string provider = "baseline";  // or a plugin path
  std::uint64_t max_flat = default_flat_cap();
};

// key=value lines; '#' starts a comment. Unknown keys are InvalidArgument.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

std::shared_ptr<const SeriesWordProvider> make_provider(const Config& config);

struct LawPlan {
  std::uint64_t n = 1;
  unsigned nil_class_bound = 1;
  unsigned sol_class_bound = 1;
  std::vector<PrimePower> psl2_params;
  std::uint64_t ladder_cutoff = 1;
  unsigned wreath_bound = 1;
  std::uint64_t split_threshold = 1;
  Length achieved_length = 0;
  BigInt budget_length = 0;
};

// The numeric part of the plan (achieved/budget lengths left at zero).
LawPlan make_plan(std::uint64_t n, double c0 = 6);

// floor(log2 n) + 1
unsigned nil_class_bound(std::uint64_t n);
// ceil(1 + 7 log2(max(2, log2 n)))
unsigned sol_class_bound(std::uint64_t n);
// Prime powers q >= 4 with |PSL2(q)| = q(q^2-1)/gcd(2,q-1) <= n.
std::vector<PrimePower> psl2_params(std::uint64_t n);
std::uint64_t psl2_order(std::uint64_t q);
// ceil(c0 n^(1/4))
std::uint64_t ladder_cutoff(std::uint64_t n, double c0 = 6);
// max(1, floor(log2 n))
unsigned wreath_bound(std::uint64_t n);
// max(1, ceil(log2(n)^(9/2)))
std::uint64_t split_threshold(std::uint64_t n);

// "key=value" lines in field order.
std::string to_text(const LawPlan& plan);
LawPlan parse_plan(const std::string& text);

struct Law {
  Bounded law;
  LawPlan plan;

  const Expr& expr() const { return law.expr; }
  const Word& word() const { return law.expr.word(); }
};

// Builds and caches sub-laws; sub-laws of equal parameters are shared nodes
// of the resulting expressions.
class LawBuilder {
 public:
  explicit LawBuilder(Config config = {});

  const Config& config() const { return config_; }
  const SeriesWordProvider& provider() const { return *provider_; }

  Law nilpotent(std::uint64_t n);
  Law solvable(std::uint64_t n);
  Law simple(std::uint64_t n);
  Law semisimple(std::uint64_t n);
  Law master(std::uint64_t n);

  Bounded psl2(std::uint64_t q);
  // combine([a, a^2, ..., a^m])
  Bounded ladder(std::uint64_t m);
  Bounded sym(unsigned k);
  Bounded aut(std::uint64_t m);

 private:
  Bounded nilpotent_law(std::uint64_t n);
  Bounded solvable_law(std::uint64_t n);
  Bounded simple_law(std::uint64_t n);
  Bounded semisimple_law(std::uint64_t n);
  Bounded master_law(std::uint64_t n);
  Law with_plan(std::uint64_t n, const Bounded& law) const;

  Config config_;
  std::shared_ptr<const SeriesWordProvider> provider_;
  Expr a_;
  std::map<std::uint64_t, Bounded> nil_, sol_, psl2_, ladder_, simple_, aut_, sym_, semi_,
      master_;
};

// Convenience wrappers over a default-configured builder.
Law nilpotent_law(std::uint64_t n);
Law solvable_law(std::uint64_t n);
Law simple_law(std::uint64_t n);
Law semisimple_law(std::uint64_t n);
Law master_law(std::uint64_t n);
Bounded psl2_law(std::uint64_t q);
std::vector<std::uint64_t> sym_orders(unsigned k);
Bounded sym_law(unsigned k);
Bounded aut_law(std::uint64_t m);

struct BudgetRow {
  std::uint64_t n = 0;
  Length achieved_length = 0;
  BigInt budget_length = 0;
  double n_over_log2_sq = 0;  // n / log2(n)^2
  double paper_headline = 0;  // n (log2 log2 n)^(9/2) / log2(n)^2
};

// Master-law construction only, no verification. Each n must be >= 16.
std::vector<BudgetRow> budget_table(const std::vector<std::uint64_t>& n_values,
                                    const Config& config = {});
inline constexpr const char* kBudgetCsvHeader =
    "n,achieved_length,budget_length,n/log2(n)^2,paper_headline";
std::string to_csv(const std::vector<BudgetRow>& rows);

}  // namespace lawforge

#endif  // LAWFORGE_LAW_BUILDERS_HPP_
