#include "lawforge/law_builders.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lawforge/errors.hpp"

namespace lawforge {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> key_values(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + line + "'");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(value, &used);
    if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad value for " + key + ": '" + value + "'");
  }
}

// Ceiling of a floating value that is meant to be exact when it lands on an
// integer (e.g. 16^(1/4) = 2, 4^(9/2) = 512).
std::uint64_t ceil_near(long double v) {
  const long double r = std::round(v);
  if (std::fabs(v - r) <= 1e-9L * std::max<long double>(1, std::fabs(v))) {
    return static_cast<std::uint64_t>(r);
  }
  return static_cast<std::uint64_t>(std::ceil(v));
}

long double log2_of(std::uint64_t n) { return std::log2(static_cast<long double>(n)); }

void require_n(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  for (const auto& [key, value] : key_values(text)) {
    if (key == "c0") {
      try {
        std::size_t used = 0;
        c.c0 = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("bad value for c0: '" + value + "'");
      }
      if (!(c.c0 > 0)) throw InvalidArgument("c0 must be positive");
    } else if (key == "log_base") {
      c.log_base = static_cast<unsigned>(parse_u64(key, value));
      if (c.log_base != 2) throw InvalidArgument("log_base is fixed at 2");
    } else if (key == "provider") {
      c.provider = value;
    } else if (key == "max_flat") {
      c.max_flat = parse_u64(key, value);
    } else {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::shared_ptr<const SeriesWordProvider> make_provider(const Config& config) {
  if (config.provider.empty() || config.provider == "baseline") return baseline_provider();
  return load_provider_plugin(config.provider);
}

unsigned nil_class_bound(std::uint64_t n) {
  require_n(n);
  return static_cast<unsigned>(std::bit_width(n));
}

unsigned sol_class_bound(std::uint64_t n) {
  require_n(n);
  const long double m = std::max<long double>(2, log2_of(n));
  return static_cast<unsigned>(ceil_near(1 + 7 * std::log2(m)));
}

std::uint64_t psl2_order(std::uint64_t q) {
  return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

std::vector<PrimePower> psl2_params(std::uint64_t n) {
  require_n(n);
  std::vector<PrimePower> out;
  // q^3 / 2 < |PSL2(q)|, so q <= cbrt(2n) + 1 covers every candidate.
  const std::uint64_t bound = integer_root(2 * n, 3) + 1;
  for (const auto& pp : prime_powers_upto(bound)) {
    if (pp.q >= 4 && psl2_order(pp.q) <= n) out.push_back(pp);
  }
  return out;
}

std::uint64_t ladder_cutoff(std::uint64_t n, double c0) {
  require_n(n);
  return std::max<std::uint64_t>(1, ceil_near(static_cast<long double>(c0) *
                                              std::pow(static_cast<long double>(n), 0.25L)));
}

unsigned wreath_bound(std::uint64_t n) {
  require_n(n);
  return std::max(1u, static_cast<unsigned>(std::bit_width(n)) - 1);
}

std::uint64_t split_threshold(std::uint64_t n) {
  require_n(n);
  return std::max<std::uint64_t>(1, ceil_near(std::pow(log2_of(n), 4.5L)));
}

LawPlan make_plan(std::uint64_t n, double c0) {
  LawPlan p;
  p.n = n;
  p.nil_class_bound = nil_class_bound(n);
  p.sol_class_bound = sol_class_bound(n);
  p.psl2_params = psl2_params(n);
  p.ladder_cutoff = ladder_cutoff(n, c0);
  p.wreath_bound = wreath_bound(n);
  p.split_threshold = split_threshold(n);
  return p;
}

std::string to_text(const LawPlan& plan) {
  std::ostringstream out;
  out << "n=" << plan.n << "\n";
  out << "nil_class_bound=" << plan.nil_class_bound << "\n";
  out << "sol_class_bound=" << plan.sol_class_bound << "\n";
  out << "psl2_params=";
  for (std::size_t i = 0; i < plan.psl2_params.size(); ++i) {
    out << (i ? "," : "") << plan.psl2_params[i].q;
  }
  out << "\n";
  out << "ladder_cutoff=" << plan.ladder_cutoff << "\n";
  out << "wreath_bound=" << plan.wreath_bound << "\n";
  out << "split_threshold=" << plan.split_threshold << "\n";
  out << "achieved_length=" << to_string(plan.achieved_length) << "\n";
  out << "budget_length=" << plan.budget_length.str() << "\n";
  return out.str();
}

LawPlan parse_plan(const std::string& text) {
  LawPlan p;
  for (const auto& [key, value] : key_values(text)) {
    if (key == "n") {
      p.n = parse_u64(key, value);
    } else if (key == "nil_class_bound") {
      p.nil_class_bound = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "sol_class_bound") {
      p.sol_class_bound = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "psl2_params") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto pp = as_prime_power(parse_u64(key, trim(item)));
        if (!pp) throw ParseError("psl2_params entry " + item + " is not a prime power");
        p.psl2_params.push_back(*pp);
      }
    } else if (key == "ladder_cutoff") {
      p.ladder_cutoff = parse_u64(key, value);
    } else if (key == "wreath_bound") {
      p.wreath_bound = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "split_threshold") {
      p.split_threshold = parse_u64(key, value);
    } else if (key == "achieved_length") {
      try {
        p.achieved_length = Length(value);
      } catch (const std::exception&) {
        throw ParseError("bad value for achieved_length: '" + value + "'");
      }
    } else if (key == "budget_length") {
      try {
        p.budget_length = BigInt(value);
      } catch (const std::exception&) {
        throw ParseError("bad value for budget_length: '" + value + "'");
      }
    } else {
      throw ParseError("unknown plan key '" + key + "'");
    }
  }
  return p;
}

LawBuilder::LawBuilder(Config config)
    : config_(std::move(config)), provider_(make_provider(config_)), a_(Expr::gen(Letter::a)) {
  if (config_.log_base != 2) throw InvalidArgument("log_base is fixed at 2");
}

Law LawBuilder::with_plan(std::uint64_t n, const Bounded& law) const {
  Law out{law, make_plan(n, config_.c0)};
  out.plan.achieved_length = law.word().length();
  out.plan.budget_length = law.budget;
  return out;
}

Bounded LawBuilder::nilpotent_law(std::uint64_t n) {
  if (auto it = nil_.find(n); it != nil_.end()) return it->second;
  Bounded w = provider_->lower_central(nil_class_bound(n));
  return nil_.emplace(n, w).first->second;
}

Bounded LawBuilder::solvable_law(std::uint64_t n) {
  if (auto it = sol_.find(n); it != sol_.end()) return it->second;
  Bounded w = compose(nilpotent_law(n), provider_->derived(sol_class_bound(n)));
  return sol_.emplace(n, w).first->second;
}

Bounded LawBuilder::psl2(std::uint64_t q) {
  if (auto it = psl2_.find(q); it != psl2_.end()) return it->second;
  const auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q < 4) throw InvalidArgument("psl2 law needs q >= 4");
  std::vector<Bounded> parts;
  for (std::uint64_t e : {q - 1, pp->p, q + 1}) {
    parts.push_back({Expr::pow(a_, static_cast<std::int64_t>(e)), e});
  }
  return psl2_.emplace(q, combine(parts)).first->second;
}

Bounded LawBuilder::ladder(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("ladder needs m >= 1");
  if (auto it = ladder_.find(m); it != ladder_.end()) return it->second;
  std::vector<Bounded> parts;
  for (std::uint64_t d = 1; d <= m; ++d) {
    parts.push_back({d == 1 ? a_ : Expr::pow(a_, static_cast<std::int64_t>(d)), d});
  }
  return ladder_.emplace(m, combine(parts)).first->second;
}

Bounded LawBuilder::simple_law(std::uint64_t n) {
  if (auto it = simple_.find(n); it != simple_.end()) return it->second;
  std::vector<Bounded> parts;
  for (const auto& pp : psl2_params(n)) parts.push_back(psl2(pp.q));
  parts.push_back(ladder(ladder_cutoff(n, config_.c0)));
  return simple_.emplace(n, combine(parts)).first->second;
}

Bounded LawBuilder::sym(unsigned k) {
  if (k == 0) throw InvalidArgument("sym law needs k >= 1");
  if (auto it = sym_.find(k); it != sym_.end()) return it->second;
  std::vector<Bounded> parts;
  for (std::uint64_t d : partition_lcm_set(k)) {
    parts.push_back({d == 1 ? a_ : Expr::pow(a_, static_cast<std::int64_t>(d)), d});
  }
  return sym_.emplace(k, combine(parts)).first->second;
}

Bounded LawBuilder::aut(std::uint64_t m) {
  require_n(m);
  if (auto it = aut_.find(m); it != aut_.end()) return it->second;
  Bounded w = compose(simple_law(m), provider_->derived(3));
  return aut_.emplace(m, w).first->second;
}

Bounded LawBuilder::semisimple_law(std::uint64_t n) {
  if (auto it = semi_.find(n); it != semi_.end()) return it->second;
  const std::vector<Bounded> parts{aut(n), compose(aut(ceil_sqrt(n)), sym(wreath_bound(n)))};
  return semi_.emplace(n, combine(parts)).first->second;
}

Bounded LawBuilder::master_law(std::uint64_t n) {
  if (auto it = master_.find(n); it != master_.end()) return it->second;
  const std::uint64_t split = split_threshold(n);
  const std::uint64_t rest = std::max<std::uint64_t>(1, (n + split - 1) / split);
  const std::vector<Bounded> parts{compose(solvable_law(split), semisimple_law(n)),
                                   compose(solvable_law(n), semisimple_law(rest))};
  return master_.emplace(n, combine(parts)).first->second;
}

Law LawBuilder::nilpotent(std::uint64_t n) { return with_plan(n, nilpotent_law(n)); }
Law LawBuilder::solvable(std::uint64_t n) { return with_plan(n, solvable_law(n)); }
Law LawBuilder::simple(std::uint64_t n) { return with_plan(n, simple_law(n)); }
Law LawBuilder::semisimple(std::uint64_t n) { return with_plan(n, semisimple_law(n)); }
Law LawBuilder::master(std::uint64_t n) { return with_plan(n, master_law(n)); }

namespace {

LawBuilder& default_builder() {
  static LawBuilder builder;
  return builder;
}

}  // namespace

Law nilpotent_law(std::uint64_t n) { return default_builder().nilpotent(n); }
Law solvable_law(std::uint64_t n) { return default_builder().solvable(n); }
Law simple_law(std::uint64_t n) { return default_builder().simple(n); }
Law semisimple_law(std::uint64_t n) { return default_builder().semisimple(n); }
Law master_law(std::uint64_t n) { return default_builder().master(n); }
Bounded psl2_law(std::uint64_t q) { return default_builder().psl2(q); }
Bounded sym_law(unsigned k) { return default_builder().sym(k); }
Bounded aut_law(std::uint64_t m) { return default_builder().aut(m); }

std::vector<std::uint64_t> sym_orders(unsigned k) {
  const auto s = partition_lcm_set(k);
  return {s.begin(), s.end()};
}

std::vector<BudgetRow> budget_table(const std::vector<std::uint64_t>& n_values, const Config& config) {
  std::vector<BudgetRow> rows;
  for (std::uint64_t n : n_values) {
    if (n < 16) throw InvalidArgument("budget table rows need n >= 16");
    // A builder per row: cached sub-laws of large n hold millions of rope
    // nodes, and rows share little.
    const Law law = LawBuilder(config).master(n);
    BudgetRow row;
    row.n = n;
    row.achieved_length = law.plan.achieved_length;
    row.budget_length = law.plan.budget_length;
    const double l = std::log2(static_cast<double>(n));
    row.n_over_log2_sq = static_cast<double>(n) / (l * l);
    row.paper_headline = static_cast<double>(n) * std::pow(std::log2(l), 4.5) / (l * l);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<BudgetRow>& rows) {
  std::string out = std::string(kBudgetCsvHeader) + "\n";
  char buf[64];
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + to_string(r.achieved_length) + "," + r.budget_length.str();
    std::snprintf(buf, sizeof buf, ",%.9g", r.n_over_log2_sq);
    out += buf;
    std::snprintf(buf, sizeof buf, ",%.9g\n", r.paper_headline);
    out += buf;
  }
  return out;
}

}  // namespace lawforge
