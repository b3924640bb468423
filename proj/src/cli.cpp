#include "lawforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "lawforge/catalog.hpp"
#include "lawforge/errors.hpp"
#include "lawforge/eval.hpp"
#include "lawforge/law_builders.hpp"
#include "lawforge/verifier.hpp"

namespace lawforge {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

// A flat word file holds only the letters a, A, b, B (and whitespace).
Expr read_law(const std::string& path) {
  const std::string text = read_file(path);
  const bool flat = text.find_first_not_of("aAbB \t\r\n") == std::string::npos;
  if (flat) return Expr::literal(Word::parse(text));
  return parse_expr(text);
}

std::uint64_t factorial(unsigned k) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

struct BuildArgs {
  std::string family;
  std::uint64_t n = 0;
  std::string out;
  std::string format = "expr";
  std::string config;
  std::optional<double> c0;
  std::optional<std::string> provider;
  std::optional<std::uint64_t> max_flat;
};

int cmd_build(const BuildArgs& args, std::ostream& out) {
  Config config = args.config.empty() ? Config{} : load_config(args.config);
  if (args.c0) {
    if (!(*args.c0 > 0)) throw InvalidArgument("c0 must be positive");
    config.c0 = *args.c0;
  }
  if (args.provider) config.provider = *args.provider;
  if (args.max_flat) config.max_flat = *args.max_flat;
  set_default_flat_cap(config.max_flat);

  LawBuilder builder(config);
  Law law;
  const auto colon = args.family.find(':');
  if (colon != std::string::npos) {
    const std::string kind = args.family.substr(0, colon);
    const std::string param = args.family.substr(colon + 1);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(param, &used);
      if (used != param.size()) throw std::invalid_argument(param);
    } catch (const std::exception&) {
      throw InvalidArgument("bad family parameter '" + param + "'");
    }
    if (kind == "psl2") {
      law.law = builder.psl2(value);
      law.plan = make_plan(psl2_order(value), config.c0);
    } else if (kind == "sym") {
      if (value < 1 || value > 20) throw InvalidArgument("sym:k needs 1 <= k <= 20");
      law.law = builder.sym(static_cast<unsigned>(value));
      law.plan = make_plan(factorial(static_cast<unsigned>(value)), config.c0);
    } else {
      throw InvalidArgument("unknown family '" + args.family + "'");
    }
    law.plan.achieved_length = law.word().length();
    law.plan.budget_length = law.law.budget;
  } else {
    const auto family = parse_family(args.family);
    if (!family) throw InvalidArgument("unknown family '" + args.family + "'");
    if (args.n < 1) throw InvalidArgument("n must be at least 1");
    switch (*family) {
      case Family::Nilpotent: law = builder.nilpotent(args.n); break;
      case Family::Solvable: law = builder.solvable(args.n); break;
      case Family::Simple: law = builder.simple(args.n); break;
      case Family::Semisimple: law = builder.semisimple(args.n); break;
      case Family::Master: law = builder.master(args.n); break;
    }
  }

  std::string body;
  if (args.format == "flat") {
    body = flatten(law.expr(), config.max_flat).str(config.max_flat) + "\n";
  } else {
    body = to_text(law.expr());
  }
  write_file(args.out, body);
  write_file(args.out + ".plan", to_text(law.plan));
  out << "wrote " << args.out << " (" << args.format << ", length "
      << to_string(law.plan.achieved_length) << ") and " << args.out << ".plan\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string law;
  std::vector<std::string> groups;
  std::optional<std::uint64_t> all_upto;
  std::string csv;
  std::string mode = "auto";
  unsigned threads = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const Expr law = read_law(args.law);
  VerifyOptions options;
  options.eval.threads = args.threads;
  if (args.mode == "exhaustive") {
    options.eval.mode = PairMode::Exhaustive;
  } else if (args.mode == "classes") {
    options.eval.mode = PairMode::ClassRepresentatives;
  }
  VerifyResult result;
  if (args.all_upto) {
    result = verify_entries(law, entries_upto(*args.all_upto), options);
  } else {
    result = verify_groups(law, args.groups, options);
  }
  out << format_reports(result);
  if (!args.csv.empty()) write_file(args.csv, to_csv(result));
  return result.all_hold() ? kExitOk : kExitLawFails;
}

struct TableArgs {
  std::uint64_t from = 16;
  std::uint64_t to = 1024;
  std::uint64_t step = 2;
  std::string out;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
  if (args.from < 16) throw InvalidArgument("--n-from must be at least 16");
  if (args.to < args.from) throw InvalidArgument("--n-to must be at least --n-from");
  if (args.step < 2) throw InvalidArgument("--geometric-step must be at least 2");
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = args.from; n <= args.to; n *= args.step) {
    ns.push_back(n);
    if (n > args.to / args.step) break;
  }
  const std::string csv = to_csv(budget_table(ns));
  if (args.out.empty()) {
    out << csv;
  } else {
    write_file(args.out, csv);
    out << "wrote " << ns.size() << " rows to " << args.out << "\n";
  }
  return kExitOk;
}

int cmd_minlaw(const std::string& group_name, unsigned max_len, bool prune, std::ostream& out) {
  if (max_len < 1) throw InvalidArgument("--max-len must be at least 1");
  if (max_len > kMaxSearchLength) {
    throw CapExceeded("--max-len " + std::to_string(max_len) + " exceeds the search cap of " +
                      std::to_string(kMaxSearchLength));
  }
  const CatalogEntry* entry = find_entry(group_name);
  const PermGroup g = entry ? build_entry(*entry) : build_named(group_name);
  const SearchResult r = shortest_law_search(g, max_len, prune);
  if (r.min_length) {
    out << "min " << *r.min_length << ": " << r.witness->str() << "\n";
  } else {
    out << "no law of length <= " << max_len << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short laws for finite groups: build, verify, tabulate, search."};
  app.name("lawforge");
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a law and its plan");
  b->add_option("family", build.family,
                "nilpotent | solvable | simple | semisimple | master | psl2:<q> | sym:<k>")
      ->required();
  b->add_option("n", build.n, "Group-size bound (not used by psl2:<q>, sym:<k>)");
  b->add_option("--out", build.out, "Output path; the plan goes to <out>.plan")->required();
  b->add_option("--format", build.format, "flat or expr")->check(CLI::IsMember({"flat", "expr"}));
  b->add_option("--config", build.config, "key=value config file");
  b->add_option("--c0", build.c0, "Ladder constant");
  b->add_option("--provider", build.provider, "baseline or a plugin path");
  b->add_option("--max-flat", build.max_flat, "Flatten cap in letters");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a law file on groups");
  v->add_option("law", verify.law, "Flat word or expression file")->required();
  auto* groups = v->add_option("--group", verify.groups, "Group name (repeatable)");
  auto* upto = v->add_option("--all-upto", verify.all_upto, "Every catalog group of order <= N");
  groups->excludes(upto);
  v->add_option("--csv", verify.csv, "Also write the CSV report here");
  v->add_option("--mode", verify.mode, "auto, exhaustive or classes")
      ->check(CLI::IsMember({"auto", "exhaustive", "classes"}));
  v->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Budget table of master laws");
  t->add_option("--n-from", table.from, "Smallest n (>= 16)");
  t->add_option("--n-to", table.to, "Largest n");
  t->add_option("--geometric-step", table.step, "Ratio between consecutive n");
  t->add_option("--out", table.out, "CSV path (stdout when omitted)");

  std::string min_group;
  unsigned max_len = 0;
  bool no_prune = false;
  auto* m = app.add_subcommand("minlaw", "Shortest law search");
  m->add_option("--group", min_group, "Group name")->required();
  m->add_option("--max-len", max_len, "Longest word length tried (<= 12)")->required();
  m->add_flag("--no-prune", no_prune, "Test every word, without symmetry pruning");

  auto* c = app.add_subcommand("catalog", "Print the group catalog manifest");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lawforge: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (b->parsed()) {
      return cmd_build(build, out);
    }
    if (v->parsed()) {
      if (verify.groups.empty() && !verify.all_upto) {
        err << "lawforge: verify needs --group or --all-upto\n";
        return kExitUsage;
      }
      return cmd_verify(verify, out);
    }
    if (t->parsed()) return cmd_table(table, out);
    if (m->parsed()) return cmd_minlaw(min_group, max_len, !no_prune, out);
    if (c->parsed()) {
      out << catalog_manifest();
      return kExitOk;
    }
  } catch (const ResourceLimit& e) {
    err << "lawforge: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "lawforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "lawforge: resource limit: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace lawforge
