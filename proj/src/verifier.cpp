#include "lawforge/verifier.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "lawforge/errors.hpp"

namespace lawforge {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "nilpotent") return Family::Nilpotent;
  if (name == "solvable") return Family::Solvable;
  if (name == "simple") return Family::Simple;
  if (name == "semisimple") return Family::Semisimple;
  if (name == "master") return Family::Master;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Nilpotent: return "nilpotent";
    case Family::Solvable: return "solvable";
    case Family::Simple: return "simple";
    case Family::Semisimple: return "semisimple";
    case Family::Master: return "master";
  }
  return "";
}

bool in_scope(Family f, const CatalogEntry& entry) {
  switch (f) {
    case Family::Nilpotent: return entry.is_nilpotent();
    case Family::Solvable: return entry.is_solvable();
    case Family::Simple: return entry.is_nonabelian_simple();
    case Family::Semisimple: return entry.is_semisimple;
    case Family::Master: return true;
  }
  return false;
}

bool VerifyResult::all_hold() const {
  return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.holds; });
}

namespace {

template <class Build>
void verify_one(const Expr& law, const std::string& name, Build build, const VerifyOptions& options,
                VerifyResult& out) {
  try {
    const PermGroup g = build();
    out.reports.push_back(is_law(law, g, options.eval));
  } catch (const EnumerationCap& e) {
    out.notices.push_back("skipped " + name + ": " + e.what());
    ++out.skipped;
  }
}

}  // namespace

VerifyResult verify_entries(const Expr& law, const std::vector<const CatalogEntry*>& entries,
                            const VerifyOptions& options) {
  VerifyResult out;
  if (entries.empty()) out.notices.push_back("no groups in scope");
  for (const CatalogEntry* e : entries) {
    verify_one(law, e->name, [&] { return build_entry(*e, options.max_order); }, options, out);
  }
  return out;
}

VerifyResult verify_groups(const Expr& law, const std::vector<std::string>& names,
                           const VerifyOptions& options) {
  VerifyResult out;
  if (names.empty()) out.notices.push_back("no groups in scope");
  for (const auto& name : names) {
    verify_one(law, name,
               [&] {
                 if (const CatalogEntry* e = find_entry(name)) return build_entry(*e, options.max_order);
                 return build_named(name, options.max_order);
               },
               options, out);
  }
  return out;
}

std::vector<const CatalogEntry*> entries_upto(std::uint64_t n) {
  return scope_entries(Family::Master, n);
}

std::vector<const CatalogEntry*> scope_entries(Family f, std::uint64_t n) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (e.order <= n && in_scope(f, e)) out.push_back(&e);
  }
  return out;
}

VerifyResult verify_scope(Family f, std::uint64_t n, LawBuilder& builder, const VerifyOptions& options) {
  Law law;
  switch (f) {
    case Family::Nilpotent: law = builder.nilpotent(n); break;
    case Family::Solvable: law = builder.solvable(n); break;
    case Family::Simple: law = builder.simple(n); break;
    case Family::Semisimple: law = builder.semisimple(n); break;
    case Family::Master: law = builder.master(n); break;
  }
  return verify_entries(law.expr(), scope_entries(f, n), options);
}

VerifyResult verify_scope(Family f, std::uint64_t n, const VerifyOptions& options) {
  LawBuilder builder;
  return verify_scope(f, n, builder, options);
}

namespace {

class Search {
 public:
  Search(const PermGroup& group, bool prune) : group_(group), prune_(prune) {}

  SearchResult run(unsigned max_len) {
    for (unsigned len = 1; len <= max_len && !result_.min_length; ++len) {
      word_.assign(len, Letter::a);
      extend(0);
    }
    return result_;
  }

 private:
  // Depth-first over reduced words in lexicographic order.
  void extend(std::size_t pos) {
    if (result_.min_length) return;
    if (pos == word_.size()) {
      visit();
      return;
    }
    for (Letter l : {Letter::a, Letter::A, Letter::b, Letter::B}) {
      if (pos > 0 && word_[pos - 1] == inverse(l)) continue;
      word_[pos] = l;
      extend(pos + 1);
      if (result_.min_length) return;
    }
  }

  bool comes_later() const {
    const std::size_t n = word_.size();
    std::vector<Letter> inv(n), swapped(n);
    for (std::size_t i = 0; i < n; ++i) {
      inv[i] = inverse(word_[n - 1 - i]);
      swapped[i] = swap_generators(word_[i]);
    }
    return inv < word_ || swapped < word_;
  }

  void visit() {
    if (prune_ && comes_later()) {
      ++result_.words_skipped;
      return;
    }
    ++result_.words_tested;
    if (is_law_here()) {
      result_.min_length = static_cast<unsigned>(word_.size());
      result_.witness = Word::reduce(word_);
    }
  }

  bool is_law_here() const {
    const ElementId n = static_cast<ElementId>(group_.order());
    for (ElementId g = 0; g < n; ++g) {
      for (ElementId h = 0; h < n; ++h) {
        const std::array<ElementId, 4> value{g, group_.inv(g), h, group_.inv(h)};
        ElementId acc = group_.identity();
        for (Letter l : word_) acc = group_.mul(acc, value[static_cast<int>(l)]);
        if (acc != group_.identity()) return false;
      }
    }
    return true;
  }

  const PermGroup& group_;
  bool prune_;
  std::vector<Letter> word_;
  SearchResult result_;
};

}  // namespace

SearchResult shortest_law_search(const PermGroup& group, unsigned max_len, bool prune) {
  if (max_len == 0) throw InvalidArgument("max_len must be at least 1");
  if (max_len > kMaxSearchLength) {
    throw CapExceeded("search length " + std::to_string(max_len) + " exceeds the cap of " +
                      std::to_string(kMaxSearchLength));
  }
  return Search(group, prune).run(max_len);
}

std::string format_report(const LawReport& r) {
  std::string line = r.group + "  order=" + std::to_string(r.order) + "  " + (r.holds ? "holds" : "FAILS");
  if (!r.holds) line += "  witness " + r.witness_text;
  line += "  pairs=" + std::to_string(r.pairs_checked) + "/" + std::to_string(r.pairs_total);
  if (r.mode == PairMode::ClassRepresentatives) line += " (class representatives)";
  char buf[32];
  std::snprintf(buf, sizeof buf, "  %.1f ms", r.millis);
  return line + buf;
}

std::string format_reports(const VerifyResult& result) {
  std::string out;
  for (const auto& r : result.reports) out += format_report(r) + "\n";
  for (const auto& n : result.notices) out += "note: " + n + "\n";
  return out;
}

std::string to_csv(const VerifyResult& result) {
  std::string out = std::string(kReportCsvHeader) + "\n";
  for (const auto& r : result.reports) {
    std::string g, h;
    if (!r.holds) {
      const auto sp = r.witness_text.find(" h=");
      g = r.witness_text.substr(2, sp - 2);
      h = r.witness_text.substr(sp + 3);
    }
    out += r.group + "," + std::to_string(r.order) + "," + (r.holds ? "true" : "false") + "," + g +
           "," + h + "," + std::to_string(r.pairs_checked) + "," + std::to_string(r.pairs_total) + "," +
           to_string(r.mode) + "\n";
  }
  return out;
}

}  // namespace lawforge
