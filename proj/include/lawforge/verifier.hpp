// Scope sweeps over the catalog and the bounded shortest-law search.

#ifndef LAWFORGE_VERIFIER_HPP_
#define LAWFORGE_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawforge/catalog.hpp"
#include "lawforge/eval.hpp"
#include "lawforge/expr.hpp"
#include "lawforge/law_builders.hpp"

namespace lawforge {

enum class Family { Nilpotent, Solvable, Simple, Semisimple, Master };

std::optional<Family> parse_family(std::string_view name);
std::string to_string(Family f);
// Scopes come from catalog metadata: nilpotent, solvable, nonabelian simple,
// semi-simple (no nontrivial abelian normal subgroup), or everything.
bool in_scope(Family f, const CatalogEntry& entry);

struct VerifyOptions {
  EvalOptions eval;
  std::uint64_t max_order = PermGroup::kDefaultMaxOrder;
};

struct VerifyResult {
  std::vector<LawReport> reports;
  std::vector<std::string> notices;  // skipped entries, empty scopes
  std::size_t skipped = 0;

  bool all_hold() const;
};

// is_law on each entry in order; entries over the enumeration cap are skipped
// with a notice.
VerifyResult verify_entries(const Expr& law, const std::vector<const CatalogEntry*>& entries,
                            const VerifyOptions& options = {});
// Same for arbitrary group names (UnknownName propagates).
VerifyResult verify_groups(const Expr& law, const std::vector<std::string>& names,
                           const VerifyOptions& options = {});

std::vector<const CatalogEntry*> entries_upto(std::uint64_t n);
std::vector<const CatalogEntry*> scope_entries(Family f, std::uint64_t n);

// Builds the family's law for n and verifies it on every catalog entry in
// scope with order <= n.
VerifyResult verify_scope(Family f, std::uint64_t n, LawBuilder& builder,
                          const VerifyOptions& options = {});
VerifyResult verify_scope(Family f, std::uint64_t n, const VerifyOptions& options = {});

inline constexpr unsigned kMaxSearchLength = 12;

struct SearchResult {
  std::optional<unsigned> min_length;
  std::optional<Word> witness;
  std::uint64_t words_tested = 0;
  std::uint64_t words_skipped = 0;
};

// Reduced words of length 1..max_len in lexicographic order (a < A < b < B);
// the first law found is returned. With pruning, a word is skipped when its
// inverse or its image under a <-> b comes earlier in that order.
SearchResult shortest_law_search(const PermGroup& group, unsigned max_len, bool prune = true);

// One line per report: name, order, holds/FAILS, witness, pairs, milliseconds.
std::string format_report(const LawReport& r);
std::string format_reports(const VerifyResult& result);
// The machine-readable twin (no timing).
inline constexpr const char* kReportCsvHeader =
    "group,order,holds,witness_g,witness_h,pairs_checked,pairs_total,mode";
std::string to_csv(const VerifyResult& result);

}  // namespace lawforge

#endif  // LAWFORGE_VERIFIER_HPP_
