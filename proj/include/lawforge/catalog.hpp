// Named groups and the curated catalog used as ground truth.
//
// Name grammar (products split on top-level 'x'):
//   C<n>  D<n> (order 2n)  Q8  Dic<m> (order 4m)  A<k>  S<k>
//   PSL2(<q>)  PGL2(<q>)  Wr2(<name>) = (G x G) : C2 with the swap action
//   (<name>)  <name>x<name>

#ifndef LAWFORGE_CATALOG_HPP_
#define LAWFORGE_CATALOG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawforge/perm_group.hpp"

namespace lawforge {

struct CatalogEntry {
  std::string name;
  std::string recipe;
  std::uint64_t order = 0;
  std::optional<unsigned> nilpotency_class;  // nullopt: not nilpotent
  std::optional<unsigned> derived_length;    // nullopt: not solvable
  bool is_simple = false;
  bool is_semisimple = false;
  std::string family;

  bool is_nilpotent() const { return nilpotency_class.has_value(); }
  bool is_solvable() const { return derived_length.has_value(); }
  bool is_nonabelian_simple() const { return is_simple && !is_solvable(); }
};

// Entries are checked against the constructed group up to this order.
inline constexpr std::uint64_t kMetadataCheckMaxOrder = 200;

// Versioned manifest text: one entry per line,
//   name|recipe|order|class|derived_length|simple|semisimple|family
// with "-" for a class or derived length that does not exist.
const std::string& catalog_manifest();
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view name);
// The 28 groups of order at most 15, in manifest order.
std::vector<const CatalogEntry*> complete_small_catalog();

PermGroup build_named(std::string_view name,
                      std::uint64_t max_order = PermGroup::kDefaultMaxOrder);
// Builds the entry's group, checks its order, and for small orders re-derives
// the stored metadata from the multiplication table (Error on mismatch).
PermGroup build_entry(const CatalogEntry& entry,
                      std::uint64_t max_order = PermGroup::kDefaultMaxOrder);

CatalogEntry derive_metadata(const PermGroup& group);

}  // namespace lawforge

#endif  // LAWFORGE_CATALOG_HPP_
