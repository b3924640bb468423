// Finite permutation groups with every element enumerated.

#ifndef LAWFORGE_PERM_GROUP_HPP_
#define LAWFORGE_PERM_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lawforge {

using ElementId = std::uint32_t;

// A bijection on {0, ..., degree-1}; degree <= 255.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(std::size_t degree);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }
  bool is_identity() const;
  Perm inverse() const;
  std::uint64_t order() const;
  // Disjoint cycle notation on 0-based points, "()" for the identity.
  std::string cycles() const;

  // (x * y)(p) = x(y(p))
  friend Perm operator*(const Perm& x, const Perm& y);
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

// The closure of a generating set, enumerated in breadth-first discovery
// order from the identity (element 0) using the sorted generator list.
// Groups of order <= kTableMaxOrder get a full multiplication table.
class PermGroup {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 20000;
  static constexpr std::uint64_t kTableMaxOrder = 4096;

  PermGroup(std::string name, std::vector<Perm> generators,
            std::uint64_t max_order = kDefaultMaxOrder);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(ElementId id) const { return elements_[id]; }
  ElementId identity() const { return 0; }

  std::optional<ElementId> find(const Perm& p) const;
  ElementId index_of(const Perm& p) const;

  ElementId mul(ElementId x, ElementId y) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * elements_.size() + y];
    return index_of(elements_[x] * elements_[y]);
  }
  ElementId inv(ElementId x) const { return inverse_[x]; }
  std::uint64_t element_order(ElementId x) const { return orders_[x]; }
  std::span<const std::uint64_t> element_orders() const { return orders_; }

  bool has_table() const { return !table_.empty(); }
  std::span<const std::uint16_t> table() const { return table_; }

 private:
  static std::string key(const Perm& p);

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint16_t> table_;
};

// Subgroups as sorted element lists.
using Subgroup = std::vector<ElementId>;

Subgroup generate_subgroup(const PermGroup& g, std::span<const ElementId> gens);
// Subgroup generated by all [x, y] = x y x^-1 y^-1 with x in xs, y in ys.
Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& xs, const Subgroup& ys);

std::vector<std::vector<ElementId>> conjugacy_classes(const PermGroup& g);
std::vector<ElementId> class_representatives(const PermGroup& g);

bool is_abelian(const PermGroup& g);
// Least c with gamma_{c+1}(G) = 1, or nullopt when G is not nilpotent.
std::optional<unsigned> nilpotency_class(const PermGroup& g);
// Least k with G^(k) = 1, or nullopt when G is not solvable.
std::optional<unsigned> derived_length(const PermGroup& g);
bool is_simple(const PermGroup& g);
// No nontrivial abelian normal subgroup.
bool is_semisimple(const PermGroup& g);

}  // namespace lawforge

#endif  // LAWFORGE_PERM_GROUP_HPP_
