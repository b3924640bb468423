#include "lawforge/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "lawforge/errors.hpp"

namespace lawforge {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.size() > 255) throw InvalidArgument("permutation degree exceeds 255");
  std::vector<bool> seen(images_.size(), false);
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]) throw InvalidArgument("images do not form a permutation");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw InvalidArgument("bad cycle specification");
      used[c[i]] = true;
      images[c[i]] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw InvalidArgument("degree mismatch in permutation product");
  Perm r;
  r.images_.resize(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) r.images_[i] = x.images_[y.images_[i]];
  return r;
}

std::string PermGroup::key(const Perm& p) {
  return std::string(p.images().begin(), p.images().end());
}

PermGroup::PermGroup(std::string name, std::vector<Perm> generators, std::uint64_t max_order)
    : name_(std::move(name)) {
  if (generators.empty()) throw InvalidArgument("group " + name_ + " needs at least one generator");
  degree_ = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw InvalidArgument("generators of " + name_ + " differ in degree");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase_if(generators, [](const Perm& p) { return p.is_identity(); });
  generators_ = std::move(generators);

  const std::size_t ngens = generators_.size();
  std::vector<ElementId> right;   // right[x * ngens + s] = x * gen_s
  std::vector<ElementId> parent;  // element = parent * gen_{via}
  std::vector<std::uint32_t> via;

  elements_.push_back(Perm::identity(degree_));
  index_.emplace(key(elements_[0]), 0);
  parent.push_back(0);
  via.push_back(0);
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Perm y = elements_[x] * generators_[s];
      auto [it, inserted] = index_.emplace(key(y), static_cast<ElementId>(elements_.size()));
      if (inserted) {
        if (elements_.size() >= max_order) {
          throw EnumerationCap("group " + name_ + " exceeds the enumeration cap of " +
                               std::to_string(max_order) + " elements");
        }
        elements_.push_back(std::move(y));
        parent.push_back(static_cast<ElementId>(x));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements_.size();
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }

  if (n <= kTableMaxOrder) {
    // i * j = (i * parent(j)) * gen_via(j), filled in discovery order of j.
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) table_[i * n] = static_cast<std::uint16_t>(i);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const ElementId ip = table_[i * n + parent[j]];
        table_[i * n + j] = static_cast<std::uint16_t>(right[ip * ngens + via[j]]);
      }
    }
  }
}

std::optional<ElementId> PermGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(key(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::index_of(const Perm& p) const {
  auto id = find(p);
  if (!id) throw InvalidArgument("permutation " + p.cycles() + " is not an element of " + name_);
  return *id;
}

Subgroup generate_subgroup(const PermGroup& g, std::span<const ElementId> gens) {
  std::vector<bool> member(g.order(), false);
  Subgroup elems{g.identity()};
  member[g.identity()] = true;
  std::vector<ElementId> useful;
  for (ElementId s : gens) {
    if (s != g.identity()) useful.push_back(s);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (ElementId s : useful) {
      ElementId y = g.mul(elems[i], s);
      if (!member[y]) {
        member[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& xs, const Subgroup& ys) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> gens;
  for (ElementId x : xs) {
    for (ElementId y : ys) {
      ElementId c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
      if (!seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  }
  return generate_subgroup(g, gens);
}

std::vector<std::vector<ElementId>> conjugacy_classes(const PermGroup& g) {
  std::vector<ElementId> gens;
  for (const auto& p : g.generators()) gens.push_back(g.index_of(p));
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<ElementId> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId s : gens) {
        ElementId y = g.mul(g.mul(s, cls[i]), g.inv(s));
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<ElementId> class_representatives(const PermGroup& g) {
  std::vector<ElementId> reps;
  for (const auto& cls : conjugacy_classes(g)) reps.push_back(cls.front());
  return reps;
}

namespace {

Subgroup whole(const PermGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return all;
}

bool elements_commute(const PermGroup& g, std::span<const ElementId> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (g.mul(xs[i], xs[j]) != g.mul(xs[j], xs[i])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_abelian(const PermGroup& g) {
  std::vector<ElementId> gens;
  for (const auto& p : g.generators()) gens.push_back(g.index_of(p));
  return elements_commute(g, gens);
}

std::optional<unsigned> nilpotency_class(const PermGroup& g) {
  const Subgroup all = whole(g);
  Subgroup term = all;
  for (unsigned c = 0;; ++c) {
    if (term.size() == 1) return c;
    Subgroup next = commutator_subgroup(g, all, term);
    if (next.size() == term.size()) return std::nullopt;
    term = std::move(next);
  }
}

std::optional<unsigned> derived_length(const PermGroup& g) {
  Subgroup term = whole(g);
  for (unsigned k = 0;; ++k) {
    if (term.size() == 1) return k;
    Subgroup next = commutator_subgroup(g, term, term);
    if (next.size() == term.size()) return std::nullopt;
    term = std::move(next);
  }
}

bool is_simple(const PermGroup& g) {
  if (g.order() == 1) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == g.identity()) continue;
    if (generate_subgroup(g, cls).size() != g.order()) return false;
  }
  return true;
}

bool is_semisimple(const PermGroup& g) {
  // Every abelian normal subgroup contains the normal closure of one of its
  // elements, which is then abelian too.
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == g.identity()) continue;
    if (elements_commute(g, cls)) return false;
  }
  return true;
}

}  // namespace lawforge
