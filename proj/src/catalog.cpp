#include "lawforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "lawforge/errors.hpp"
#include "lawforge/numtheory.hpp"

namespace lawforge {

namespace {

constexpr const char* kManifest = R"(# lawforge group catalog v1
# name|recipe|order|class|derived_length|simple|semisimple|family
C1|trivial|1|0|0|no|yes|cyclic
C2|cycle|2|1|1|yes|no|cyclic
C3|cycle|3|1|1|yes|no|cyclic
C4|cycle|4|1|1|no|no|cyclic
C2xC2|disjoint product|4|1|1|no|no|abelian
C5|cycle|5|1|1|yes|no|cyclic
C6|cycle|6|1|1|no|no|cyclic
S3|transposition and 3-cycle|6|-|2|no|no|symmetric
C7|cycle|7|1|1|yes|no|cyclic
C8|cycle|8|1|1|no|no|cyclic
C4xC2|disjoint product|8|1|1|no|no|abelian
C2xC2xC2|disjoint product|8|1|1|no|no|abelian
D4|rotation and reflection of a square|8|2|2|no|no|dihedral
Q8|left regular dicyclic|8|2|2|no|no|dicyclic
C9|cycle|9|1|1|no|no|cyclic
C3xC3|disjoint product|9|1|1|no|no|abelian
C10|cycle|10|1|1|no|no|cyclic
D5|rotation and reflection|10|-|2|no|no|dihedral
C11|cycle|11|1|1|yes|no|cyclic
C12|cycle|12|1|1|no|no|cyclic
C6xC2|disjoint product|12|1|1|no|no|abelian
A4|3-cycles|12|-|2|no|no|alternating
D6|rotation and reflection|12|-|2|no|no|dihedral
Dic3|left regular dicyclic|12|-|2|no|no|dicyclic
C13|cycle|13|1|1|yes|no|cyclic
C14|cycle|14|1|1|no|no|cyclic
D7|rotation and reflection|14|-|2|no|no|dihedral
C15|cycle|15|1|1|no|no|cyclic
C16|cycle|16|1|1|no|no|cyclic
C4xC4|disjoint product|16|1|1|no|no|abelian
C8xC2|disjoint product|16|1|1|no|no|abelian
C4xC2xC2|disjoint product|16|1|1|no|no|abelian
C2xC2xC2xC2|disjoint product|16|1|1|no|no|abelian
D8|rotation and reflection|16|3|2|no|no|dihedral
Dic4|left regular dicyclic|16|3|2|no|no|dicyclic
D4xC2|disjoint product|16|2|2|no|no|product
Q8xC2|disjoint product|16|2|2|no|no|product
C18|cycle|18|1|1|no|no|cyclic
C6xC3|disjoint product|18|1|1|no|no|abelian
D9|rotation and reflection|18|-|2|no|no|dihedral
S3xC3|disjoint product|18|-|2|no|no|product
C20|cycle|20|1|1|no|no|cyclic
C10xC2|disjoint product|20|1|1|no|no|abelian
D10|rotation and reflection|20|-|2|no|no|dihedral
Dic5|left regular dicyclic|20|-|2|no|no|dicyclic
C21|cycle|21|1|1|no|no|cyclic
C24|cycle|24|1|1|no|no|cyclic
S4|transposition and 4-cycle|24|-|3|no|no|symmetric
A4xC2|disjoint product|24|-|2|no|no|product
D12|rotation and reflection|24|-|2|no|no|dihedral
Dic6|left regular dicyclic|24|-|2|no|no|dicyclic
Dic3xC2|disjoint product|24|-|2|no|no|product
Q8xC3|disjoint product|24|2|2|no|no|product
S3xC4|disjoint product|24|-|2|no|no|product
S3xC2xC2|disjoint product|24|-|2|no|no|product
C9xC3|disjoint product|27|1|1|no|no|abelian
C3xC3xC3|disjoint product|27|1|1|no|no|abelian
C30|cycle|30|1|1|no|no|cyclic
D15|rotation and reflection|30|-|2|no|no|dihedral
S3xC5|disjoint product|30|-|2|no|no|product
D16|rotation and reflection|32|4|2|no|no|dihedral
C2xC2xC2xC2xC2|disjoint product|32|1|1|no|no|abelian
S3xS3|disjoint product|36|-|2|no|no|product
A4xC3|disjoint product|36|-|2|no|no|product
C6xC6|disjoint product|36|1|1|no|no|abelian
S4xC2|disjoint product|48|-|3|no|no|product
A4xC5|disjoint product|60|-|2|no|no|product
D30|rotation and reflection|60|-|2|no|no|dihedral
A5|3-cycle and 5-cycle|60|-|-|yes|yes|alternating
PSL2(4)|projective line over GF(4)|60|-|-|yes|yes|psl2
PSL2(5)|projective line over GF(5)|60|-|-|yes|yes|psl2
S5|transposition and 5-cycle|120|-|-|no|yes|symmetric
PGL2(5)|projective line over GF(5)|120|-|-|no|yes|pgl2
PSL2(7)|projective line over GF(7)|168|-|-|yes|yes|psl2
PGL2(7)|projective line over GF(7)|336|-|-|no|yes|pgl2
A6|3-cycle and 5-cycle|360|-|-|yes|yes|alternating
PSL2(9)|projective line over GF(9)|360|-|-|yes|yes|psl2
PSL2(8)|projective line over GF(8)|504|-|-|yes|yes|psl2
PSL2(11)|projective line over GF(11)|660|-|-|yes|yes|psl2
S6|transposition and 6-cycle|720|-|-|no|yes|symmetric
PSL2(13)|projective line over GF(13)|1092|-|-|yes|yes|psl2
A7|3-cycle and 7-cycle|2520|-|-|yes|yes|alternating
A5xA5|disjoint product|3600|-|-|no|yes|product
Wr2(A5)|swap wreath on two copies|7200|-|-|no|yes|wreath
)";

std::optional<unsigned> parse_optional(const std::string& field) {
  if (field == "-") return std::nullopt;
  return static_cast<unsigned>(std::stoul(field));
}

std::vector<CatalogEntry> parse_manifest(const std::string& text) {
  std::vector<CatalogEntry> entries;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, '|')) fields.push_back(f);
    if (fields.size() != 8) throw Error("malformed catalog line: " + line);
    CatalogEntry e;
    e.name = fields[0];
    e.recipe = fields[1];
    e.order = std::stoull(fields[2]);
    e.nilpotency_class = parse_optional(fields[3]);
    e.derived_length = parse_optional(fields[4]);
    e.is_simple = fields[5] == "yes";
    e.is_semisimple = fields[6] == "yes";
    e.family = fields[7];
    entries.push_back(std::move(e));
  }
  return entries;
}

// GF(p^k) with elements 0..q-1 read as base-p coefficient vectors.
class FiniteField {
 public:
  explicit FiniteField(PrimePower pp) : p_(pp.p), k_(pp.k), q_(pp.q) {
    const auto modulus = irreducible();
    mul_.assign(q_ * q_, 0);
    for (std::uint64_t x = 0; x < q_; ++x) {
      for (std::uint64_t y = 0; y < q_; ++y) mul_[x * q_ + y] = multiply(x, y, modulus);
    }
    inv_.assign(q_, 0);
    for (std::uint64_t x = 1; x < q_; ++x) {
      for (std::uint64_t y = 1; y < q_; ++y) {
        if (mul_[x * q_ + y] == 1) inv_[x] = y;
      }
    }
    for (std::uint64_t g = 1; g < q_; ++g) {
      std::uint64_t x = g;
      std::uint64_t ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q_ - 1) {
        primitive_ = g;
        break;
      }
    }
  }

  std::uint64_t size() const { return q_; }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t r = 0;
    std::uint64_t place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((x % p_ + y % p_) % p_) * place;
      x /= p_;
      y /= p_;
      place *= p_;
    }
    return r;
  }
  std::uint64_t neg(std::uint64_t x) const {
    std::uint64_t r = 0;
    std::uint64_t place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((p_ - x % p_) % p_) * place;
      x /= p_;
      place *= p_;
    }
    return r;
  }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return mul_[x * q_ + y]; }
  std::uint64_t inv(std::uint64_t x) const { return inv_[x]; }
  std::uint64_t primitive() const { return primitive_; }
  std::uint64_t power(std::uint64_t x, unsigned e) const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }

 private:
  using Poly = std::vector<std::uint64_t>;  // low degree first

  Poly digits(std::uint64_t x) const {
    Poly d(k_);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }

  Poly poly_mod(Poly a, const Poly& m) const {
    // m monic
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
      const std::uint64_t c = a[i] % p_;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dm; ++j) {
        a[i - dm + j] = (a[i - dm + j] + (p_ - c) * m[j]) % p_;
      }
    }
    a.resize(std::min(a.size(), dm));
    return a;
  }

  std::uint64_t multiply(std::uint64_t x, std::uint64_t y, const Poly& m) const {
    Poly a = digits(x);
    Poly b = digits(y);
    Poly prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    Poly r = poly_mod(prod, m);
    std::uint64_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
    return v;
  }

  // Monic polynomial of degree k_ with no monic factor of degree 1..k_/2.
  Poly irreducible() const {
    auto monic = [&](unsigned degree, std::uint64_t code) {
      Poly f(degree + 1);
      for (unsigned i = 0; i < degree; ++i) {
        f[i] = code % p_;
        code /= p_;
      }
      f[degree] = 1;
      return f;
    };
    auto count = [&](unsigned degree) {
      std::uint64_t c = 1;
      for (unsigned i = 0; i < degree; ++i) c *= p_;
      return c;
    };
    for (std::uint64_t code = 0; code < count(k_); ++code) {
      Poly f = monic(k_, code);
      bool reducible = false;
      for (unsigned d = 1; d <= k_ / 2 && !reducible; ++d) {
        for (std::uint64_t c = 0; c < count(d) && !reducible; ++c) {
          Poly r = poly_mod(f, monic(d, c));
          reducible = std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 0; });
        }
      }
      if (!reducible) return f;
    }
    throw Error("no irreducible polynomial found");
  }

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> mul_;
  std::vector<std::uint64_t> inv_;
  std::uint64_t primitive_ = 1;
};

// z -> (alpha z + beta) / (gamma z + delta) on GF(q) plus infinity (= q).
Perm mobius(const FiniteField& f, std::uint64_t alpha, std::uint64_t beta, std::uint64_t gamma,
            std::uint64_t delta) {
  const std::uint64_t q = f.size();
  std::vector<std::uint8_t> images(q + 1);
  for (std::uint64_t z = 0; z <= q; ++z) {
    std::uint64_t image;
    if (z == q) {
      image = gamma == 0 ? q : f.mul(alpha, f.inv(gamma));
    } else {
      const std::uint64_t num = f.add(f.mul(alpha, z), beta);
      const std::uint64_t den = f.add(f.mul(gamma, z), delta);
      image = den == 0 ? q : f.mul(num, f.inv(den));
    }
    images[z] = static_cast<std::uint8_t>(image);
  }
  return Perm(std::move(images));
}

struct PermSet {
  std::size_t degree = 1;
  std::vector<Perm> gens;
};

PermSet projective(std::uint64_t q, bool full_linear) {
  auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q > 254) throw InvalidArgument("projective line too large for a permutation of degree <= 255");
  FiniteField f(*pp);
  const std::uint64_t w = f.primitive();
  PermSet s;
  s.degree = q + 1;
  for (unsigned i = 0; i < pp->k; ++i) s.gens.push_back(mobius(f, 1, f.power(w, i), 0, 1));
  if (full_linear) {
    s.gens.push_back(mobius(f, w, 0, 0, 1));
  } else {
    s.gens.push_back(mobius(f, w, 0, 0, f.inv(w)));
  }
  s.gens.push_back(mobius(f, 0, f.neg(1), 1, 0));
  return s;
}

std::vector<unsigned> range(unsigned from, unsigned to) {
  std::vector<unsigned> r;
  for (unsigned i = from; i < to; ++i) r.push_back(i);
  return r;
}

PermSet trivial() { return {1, {Perm::identity(1)}}; }

PermSet cyclic(unsigned n) {
  if (n <= 1) return trivial();
  return {n, {Perm::from_cycles(n, {range(0, n)})}};
}

PermSet dihedral(unsigned n) {
  if (n == 1) return cyclic(2);
  if (n == 2) {
    return {4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}};
  }
  std::vector<std::uint8_t> reflection(n);
  for (unsigned i = 0; i < n; ++i) reflection[i] = static_cast<std::uint8_t>((n - i) % n);
  return {n, {Perm::from_cycles(n, {range(0, n)}), Perm(std::move(reflection))}};
}

// <x, y | x^(2m) = 1, y^2 = x^m, y x y^-1 = x^-1> acting on itself from the
// left; element x^i y^j has index i + 2m j.
PermSet dicyclic(unsigned m) {
  if (m < 2) throw InvalidArgument("Dic<m> needs m >= 2");
  const unsigned n = 2 * m;
  auto multiply = [&](unsigned u, unsigned v) {
    const unsigned i = u % n, j = u / n, k = v % n, l = v / n;
    if (j == 0) return (i + k) % n + n * l;
    const unsigned e = (i + n - k) % n;
    if (l == 0) return e + n;
    return (e + m) % n;
  };
  PermSet s;
  s.degree = 2 * n;
  for (unsigned g : {1u, n}) {
    std::vector<std::uint8_t> images(2 * n);
    for (unsigned z = 0; z < 2 * n; ++z) images[z] = static_cast<std::uint8_t>(multiply(g, z));
    s.gens.push_back(Perm(std::move(images)));
  }
  return s;
}

PermSet alternating(unsigned k) {
  if (k <= 2) return {std::max(k, 1u), {Perm::identity(std::max(k, 1u))}};
  PermSet s{k, {Perm::from_cycles(k, {{0, 1, 2}})}};
  s.gens.push_back(Perm::from_cycles(k, {k % 2 == 1 ? range(0, k) : range(1, k)}));
  return s;
}

PermSet symmetric(unsigned k) {
  if (k <= 1) return trivial();
  return {k, {Perm::from_cycles(k, {{0, 1}}), Perm::from_cycles(k, {range(0, k)})}};
}

Perm shifted(const Perm& p, std::size_t offset, std::size_t degree) {
  std::vector<std::uint8_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint8_t>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) images[offset + i] = static_cast<std::uint8_t>(offset + p[i]);
  return Perm(std::move(images));
}

PermSet direct_product(const std::vector<PermSet>& factors) {
  PermSet s;
  s.degree = 0;
  for (const auto& f : factors) s.degree += f.degree;
  if (s.degree > 255) throw InvalidArgument("product degree exceeds 255");
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens) s.gens.push_back(shifted(g, offset, s.degree));
    offset += f.degree;
  }
  return s;
}

PermSet swap_wreath(const PermSet& base) {
  PermSet s = direct_product({base});
  const std::size_t d = base.degree;
  s.degree = 2 * d;
  if (s.degree > 255) throw InvalidArgument("wreath degree exceeds 255");
  s.gens.clear();
  for (const auto& g : base.gens) s.gens.push_back(shifted(g, 0, 2 * d));
  std::vector<std::uint8_t> swap(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    swap[i] = static_cast<std::uint8_t>(i + d);
    swap[i + d] = static_cast<std::uint8_t>(i);
  }
  s.gens.push_back(Perm(std::move(swap)));
  return s;
}

class NameParser {
 public:
  explicit NameParser(std::string_view name) : name_(name) {}

  PermSet parse(std::string_view text) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth < 0) fail();
      if (depth == 0 && text[i] == 'x') {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
    if (depth != 0) fail();
    parts.push_back(text.substr(start));
    if (parts.size() == 1) return term(parts[0]);
    std::vector<PermSet> factors;
    for (auto p : parts) factors.push_back(term(p));
    return direct_product(factors);
  }

 private:
  [[noreturn]] void fail() const {
    throw UnknownName("unknown group name '" + std::string(name_) + "'");
  }

  unsigned number(std::string_view s) const {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail();
    return v;
  }

  static bool starts(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

  std::string_view inside(std::string_view s, std::string_view head) const {
    if (!starts(s, head) || s.size() < head.size() + 2 || s[head.size()] != '(' || s.back() != ')') fail();
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  }

  PermSet term(std::string_view t) {
    if (t.empty()) fail();
    if (t.front() == '(') {
      if (t.back() != ')') fail();
      return parse(t.substr(1, t.size() - 2));
    }
    if (starts(t, "PSL2(")) return projective(number(inside(t, "PSL2")), false);
    if (starts(t, "PGL2(")) return projective(number(inside(t, "PGL2")), true);
    if (starts(t, "Wr2(")) return swap_wreath(parse(inside(t, "Wr2")));
    if (t == "Q8") return dicyclic(2);
    if (starts(t, "Dic")) return dicyclic(number(t.substr(3)));
    const unsigned n = number(t.substr(1));
    switch (t.front()) {
      case 'C':
        if (n == 0) fail();
        return cyclic(n);
      case 'D':
        if (n == 0) fail();
        return dihedral(n);
      case 'A':
        if (n == 0 || n > 30) fail();
        return alternating(n);
      case 'S':
        if (n == 0 || n > 30) fail();
        return symmetric(n);
      default:
        fail();
    }
  }

  std::string_view name_;
};

std::string format_optional(const std::optional<unsigned>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

}  // namespace

const std::string& catalog_manifest() {
  static const std::string text = kManifest;
  return text;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_manifest(catalog_manifest());
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<const CatalogEntry*> complete_small_catalog() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (e.order <= 15) out.push_back(&e);
  }
  return out;
}

PermGroup build_named(std::string_view name, std::uint64_t max_order) {
  PermSet s = NameParser(name).parse(name);
  return PermGroup(std::string(name), std::move(s.gens), max_order);
}

CatalogEntry derive_metadata(const PermGroup& group) {
  CatalogEntry e;
  e.name = group.name();
  e.order = group.order();
  e.nilpotency_class = nilpotency_class(group);
  e.derived_length = derived_length(group);
  e.is_simple = is_simple(group);
  e.is_semisimple = is_semisimple(group);
  return e;
}

PermGroup build_entry(const CatalogEntry& entry, std::uint64_t max_order) {
  if (entry.order > max_order) {
    throw EnumerationCap("group " + entry.name + " of order " + std::to_string(entry.order) +
                         " exceeds the enumeration cap of " + std::to_string(max_order));
  }
  PermGroup g = build_named(entry.name, max_order);
  if (g.order() != entry.order) {
    throw Error("catalog entry " + entry.name + " lists order " + std::to_string(entry.order) +
                " but the construction has order " + std::to_string(g.order()));
  }
  if (g.order() <= kMetadataCheckMaxOrder) {
    const CatalogEntry d = derive_metadata(g);
    if (d.nilpotency_class != entry.nilpotency_class || d.derived_length != entry.derived_length ||
        d.is_simple != entry.is_simple || d.is_semisimple != entry.is_semisimple) {
      throw Error("catalog metadata for " + entry.name + " disagrees with the group: class " +
                  format_optional(d.nilpotency_class) + ", derived length " +
                  format_optional(d.derived_length) + ", simple " + (d.is_simple ? "yes" : "no") +
                  ", semisimple " + (d.is_semisimple ? "yes" : "no"));
    }
  }
  return g;
}

}  // namespace lawforge
