#include "lawforge/word.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "lawforge/errors.hpp"

namespace lawforge {

std::string to_string(const Length& n) { return n.str(); }

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

namespace {

std::uint64_t initial_flat_cap() {
  if (const char* env = std::getenv("LAWFORGE_MAX_FLAT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return std::uint64_t{1} << 30;
}

std::atomic<std::uint64_t>& flat_cap_storage() {
  static std::atomic<std::uint64_t> cap{initial_flat_cap()};
  return cap;
}

}  // namespace

std::uint64_t default_flat_cap() { return flat_cap_storage().load(); }
void set_default_flat_cap(std::uint64_t cap) { flat_cap_storage().store(cap); }

namespace detail {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase1 = 0x0a3b1c5d7e9f2468ull % kMod;
constexpr std::uint64_t kBase2 = 0x13579bdf02468aceull % kMod;

inline std::uint64_t mod_reduce(std::uint64_t x) {
  x = (x & kMod) + (x >> 61);
  return x >= kMod ? x - kMod : x;
}

inline std::uint64_t add_mod(std::uint64_t x, std::uint64_t y) {
  return mod_reduce(x + y);
}

inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y) {
  unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
  std::uint64_t lo = static_cast<std::uint64_t>(p) & kMod;
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return mod_reduce(lo + hi);
}

struct Hash2 {
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;
  friend bool operator==(const Hash2&, const Hash2&) = default;
};

inline Hash2 operator+(Hash2 x, Hash2 y) {
  return {add_mod(x.h1, y.h1), add_mod(x.h2, y.h2)};
}
inline Hash2 operator*(Hash2 x, Hash2 y) {
  return {mul_mod(x.h1, y.h1), mul_mod(x.h2, y.h2)};
}

constexpr Hash2 kOne{1, 1};
constexpr Hash2 kBase{kBase1, kBase2};

inline Hash2 letter_code(Letter l) {
  std::uint64_t c = static_cast<std::uint64_t>(l) + 1;
  return {c, c};
}

// (1 + x + ... + x^(k-1), x^k)
std::pair<Hash2, Hash2> geometric(Hash2 x, std::uint64_t k) {
  if (k == 0) return {Hash2{}, kOne};
  auto [g, p] = geometric(x, k / 2);
  Hash2 g2 = g + p * g;
  Hash2 p2 = p * p;
  if (k & 1u) {
    g2 = g2 + p2;
    p2 = p2 * x;
  }
  return {g2, p2};
}

enum class Kind : std::uint8_t { Leaf, Concat, Repeat };

struct Ref {
  std::shared_ptr<const RopeNode> node;
  bool inv = false;
  bool empty() const { return node == nullptr; }
  Ref flipped() const { return {node, !inv}; }
};

struct RopeNode {
  Kind kind = Kind::Leaf;
  Length len;
  Hash2 pw;   // base^len
  Hash2 h;    // hash of the node string
  Hash2 hi;   // hash of the inverse of the node string
  std::vector<Letter> letters;  // Leaf
  Ref left;                     // Concat, Repeat (base)
  Ref right;                    // Concat
  std::uint64_t count = 0;      // Repeat
};

// Leaves are merged eagerly below this size.
constexpr std::size_t kLeafMax = 32;

inline const Length& len_of(const Ref& r) {
  static const Length zero = 0;
  return r.node ? r.node->len : zero;
}
inline Hash2 hash_of(const RopeNode* n, bool inv) { return inv ? n->hi : n->h; }
inline Hash2 hash_of(const Ref& r) {
  return r.node ? hash_of(r.node.get(), r.inv) : Hash2{};
}
inline Hash2 pw_of(const Ref& r) { return r.node ? r.node->pw : kOne; }

Length checked_add(const Length& x, const Length& y) {
  Length s = x + y;
  if (s < x) throw ResourceLimit("word length overflows 256 bits");
  return s;
}

Length checked_mul(const Length& x, std::uint64_t k) {
  if (k != 0 && x > std::numeric_limits<Length>::max() / k)
    throw ResourceLimit("word length overflows 256 bits");
  return x * k;
}

// Child views of a node seen with orientation `inv`.
inline std::pair<Ref, Ref> halves(const RopeNode* n, bool inv) {
  if (!inv) return {Ref{n->left.node, n->left.inv}, Ref{n->right.node, n->right.inv}};
  return {Ref{n->right.node, !n->right.inv}, Ref{n->left.node, !n->left.inv}};
}

inline Letter leaf_letter(const RopeNode* n, bool inv, std::size_t i) {
  if (!inv) return n->letters[i];
  return inverse(n->letters[n->letters.size() - 1 - i]);
}

void append_letters(const Ref& r, std::vector<Letter>& out);

Ref make_leaf(std::vector<Letter> letters) {
  if (letters.empty()) return {};
  auto n = std::make_shared<RopeNode>();
  n->kind = Kind::Leaf;
  n->len = letters.size();
  Hash2 pw = kOne;
  Hash2 h{};
  for (Letter l : letters) {
    h = h + pw * letter_code(l);
    pw = pw * kBase;
  }
  Hash2 hi{};
  Hash2 p = kOne;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    hi = hi + p * letter_code(inverse(*it));
    p = p * kBase;
  }
  n->pw = pw;
  n->h = h;
  n->hi = hi;
  n->letters = std::move(letters);
  return {std::move(n), false};
}

// Concatenation without free reduction; callers guarantee no cancellation.
Ref make_concat(const Ref& x, const Ref& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (x.node->len + y.node->len <= kLeafMax) {
    std::vector<Letter> merged;
    append_letters(x, merged);
    append_letters(y, merged);
    return make_leaf(std::move(merged));
  }
  auto n = std::make_shared<RopeNode>();
  n->kind = Kind::Concat;
  n->len = checked_add(x.node->len, y.node->len);
  n->pw = x.node->pw * y.node->pw;
  n->h = hash_of(x) + x.node->pw * hash_of(y);
  n->hi = hash_of(y.flipped()) + y.node->pw * hash_of(x.flipped());
  n->left = x;
  n->right = y;
  return {std::move(n), false};
}

// base^k where base is cyclically reduced.
Ref make_repeat(const Ref& base, std::uint64_t k) {
  if (base.empty() || k == 0) return {};
  if (k == 1) return base;
  const Length total = checked_mul(base.node->len, k);
  if (total <= kLeafMax) {
    std::vector<Letter> once;
    append_letters(base, once);
    std::vector<Letter> all;
    for (std::uint64_t i = 0; i < k; ++i) all.insert(all.end(), once.begin(), once.end());
    return make_leaf(std::move(all));
  }
  auto n = std::make_shared<RopeNode>();
  n->kind = Kind::Repeat;
  n->len = total;
  auto [g, p] = geometric(base.node->pw, k);
  n->pw = p;
  n->h = hash_of(base) * g;
  n->hi = hash_of(base.flipped()) * g;
  n->left = base;
  n->count = k;
  return {std::move(n), false};
}

void append_letters(const Ref& r, std::vector<Letter>& out) {
  if (r.empty()) return;
  const RopeNode* n = r.node.get();
  switch (n->kind) {
    case Kind::Leaf:
      for (std::size_t i = 0; i < n->letters.size(); ++i) out.push_back(leaf_letter(n, r.inv, i));
      break;
    case Kind::Concat: {
      auto [first, second] = halves(n, r.inv);
      append_letters(first, out);
      append_letters(second, out);
      break;
    }
    case Kind::Repeat: {
      Ref base{n->left.node, n->left.inv != r.inv};
      std::size_t start = out.size();
      append_letters(base, out);
      std::size_t end = out.size();
      for (std::uint64_t i = 1; i < n->count; ++i) {
        for (std::size_t j = start; j < end; ++j) out.push_back(out[j]);
      }
      break;
    }
  }
}

Hash2 prefix_hash(const Ref& r, Length len) {
  Hash2 acc{};
  Hash2 mult = kOne;
  const RopeNode* n = r.node.get();
  bool inv = r.inv;
  while (len != 0) {
    if (len == n->len) return acc + mult * hash_of(n, inv);
    switch (n->kind) {
      case Kind::Leaf: {
        const auto count = static_cast<std::size_t>(len);
        Hash2 h{};
        Hash2 p = kOne;
        for (std::size_t i = 0; i < count; ++i) {
          h = h + p * letter_code(leaf_letter(n, inv, i));
          p = p * kBase;
        }
        return acc + mult * h;
      }
      case Kind::Concat: {
        auto [first, second] = halves(n, inv);
        const Length& lf = first.node->len;
        if (len <= lf) {
          n = first.node.get();
          inv = first.inv;
        } else {
          acc = acc + mult * hash_of(first);
          mult = mult * first.node->pw;
          len -= lf;
          n = second.node.get();
          inv = second.inv;
        }
        break;
      }
      case Kind::Repeat: {
        const RopeNode* base = n->left.node.get();
        const bool base_inv = n->left.inv != inv;
        const auto copies = static_cast<std::uint64_t>(len / base->len);
        len = len % base->len;
        auto [g, p] = geometric(base->pw, copies);
        acc = acc + mult * hash_of(base, base_inv) * g;
        mult = mult * p;
        n = base;
        inv = base_inv;
        break;
      }
    }
  }
  return acc;
}

Letter letter_at(const Ref& r, Length index) {
  const RopeNode* n = r.node.get();
  bool inv = r.inv;
  for (;;) {
    switch (n->kind) {
      case Kind::Leaf:
        return leaf_letter(n, inv, static_cast<std::size_t>(index));
      case Kind::Concat: {
        auto [first, second] = halves(n, inv);
        if (index < first.node->len) {
          n = first.node.get();
          inv = first.inv;
        } else {
          index -= first.node->len;
          n = second.node.get();
          inv = second.inv;
        }
        break;
      }
      case Kind::Repeat:
        index = index % n->left.node->len;
        inv = n->left.inv != inv;
        n = n->left.node.get();
        break;
    }
  }
}

Ref slice(const Ref& r, const Length& from, const Length& to) {
  if (from >= to) return {};
  const RopeNode* n = r.node.get();
  if (from == 0 && to == n->len) return r;
  switch (n->kind) {
    case Kind::Leaf: {
      std::vector<Letter> part;
      const auto f = static_cast<std::size_t>(from);
      const auto t = static_cast<std::size_t>(to);
      part.reserve(t - f);
      for (std::size_t i = f; i < t; ++i) part.push_back(leaf_letter(n, r.inv, i));
      return make_leaf(std::move(part));
    }
    case Kind::Concat: {
      auto [first, second] = halves(n, r.inv);
      const Length& lf = first.node->len;
      if (to <= lf) return slice(first, from, to);
      if (from >= lf) return slice(second, from - lf, to - lf);
      return make_concat(slice(first, from, lf), slice(second, 0, to - lf));
    }
    case Kind::Repeat: {
      Ref base{n->left.node, n->left.inv != r.inv};
      const Length& m = base.node->len;
      const Length i0 = from / m;
      const Length i1 = (to - 1) / m;
      if (i0 == i1) return slice(base, from - i0 * m, to - i0 * m);
      Ref head = slice(base, from - i0 * m, m);
      Ref middle = make_repeat(base, static_cast<std::uint64_t>(i1 - i0 - 1));
      Ref tail = slice(base, 0, to - i1 * m);
      return make_concat(make_concat(head, middle), tail);
    }
  }
  return {};
}

bool prefix_equal(const Ref& x, const Ref& y, const Length& len) {
  return prefix_hash(x, len) == prefix_hash(y, len);
}

Length common_prefix(const Ref& x, const Ref& y) {
  if (x.empty() || y.empty()) return 0;
  const Length n = std::min(x.node->len, y.node->len);
  if (letter_at(x, 0) != letter_at(y, 0)) return 0;
  if (n == 1) return 1;
  Length good = 1;
  Length bad;
  Length step = 2;
  for (;;) {
    if (step >= n) {
      if (prefix_equal(x, y, n)) return n;
      bad = n;
      break;
    }
    if (prefix_equal(x, y, step)) {
      good = step;
      step <<= 1;
    } else {
      bad = step;
      break;
    }
  }
  while (bad - good > 1) {
    Length mid = good + (bad - good) / 2;
    if (prefix_equal(x, y, mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

Ref reduced_concat(const Ref& u, const Ref& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  const Length k = common_prefix(u.flipped(), v);
  return make_concat(slice(u, 0, u.node->len - k), slice(v, k, v.node->len));
}

Ref balanced(std::vector<Ref> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<Ref> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i < parts.size(); i += 2) {
      next.push_back(i + 1 < parts.size() ? make_concat(parts[i], parts[i + 1]) : parts[i]);
    }
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace detail

using detail::Ref;

struct WordAccess {
  static Ref ref(const Word& w) { return {w.node_, w.inverted_}; }
  static Word make(Ref r) {
    if (r.empty()) return Word();
    return Word(std::move(r.node), r.inv);
  }
};

namespace {
Ref ref(const Word& w) { return WordAccess::ref(w); }
Word make(Ref r) { return WordAccess::make(std::move(r)); }
}  // namespace

Word Word::reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (!stack.empty() && stack.back() == lawforge::inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  std::vector<Ref> leaves;
  for (std::size_t i = 0; i < stack.size(); i += detail::kLeafMax) {
    const std::size_t end = std::min(stack.size(), i + detail::kLeafMax);
    leaves.push_back(detail::make_leaf(std::vector<Letter>(stack.begin() + static_cast<std::ptrdiff_t>(i),
                                                          stack.begin() + static_cast<std::ptrdiff_t>(end))));
  }
  return make(detail::balanced(std::move(leaves)));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  std::size_t begin = 0;
  std::size_t end = text.size();
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  for (std::size_t i = begin; i < end; ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) {
      throw ParseError("invalid letter '" + std::string(1, text[i]) + "' at offset " +
                       std::to_string(i) + " (expected one of a, A, b, B)");
    }
    letters.push_back(*l);
  }
  return reduce(letters);
}

Word Word::generator(Letter l) { return make(detail::make_leaf({l})); }

const Length& Word::length() const { return detail::len_of(ref(*this)); }

Letter Word::at(const Length& index) const {
  if (index >= length()) throw InvalidArgument("letter index out of range");
  return detail::letter_at(ref(*this), index);
}

Fingerprint Word::fingerprint() const {
  auto h = detail::hash_of(ref(*this));
  return {h.h1, h.h2};
}

std::vector<Letter> Word::letters(std::uint64_t cap) const {
  if (length() > cap) {
    throw ResourceLimit("word of length " + to_string(length()) + " exceeds the flat cap of " +
                        std::to_string(cap) + " letters (max_flat / LAWFORGE_MAX_FLAT)");
  }
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  detail::append_letters(ref(*this), out);
  return out;
}

std::string Word::str(std::uint64_t cap) const {
  std::string s;
  for (Letter l : letters(cap)) s.push_back(to_char(l));
  return s;
}

std::size_t Word::node_count() const {
  std::unordered_set<const detail::RopeNode*> seen;
  std::vector<const detail::RopeNode*> todo;
  if (node_) todo.push_back(node_.get());
  while (!todo.empty()) {
    const auto* n = todo.back();
    todo.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->left.node) todo.push_back(n->left.node.get());
    if (n->right.node) todo.push_back(n->right.node.get());
  }
  return seen.size();
}

bool operator==(const Word& x, const Word& y) {
  return x.length() == y.length() && x.fingerprint() == y.fingerprint();
}

Word concat(const Word& u, const Word& v) {
  return make(detail::reduced_concat(ref(u), ref(v)));
}

Word inverse(const Word& w) {
  if (w.empty()) return w;
  return make(ref(w).flipped());
}

Word power(const Word& w, std::int64_t k) {
  if (w.empty() || k == 0) return Word();
  Ref r = ref(w);
  std::uint64_t magnitude = static_cast<std::uint64_t>(k);
  if (k < 0) {
    r = r.flipped();
    magnitude = ~magnitude + 1;
  }
  if (magnitude == 1) return make(r);
  // w = c u c^-1 with u cyclically reduced, so w^k = c u^k c^-1 without
  // further cancellation.
  const Length& n = r.node->len;
  const Length t = detail::common_prefix(r, r.flipped());
  Ref c = detail::slice(r, 0, t);
  Ref core = detail::slice(r, t, n - t);
  Ref body = detail::make_repeat(core, magnitude);
  return make(detail::make_concat(detail::make_concat(c, body), c.empty() ? Ref{} : c.flipped()));
}

Word conjugate(const Word& w, const Word& c) {
  return concat(concat(c, w), inverse(c));
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

Word substitute(const Word& tmpl, const Word& u, const Word& v) {
  std::unordered_map<const detail::RopeNode*, Word> memo;
  const Word images[4] = {u, inverse(u), v, inverse(v)};
  std::function<Word(const Ref&)> image = [&](const Ref& r) -> Word {
    if (r.empty()) return Word();
    const detail::RopeNode* n = r.node.get();
    auto it = memo.find(n);
    if (it == memo.end()) {
      Word forward;
      switch (n->kind) {
        case detail::Kind::Leaf:
          for (Letter l : n->letters) forward = concat(forward, images[static_cast<int>(l)]);
          break;
        case detail::Kind::Concat:
          forward = concat(image(n->left), image(n->right));
          break;
        case detail::Kind::Repeat:
          forward = power(image(n->left), static_cast<std::int64_t>(n->count));
          break;
      }
      it = memo.emplace(n, std::move(forward)).first;
    }
    return r.inv ? inverse(it->second) : it->second;
  };
  return image(ref(tmpl));
}

bool commute_in_free(const Word& u, const Word& v) { return commutator(u, v).empty(); }

Length common_prefix_length(const Word& u, const Word& v) {
  return detail::common_prefix(ref(u), ref(v));
}

}  // namespace lawforge
