// Shared test helpers: seeded random words and a naive flat-vector model of
// F2 used as an oracle for the rope implementation.

#ifndef LAWFORGE_TESTS_SUPPORT_HPP_
#define LAWFORGE_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lawforge/expr.hpp"
#include "lawforge/perm_group.hpp"
#include "lawforge/word.hpp"

namespace lawforge::testing {

using Flat = std::vector<Letter>;

inline Flat naive_reduce(const Flat& s) {
  Flat out;
  for (Letter l : s) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Flat naive_inverse(const Flat& s) {
  Flat out(s.rbegin(), s.rend());
  for (Letter& l : out) l = inverse(l);
  return out;
}

inline Flat naive_concat(const Flat& u, const Flat& v) {
  Flat s = u;
  s.insert(s.end(), v.begin(), v.end());
  return naive_reduce(s);
}

inline Flat naive_power(const Flat& w, std::int64_t k) {
  const Flat base = k < 0 ? naive_inverse(w) : w;
  Flat s;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) s.insert(s.end(), base.begin(), base.end());
  return naive_reduce(s);
}

inline Flat naive_commutator(const Flat& u, const Flat& v) {
  Flat s = u;
  s.insert(s.end(), v.begin(), v.end());
  const Flat ui = naive_inverse(u), vi = naive_inverse(v);
  s.insert(s.end(), ui.begin(), ui.end());
  s.insert(s.end(), vi.begin(), vi.end());
  return naive_reduce(s);
}

inline Flat naive_conjugate(const Flat& w, const Flat& c) {
  Flat s = c;
  s.insert(s.end(), w.begin(), w.end());
  const Flat ci = naive_inverse(c);
  s.insert(s.end(), ci.begin(), ci.end());
  return naive_reduce(s);
}

inline Flat naive_substitute(const Flat& t, const Flat& u, const Flat& v) {
  const Flat ui = naive_inverse(u), vi = naive_inverse(v);
  Flat s;
  for (Letter l : t) {
    const Flat& part = l == Letter::a ? u : l == Letter::A ? ui : l == Letter::b ? v : vi;
    s.insert(s.end(), part.begin(), part.end());
  }
  return naive_reduce(s);
}

inline Flat flat_of(const std::string& s) {
  Flat out;
  for (char c : s) out.push_back(*letter_from_char(c));
  return out;
}

inline std::string str_of(const Flat& f) {
  std::string s;
  for (Letter l : f) s += to_char(l);
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  Letter letter() { return static_cast<Letter>(below(4)); }

  // Raw (unreduced) sequence.
  Flat raw(std::size_t len) {
    Flat s(len);
    for (auto& l : s) l = letter();
    return s;
  }

  // Reduced word of exactly len letters.
  Flat reduced(std::size_t len) {
    Flat s;
    while (s.size() < len) {
      Letter l = letter();
      if (!s.empty() && s.back() == inverse(l)) continue;
      s.push_back(l);
    }
    return s;
  }

  Flat nontrivial(std::size_t max_len) { return reduced(1 + below(max_len)); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Letter-by-letter evaluation on raw permutations, independent of the
// library's evaluators.
inline Perm naive_eval(const Flat& w, const Perm& g, const Perm& h) {
  const Perm gi = g.inverse(), hi = h.inverse();
  Perm acc = Perm::identity(g.degree());
  for (Letter l : w) {
    const Perm& x = l == Letter::a ? g : l == Letter::A ? gi : l == Letter::b ? h : hi;
    acc = acc * x;
  }
  return acc;
}

}  // namespace lawforge::testing

#endif  // LAWFORGE_TESTS_SUPPORT_HPP_
