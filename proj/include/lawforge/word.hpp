// Reduced words in the free group F2 = <a, b>.
//
// A Word is always freely reduced. Storage is a persistent rope: leaves of
// raw letters, concatenation nodes and repetition nodes, shared between words
// and fingerprinted with two polynomial hashes so that boundary cancellation
// can be computed without expanding the word. This keeps words with 10^40
// letters cheap to build and measure; expanding to letters is capped.

#ifndef LAWFORGE_WORD_HPP_
#define LAWFORGE_WORD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lawforge {

using Length = boost::multiprecision::uint256_t;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Length& n);

enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

constexpr Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}
// The automorphism a <-> b.
constexpr Letter swap_generators(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 2u);
}
constexpr bool is_inverse_letter(Letter l) {
  return (static_cast<std::uint8_t>(l) & 1u) != 0;
}
constexpr char to_char(Letter l) { return "aAbB"[static_cast<int>(l)]; }
std::optional<Letter> letter_from_char(char c);

// Letters materialised from a word are limited to this many unless a caller
// passes its own cap. Defaults to 2^30; LAWFORGE_MAX_FLAT overrides it.
std::uint64_t default_flat_cap();
void set_default_flat_cap(std::uint64_t cap);

struct Fingerprint {
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

namespace detail {
struct RopeNode;
}

class Word {
 public:
  Word() = default;  // identity

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters);
  // Parses the flat text format over {a,A,b,B}; surrounding whitespace is
  // ignored. Input need not be reduced.
  static Word parse(std::string_view text);
  static Word generator(Letter l);

  const Length& length() const;
  bool empty() const { return node_ == nullptr; }
  Letter at(const Length& index) const;
  Fingerprint fingerprint() const;

  std::vector<Letter> letters(std::uint64_t cap = default_flat_cap()) const;
  std::string str(std::uint64_t cap = default_flat_cap()) const;

  // Number of rope nodes reachable from this word (storage diagnostics).
  std::size_t node_count() const;

  friend bool operator==(const Word& x, const Word& y);

 private:
  friend struct WordAccess;
  Word(std::shared_ptr<const detail::RopeNode> node, bool inverted)
      : node_(std::move(node)), inverted_(inverted) {}

  std::shared_ptr<const detail::RopeNode> node_;
  bool inverted_ = false;
};

Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, std::int64_t k);
// c w c^-1
Word conjugate(const Word& w, const Word& c);
// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
// Replaces a -> u and b -> v, then reduces.
Word substitute(const Word& tmpl, const Word& u, const Word& v);
// True iff u and v commute in F2, i.e. the commutator is trivial.
bool commute_in_free(const Word& u, const Word& v);

// Length of the longest common prefix of the two reduced words.
Length common_prefix_length(const Word& u, const Word& v);

}  // namespace lawforge

#endif  // LAWFORGE_WORD_HPP_
