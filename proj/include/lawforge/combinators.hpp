// Word combinators: merging vanishing sets, laws for extensions, and words
// deep in the lower central and derived series of F2.

#ifndef LAWFORGE_COMBINATORS_HPP_
#define LAWFORGE_COMBINATORS_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lawforge/expr.hpp"
#include "lawforge/word.hpp"

namespace lawforge {

// An expression together with an a-priori upper bound on its length, obtained
// by applying the length bound of every construction step to the bounds of
// its inputs.
struct Bounded {
  Expr expr;
  BigInt budget;

  const Word& word() const { return expr.word(); }
};

// Conjugators tried by combine, in order: a, b, A, B, then the reduced words
// of length 2 (aa, ab, aB, ba, bb, bA, Ab, AB, AA, Ba, BA, BB).
const std::vector<Expr>& conjugator_candidates();

// A nontrivial word w with Z(G, w) containing every Z(G, w_i), built by a
// balanced tree of merges u, v -> [u, c v c^-1]. |w| <= 16 m^2 max |w_i|.
Bounded combine(std::span<const Bounded> parts);
Expr combine(std::span<const Expr> parts);
Word combine(std::span<const Word> words);

// kernel_law(q, x q x^-1) with q = quotient_law; a law for every extension
// of a group satisfying kernel_law by one satisfying quotient_law.
// |w| <= |kernel_law| (|quotient_law| + 2).
Bounded compose(const Bounded& kernel_law, const Bounded& quotient_law);
Expr compose(const Expr& kernel_law, const Expr& quotient_law);
Word compose(const Word& kernel_law, const Word& quotient_law);

// Source of nontrivial words in gamma_k(F2) and in the k-th derived subgroup.
// Builders re-derive every downstream length from the active provider.
class SeriesWordProvider {
 public:
  virtual ~SeriesWordProvider() = default;
  virtual std::string name() const = 0;
  virtual Bounded lower_central(unsigned k) const = 0;  // k >= 1
  virtual Bounded derived(unsigned k) const = 0;        // k >= 0
};

// e_1 = a, e_2 = [a,b], e_{k+1} = [e_k, b];
// d_0 = a, d_1 = [a,b], d_{k+1} = [d_k, x d_k x^-1] with x the first of
// a, b, A, B giving a nontrivial word.
std::shared_ptr<const SeriesWordProvider> baseline_provider();

// Loads a shared object exporting
//   extern "C" long long lawforge_series_word(int kind, unsigned depth,
//                                             char* out,
//                                             unsigned long long capacity);
// kind 0 = lower central, 1 = derived. The function writes the flat word
// (letters a, A, b, B) and returns its length, or a negative value on
// failure. When the length exceeds capacity it is called again with a larger
// buffer.
std::shared_ptr<const SeriesWordProvider> load_provider_plugin(const std::string& path);

Word lower_central_word(unsigned k);
Word derived_word(unsigned k);

}  // namespace lawforge

#endif  // LAWFORGE_COMBINATORS_HPP_
