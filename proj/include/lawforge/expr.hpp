// Structured word expressions.
//
// An Expr is an immutable DAG over generators, literal words, products,
// powers, commutators, conjugates and substitutions. Every node carries its
// reduced Word, computed when the node is built, so lengths are always exact;
// group evaluation walks the DAG instead of the expanded word.

#ifndef LAWFORGE_EXPR_HPP_
#define LAWFORGE_EXPR_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lawforge/word.hpp"

namespace lawforge {

class Expr {
 public:
  enum class Kind : std::uint8_t { Gen, Literal, Prod, Pow, Comm, Conj, Subst };

  // Identity (an empty product).
  Expr();

  static Expr gen(Letter l);
  static Expr literal(Word w);
  static Expr prod(std::vector<Expr> factors);
  static Expr pow(Expr base, std::int64_t exponent);
  static Expr comm(Expr x, Expr y);
  // by * x * by^-1
  static Expr conj(Expr x, Expr by);
  // tmpl with a -> arg_a, b -> arg_b
  static Expr subst(Expr tmpl, Expr arg_a, Expr arg_b);

  Kind kind() const;
  const Word& word() const;
  Letter letter() const;                    // Gen
  std::int64_t exponent() const;            // Pow
  const std::vector<Expr>& children() const;  // operands in constructor order

  // Stable identity of the shared node.
  const void* id() const { return node_.get(); }

  // Distinct nodes reachable from this expression, Subst templates included.
  std::size_t node_count() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Reduced word of the expression, limited to `cap` letters (ResourceLimit).
Word flatten(const Expr& e, std::uint64_t cap = default_flat_cap());

// Text format: prefix s-expressions
//   a | A | b | B | <literal word> | (prod X...) | (pow X k) | (comm X Y)
//   | (conj X BY) | (subst T U V)
// Shared nodes are written once as (def N X) before the root and referenced
// as #N afterwards.
std::string to_text(const Expr& e);
Expr parse_expr(std::string_view text);

}  // namespace lawforge

#endif  // LAWFORGE_EXPR_HPP_
