// Evaluating words on finite groups, law checks and vanishing sets.

#ifndef LAWFORGE_EVAL_HPP_
#define LAWFORGE_EVAL_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lawforge/expr.hpp"
#include "lawforge/perm_group.hpp"
#include "lawforge/word.hpp"

namespace lawforge {

// Substitutes g for a and h for b, multiplying letter by letter.
ElementId eval_word(const Word& w, ElementId g, ElementId h, const PermGroup& group);

// An expression compiled against one group: every DAG node is evaluated once
// per pair, powers are reduced modulo the element order, and substitution
// templates run as subprograms on the evaluated arguments.
class ExprEvaluator {
 public:
  ExprEvaluator(const Expr& e, const PermGroup& group);
  ~ExprEvaluator();
  ExprEvaluator(ExprEvaluator&&) noexcept;
  ExprEvaluator& operator=(ExprEvaluator&&) noexcept;

  ElementId operator()(ElementId g, ElementId h) const;
  bool vanishes(ElementId g, ElementId h) const;

  // Instructions over all subprograms.
  std::size_t program_size() const;

  // A fresh evaluator sharing the compiled program (for worker threads).
  ExprEvaluator clone() const;

 private:
  struct Impl;
  explicit ExprEvaluator(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

ElementId eval_expr(const Expr& e, ElementId g, ElementId h, const PermGroup& group);

// Which pairs a law check visits.
//   Exhaustive: all |G|^2 ordered pairs, g-major in element order.
//   ClassRepresentatives: g over one representative per conjugacy class and
//     h over all of G. Equivalent for law checks because
//     w(x g x^-1, x h x^-1) = x w(g,h) x^-1.
//   Auto: Exhaustive when |G| <= kAutoExhaustiveMaxOrder.
enum class PairMode { Auto, Exhaustive, ClassRepresentatives };

inline constexpr std::uint64_t kAutoExhaustiveMaxOrder = 1200;

std::string to_string(PairMode mode);

struct EvalOptions {
  PairMode mode = PairMode::Auto;
  unsigned threads = 1;  // 0: hardware concurrency
};

struct LawReport {
  std::string group;
  std::uint64_t order = 0;
  bool holds = true;
  std::optional<std::pair<ElementId, ElementId>> witness;
  std::string witness_text;  // "g=<cycles> h=<cycles>", empty when the law holds
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_total = 0;
  double millis = 0;
  PairMode mode = PairMode::Exhaustive;
};

// Stops at the first non-vanishing pair in iteration order, independent of
// the number of threads.
LawReport is_law(const Expr& e, const PermGroup& group, const EvalOptions& options = {});
LawReport is_law(const Word& w, const PermGroup& group, const EvalOptions& options = {});

// Bit g * |G| + h is set iff w(g, h) = 1.
std::vector<bool> vanishing_set(const Expr& e, const PermGroup& group);
std::vector<bool> vanishing_set(const Word& w, const PermGroup& group);

}  // namespace lawforge

#endif  // LAWFORGE_EVAL_HPP_
