#include "lawforge/eval.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "lawforge/errors.hpp"

namespace lawforge {

ElementId eval_word(const Word& w, ElementId g, ElementId h, const PermGroup& group) {
  const std::array<ElementId, 4> value{g, group.inv(g), h, group.inv(h)};
  ElementId acc = group.identity();
  for (Letter l : w.letters()) acc = group.mul(acc, value[static_cast<int>(l)]);
  return acc;
}

namespace {

// Registers 0..3 hold a, a^-1, b, b^-1 and register 4 the identity; the
// result of instruction i goes to register kFirstFree + i.
constexpr std::uint32_t kIdentityReg = 4;
constexpr std::uint32_t kFirstFree = 5;

enum class Op : std::uint8_t { Mul, Pow, Comm, Conj, Call, Letters };

struct Instr {
  Op op;
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::int64_t exponent = 0;
  std::uint32_t aux = 0;  // subprogram for Call, literal for Letters
};

struct Program {
  std::vector<Instr> code;
  std::uint32_t result = kIdentityReg;
};

struct Compiled {
  std::vector<Program> programs;
  std::vector<std::vector<Letter>> literals;
  std::uint32_t main = 0;
};

class Compiler {
 public:
  Compiled run(const Expr& root) {
    out_.main = compile_program(root);
    return std::move(out_);
  }

 private:
  using RegMap = std::unordered_map<const void*, std::uint32_t>;

  std::uint32_t compile_program(const Expr& root) {
    Program p;
    RegMap regs;
    p.result = node(root, p, regs);
    out_.programs.push_back(std::move(p));
    return static_cast<std::uint32_t>(out_.programs.size() - 1);
  }

  static std::uint32_t emit(Program& p, Instr ins) {
    p.code.push_back(ins);
    return kFirstFree + static_cast<std::uint32_t>(p.code.size() - 1);
  }

  std::uint32_t node(const Expr& e, Program& p, RegMap& regs) {
    if (auto it = regs.find(e.id()); it != regs.end()) return it->second;
    std::uint32_t r = kIdentityReg;
    const auto& ch = e.children();
    switch (e.kind()) {
      case Expr::Kind::Gen:
        r = static_cast<std::uint32_t>(e.letter());
        break;
      case Expr::Kind::Literal:
        if (!e.word().empty()) {
          out_.literals.push_back(e.word().letters());
          r = emit(p, {Op::Letters, 0, 0, 0, static_cast<std::uint32_t>(out_.literals.size() - 1)});
        }
        break;
      case Expr::Kind::Prod:
        if (!ch.empty()) {
          r = node(ch[0], p, regs);
          for (std::size_t i = 1; i < ch.size(); ++i) r = emit(p, {Op::Mul, r, node(ch[i], p, regs)});
        }
        break;
      case Expr::Kind::Pow: {
        const std::uint32_t base = node(ch[0], p, regs);
        if (e.exponent() == 1) {
          r = base;
        } else if (e.exponent() != 0) {
          r = emit(p, {Op::Pow, base, 0, e.exponent()});
        }
        break;
      }
      case Expr::Kind::Comm: {
        const std::uint32_t x = node(ch[0], p, regs);
        r = emit(p, {Op::Comm, x, node(ch[1], p, regs)});
        break;
      }
      case Expr::Kind::Conj: {
        const std::uint32_t x = node(ch[0], p, regs);
        r = emit(p, {Op::Conj, x, node(ch[1], p, regs)});
        break;
      }
      case Expr::Kind::Subst: {
        std::uint32_t prog;
        if (auto it = templates_.find(ch[0].id()); it != templates_.end()) {
          prog = it->second;
        } else {
          prog = compile_program(ch[0]);
          templates_.emplace(ch[0].id(), prog);
        }
        const std::uint32_t u = node(ch[1], p, regs);
        r = emit(p, {Op::Call, u, node(ch[2], p, regs), 0, prog});
        break;
      }
    }
    regs.emplace(e.id(), r);
    return r;
  }

  Compiled out_;
  std::unordered_map<const void*, std::uint32_t> templates_;
};

// Elements as indices, multiplied through the group (table lookup when
// available).
struct IndexOps {
  using Elem = ElementId;
  const PermGroup* group;

  Elem id() const { return group->identity(); }
  Elem mul(Elem x, Elem y) const { return group->mul(x, y); }
  Elem inv(Elem x) const { return group->inv(x); }
  Elem pow(Elem x, std::int64_t e) const {
    const auto ord = static_cast<std::int64_t>(group->element_order(x));
    std::int64_t k = e % ord;
    if (k < 0) k += ord;
    Elem result = id();
    Elem base = x;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }
  bool is_identity(Elem x) const { return x == group->identity(); }
  Elem load(ElementId x) const { return x; }
  ElementId store(Elem x) const { return x; }
};

// Raw permutations on at most 32 points, for groups too large for a table.
struct PermOps {
  static constexpr std::size_t kMaxDegree = 32;
  using Elem = std::array<std::uint8_t, kMaxDegree>;
  const PermGroup* group;
  std::size_t degree;

  Elem id() const {
    Elem r{};
    for (std::size_t i = 0; i < degree; ++i) r[i] = static_cast<std::uint8_t>(i);
    return r;
  }
  Elem mul(const Elem& x, const Elem& y) const {
    Elem r{};
    for (std::size_t i = 0; i < degree; ++i) r[i] = x[y[i]];
    return r;
  }
  Elem inv(const Elem& x) const {
    Elem r{};
    for (std::size_t i = 0; i < degree; ++i) r[x[i]] = static_cast<std::uint8_t>(i);
    return r;
  }
  // Rotates every cycle by e positions.
  Elem pow(const Elem& x, std::int64_t e) const {
    Elem r{};
    std::array<bool, kMaxDegree> seen{};
    std::array<std::uint8_t, kMaxDegree> cycle{};
    for (std::size_t start = 0; start < degree; ++start) {
      if (seen[start]) continue;
      std::size_t len = 0;
      for (std::size_t p = start; !seen[p]; p = x[p]) {
        seen[p] = true;
        cycle[len++] = static_cast<std::uint8_t>(p);
      }
      const auto l = static_cast<std::int64_t>(len);
      std::int64_t shift = e % l;
      if (shift < 0) shift += l;
      for (std::size_t i = 0; i < len; ++i) {
        r[cycle[i]] = cycle[(i + static_cast<std::size_t>(shift)) % len];
      }
    }
    return r;
  }
  bool is_identity(const Elem& x) const {
    for (std::size_t i = 0; i < degree; ++i) {
      if (x[i] != i) return false;
    }
    return true;
  }
  Elem load(ElementId x) const {
    Elem r{};
    const auto& images = group->element(x).images();
    std::copy(images.begin(), images.end(), r.begin());
    return r;
  }
  ElementId store(const Elem& x) const {
    return group->index_of(Perm(std::vector<std::uint8_t>(x.begin(), x.begin() + degree)));
  }
};

class Runner {
 public:
  virtual ~Runner() = default;
  virtual ElementId eval(ElementId g, ElementId h) = 0;
  virtual bool vanishes(ElementId g, ElementId h) = 0;
  virtual std::unique_ptr<Runner> clone() const = 0;
};

template <class Ops>
class Machine final : public Runner {
 public:
  using Elem = typename Ops::Elem;

  Machine(std::shared_ptr<const Compiled> compiled, Ops ops)
      : compiled_(std::move(compiled)), ops_(ops) {
    for (const auto& p : compiled_->programs) frames_.emplace_back(kFirstFree + p.code.size());
  }

  ElementId eval(ElementId g, ElementId h) override { return ops_.store(run_main(g, h)); }
  bool vanishes(ElementId g, ElementId h) override { return ops_.is_identity(run_main(g, h)); }
  std::unique_ptr<Runner> clone() const override {
    return std::make_unique<Machine>(compiled_, ops_);
  }

 private:
  Elem run_main(ElementId g, ElementId h) {
    return run(compiled_->main, ops_.load(g), ops_.load(h));
  }

  Elem run(std::uint32_t index, const Elem& a, const Elem& b) {
    const Program& p = compiled_->programs[index];
    std::vector<Elem>& r = frames_[index];
    r[0] = a;
    r[1] = ops_.inv(a);
    r[2] = b;
    r[3] = ops_.inv(b);
    r[kIdentityReg] = ops_.id();
    std::size_t dst = kFirstFree;
    for (const Instr& ins : p.code) {
      switch (ins.op) {
        case Op::Mul:
          r[dst] = ops_.mul(r[ins.x], r[ins.y]);
          break;
        case Op::Pow:
          r[dst] = ops_.pow(r[ins.x], ins.exponent);
          break;
        case Op::Comm: {
          const Elem xy = ops_.mul(r[ins.x], r[ins.y]);
          r[dst] = ops_.mul(xy, ops_.inv(ops_.mul(r[ins.y], r[ins.x])));
          break;
        }
        case Op::Conj:
          r[dst] = ops_.mul(ops_.mul(r[ins.y], r[ins.x]), ops_.inv(r[ins.y]));
          break;
        case Op::Call:
          r[dst] = run(ins.aux, r[ins.x], r[ins.y]);
          break;
        case Op::Letters: {
          Elem acc = ops_.id();
          for (Letter l : compiled_->literals[ins.aux]) acc = ops_.mul(acc, r[static_cast<int>(l)]);
          r[dst] = acc;
          break;
        }
      }
      ++dst;
    }
    return r[p.result];
  }

  std::shared_ptr<const Compiled> compiled_;
  Ops ops_;
  std::vector<std::vector<Elem>> frames_;
};

std::string cycles_of(const PermGroup& group, ElementId x) { return group.element(x).cycles(); }

}  // namespace

struct ExprEvaluator::Impl {
  std::shared_ptr<const Compiled> compiled;
  std::unique_ptr<Runner> runner;
};

ExprEvaluator::ExprEvaluator(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}

ExprEvaluator::ExprEvaluator(const Expr& e, const PermGroup& group) : impl_(std::make_unique<Impl>()) {
  impl_->compiled = std::make_shared<const Compiled>(Compiler().run(e));
  if (!group.has_table() && group.degree() <= PermOps::kMaxDegree) {
    impl_->runner = std::make_unique<Machine<PermOps>>(impl_->compiled, PermOps{&group, group.degree()});
  } else {
    impl_->runner = std::make_unique<Machine<IndexOps>>(impl_->compiled, IndexOps{&group});
  }
}

ExprEvaluator::~ExprEvaluator() = default;
ExprEvaluator::ExprEvaluator(ExprEvaluator&&) noexcept = default;
ExprEvaluator& ExprEvaluator::operator=(ExprEvaluator&&) noexcept = default;

ElementId ExprEvaluator::operator()(ElementId g, ElementId h) const { return impl_->runner->eval(g, h); }
bool ExprEvaluator::vanishes(ElementId g, ElementId h) const { return impl_->runner->vanishes(g, h); }

std::size_t ExprEvaluator::program_size() const {
  std::size_t n = 0;
  for (const auto& p : impl_->compiled->programs) n += p.code.size();
  return n;
}

ExprEvaluator ExprEvaluator::clone() const {
  auto impl = std::make_unique<Impl>();
  impl->compiled = impl_->compiled;
  impl->runner = impl_->runner->clone();
  return ExprEvaluator(std::move(impl));
}

ElementId eval_expr(const Expr& e, ElementId g, ElementId h, const PermGroup& group) {
  return ExprEvaluator(e, group)(g, h);
}

std::string to_string(PairMode mode) {
  switch (mode) {
    case PairMode::Auto: return "auto";
    case PairMode::Exhaustive: return "exhaustive";
    case PairMode::ClassRepresentatives: return "class-representatives";
  }
  return "";
}

LawReport is_law(const Expr& e, const PermGroup& group, const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.group = group.name();
  report.order = group.order();
  report.mode = options.mode;
  if (report.mode == PairMode::Auto) {
    report.mode = group.order() <= kAutoExhaustiveMaxOrder ? PairMode::Exhaustive
                                                           : PairMode::ClassRepresentatives;
  }

  std::vector<ElementId> rows;
  if (report.mode == PairMode::Exhaustive) {
    rows.resize(group.order());
    std::iota(rows.begin(), rows.end(), ElementId{0});
  } else {
    rows = class_representatives(group);
    std::sort(rows.begin(), rows.end());
  }
  const std::uint64_t n = group.order();
  report.pairs_total = rows.size() * n;

  ExprEvaluator evaluator(e, group);
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));

  // Position (row * n + h) of the first failing pair, or pairs_total.
  std::atomic<std::uint64_t> first_failure{report.pairs_total};
  auto work = [&](ExprEvaluator& ev, unsigned worker) {
    for (std::size_t i = worker; i < rows.size(); i += threads) {
      if (i * n >= first_failure.load(std::memory_order_relaxed)) return;
      for (ElementId h = 0; h < n; ++h) {
        if (!ev.vanishes(rows[i], h)) {
          std::uint64_t pos = i * n + h;
          std::uint64_t cur = first_failure.load();
          while (pos < cur && !first_failure.compare_exchange_weak(cur, pos)) {
          }
          return;
        }
      }
    }
  };
  if (threads <= 1) {
    work(evaluator, 0);
  } else {
    std::vector<ExprEvaluator> evaluators;
    for (unsigned t = 0; t < threads; ++t) evaluators.push_back(evaluator.clone());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, std::ref(evaluators[t]), t);
    for (auto& th : pool) th.join();
  }

  const std::uint64_t fail = first_failure.load();
  if (fail < report.pairs_total) {
    report.holds = false;
    const ElementId g = rows[fail / n];
    const auto h = static_cast<ElementId>(fail % n);
    report.witness = {g, h};
    report.witness_text = "g=" + cycles_of(group, g) + " h=" + cycles_of(group, h);
    report.pairs_checked = fail + 1;
  } else {
    report.pairs_checked = report.pairs_total;
  }
  report.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

LawReport is_law(const Word& w, const PermGroup& group, const EvalOptions& options) {
  return is_law(Expr::literal(w), group, options);
}

std::vector<bool> vanishing_set(const Expr& e, const PermGroup& group) {
  const std::uint64_t n = group.order();
  ExprEvaluator ev(e, group);
  std::vector<bool> out(n * n);
  for (ElementId g = 0; g < n; ++g) {
    for (ElementId h = 0; h < n; ++h) out[g * n + h] = ev.vanishes(g, h);
  }
  return out;
}

std::vector<bool> vanishing_set(const Word& w, const PermGroup& group) {
  return vanishing_set(Expr::literal(w), group);
}

}  // namespace lawforge
