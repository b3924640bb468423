#include "lawforge/combinators.hpp"

#include <dlfcn.h>

#include <algorithm>
#include <mutex>
#include <optional>

#include "lawforge/errors.hpp"

namespace lawforge {

const std::vector<Expr>& conjugator_candidates() {
  static const std::vector<Expr> candidates = [] {
    std::vector<Expr> out;
    for (Letter l : {Letter::a, Letter::b, Letter::A, Letter::B}) out.push_back(Expr::gen(l));
    for (const char* w : {"aa", "ab", "aB", "ba", "bb", "bA", "Ab", "AB", "AA", "Ba", "BA", "BB"}) {
      out.push_back(Expr::literal(Word::parse(w)));
    }
    return out;
  }();
  return candidates;
}

namespace {

const BigInt& max_budget(std::span<const Bounded> parts) {
  return std::max_element(parts.begin(), parts.end(), [](const Bounded& x, const Bounded& y) {
           return x.budget < y.budget;
         })->budget;
}

Expr merge(const Expr& u, const Expr& v) {
  for (const Expr& c : conjugator_candidates()) {
    Expr w = Expr::comm(u, Expr::conj(v, c));
    if (!w.word().empty()) return w;
  }
  throw NoConjugatorFound("no candidate conjugator separates the merged words");
}

}  // namespace

Expr combine(std::span<const Expr> parts) {
  if (parts.empty()) throw EmptyInput("combine needs at least one word");
  for (const Expr& p : parts) {
    if (p.word().empty()) throw TrivialInput("combine input is the trivial word");
  }
  std::vector<Expr> level(parts.begin(), parts.end());
  while (level.size() > 1) {
    std::vector<Expr> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) {
      // an odd element at the end of a level is carried up unmerged
      next.push_back(i + 1 < level.size() ? merge(level[i], level[i + 1]) : level[i]);
    }
    level = std::move(next);
  }
  return level.front();
}

Bounded combine(std::span<const Bounded> parts) {
  if (parts.empty()) throw EmptyInput("combine needs at least one word");
  std::vector<Expr> exprs;
  exprs.reserve(parts.size());
  for (const auto& p : parts) exprs.push_back(p.expr);
  const BigInt m = parts.size();
  BigInt budget = parts.size() == 1 ? parts.front().budget : 16 * m * m * max_budget(parts);
  return {combine(exprs), std::move(budget)};
}

Word combine(std::span<const Word> words) {
  std::vector<Expr> exprs;
  exprs.reserve(words.size());
  for (const auto& w : words) exprs.push_back(Expr::literal(w));
  return combine(exprs).word();
}

Expr compose(const Expr& kernel_law, const Expr& quotient_law) {
  if (kernel_law.word().empty() || quotient_law.word().empty()) {
    throw TrivialInput("compose inputs must be nontrivial");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const Expr& x = conjugator_candidates()[i];
    Expr conjugated = Expr::conj(quotient_law, x);
    if (!commute_in_free(quotient_law.word(), conjugated.word())) {
      return Expr::subst(kernel_law, quotient_law, conjugated);
    }
  }
  throw NoConjugatorFound("no generator conjugate of the quotient law is free from it");
}

Bounded compose(const Bounded& kernel_law, const Bounded& quotient_law) {
  return {compose(kernel_law.expr, quotient_law.expr), kernel_law.budget * (quotient_law.budget + 2)};
}

Word compose(const Word& kernel_law, const Word& quotient_law) {
  return compose(Expr::literal(kernel_law), Expr::literal(quotient_law)).word();
}

namespace {

class BaselineProvider final : public SeriesWordProvider {
 public:
  std::string name() const override { return "baseline"; }

  Bounded lower_central(unsigned k) const override {
    if (k == 0) throw InvalidArgument("lower central depth must be >= 1");
    std::lock_guard lock(mutex_);
    if (lower_.empty()) lower_.push_back({Expr::gen(Letter::a), 1});
    const Expr b = Expr::gen(Letter::b);
    while (lower_.size() < k) {
      const Bounded& last = lower_.back();
      lower_.push_back({Expr::comm(last.expr, b), 2 * last.budget + 2});
    }
    return lower_[k - 1];
  }

  Bounded derived(unsigned k) const override {
    std::lock_guard lock(mutex_);
    if (derived_.empty()) {
      derived_.push_back({Expr::gen(Letter::a), 1});
      derived_.push_back({Expr::comm(Expr::gen(Letter::a), Expr::gen(Letter::b)), 4});
    }
    while (derived_.size() <= k) {
      const Bounded& last = derived_.back();
      derived_.push_back({next_derived(last.expr), 4 * last.budget + 8});
    }
    return derived_[k];
  }

 private:
  static Expr next_derived(const Expr& d) {
    for (std::size_t i = 0; i < 4; ++i) {
      Expr w = Expr::comm(d, Expr::conj(d, conjugator_candidates()[i]));
      if (!w.word().empty()) return w;
    }
    throw NoConjugatorFound("no generator conjugate gives a nontrivial derived word");
  }

  mutable std::mutex mutex_;
  mutable std::vector<Bounded> lower_;
  mutable std::vector<Bounded> derived_;
};

using SeriesWordFn = long long (*)(int, unsigned, char*, unsigned long long);

class PluginProvider final : public SeriesWordProvider {
 public:
  explicit PluginProvider(const std::string& path) : path_(path) {
    handle_ = dlopen(path.c_str(), RTLD_NOW | RTLD_LOCAL);
    if (!handle_) throw InvalidArgument("cannot load provider plugin " + path + ": " + dlerror());
    fn_ = reinterpret_cast<SeriesWordFn>(dlsym(handle_, "lawforge_series_word"));
    if (!fn_) {
      dlclose(handle_);
      throw InvalidArgument("provider plugin " + path + " does not export lawforge_series_word");
    }
  }
  ~PluginProvider() override { dlclose(handle_); }
  PluginProvider(const PluginProvider&) = delete;
  PluginProvider& operator=(const PluginProvider&) = delete;

  std::string name() const override { return path_; }
  Bounded lower_central(unsigned k) const override {
    if (k == 0) throw InvalidArgument("lower central depth must be >= 1");
    return fetch(0, k);
  }
  Bounded derived(unsigned k) const override { return fetch(1, k); }

 private:
  Bounded fetch(int kind, unsigned depth) const {
    std::lock_guard lock(mutex_);
    auto& cache = kind == 0 ? lower_ : derived_;
    if (depth < cache.size() && cache[depth]) return *cache[depth];
    std::string buffer(256, '\0');
    long long n = fn_(kind, depth, buffer.data(), buffer.size());
    if (n >= 0 && static_cast<unsigned long long>(n) > buffer.size()) {
      buffer.assign(static_cast<std::size_t>(n), '\0');
      n = fn_(kind, depth, buffer.data(), buffer.size());
    }
    if (n < 0 || static_cast<unsigned long long>(n) > buffer.size()) {
      throw InvalidArgument("provider plugin " + path_ + " failed at depth " + std::to_string(depth));
    }
    buffer.resize(static_cast<std::size_t>(n));
    Word w = Word::parse(buffer);
    if (w.empty()) throw TrivialInput("provider plugin " + path_ + " returned the trivial word");
    Bounded result{Expr::literal(w), BigInt(w.length())};
    if (cache.size() <= depth) cache.resize(depth + 1);
    cache[depth] = result;
    return result;
  }

  std::string path_;
  void* handle_ = nullptr;
  SeriesWordFn fn_ = nullptr;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<Bounded>> lower_;
  mutable std::vector<std::optional<Bounded>> derived_;
};

}  // namespace

std::shared_ptr<const SeriesWordProvider> baseline_provider() {
  static const auto provider = std::make_shared<const BaselineProvider>();
  return provider;
}

std::shared_ptr<const SeriesWordProvider> load_provider_plugin(const std::string& path) {
  return std::make_shared<const PluginProvider>(path);
}

Word lower_central_word(unsigned k) { return baseline_provider()->lower_central(k).word(); }
Word derived_word(unsigned k) { return baseline_provider()->derived(k).word(); }

}  // namespace lawforge
