#include "lawforge/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "lawforge/errors.hpp"

namespace lawforge {

struct Expr::Node {
  Kind kind = Kind::Prod;
  Word word;
  Letter letter = Letter::a;
  std::int64_t exponent = 0;
  std::vector<Expr> children;
};

Expr::Expr() : node_(std::make_shared<Node>()) {}

Expr Expr::gen(Letter l) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->letter = l;
  n->word = Word::generator(l);
  return Expr(std::move(n));
}

Expr Expr::literal(Word w) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->word = std::move(w);
  return Expr(std::move(n));
}

Expr Expr::prod(std::vector<Expr> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  for (const auto& f : factors) n->word = concat(n->word, f.word());
  n->children = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, std::int64_t exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->word = power(base.word(), exponent);
  n->children = {std::move(base)};
  return Expr(std::move(n));
}

Expr Expr::comm(Expr x, Expr y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comm;
  n->word = commutator(x.word(), y.word());
  n->children = {std::move(x), std::move(y)};
  return Expr(std::move(n));
}

Expr Expr::conj(Expr x, Expr by) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Conj;
  n->word = conjugate(x.word(), by.word());
  n->children = {std::move(x), std::move(by)};
  return Expr(std::move(n));
}

Expr Expr::subst(Expr tmpl, Expr arg_a, Expr arg_b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Subst;
  n->word = substitute(tmpl.word(), arg_a.word(), arg_b.word());
  n->children = {std::move(tmpl), std::move(arg_a), std::move(arg_b)};
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Word& Expr::word() const { return node_->word; }
Letter Expr::letter() const { return node_->letter; }
std::int64_t Expr::exponent() const { return node_->exponent; }
const std::vector<Expr>& Expr::children() const { return node_->children; }

std::size_t Expr::node_count() const {
  std::unordered_set<const void*> seen;
  std::vector<const Expr*> todo{this};
  while (!todo.empty()) {
    const Expr* e = todo.back();
    todo.pop_back();
    if (!seen.insert(e->id()).second) continue;
    for (const auto& c : e->children()) todo.push_back(&c);
  }
  return seen.size();
}

Word flatten(const Expr& e, std::uint64_t cap) {
  if (e.word().length() > cap) {
    throw ResourceLimit("flattened length " + to_string(e.word().length()) +
                        " exceeds the flat cap of " + std::to_string(cap) +
                        " letters (max_flat / LAWFORGE_MAX_FLAT)");
  }
  return e.word();
}

namespace {

const char* keyword(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Prod: return "prod";
    case Expr::Kind::Pow: return "pow";
    case Expr::Kind::Comm: return "comm";
    case Expr::Kind::Conj: return "conj";
    case Expr::Kind::Subst: return "subst";
    default: return "";
  }
}

// Literals longer than this are worth a definition when shared.
constexpr unsigned kInlineLiteral = 8;

bool shareable(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Gen: return false;
    case Expr::Kind::Literal: return e.word().length() > kInlineLiteral;
    default: return true;
  }
}

class Printer {
 public:
  std::string run(const Expr& root) {
    count_refs(root);
    std::string body = emit(root);
    return defs_ + body + "\n";
  }

 private:
  void count_refs(const Expr& root) {
    std::vector<const Expr*> todo{&root};
    refs_[root.id()] = 1;
    while (!todo.empty()) {
      const Expr* e = todo.back();
      todo.pop_back();
      for (const auto& c : e->children()) {
        if (refs_[c.id()]++ == 0) todo.push_back(&c);
      }
    }
  }

  std::string emit(const Expr& e) {
    const bool shared = refs_[e.id()] > 1 && shareable(e);
    if (shared) {
      if (auto it = names_.find(e.id()); it != names_.end()) return "#" + std::to_string(it->second);
    }
    std::string text = inline_text(e);
    if (!shared) return text;
    const int name = ++next_;
    names_[e.id()] = name;
    defs_ += "(def " + std::to_string(name) + " " + text + ")\n";
    return "#" + std::to_string(name);
  }

  std::string inline_text(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::Gen:
        return std::string(1, to_char(e.letter()));
      case Expr::Kind::Literal:
        return e.word().empty() ? "(prod)" : e.word().str();
      case Expr::Kind::Pow:
        return "(pow " + emit(e.children()[0]) + " " + std::to_string(e.exponent()) + ")";
      default: {
        std::string s = "(";
        s += keyword(e.kind());
        for (const auto& c : e.children()) s += " " + emit(c);
        return s + ")";
      }
    }
  }

  std::unordered_map<const void*, int> refs_;
  std::unordered_map<const void*, int> names_;
  std::string defs_;
  int next_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    std::optional<Expr> root;
    skip_space();
    while (pos_ < text_.size()) {
      if (root) fail("unexpected input after the root expression");
      if (peek_keyword("def")) {
        parse_def();
      } else {
        root = parse_expr();
      }
      skip_space();
    }
    if (!root) fail("no expression");
    return *root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_keyword(std::string_view kw) {
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != '(') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (text_.substr(p, kw.size()) != kw) return false;
    p += kw.size();
    return p < text_.size() && (std::isspace(static_cast<unsigned char>(text_[p])) || text_[p] == ')');
  }

  std::string_view atom() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) fail("expected an atom");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_close() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ')';
  }

  template <class Int>
  Int number(std::string_view s) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("bad integer '" + std::string(s) + "'");
    return v;
  }

  void parse_def() {
    expect('(');
    atom();  // "def"
    const auto id = number<int>(atom());
    if (defs_.count(id)) fail("duplicate definition #" + std::to_string(id));
    Expr value = parse_expr();
    expect(')');
    defs_.emplace(id, std::move(value));
  }

  Expr parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] != '(') {
      std::string_view a = atom();
      if (a.front() == '#') {
        const auto id = number<int>(a.substr(1));
        auto it = defs_.find(id);
        if (it == defs_.end()) fail("undefined reference " + std::string(a));
        return it->second;
      }
      std::vector<Letter> letters;
      for (char c : a) {
        auto l = letter_from_char(c);
        if (!l) fail("unknown atom '" + std::string(a) + "'");
        letters.push_back(*l);
      }
      if (letters.size() == 1) return gens_[static_cast<int>(letters[0])];
      return Expr::literal(Word::reduce(letters));
    }
    expect('(');
    std::string op(atom());
    Expr result;
    if (op == "prod") {
      std::vector<Expr> factors;
      while (!at_close()) factors.push_back(parse_expr());
      result = Expr::prod(std::move(factors));
    } else if (op == "pow") {
      Expr base = parse_expr();
      result = Expr::pow(std::move(base), number<std::int64_t>(atom()));
    } else if (op == "comm") {
      Expr x = parse_expr();
      Expr y = parse_expr();
      result = Expr::comm(std::move(x), std::move(y));
    } else if (op == "conj") {
      Expr x = parse_expr();
      Expr by = parse_expr();
      result = Expr::conj(std::move(x), std::move(by));
    } else if (op == "subst") {
      Expr t = parse_expr();
      Expr u = parse_expr();
      Expr v = parse_expr();
      result = Expr::subst(std::move(t), std::move(u), std::move(v));
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<int, Expr> defs_;
  const std::array<Expr, 4> gens_{Expr::gen(Letter::a), Expr::gen(Letter::A), Expr::gen(Letter::b),
                                  Expr::gen(Letter::B)};
};

}  // namespace

std::string to_text(const Expr& e) { return Printer().run(e); }

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace lawforge
