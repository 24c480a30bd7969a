#pragma once

// Shape expressions: K<n>, C<n>, complement (^c), disjoint union (+ or ∪)
// and join (* or ⋆). Join binds loosest, complement tightest:
//
//   expr   := term ( '*' term )*
//   term   := factor ( '+' factor )*
//   factor := atom [ '^c' ]
//   atom   := 'K' int | 'C' int | '(' expr ')'

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chargraph/graph.hpp"

namespace chargraph {

struct GraphExpr {
  enum class Kind { complete, cycle, complement, disjoint_union, join };

  Kind kind = Kind::complete;
  unsigned n = 0;                  // complete / cycle
  std::vector<GraphExpr> children;  // complement has one; union and join two or more

  static GraphExpr complete(unsigned n) { return {Kind::complete, n, {}}; }
  static GraphExpr cycle(unsigned n) {
    if (n < 3) throw std::invalid_argument("C" + std::to_string(n) + ": cycles need n >= 3");
    return {Kind::cycle, n, {}};
  }
  static GraphExpr complement_of(GraphExpr e) { return {Kind::complement, 0, {std::move(e)}}; }
  static GraphExpr union_of(std::vector<GraphExpr> parts) {
    return {Kind::disjoint_union, 0, std::move(parts)};
  }
  static GraphExpr join_of(std::vector<GraphExpr> parts) {
    return {Kind::join, 0, std::move(parts)};
  }

  friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

class ShapeSyntaxError : public std::runtime_error {
 public:
  ShapeSyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error("shape syntax error at offset " +
                           std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Literal sizes above this are rejected by the parser.
inline constexpr unsigned kMaxShapeLiteral = 1000;

namespace detail {

class ShapeParser {
 public:
  explicit ShapeParser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  static constexpr std::string_view kStar = "⋆";   // ⋆
  static constexpr std::string_view kCup = "∪";    // ∪

  [[noreturn]] void fail(const std::string& what) const { throw ShapeSyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  GraphExpr expr() {
    std::vector<GraphExpr> parts{term()};
    while (accept('*') || accept(kStar)) parts.push_back(term());
    return parts.size() == 1 ? std::move(parts.front()) : GraphExpr::join_of(std::move(parts));
  }

  GraphExpr term() {
    std::vector<GraphExpr> parts{factor()};
    while (accept('+') || accept(kCup)) parts.push_back(factor());
    return parts.size() == 1 ? std::move(parts.front())
                             : GraphExpr::union_of(std::move(parts));
  }

  GraphExpr factor() {
    GraphExpr a = atom();
    if (accept('^')) {
      if (!accept('c')) fail("expected 'c' after '^'");
      return GraphExpr::complement_of(std::move(a));
    }
    return a;
  }

  GraphExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GraphExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'K' || c == 'C') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
      const unsigned n = integer();
      if (c == 'K') return GraphExpr::complete(n);
      if (n < 3) {
        pos_ = start;
        fail("C" + std::to_string(n) + ": cycles need n >= 3");
      }
      return GraphExpr::cycle(n);
    }
    fail(std::string("expected 'K', 'C' or '(' but found '") + c + "'");
  }

  unsigned integer() {
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > kMaxShapeLiteral) {
        pos_ = start;
        fail("size literal exceeds " + std::to_string(kMaxShapeLiteral));
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a size");
    return static_cast<unsigned>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GraphExpr parse_shape(std::string_view text) {
  return detail::ShapeParser(text).parse();
}

namespace detail {

inline int precedence(const GraphExpr& e) {
  switch (e.kind) {
    case GraphExpr::Kind::join: return 0;
    case GraphExpr::Kind::disjoint_union: return 1;
    default: return 2;
  }
}

inline std::string render(const GraphExpr& e);

// Operands of a binary operator are wrapped when they would otherwise merge
// into the parent's operand list or bind differently.
inline std::string render_operand(const GraphExpr& child, int parent_precedence) {
  const std::string s = render(child);
  return precedence(child) <= parent_precedence ? "(" + s + ")" : s;
}

inline std::string render(const GraphExpr& e) {
  using K = GraphExpr::Kind;
  switch (e.kind) {
    case K::complete: return "K" + std::to_string(e.n);
    case K::cycle: return "C" + std::to_string(e.n);
    case K::complement: {
      const GraphExpr& inner = e.children.front();
      const bool leaf = inner.kind == K::complete || inner.kind == K::cycle;
      return (leaf ? render(inner) : "(" + render(inner) + ")") + "^c";
    }
    case K::disjoint_union:
    case K::join: {
      if (e.children.size() == 1) return render(e.children.front());
      const bool is_join = e.kind == K::join;
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += is_join ? " * " : " + ";
        // Unions inside a join are parenthesised for readability.
        out += render_operand(e.children[i], is_join ? 1 : precedence(e));
      }
      return out;
    }
  }
  return {};
}

}  // namespace detail

/// Canonical ASCII form; parse_shape(render_shape(e)) == e whenever every
/// union and join in e has at least two operands.
inline std::string render_shape(const GraphExpr& e) { return detail::render(e); }

namespace detail {

class PrimeSource {
 public:
  Prime next() {
    do {
      ++candidate_;
    } while (!is_prime(candidate_));
    return candidate_;
  }

  PrimeSet take(unsigned k) {
    PrimeSet out;
    for (unsigned i = 0; i < k; ++i) out.push_back(next());
    return out;
  }

 private:
  Prime candidate_ = 1;
};

inline CharGraph eval(const GraphExpr& e, PrimeSource& primes) {
  using K = GraphExpr::Kind;
  switch (e.kind) {
    case K::complete: return complete_graph(primes.take(e.n));
    case K::cycle: {
      const PrimeSet vs = primes.take(e.n);
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < vs.size(); ++i) edges.push_back(make_edge(vs[i], vs[(i + 1) % vs.size()]));
      return CharGraph(vs, std::move(edges));
    }
    case K::complement: return complement(eval(e.children.front(), primes));
    case K::disjoint_union:
    case K::join: {
      CharGraph acc;
      for (const auto& child : e.children) {
        const CharGraph g = eval(child, primes);
        acc = e.kind == K::join ? join(acc, g) : disjoint_union(acc, g);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace detail

/// Builds the shape on the smallest primes 2, 3, 5, ..., handed out to the
/// leaves left to right.
inline CharGraph eval_shape(const GraphExpr& e) {
  detail::PrimeSource primes;
  return detail::eval(e, primes);
}

inline CharGraph eval_shape(std::string_view text) { return eval_shape(parse_shape(text)); }

}  // namespace chargraph
