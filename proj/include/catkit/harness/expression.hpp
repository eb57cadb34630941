#ifndef CATKIT_HARNESS_EXPRESSION_HPP
#define CATKIT_HARNESS_EXPRESSION_HPP

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Reference expressions used wherever a spec file names a category, functor,
// monad or adjunction.
//
//   expr    := product ('.' product)*        composition, g.f = g after f
//   product := postfix ('*' postfix)*
//   postfix := atom ('^op')*
//   atom    := NAME | 'id(' expr ')' | 'EM(' expr ')' | '(' expr ')'
//
// Which forms are meaningful depends on the kind being resolved.
namespace catkit::harness {

class ExpressionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Expr {
  enum class Kind { Name, Identity, Em, Op, Product, Compose };
  Kind kind = Kind::Name;
  std::string name;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;

  /** Canonical text, fully parenthesized where it matters; used as a cache key. */
  std::string str() const {
    switch (kind) {
    case Kind::Name: return name;
    case Kind::Identity: return "id(" + lhs->str() + ")";
    case Kind::Em: return "EM(" + lhs->str() + ")";
    case Kind::Op: return wrap(*lhs) + "^op";
    case Kind::Product: return wrap(*lhs) + "*" + wrap(*rhs);
    case Kind::Compose: return wrap(*lhs) + "." + wrap(*rhs);
    }
    return {};
  }

private:
  static std::string wrap(const Expr& e) {
    bool atomic = e.kind == Kind::Name || e.kind == Kind::Identity || e.kind == Kind::Em || e.kind == Kind::Op;
    return atomic ? e.str() : "(" + e.str() + ")";
  }
};

using ExprPtr = std::shared_ptr<const Expr>;

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
}

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = compose();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ExpressionError("bad expression \"" + std::string(s_) + "\" at offset " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) != tok) return false;
    i_ += tok.size();
    return true;
  }
  static ExprPtr node(Expr::Kind k, std::string name, ExprPtr l = {}, ExprPtr r = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->name = std::move(name);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr compose() {
    ExprPtr e = product();
    while (eat(".")) e = node(Expr::Kind::Compose, "", e, product());
    return e;
  }
  ExprPtr product() {
    ExprPtr e = postfix();
    while (eat("*")) e = node(Expr::Kind::Product, "", e, postfix());
    return e;
  }
  ExprPtr postfix() {
    ExprPtr e = atom();
    while (eat("^op")) e = node(Expr::Kind::Op, "", e);
    return e;
  }
  ExprPtr atom() {
    skip();
    if (eat("(")) {
      ExprPtr e = compose();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && is_name_char(s_[i_])) ++i_;
    if (start == i_) fail(i_ < s_.size() ? "expected a name" : "unexpected end");
    std::string word(s_.substr(start, i_ - start));
    skip();
    if ((word == "id" || word == "EM") && i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      ExprPtr inner = compose();
      if (!eat(")")) fail("expected ')'");
      return node(word == "id" ? Expr::Kind::Identity : Expr::Kind::Em, "", inner);
    }
    return node(Expr::Kind::Name, std::move(word));
  }
};

} // namespace detail

inline ExprPtr parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

/** Names usable as plain references in expressions. */
inline bool is_reference_name(const std::string& s) {
  if (s.empty() || s == "id" || s == "EM") return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

} // namespace catkit::harness

#endif
