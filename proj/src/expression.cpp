#include <ckindex/expression.hpp>

#include <ckindex/errors.hpp>

#include <cctype>
#include <optional>
#include <string>

namespace ckindex {

namespace {

class Parser {
 public:
  Parser(const GraphPtr& g, std::string_view text) : g_(g), s_(text) {}

  Element parse() {
    Element e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(1, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) != kw) return false;
    std::size_t p = pos_ + kw.size();
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    if (p >= s_.size() || s_[p] != '(') return false;
    pos_ = p + 1;
    return true;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::optional<Rational> rational() {
    skip();
    std::size_t p = pos_;
    std::string num;
    if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) num += s_[p++];
    const std::size_t digits = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) num += s_[p++];
    if (p == digits) return std::nullopt;
    if (p < s_.size() && s_[p] == '/') {
      std::size_t q = p + 1;
      std::string den;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) den += s_[q++];
      if (den.empty()) {
        pos_ = p + 1;
        fail("expected denominator");
      }
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = p + 1;
        fail("zero denominator");
      }
      num += "/" + den;
      p = q;
    }
    pos_ = p;
    Rational r(num);
    r.canonicalize();
    return r;
  }

  // 'i' as the imaginary unit: not the start of an identifier such as "id".
  bool imaginary_unit() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        (pos_ + 1 == s_.size() ||
         !(std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_'))) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Complex literal "(a+bi)"; restores the position when the parenthesis
  // opens a sub-expression instead.
  std::optional<GaussianRational> complex_literal() {
    const std::size_t save = pos_;
    if (!accept('(')) return std::nullopt;
    auto re = rational();
    if (re) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const bool neg = s_[pos_] == '-';
        ++pos_;
        auto im = rational();
        if (im && imaginary_unit() && accept(')')) return GaussianRational(*re, neg ? Rational(-*im) : *im);
      }
    }
    pos_ = save;
    return std::nullopt;
  }

  std::optional<GaussianRational> coefficient() {
    if (auto c = complex_literal()) return c;
    skip();
    const std::size_t save = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) return std::nullopt;
    if (auto r = rational()) {
      if (imaginary_unit()) return GaussianRational(0, *r);
      return GaussianRational(*r);
    }
    pos_ = save;
    if (imaginary_unit()) return GaussianRational(0, 1);
    return std::nullopt;
  }

  bool factor_ahead() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'S' || c == 'p' || c == 'a';
  }

  Element factor() {
    if (keyword("S")) {
      const std::string name = identifier();
      expect(')');
      auto e = g_->find_edge(name);
      if (!e) throw GraphError("unknown edge '" + name + "'");
      return Element::generator(g_, *e);
    }
    if (keyword("p")) {
      const std::string name = identifier();
      expect(')');
      auto v = g_->find_vertex(name);
      if (!v) throw GraphError("unknown vertex '" + name + "'");
      return Element::vertex_projection(g_, *v);
    }
    if (keyword("adj")) {
      Element inner = expr();
      expect(')');
      return adjoint(inner);
    }
    if (accept('(')) {
      Element inner = expr();
      expect(')');
      return inner;
    }
    fail("expected S(...), p(...), adj(...) or '('");
  }

  Element term() {
    auto coeff = coefficient();
    if (coeff) {
      const bool star = accept('*');
      if (!star && !factor_ahead()) return *coeff * Element::identity(g_);
    }
    Element e = factor();
    while (accept('*')) e = multiply(e, factor());
    return coeff ? *coeff * e : e;
  }

  Element expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Element e = term();
    if (negate) e = GaussianRational(-1) * e;
    for (;;) {
      if (accept('+'))
        e += term();
      else if (accept('-'))
        e -= term();
      else
        return e;
    }
  }

  const GraphPtr& g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const GraphPtr& graph, std::string_view text) {
  return Parser(graph, text).parse();
}

}  // namespace ckindex
