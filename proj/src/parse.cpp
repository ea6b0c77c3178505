#include <cctype>
#include <string>

#include "bslab/errors.hpp"
#include "bslab/polynomial.hpp"

namespace bslab {

namespace {

// Recursive-descent parser over the textual grammar. The serializer emits a
// flat sum of terms; the parser additionally accepts parenthesized
// subexpressions with integer powers, e.g. "(z+w)^2".
class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    skip_ws();
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial sum = Polynomial::zero(ring_);
    bool negate = false;
    skip_ws();
    if (accept('-')) negate = true;
    else accept('+');
    while (true) {
      Polynomial t = term();
      sum += negate ? -t : t;
      skip_ws();
      if (accept('-')) negate = true;
      else if (accept('+')) negate = false;
      else break;
    }
    return sum;
  }

  Polynomial term() {
    Polynomial prod = factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        prod *= factor();
      } else {
        break;
      }
    }
    return prod;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (accept('^')) {
      std::uint32_t e = parse_uint("exponent");
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::uint32_t parse_uint(const char* what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffULL) fail("integer too large");
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  Polynomial number() {
    std::string num = digits();
    std::string den;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = digits();
    }
    Rational q(Integer(num), den.empty() ? Integer(1) : Integer(den));
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return Polynomial::constant(ring_, q);
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      name += text_[pos_++];
    auto idx = ring_->var_index(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", start);
    return Polynomial::variable(ring_, *idx);
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace bslab
