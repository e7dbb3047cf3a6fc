#include "qinv/dsl.hpp"

#include "qinv/action.hpp"

#include <cctype>
#include <climits>
#include <map>
#include <optional>

namespace qinv::dsl {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool digit_ahead() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long integer() {
    if (!digit_ahead()) fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (LONG_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return v;
  }

  long signed_integer() {
    bool neg = accept('-');
    long v = integer();
    return neg ? -v : v;
  }

  int small(long v) {
    if (v < INT_MIN / 4 || v > INT_MAX / 4) fail("integer out of range");
    return static_cast<int>(v);
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  /// Integers between brackets: "[i]", "[i,j]", ...
  std::vector<int> index_list(std::size_t count) {
    expect('[');
    std::vector<int> out;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) expect(',');
      out.push_back(small(signed_integer()));
    }
    expect(']');
    return out;
  }

  static Expr node(Expr::Kind kind, std::size_t position, long value = 0) {
    Expr e;
    e.kind = kind;
    e.position = position;
    e.value = value;
    return e;
  }

  static Expr binary(Expr::Kind kind, Expr a, Expr b, std::size_t position) {
    Expr e = node(kind, position);
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    std::size_t at = (skip(), pos_);
    Expr e;
    if (accept('-')) {
      e = node(Expr::Kind::Neg, at);
      e.args.push_back(term());
    } else {
      accept('+');
      e = term();
    }
    for (;;) {
      at = (skip(), pos_);
      if (accept('+')) {
        e = binary(Expr::Kind::Add, std::move(e), term(), at);
      } else if (accept('-')) {
        e = binary(Expr::Kind::Sub, std::move(e), term(), at);
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      std::size_t at = (skip(), pos_);
      if (accept('*')) {
        e = binary(Expr::Kind::Mul, std::move(e), factor(), at);
      } else if (accept('/')) {
        e = binary(Expr::Kind::Div, std::move(e), factor(), at);
      } else {
        return e;
      }
    }
  }

  /// Exponent after '^' as a fraction num/den.
  std::pair<long, long> exponent() {
    if (accept('(')) {
      long num = signed_integer();
      long den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator in exponent", at);
      }
      expect(')');
      return {num, den};
    }
    return {signed_integer(), 1};
  }

  Expr factor() {
    std::size_t at = (skip(), pos_);
    bool is_q = false;
    Expr e = atom(is_q);
    std::size_t caret = (skip(), pos_);
    if (!accept('^')) return e;
    auto [num, den] = exponent();
    if (is_q) {
      if (den != 1 && den != 2) throw ParseError("q exponents must be integers or halves", caret);
      long s = den == 1 ? 2 * num : num;
      return node(Expr::Kind::QPower, at, small(s));
    }
    if (den != 1) throw ParseError("fractional exponents are only allowed on q", caret);
    Expr p = node(Expr::Kind::Pow, caret, small(num));
    p.args.push_back(std::move(e));
    return p;
  }

  Expr atom(bool& is_q) {
    std::size_t at = (skip(), pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return node(Expr::Kind::Integer, at, integer());
    if (c == '[') {
      ++pos_;
      long n = small(signed_integer());
      expect(']');
      return node(Expr::Kind::QNumber, at, n);
    }
    if (c == '(') {
      ++pos_;
      std::size_t inner = pos_;
      if (digit_ahead()) {
        long n = integer();
        if (accept(')')) return node(Expr::Kind::QInteger, at, small(n));
        pos_ = inner;
      }
      Expr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      if (c == '\0') fail("unexpected end of input");
      fail("unexpected '" + std::string(1, c) + "'");
    }
    std::string name = identifier();
    if (name == "q") {
      is_q = true;
      return node(Expr::Kind::QPower, at, 2);
    }
    if (name == "x" || name == "y" || name == "v") {
      Expr::Kind k = name == "x" ? Expr::Kind::X : name == "y" ? Expr::Kind::Y : Expr::Kind::V;
      return node(k, at, index_list(1)[0]);
    }
    if (name == "b") {
      Expr e = node(Expr::Kind::Bracket, at);
      e.ints = index_list(2);
      if (e.ints[0] == e.ints[1]) throw ParseError("bracket indices must differ", at);
      return e;
    }
    if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
      Expr e = node(Expr::Kind::Symbol, at);
      e.ints = index_list(3);
      if (e.ints[1] < 0 || e.ints[2] < 0 || e.ints[2] > e.ints[1])
        throw ParseError("symbol needs 0 <= i <= n", at);
      return e;
    }
    if (name == "prod") {
      Expr e = node(Expr::Kind::Prod, at);
      expect('(');
      do {
        std::size_t ip = (skip(), pos_);
        int i = small(signed_integer());
        if (i == 0) throw ParseError("product form indices must be nonzero", ip);
        e.ints.push_back(i);
      } while (accept(','));
      if (accept(';')) {
        e.args.push_back(expr());
      } else {
        e.args.push_back(node(Expr::Kind::Integer, pos_, 1));
      }
      expect(')');
      return e;
    }
    if (name == "form") {
      expect('(');
      long n = integer();
      Expr e = node(Expr::Kind::Form, at, small(n));
      expect(';');
      do {
        e.args.push_back(expr());
      } while (accept(','));
      expect(')');
      if (static_cast<long>(e.args.size()) != n + 1)
        throw ParseError("form(" + std::to_string(n) + "; ...) needs " + std::to_string(n + 1) + " coefficients", at);
      return e;
    }
    throw ParseError("unknown name '" + name + "'", at);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

template <class T>
T promote(const Value& v) {
  if (const auto* s = std::get_if<Scalar>(&v)) return T(*s);
  return std::get<T>(v);
}

/// Applies op after lifting a scalar operand to the kind of the other one.
template <class Op>
Value combine(const Value& a, const Value& b, Op op) {
  if (a.index() != b.index() && a.index() != 0 && b.index() != 0)
    throw KindError("cannot combine " + kind_name(a) + " with " + kind_name(b));
  std::size_t kind = a.index() == 0 ? b.index() : a.index();
  switch (kind) {
    case 0: return op(std::get<Scalar>(a), std::get<Scalar>(b));
    case 1: return op(promote<Element>(a), promote<Element>(b));
    case 2: return op(promote<VElement>(a), promote<VElement>(b));
    default: return op(promote<FreeElement>(a), promote<FreeElement>(b));
  }
}

Scalar scalar_of(const Value& v, const std::string& what, std::size_t position) {
  if (const auto* s = std::get_if<Scalar>(&v)) return *s;
  throw ParseError(what + " must be a scalar", position);
}

Element element_of(const Value& v, const std::string& what) {
  if (v.index() == 0 || v.index() == 1) return promote<Element>(v);
  throw KindError(what + " must be an element of H_I, got " + kind_name(v));
}

NForm form_of(const Expr& e) {
  NForm f;
  f.n = static_cast<int>(e.value);
  for (const Expr& a : e.args) f.coefficients.push_back(element_of(eval_expr(a), "form coefficient"));
  return f;
}

}  // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

Value eval_expr(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Integer: return Scalar(e.value);
    case K::QPower: return Scalar::s_power(static_cast<int>(e.value));
    case K::QNumber: return qnum(static_cast<int>(e.value));
    case K::QInteger: return qparen(static_cast<int>(e.value));
    case K::X: return Element::x(static_cast<int>(e.value));
    case K::Y: return Element::y(static_cast<int>(e.value));
    case K::V: return VElement::v(static_cast<int>(e.value));
    case K::Bracket: return bracket(e.ints[0], e.ints[1]);
    case K::Symbol: return FreeElement::symbol(e.ints[0], e.ints[1], e.ints[2]);
    case K::Prod: return product_form(e.ints, scalar_of(eval_expr(e.args[0]), "product scale", e.position));
    case K::Form: return assemble(form_of(e));
    case K::Neg: return std::visit([](const auto& a) -> Value { return -a; }, eval_expr(e.args[0]));
    case K::Add:
      return combine(eval_expr(e.args[0]), eval_expr(e.args[1]), [](auto a, const auto& b) -> Value { return a + b; });
    case K::Sub:
      return combine(eval_expr(e.args[0]), eval_expr(e.args[1]), [](auto a, const auto& b) -> Value { return a - b; });
    case K::Mul:
      return combine(eval_expr(e.args[0]), eval_expr(e.args[1]), [](const auto& a, const auto& b) -> Value { return a * b; });
    case K::Div: {
      Scalar d = scalar_of(eval_expr(e.args[1]), "divisor", e.position);
      if (d.is_zero()) throw ParseError("division by zero", e.position);
      Scalar inv = d.inverse();
      return std::visit([&](const auto& a) -> Value { return a * inv; }, eval_expr(e.args[0]));
    }
    case K::Pow: {
      Value base = eval_expr(e.args[0]);
      int k = static_cast<int>(e.value);
      if (const auto* s = std::get_if<Scalar>(&base)) {
        if (k < 0 && s->is_zero()) throw ParseError("negative power of zero", e.position);
        return s->pow(k);
      }
      if (k < 0) throw ParseError("negative powers need a scalar base", e.position);
      return std::visit([&](const auto& a) -> Value { return a.pow(k); }, base);
    }
  }
  throw std::logic_error("unhandled expression kind");
}

Value evaluate(const std::string& text) { return eval_expr(parse(text)); }

Element parse_element(const std::string& text) { return element_of(evaluate(text), "expression"); }

VElement parse_velement(const std::string& text) {
  Value v = evaluate(text);
  if (v.index() == 0 || v.index() == 2) return promote<VElement>(v);
  throw KindError("expected a v-polynomial, got " + kind_name(v));
}

FreeElement parse_free(const std::string& text) {
  Value v = evaluate(text);
  if (v.index() == 0 || v.index() == 3) return promote<FreeElement>(v);
  throw KindError("expected a polynomial in coefficient symbols, got " + kind_name(v));
}

Scalar parse_scalar(const std::string& text) { return scalar_of(evaluate(text), "expression", 0); }

NForm parse_form(const std::string& text) {
  Expr e = parse(text);
  if (e.kind == Expr::Kind::Form) return form_of(e);
  Element f = element_of(eval_expr(e), "form");
  if (f.is_zero()) throw std::invalid_argument("the zero element is not a form");
  auto n = f.degree_in(0);
  if (!n) throw std::invalid_argument("form is not homogeneous in index 0");
  return extract(f, *n);
}

std::string to_text(const Value& v) {
  return std::visit(
      [](const auto& a) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Scalar>) {
          return a.to_q_string();
        } else {
          return a.to_string();
        }
      },
      v);
}

std::string kind_name(const Value& v) {
  static const char* names[] = {"scalar", "element", "v-element", "free element"};
  return names[v.index()];
}

namespace {

/// Strips quantum-integer factors [n] from p, largest first; the remainder
/// is returned in p.
std::map<int, int> quantum_factors(LaurentPoly& p) {
  std::map<int, int> out;
  if (p.is_zero()) return out;
  for (int n = (p.max_exponent() - p.min_exponent()) / 4 + 1; n >= 2; --n) {
    const LaurentPoly qn = qnum(n).num();
    LaurentPoly quotient;
    while (p.size() > 1 && p.divides_into(qn, quotient)) {
      p = quotient;
      ++out[n];
    }
  }
  return out;
}

std::string factor_list(const std::map<int, int>& f) {
  std::string s;
  for (const auto& [n, e] : f) {
    if (!s.empty()) s += "*";
    s += "[" + std::to_string(n) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

/// True if the text has a sum or a quotient outside parentheses.
bool compound(const std::string& text) {
  int depth = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '/' || (c == '-' && k > 0 && text[k - 1] != '^'))) return true;
  }
  return false;
}

/// Sign and magnitude of a scalar that factors into quantum integers.
std::optional<std::pair<bool, std::string>> quantum_parts(const Scalar& c) {
  LaurentPoly num = c.num();
  LaurentPoly den = c.den();
  auto top = quantum_factors(num);
  auto bottom = quantum_factors(den);
  if (top.empty() && bottom.empty() && (!num.is_monomial() || !den.is_monomial())) return std::nullopt;
  // Split off lead * s^min, leaving a cofactor with leading coefficient 1.
  auto split = [](LaurentPoly& p, Rational& lead) {
    lead = p.leading_coefficient();
    int low = p.min_exponent();
    p = p.shifted(-low) * Rational(1 / lead);
    return low;
  };
  Rational lead_num, lead_den;
  int s = split(num, lead_num);
  s -= split(den, lead_den);
  Rational coef = lead_num / lead_den;
  bool negative = coef < 0;
  if (negative) coef = -coef;
  std::string body;
  auto put = [&](const std::string& part) {
    if (!body.empty()) body += "*";
    body += part;
  };
  if (coef.get_num() != 1) put(coef.get_num().get_str());
  if (s != 0) put(q_power_string(s));
  if (!top.empty()) put(factor_list(top));
  if (!num.is_one()) put("(" + num.to_q_string() + ")");
  if (body.empty()) body = "1";
  std::string under;
  int parts = 0;
  auto put_under = [&](const std::string& part) {
    if (!under.empty()) under += "*";
    under += part;
    ++parts;
  };
  if (coef.get_den() != 1) put_under(coef.get_den().get_str());
  if (!bottom.empty()) put_under(factor_list(bottom));
  if (!den.is_one()) put_under("(" + den.to_q_string() + ")");
  if (!under.empty()) {
    bool single = parts == 1 && (under[0] == '(' || under.find('^') == std::string::npos);
    body += "/" + (single ? under : "(" + under + ")");
  }
  return std::make_pair(negative, body);
}

}  // namespace

std::string quantum_scalar_string(const Scalar& c) {
  if (c.is_zero()) return "0";
  auto parts = quantum_parts(c);
  if (!parts) return c.to_q_string();
  return (parts->first ? "-" : "") + parts->second;
}

std::string bracket_text(const BracketPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::string body;
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = k;
      while (run < w.size() && w[run] == w[k]) ++run;
      if (!body.empty()) body += "*";
      body += "b[" + std::to_string(w[k].first) + "," + std::to_string(w[k].second) + "]";
      if (run - k > 1) body += "^" + std::to_string(run - k);
      k = run;
    }
    auto parts = quantum_parts(c);
    bool negative = parts && parts->first;
    std::string coef = parts ? parts->second : c.to_q_string();
    bool plain = !compound(coef);
    std::string text;
    if (body.empty()) {
      text = plain ? coef : "(" + coef + ")";
    } else if (coef == "1") {
      text = body;
    } else {
      text = (plain ? coef : "(" + coef + ")") + "*" + body;
    }
    if (out.empty()) {
      out = negative ? "-" + text : text;
    } else {
      out += negative ? " - " : " + ";
      out += text;
    }
  }
  return out;
}

}  // namespace qinv::dsl
