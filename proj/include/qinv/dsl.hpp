#pragma once

#include "qinv/bracket_poly.hpp"
#include "qinv/element.hpp"
#include "qinv/forms.hpp"
#include "qinv/symbolic.hpp"
#include "qinv/valgebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qinv::dsl {

/// Syntax error at a byte offset of the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands of incompatible kinds (e.g. x/y letters with v letters).
class KindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr {
  enum class Kind {
    Integer,    // value
    QPower,     // s^value
    QNumber,    // [value]
    QInteger,   // (value)
    X,          // x[value]
    Y,          // y[value]
    V,          // v[value]
    Bracket,    // b[ints[0], ints[1]]
    Symbol,     // A[ints[0], ints[1], ints[2]]
    Prod,       // prod(ints; args[0])
    Form,       // form(value; args...)
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,        // args[0]^value
  };

  Kind kind = Kind::Integer;
  long value = 0;
  std::vector<int> ints;
  std::vector<Expr> args;
  std::size_t position = 0;
};

/// expr := ['+'|'-'] term (('+'|'-') term)*
/// term := factor (('*'|'/') factor)*
/// factor := atom ('^' exponent)?
/// atom := integer | 'q' | '[' int ']' | '(' int ')' | '(' expr ')'
///       | x[i] | y[i] | v[i] | b[i,j] | A[f,n,i]
///       | prod(i, j, ...; scale) | form(n; A0, ..., An)
/// exponent := ['-'] int | '(' ['-'] int ['/' int] ')'; halves only on q.
Expr parse(const std::string& text);

using Value = std::variant<Scalar, Element, VElement, FreeElement>;

Value eval_expr(const Expr& e);
Value evaluate(const std::string& text);

/// Evaluates to an Element; scalars are promoted, other kinds are rejected.
Element parse_element(const std::string& text);
VElement parse_velement(const std::string& text);
FreeElement parse_free(const std::string& text);
Scalar parse_scalar(const std::string& text);

/// A form literal form(n; ...) directly, or any expression homogeneous in
/// index 0, split into coefficients.
NForm parse_form(const std::string& text);

/// Canonical text; parse(to_text(v)) evaluates back to v.
std::string to_text(const Value& v);
std::string kind_name(const Value& v);

/// c * q^(k/2) * [a][b].../([c]...) when the scalar factors into quantum
/// integers up to a rational monomial, otherwise the canonical q form.
std::string quantum_scalar_string(const Scalar& c);

/// Bracket polynomial with quantum-integer coefficients and repeated
/// brackets collected into powers, e.g. -(1/[2])*b[1,2]^2. Parseable.
std::string bracket_text(const BracketPoly& p);

}  // namespace qinv::dsl
