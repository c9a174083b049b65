#ifndef HYPERSURF_PARSER_HPP
#define HYPERSURF_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "hypersurf/polynomial.hpp"

namespace hypersurf {

/// How variable names map to coordinates: named = x, y, z, w (dim <= 4),
/// indexed = x1 .. xd.
struct VarConvention {
  enum class Mode { Named, Indexed };
  Mode mode = Mode::Named;
  std::size_t dim = 3;

  /// Named for dim <= 4, indexed otherwise.
  static VarConvention automatic(std::size_t dim);
  /// Throws DomainError on named mode with dim > 4 or dim == 0.
  void validate() const;
  std::string name(std::size_t var) const;
};

/// Parses
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' exponent)?
///   primary := integer | variable | '(' expr ')'
///   exponent:= integer | '(' integer ')'
///
/// into fully expanded canonical form. '/' requires a nonzero constant
/// divisor, so "3/2*x" is the coefficient 3/2 times x. Unary minus binds
/// looser than '^'. Whitespace is ignored. Throws ParseError with the byte
/// offset of the offending token, or DimensionError when a variable index
/// exceeds conv.dim.
Polynomial parse(std::string_view text, const VarConvention& conv);

/// Smallest dimension able to hold every variable mentioned in text
/// (at least 1) under the given mode. Throws ParseError on unknown names.
std::size_t infer_dimension(std::string_view text, VarConvention::Mode mode);

/// Canonical rendering in graded-lex order, e.g. "x^2 - 3/2*x*y + 1".
/// parse(format(p, c), c) == p. Throws DimensionError when conv.dim != p.dim().
std::string format(const Polynomial& p, const VarConvention& conv);

}  // namespace hypersurf

#endif  // HYPERSURF_PARSER_HPP
