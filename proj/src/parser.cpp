#include "hypersurf/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {

constexpr std::uint32_t kMaxExponent = 1000;
constexpr const char* kNamedVars = "xyzw";

enum class TokenKind { Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
        throw ParseError(text[i] == '.' ? "decimal literals are not supported"
                                        : "implicit multiplication is not allowed; use '*'",
                         i);
      }
      tokens.push_back({TokenKind::Integer, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(ch)) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      tokens.push_back({TokenKind::Identifier, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (ch) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    }
    tokens.push_back({kind, std::string(1, text[i]), start});
    ++i;
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

/// Maps an identifier to a 0-based index without checking the dimension.
std::optional<std::size_t> variable_index(const std::string& name, VarConvention::Mode mode) {
  if (mode == VarConvention::Mode::Named) {
    if (name.size() != 1) return std::nullopt;
    const char* hit = std::char_traits<char>::find(kNamedVars, 4, name[0]);
    if (hit == nullptr) return std::nullopt;
    return static_cast<std::size_t>(hit - kNamedVars);
  }
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
  std::size_t index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    if (index > 100000) return std::nullopt;
    index = index * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return index - 1;
}

class Parser {
 public:
  Parser(std::string_view text, const VarConvention& conv) : tokens_(tokenize(text)), conv_(conv) {}

  Polynomial parse_all() {
    if (peek().kind == TokenKind::End) throw ParseError("empty expression", peek().position);
    Polynomial p = expr();
    if (peek().kind != TokenKind::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().position);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept(TokenKind::Plus)) {
        acc += term();
      } else if (accept(TokenKind::Minus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept(TokenKind::Star)) {
        acc *= unary();
      } else if (peek().kind == TokenKind::Slash) {
        const auto where = advance().position;
        const Polynomial divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) {
          throw ParseError("division is only allowed by a nonzero constant", where);
        }
        acc *= Rational(1 / divisor.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept(TokenKind::Minus)) return -unary();
    if (accept(TokenKind::Plus)) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != TokenKind::Caret) return base;
    const auto caret = advance().position;
    return hypersurf::pow(base, exponent(caret));
  }

  std::uint32_t exponent(std::size_t caret) {
    const bool paren = accept(TokenKind::LParen);
    const Token& t = peek();
    if (t.kind != TokenKind::Integer) {
      throw ParseError("exponent of '^' must be a non-negative integer", t.kind == TokenKind::End ? caret : t.position);
    }
    advance();
    if (t.text.size() > 4 || std::stoul(t.text) > kMaxExponent) {
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), t.position);
    }
    if (paren && !accept(TokenKind::RParen)) throw ParseError("expected ')'", peek().position);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer:
        advance();
        return Polynomial::constant(conv_.dim, Rational(mpz_class(t.text, 10)));
      case TokenKind::Identifier: {
        advance();
        const auto index = variable_index(t.text, conv_.mode);
        if (!index) throw ParseError("unknown variable '" + t.text + "'", t.position);
        if (*index >= conv_.dim) {
          throw DimensionError("variable '" + t.text + "' at position " + std::to_string(t.position) +
                               " exceeds dimension " + std::to_string(conv_.dim));
        }
        return Polynomial::variable(conv_.dim, *index);
      }
      case TokenKind::LParen: {
        advance();
        Polynomial inner = expr();
        if (!accept(TokenKind::RParen)) throw ParseError("expected ')'", peek().position);
        return inner;
      }
      case TokenKind::End:
        throw ParseError("unexpected end of input", t.position);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  VarConvention conv_;
};

}  // namespace

VarConvention VarConvention::automatic(std::size_t dim) {
  return {dim <= 4 ? Mode::Named : Mode::Indexed, dim};
}

void VarConvention::validate() const {
  if (dim == 0) throw DomainError("dimension must be positive");
  if (mode == Mode::Named && dim > 4) {
    throw DimensionError("named variables (x, y, z, w) support at most 4 dimensions; use indexed");
  }
}

std::string VarConvention::name(std::size_t var) const {
  if (mode == Mode::Named) return std::string(1, kNamedVars[var]);
  return "x" + std::to_string(var + 1);
}

Polynomial parse(std::string_view text, const VarConvention& conv) {
  conv.validate();
  return Parser(text, conv).parse_all();
}

std::size_t infer_dimension(std::string_view text, VarConvention::Mode mode) {
  std::size_t dim = 1;
  for (const auto& t : tokenize(text)) {
    if (t.kind != TokenKind::Identifier) continue;
    const auto index = variable_index(t.text, mode);
    if (!index) throw ParseError("unknown variable '" + t.text + "'", t.position);
    dim = std::max(dim, *index + 1);
  }
  return dim;
}

std::string format(const Polynomial& p, const VarConvention& conv) {
  conv.validate();
  if (conv.dim != p.dim()) throw DimensionError("variable convention dimension differs from polynomial");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    const bool is_const = total_degree(e) == 0;
    bool need_star = false;
    if (is_const || mag != 1) {
      out += mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += conv.name(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

}  // namespace hypersurf
