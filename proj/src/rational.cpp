#include "hypersurf/rational.hpp"

#include <cctype>
#include <cmath>

#include "hypersurf/error.hpp"

namespace hypersurf {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

mpz_class parse_integer(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected integer", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", offset + i);
    }
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  bool negative = false;
  std::size_t offset = begin;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
    ++offset;
  }
  const auto slash = body.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(body, offset));
  } else {
    const mpz_class num = parse_integer(body.substr(0, slash), offset);
    const mpz_class den = parse_integer(body.substr(slash + 1), offset + slash + 1);
    if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
    q = Rational(num, den);
    q.canonicalize();
  }
  return negative ? Rational(-q) : q;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

}  // namespace hypersurf
