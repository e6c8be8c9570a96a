#include "bsfan/rational.hpp"

#include <cctype>

#include "bsfan/errors.hpp"

namespace bsfan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  std::string_view num_digits = num_part;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits))
    throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
  if (slash != std::string_view::npos && !all_digits(den_part))
    throw ParseError("not a rational literal: \"" + std::string(text) + "\"");

  Integer num(std::string(num_part), 10);
  Integer den(1);
  if (slash != std::string_view::npos) {
    den = Integer(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return make_rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

}  // namespace bsfan
