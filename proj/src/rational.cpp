#include "cuboidcurves/rational.hpp"

#include <cctype>

#include "cuboidcurves/errors.hpp"

namespace cuboidcurves {

Rat make_rat(const Int& numerator, const Int& denominator) {
  if (denominator == 0) {
    throw ParseError("zero denominator");
  }
  Rat q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Int num(std::string(num_part), 10);
  if (slash == std::string_view::npos) {
    return Rat(num);
  }
  std::string_view den_part = text.substr(slash + 1);
  if (!valid_integer_token(den_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Int den(std::string(den_part), 10);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rat(num, den);
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string int_to_string(const Int& value) { return value.get_str(); }

Rat rat_pow(const Rat& base, unsigned long exponent) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;  // base reduced => powers stay reduced
}

Int int_pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Int isqrt(const Int& n) {
  Int out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den())) {
    return std::nullopt;
  }
  return make_rat(isqrt(q.get_num()), isqrt(q.get_den()));
}

}  // namespace cuboidcurves
