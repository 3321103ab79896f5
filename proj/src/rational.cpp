#include "heckelab/rational.hpp"

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

bool valid_integer_literal(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_literal(num, true) || !valid_integer_literal(den, false)) {
    throw SchemaError("malformed rational \"" + text + "\"");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw SchemaError("rational with zero denominator \"" + text + "\"");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

long rational_floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw DomainError("rational floor out of range");
  return q.get_si();
}

bool rational_is_integer(const Rational& value) {
  return value.get_den() == 1;
}

long rational_to_long(const Rational& value) {
  if (!rational_is_integer(value) || !value.get_num().fits_slong_p()) {
    throw DomainError("rational is not a representable integer");
  }
  return value.get_num().get_si();
}

}  // namespace heckelab
