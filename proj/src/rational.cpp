#include "fza/rational.hpp"

#include <cctype>

#include "fza/errors.hpp"

namespace fza {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto const slash = text.find('/');
  auto const num = text.substr(0, slash);
  auto const den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw invalid_input("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw invalid_input("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(Rational const& r) {
  // mpq get_str prints "p" when the denominator is one.
  Rational lowest(r);
  lowest.canonicalize();
  return lowest.get_str(10);
}

double to_double(Rational const& r) { return r.get_d(); }

}  // namespace fza
