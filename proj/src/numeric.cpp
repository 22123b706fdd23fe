#include "prevision/numeric.hpp"

#include <cctype>

#include "prevision/errors.hpp"

namespace prevision {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos) throw InputError("empty rational literal");
  std::string s = text.substr(a, b - a + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw InputError("malformed rational '" + text + "'");

  Rational value;
  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("malformed rational '" + text + "'");
    Rational d(den.c_str());
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    value = Rational(num.c_str()) / d;
  } else if (std::size_t dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw InputError("malformed rational '" + text + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw InputError("malformed rational '" + text + "'");
    value = ip.empty() ? Rational(0) : Rational(ip.c_str());
    if (!fp.empty()) value += Rational(fp.c_str()) / pow10(fp.size());
  } else {
    if (!all_digits(s)) throw InputError("malformed rational '" + text + "'");
    value = Rational(s.c_str());
  }
  return negative ? -value : value;
}

std::string rational_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

Float50 to_float50(const Rational& value) {
  return Float50(numerator(value)) / Float50(denominator(value));
}

}  // namespace prevision
