#include "prevision/regions.hpp"

#include <algorithm>

#include "prevision/errors.hpp"

namespace prevision {

namespace {

void check_unit(const Rational& v, const char* what) {
  if (v < 0 || v > 1)
    throw InputError(std::string(what) + " outside [0,1]");
}

Rational max4(const Rational& a, const Rational& b, const Rational& c,
              const Rational& d) {
  return std::max(std::max(a, b), std::max(c, d));
}

Rational min4(const Rational& a, const Rational& b, const Rational& c,
              const Rational& d) {
  return std::min(std::min(a, b), std::min(c, d));
}

}  // namespace

Bounds frechet_bounds(const Rational& x, const Rational& y) {
  check_unit(x, "x");
  check_unit(y, "y");
  Rational lo = x + y - 1;
  if (lo < 0) lo = 0;
  return {lo, std::min(x, y), false};
}

bool in_pi_two(const Rational& x, const Rational& y, const Rational& z) {
  check_unit(z, "z");
  Bounds b = frechet_bounds(x, y);
  return z >= b.lower && z <= b.upper;
}

bool in_pi_three(const Rational& x1, const Rational& x2, const Rational& x3,
                 const Rational& x12, const Rational& x13, const Rational& x23,
                 const Rational& x123) {
  for (auto* v : {&x1, &x2, &x3, &x12, &x13, &x23, &x123})
    check_unit(*v, "assessment value");
  if (x12 < max4(x1 + x2 - 1, x13 + x23 - x3, 0, 0) || x12 > std::min(x1, x2))
    return false;
  if (x13 < max4(x1 + x3 - 1, x12 + x23 - x2, 0, 0) || x13 > std::min(x1, x3))
    return false;
  if (x23 < max4(x2 + x3 - 1, x12 + x13 - x1, 0, 0) || x23 > std::min(x2, x3))
    return false;
  Rational slack = 1 - x1 - x2 - x3 + x12 + x13 + x23;
  if (slack < 0) return false;
  if (x123 < max4(0, x12 + x13 - x1, x12 + x23 - x2, x13 + x23 - x3))
    return false;
  if (x123 > min4(x12, x13, x23, slack)) return false;
  return true;
}

Bounds extension_bounds_three(const Rational& x1, const Rational& x2,
                              const Rational& x3, const Rational& x12,
                              const Rational& x13, const Rational& x23) {
  for (auto* v : {&x1, &x2, &x3, &x12, &x13, &x23})
    check_unit(*v, "assessment value");
  Bounds out;
  out.lower = max4(0, x12 + x13 - x1, x12 + x23 - x2, x13 + x23 - x3);
  out.upper = min4(x12, x13, x23, 1 - x1 - x2 - x3 + x12 + x13 + x23);
  bool prefix_ok =
      x12 >= max4(x1 + x2 - 1, x13 + x23 - x3, 0, 0) &&
      x12 <= std::min(x1, x2) &&
      x13 >= max4(x1 + x3 - 1, x12 + x23 - x2, 0, 0) &&
      x13 <= std::min(x1, x3) &&
      x23 >= max4(x2 + x3 - 1, x12 + x13 - x1, 0, 0) &&
      x23 <= std::min(x2, x3) &&
      1 - x1 - x2 - x3 + x12 + x13 + x23 >= 0;
  out.empty = !prefix_ok || out.lower > out.upper;
  return out;
}

bool same_consequent_region(const Rational& x, const Rational& y,
                            const Rational& z) {
  check_unit(x, "x");
  check_unit(y, "y");
  check_unit(z, "z");
  return z >= x * y && z <= std::min(x, y);
}

bool same_consequent_disjoint(const Rational& x, const Rational& y,
                              const Rational& z) {
  check_unit(x, "x");
  check_unit(y, "y");
  check_unit(z, "z");
  return z == x * y;
}

TRange lambda_range_same_consequent(const Rational& x, const Rational& y,
                                    const Rational& z) {
  TRange out;
  if (!same_consequent_region(x, y, z)) {
    out.empty = true;
    return out;
  }
  LambdaResult r = find_lambda(x, y, z);
  switch (r.kind) {
    case LambdaResult::Kind::Underdetermined:
      out.t_lower = 0;
      out.t_upper = 1;
      return out;
    case LambdaResult::Kind::Min:
      out.t_lower = 0;
      out.t_upper = 0;
      return out;
    case LambdaResult::Kind::Product:
      out.t_lower = Float50(1) / 2;
      out.t_upper = out.t_lower;
      return out;
    case LambdaResult::Kind::Generic: {
      Float50 t = r.lambda / (1 + r.lambda);
      out.t_lower = t;
      out.t_upper = t;
      return out;
    }
    default:
      throw StateError(
          "representation inside the same-consequent region must exist");
  }
}

bool luk_coherent_six(const Rational& x1, const Rational& x2,
                      const Rational& x3) {
  check_unit(x1, "x1");
  check_unit(x2, "x2");
  check_unit(x3, "x3");
  if (x1 + x2 - 1 <= 0 || x1 + x3 - 1 <= 0 || x2 + x3 - 1 <= 0)
    throw InputError("pairwise Lukasiewicz values must be positive");
  return x1 + x2 + x3 - 2 >= 0;
}

LukSufficiency luk_coherent_seven(const Rational& x1, const Rational& x2,
                                  const Rational& x3) {
  check_unit(x1, "x1");
  check_unit(x2, "x2");
  check_unit(x3, "x3");
  if (x1 + x2 + x3 - 2 > 0) return LukSufficiency::Coherent;
  return LukSufficiency::NotDecided;
}

}  // namespace prevision
