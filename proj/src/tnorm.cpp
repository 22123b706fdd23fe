#include "prevision/tnorm.hpp"

#include <boost/math/special_functions/fpclassify.hpp>

#include "prevision/errors.hpp"

namespace prevision {

namespace {

const Float50 kProductWindow("1e-9");

void check_unit(const Float50& u) {
  if (boost::math::isnan(u) || u < 0 || u > 1)
    throw InputError("t-norm argument outside [0,1]");
}

void check_unit(const Rational& u) {
  if (u < 0 || u > 1) throw InputError("t-norm argument outside [0,1]");
}

// T_lambda for finite lambda > 0 away from 1, interior arguments.
Float50 generic_value(const Float50& lambda, const Float50& u,
                      const Float50& v) {
  if (u == 0 || v == 0) return 0;
  if (u == 1) return v;
  if (v == 1) return u;
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  Float50 raw = log(1 + (pow(lambda, u) - 1) * (pow(lambda, v) - 1) /
                            (lambda - 1)) /
                log(lambda);
  Float50 floor_ = u + v - 1;
  if (floor_ < 0) floor_ = 0;
  Float50 ceil_ = u < v ? u : v;
  if (raw < floor_) return floor_;
  if (raw > ceil_) return ceil_;
  return raw;
}

}  // namespace

FrankParam FrankParam::minimum() { return {FrankKind::Min, 0}; }
FrankParam FrankParam::product() { return {FrankKind::Product, 1}; }
FrankParam FrankParam::lukasiewicz() { return {FrankKind::Lukasiewicz, 0}; }

FrankParam FrankParam::generic(const Float50& lambda) {
  if (boost::math::isnan(lambda) || boost::math::isinf(lambda) || lambda <= 0)
    throw InputError("Frank lambda must be finite and positive");
  if (abs(lambda - 1) < kProductWindow) return product();
  return {FrankKind::Generic, lambda};
}

const Float50& FrankParam::lambda() const {
  if (kind_ != FrankKind::Generic)
    throw StateError("lambda is only defined for the generic kind");
  return lambda_;
}

Float50 frank(const FrankParam& param, const Float50& u, const Float50& v) {
  check_unit(u);
  check_unit(v);
  switch (param.kind()) {
    case FrankKind::Min:
      return u < v ? u : v;
    case FrankKind::Product:
      return u * v;
    case FrankKind::Lukasiewicz: {
      Float50 s = u + v - 1;
      return s < 0 ? Float50(0) : s;
    }
    case FrankKind::Generic:
      return generic_value(param.lambda(), u, v);
  }
  throw StateError("corrupt Frank parameter");
}

Rational frank(FrankKind kind, const Rational& u, const Rational& v) {
  check_unit(u);
  check_unit(v);
  switch (kind) {
    case FrankKind::Min:
      return u < v ? u : v;
    case FrankKind::Product:
      return u * v;
    case FrankKind::Lukasiewicz: {
      Rational s = u + v - 1;
      return s < 0 ? Rational(0) : s;
    }
    case FrankKind::Generic:
      throw InputError(
          "generic Frank evaluation is floating-point; use FrankParam");
  }
  throw StateError("corrupt Frank kind");
}

Float50 frank_n(const FrankParam& param, std::span<const Float50> values) {
  if (values.empty()) throw InputError("empty t-norm argument list");
  Float50 acc = values[0];
  check_unit(acc);
  for (std::size_t i = 1; i < values.size(); ++i)
    acc = frank(param, acc, values[i]);
  return acc;
}

Rational frank_n(FrankKind kind, std::span<const Rational> values) {
  if (values.empty()) throw InputError("empty t-norm argument list");
  Rational acc = values[0];
  check_unit(acc);
  for (std::size_t i = 1; i < values.size(); ++i)
    acc = frank(kind, acc, values[i]);
  return acc;
}

namespace {

// Interior z: T is continuous and non-increasing along
// t = lambda/(1+lambda) in [0,1], spanning [floor, ceil]. Bisect.
LambdaResult bisect_lambda(const Rational& x, const Rational& y,
                           const Float50& fz) {
  const Float50 fx = to_float50(x), fy = to_float50(y);
  auto value_at = [&](const Float50& t) -> Float50 {
    if (t == 0) return fx < fy ? fx : fy;
    if (t == 1) {
      Float50 s = fx + fy - 1;
      return s < 0 ? Float50(0) : s;
    }
    Float50 lambda = t / (1 - t);
    if (abs(lambda - 1) < kProductWindow) return fx * fy;
    return generic_value(lambda, fx, fy);
  };
  Float50 lo = 0, hi = 1;
  for (int iter = 0; iter < 140; ++iter) {
    Float50 mid = (lo + hi) / 2;
    if (value_at(mid) > fz)
      lo = mid;
    else
      hi = mid;
  }
  Float50 t = (lo + hi) / 2;
  LambdaResult out{LambdaResult::Kind::Generic, t / (1 - t),
                   abs(value_at(t) - fz)};
  return out;
}

}  // namespace

LambdaResult find_lambda(const Rational& x, const Rational& y,
                         const Rational& z) {
  check_unit(x);
  check_unit(y);
  check_unit(z);
  Rational floor_ = x + y - 1;
  if (floor_ < 0) floor_ = 0;
  Rational ceil_ = x < y ? x : y;

  LambdaResult out{LambdaResult::Kind::NotRepresentable, 0, 0};
  if (z < floor_ || z > ceil_) return out;
  if (floor_ == ceil_) {
    out.kind = LambdaResult::Kind::Underdetermined;
    return out;
  }
  if (z == ceil_) {
    out.kind = LambdaResult::Kind::Min;
    return out;
  }
  if (z == floor_) {
    out.kind = LambdaResult::Kind::Lukasiewicz;
    return out;
  }
  if (z == x * y) {
    out.kind = LambdaResult::Kind::Product;
    return out;
  }
  return bisect_lambda(x, y, to_float50(z));
}

LambdaResult find_lambda(const Rational& x, const Rational& y,
                         const Float50& z) {
  check_unit(x);
  check_unit(y);
  check_unit(z);
  Rational rfloor = x + y - 1;
  if (rfloor < 0) rfloor = 0;
  Rational rceil = x < y ? x : y;
  const Float50 floor_ = to_float50(rfloor), ceil_ = to_float50(rceil);

  LambdaResult out{LambdaResult::Kind::NotRepresentable, 0, 0};
  if (z < floor_ || z > ceil_) return out;
  if (floor_ == ceil_) {
    out.kind = LambdaResult::Kind::Underdetermined;
    return out;
  }
  if (z == ceil_) {
    out.kind = LambdaResult::Kind::Min;
    return out;
  }
  if (z == floor_) {
    out.kind = LambdaResult::Kind::Lukasiewicz;
    return out;
  }
  if (z == to_float50(x * y)) {
    out.kind = LambdaResult::Kind::Product;
    return out;
  }
  return bisect_lambda(x, y, z);
}

}  // namespace prevision
