#pragma once

#include <span>

#include "prevision/numeric.hpp"

namespace prevision {

enum class FrankKind { Min, Product, Lukasiewicz, Generic };

/// Parameter of the Frank family: the three named limits plus a generic
/// lambda in (0,1) or (1,inf).
class FrankParam {
 public:
  static FrankParam minimum();      // lambda -> 0
  static FrankParam product();      // lambda = 1
  static FrankParam lukasiewicz();  // lambda -> inf
  /// Throws InputError unless lambda is finite and > 0; values within
  /// 1e-9 of 1 are routed to the product limit.
  static FrankParam generic(const Float50& lambda);

  FrankKind kind() const { return kind_; }
  const Float50& lambda() const;  // Generic only

 private:
  FrankParam(FrankKind kind, Float50 lambda)
      : kind_(kind), lambda_(std::move(lambda)) {}
  FrankKind kind_;
  Float50 lambda_;
};

/// Frank t-norm of u, v in [0,1]. Generic evaluation clamps the result
/// into the Frechet band [max(u+v-1,0), min(u,v)].
Float50 frank(const FrankParam& param, const Float50& u, const Float50& v);

/// Exact evaluation for the three limit kinds; Generic raises InputError.
Rational frank(FrankKind kind, const Rational& u, const Rational& v);

/// Left fold of the (associative) binary norm over a non-empty list.
Float50 frank_n(const FrankParam& param, std::span<const Float50> values);
Rational frank_n(FrankKind kind, std::span<const Rational> values);

struct LambdaResult {
  enum class Kind {
    Min,
    Product,
    Lukasiewicz,
    Generic,
    NotRepresentable,
    Underdetermined
  };
  Kind kind;
  Float50 lambda;    // populated for Generic
  Float50 residual;  // |T_lambda(x,y) - z| at the reported lambda
};

/// Recovers the Frank parameter with T(x, y) = z, when one exists.
/// Degenerate inputs (the Frechet band collapses to a point) report
/// Underdetermined; z outside the band is NotRepresentable; interior z is
/// resolved by bisection on lambda/(1+lambda).
LambdaResult find_lambda(const Rational& x, const Rational& y,
                         const Rational& z);

/// Same recovery for a floating conjunction value (e.g. a generic Frank
/// evaluation); the named-limit decisions compare in Float50.
LambdaResult find_lambda(const Rational& x, const Rational& y,
                         const Float50& z);

}  // namespace prevision
