#pragma once

#include "prevision/numeric.hpp"
#include "prevision/tnorm.hpp"

namespace prevision {

/// Closed rational interval, possibly empty.
struct Bounds {
  Rational lower;
  Rational upper;
  bool empty = false;
};

/// Frechet band [max(x+y-1,0), min(x,y)].
Bounds frechet_bounds(const Rational& x, const Rational& y);

/// Coherence of (x, y, z) on two conditionals with logically independent
/// events plus their conjunction: z inside the Frechet band.
bool in_pi_two(const Rational& x, const Rational& y, const Rational& z);

/// Coherence of the seven-value assessment (singletons, pairs, triple) on
/// three conditionals with logically independent events.
bool in_pi_three(const Rational& x1, const Rational& x2, const Rational& x3,
                 const Rational& x12, const Rational& x13, const Rational& x23,
                 const Rational& x123);

/// Interval of coherent triple-conjunction values over the six-value
/// prefix; empty when the prefix itself is incoherent.
Bounds extension_bounds_three(const Rational& x1, const Rational& x2,
                              const Rational& x3, const Rational& x12,
                              const Rational& x13, const Rational& x23);

/// Same-consequent region, x = P(A|H), y = P(A|K), z on the conjunction:
/// coherent iff xy <= z <= min(x, y).
bool same_consequent_region(const Rational& x, const Rational& y,
                            const Rational& z);

/// Same consequent over incompatible antecedents: z = xy is forced.
bool same_consequent_disjoint(const Rational& x, const Rational& y,
                              const Rational& z);

/// Range of Frank parameters representing z in the same-consequent region,
/// in t = lambda/(1+lambda) coordinates (so the representable [0,1] maps
/// the whole family and t <= 1/2 matches lambda <= 1). Empty when (x,y,z)
/// is outside the region; degenerate triples span the full family.
struct TRange {
  Float50 t_lower;
  Float50 t_upper;
  bool empty = false;
};
TRange lambda_range_same_consequent(const Rational& x, const Rational& y,
                                    const Rational& z);

/// Lukasiewicz previsions on three conditionals: the six-value assessment
/// with pairwise values max(x_i+x_j-1, 0), all required positive
/// (InputError otherwise), is coherent iff x1+x2+x3 >= 2.
bool luk_coherent_six(const Rational& x1, const Rational& x2,
                      const Rational& x3);

enum class LukSufficiency { Coherent, NotDecided };

/// Seven-value Lukasiewicz assessment (triple value max(x1+x2+x3-2, 0)):
/// coherent whenever the triple value is positive; otherwise the criterion
/// is silent.
LukSufficiency luk_coherent_seven(const Rational& x1, const Rational& x2,
                                  const Rational& x3);

}  // namespace prevision
