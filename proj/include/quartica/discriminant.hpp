#pragma once
#include "quartica/poly.hpp"

namespace quartica {

// Discriminant of the universal binary form a0*s^d + a1*s^(d-1)*t + ... + ad*t^d
// as a polynomial in the indeterminate coefficients a0..ad:
//   D = (-1)^(d(d-1)/2) * Res_s(f, df/ds) / a0
// over the integers (returned over QQ), or its reduction mod 2 (over GF(2)).
// Supported range: 2 <= d <= 6.
MultiPoly universal_discriminant(unsigned d, bool char2);

// In characteristic 2 the discriminant is a perfect square; returns the
// degree-(d-1) polynomial P over GF(2) with P^2 = universal_discriminant(d, true).
// Aborts loudly if any exponent fails to be even.
MultiPoly disc_sqrt_char2(unsigned d);

}  // namespace quartica
