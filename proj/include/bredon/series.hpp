#ifndef BREDON_SERIES_HPP
#define BREDON_SERIES_HPP

#include <array>
#include <vector>

#include "bredon/degrees.hpp"
#include "bredon/laurent.hpp"

namespace bredon {

// Poincare series of H^{-*+V}(pt; Z/2) where V = c1*sigma + c2*eps +
// c3*sigma@eps.  Closed forms for every sign pattern; zero coefficients
// route to the lower-arity case.
LaurentPoly series_for(int c1, int c2, int c3);

// dim_{Z/2} H^{a+p sigma+b eps+q sigma@eps}(pt; Z/2): the coefficient of
// x^{-a} in series_for(p,b,q).
long dim_point(KleinDegree d);
inline long dim_point(int a, int p, int b, int q) { return dim_point({a, p, b, q}); }

// Naive convolution of shifted factors, kept deliberately separate from
// LaurentPoly::operator* (dense accumulation) so closed forms can be
// cross-checked against their printed factorizations.
LaurentPoly series_oracle(const std::vector<LaurentPoly>& factors,
                          const std::vector<int>& shifts = {});

}  // namespace bredon

#endif
