#ifndef BREDON_KLEIN_POINT_HPP
#define BREDON_KLEIN_POINT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bredon/degrees.hpp"
#include "bredon/f2algebra.hpp"

namespace bredon {

// Dimension plus, where a sector supplies one, an explicit monomial basis.
struct GroupDescriptor {
    KleinDegree degree;
    long dimension = 0;
    std::optional<std::vector<std::string>> basis;
};

// The group H^d(pt; Z/2).  Basis sectors:
//  (i)   p,b,q >= 0: positive-cone normal monomials;
//  (ii)  one coefficient zero, one >= 0, the third < 0: Stong(third axis)
//        monomials times a free polynomial on the >= 0 axis;
//  (iii) two coefficients zero: single-axis Stong basis.
// Elsewhere the descriptor is dimension-only.
GroupDescriptor group_at(KleinDegree d);

struct UnknownProduct {};
using ProductResult = std::variant<F2Element, UnknownProduct>;

// Multiplies through the known fragments: positive cone,
// single-axis Stong rules, the section-2.2 named-class ledger, and the
// Stong[x',y'] mixed sectors.  Anything else is UnknownProduct.
ProductResult multiply(const F2Element& u, const F2Element& v);

enum class MackeyLevel { Top, C2Level, DeltaLevel, Sigma2Level, Bottom };

// Restriction of the positive-cone Mackey functor: a generator maps to
// itself when the codomain ring still has it and to zero otherwise, then
// the codomain relation is applied.
F2Element mackey_restrict(MackeyLevel from, MackeyLevel to, const F2Element& e);

// All transfers in the positive cone vanish.
F2Element mackey_transfer(MackeyLevel from, MackeyLevel to, const F2Element& e);

const char* mackey_level_name(MackeyLevel l);

}  // namespace bredon

#endif
