#ifndef BREDON_DEGREES_HPP
#define BREDON_DEGREES_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace bredon {

// Virtual representation a + p*sigma + b*eps + q*sigma@eps of the Klein
// four-group C2 x Sigma2.
struct KleinDegree {
    int a = 0, p = 0, b = 0, q = 0;

    friend KleinDegree operator+(KleinDegree x, KleinDegree y) {
        return {x.a + y.a, x.p + y.p, x.b + y.b, x.q + y.q};
    }
    friend KleinDegree operator-(KleinDegree x, KleinDegree y) {
        return {x.a - y.a, x.p - y.p, x.b - y.b, x.q - y.q};
    }
    friend KleinDegree operator*(int n, KleinDegree d) {
        return {n * d.a, n * d.p, n * d.b, n * d.q};
    }
    auto operator<=>(const KleinDegree&) const = default;
    std::string str() const;
};

// Motivic bidegree (a + p*sigma, b + q*sigma); b + q*sigma is the weight.
struct MotivicBidegree {
    int a = 0, p = 0, b = 0, q = 0;

    friend MotivicBidegree operator+(MotivicBidegree x, MotivicBidegree y) {
        return {x.a + y.a, x.p + y.p, x.b + y.b, x.q + y.q};
    }
    auto operator<=>(const MotivicBidegree&) const = default;
    std::string str() const;
};

enum class Axis { Sigma, Eps, SigmaEps };

// RO(C2)-degree a + s*(nontrivial rep), embedded on one of the three axes.
struct C2Degree {
    int a = 0, s = 0;
    Axis axis = Axis::Sigma;

    KleinDegree embed() const {
        switch (axis) {
            case Axis::Sigma: return {a, s, 0, 0};
            case Axis::Eps: return {a, 0, s, 0};
            default: return {a, 0, 0, s};
        }
    }
};

enum class Region { ZeroRegion, TildeRegion, PointRegion, BorelRegion };

// Betti realization on degrees: Re(S^{a+p s, b+q s}) = S^{a-b+(p-q)s+b e+q se}.
inline KleinDegree realize(MotivicBidegree d) {
    return {d.a - d.b, d.p - d.q, d.b, d.q};
}

// Partition of the weight plane (b, q); boundaries follow the strict /
// non-strict inequalities of the region dispatch.
inline Region region_of(MotivicBidegree d) {
    if (d.b + d.q < 0) return d.b >= 1 ? Region::TildeRegion : Region::ZeroRegion;
    return d.b >= 0 ? Region::PointRegion : Region::BorelRegion;
}

const char* region_name(Region r);

}  // namespace bredon

#endif
