#ifndef BREDON_F2ALGEBRA_HPP
#define BREDON_F2ALGEBRA_HPP

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bredon/degrees.hpp"

namespace bredon {

struct IllFormed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Opaque named classes of the point ring mixed cones.  kappa2 is handled
// through its own Laurent exponent (it is invertible in the E-sector), so
// it does not appear here.
enum class Named { None, K1, K3, I1, I2, I3, Th };

// Generator indices for the polynomial exponent vector.
enum GenIndex { X1, Y1, X2, Y2, X3, Y3 };

// One normal-form monomial.  theta/tn/tm encode a theta-divided factor
// th<axis>/(x^tn * y^tm) on that axis; divided denominators are stored as
// the pair (tn, tm) rather than negative exponents so they cannot be
// confused with genuine Laurent powers of kappa2.
struct Monomial {
    std::array<int, 6> e{};  // exponents of x1,y1,x2,y2,x3,y3 (all >= 0)
    int theta = 0;           // 0 = none, else axis 1..3
    int tn = 0, tm = 0;      // theta denominator exponents
    Named named = Named::None;
    int k2 = 0;              // kappa2 exponent, may be negative

    KleinDegree degree() const;
    bool is_unit() const { return *this == Monomial{}; }
    bool poly_only() const { return theta == 0 && named == Named::None && k2 == 0; }
    auto operator<=>(const Monomial&) const = default;
    std::string str() const;

    static Monomial gen(GenIndex g, int exp = 1);
    static Monomial theta_div(int axis, int n, int m);
    static Monomial special(Named n);
    static Monomial kappa2(int exp);
};

// A finite F2-span of monomials; presence in the set means coefficient 1.
class F2Element {
  public:
    F2Element() = default;
    explicit F2Element(Monomial m) { mons_.insert(m); }

    bool is_zero() const { return mons_.empty(); }
    const std::set<Monomial>& monomials() const { return mons_; }
    void toggle(const Monomial& m);

    friend F2Element operator+(const F2Element& u, const F2Element& v);
    bool operator==(const F2Element&) const = default;

    // All monomials share one degree; throws IllFormed otherwise (the zero
    // element belongs to every degree and returns nullopt).
    std::optional<KleinDegree> degree() const;

    std::string str() const;
    static F2Element parse(const std::string& text);

  private:
    std::set<Monomial> mons_;
};

enum class Sector { PositiveCone, ESector };

// Canonical form for the sector:
//  - PositiveCone: divides by the single relation x1*y2*y3 = y1*x2*y3 + y1*y2*x3
//    (lex order x1 > y1 > x2 > y2 > x3 > y3 makes x1*y2*y3 the lead).
//  - ESector: rewrites k2^k * y2 -> k2^{k-1} * y1*y3 and
//    k2^k * x2 -> k2^{k-1} * (x1*y3 + x3*y1) for k >= 1.
F2Element normal_form(const F2Element& e, Sector sector);

// --- Stong ring on a single axis: Z/2[x,y] (+) Z/2{theta/x^n y^m} ---

struct StongElement {
    Axis axis = Axis::Sigma;
    std::set<std::pair<int, int>> poly;  // (n, m) for x^n y^m
    std::set<std::pair<int, int>> nc;    // (n, m) for theta / x^n y^m

    bool operator==(const StongElement&) const = default;
    F2Element to_element() const;
};

StongElement stong_mul(const StongElement& u, const StongElement& v);

// Dimension (0 or 1) of the Stong ring in RO(C2)-degree a + s*axis.
int stong_dim(Axis axis, int a, int s);

// The unique Stong basis monomial at (a, s), if any, as a point monomial.
std::optional<Monomial> stong_basis_monomial(Axis axis, int a, int s);

}  // namespace bredon

#endif
