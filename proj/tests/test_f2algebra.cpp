#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bredon/f2algebra.hpp"
#include "bredon/series.hpp"

using namespace bredon;

namespace {

Monomial mono(int x1, int y1, int x2, int y2, int x3, int y3) {
    Monomial m;
    m.e = {x1, y1, x2, y2, x3, y3};
    return m;
}

}  // namespace

TEST_CASE("generator degrees") {
    CHECK(Monomial::gen(X1).degree() == KleinDegree{0, 1, 0, 0});
    CHECK(Monomial::gen(Y1).degree() == KleinDegree{-1, 1, 0, 0});
    CHECK(Monomial::gen(X2).degree() == KleinDegree{0, 0, 1, 0});
    CHECK(Monomial::gen(Y3).degree() == KleinDegree{-1, 0, 0, 1});
    CHECK(Monomial::theta_div(1, 0, 0).degree() == KleinDegree{2, -2, 0, 0});
    CHECK(Monomial::theta_div(2, 1, 1).degree() == KleinDegree{3, 0, -4, 0});
    CHECK(Monomial::special(Named::Th).degree() == KleinDegree{3, -1, -1, -1});
    CHECK(Monomial::special(Named::K1).degree() == KleinDegree{-1, -1, 1, 1});
    CHECK(Monomial::special(Named::I2).degree() == KleinDegree{1, -1, 1, -1});
    CHECK(Monomial::kappa2(1).degree() == KleinDegree{-1, 1, -1, 1});
    CHECK(Monomial::kappa2(-3).degree() == KleinDegree{3, -3, 3, -3});
}

TEST_CASE("element printing and parsing round-trip") {
    F2Element e = F2Element::parse("x1*y2*y3");
    CHECK(e.str() == "x1*y2*y3");
    CHECK(F2Element::parse("y1*x2*y3 + y1*y2*x3").str() == "y1*x2*y3 + y1*y2*x3");
    CHECK(F2Element::parse("th1/(x1^2*y1)").str() == "th1/(x1^2*y1)");
    CHECK(F2Element::parse("k2^-2*x3^4").str() == "k2^-2*x3^4");
}

TEST_CASE("parse rejects garbage") {
    CHECK_THROWS_AS(F2Element::parse("x7"), IllFormed);
    CHECK_THROWS_AS(F2Element::parse("k1^2"), IllFormed);
    CHECK_THROWS_AS(F2Element::parse("th4"), IllFormed);
}

TEST_CASE("homogeneity") {
    CHECK_THROWS_AS(F2Element::parse("x1 + y1").degree(), IllFormed);
    CHECK(F2Element{}.degree() == std::nullopt);
    CHECK(F2Element::parse("x1*x2 + x1*x2").is_zero());  // F2 cancellation
}

TEST_CASE("positive cone normal form") {
    F2Element lead = F2Element::parse("x1*y2*y3");
    CHECK(normal_form(lead, Sector::PositiveCone).str() == "y1*x2*y3 + y1*y2*x3");
    CHECK(normal_form(F2Element::parse("x1*y2*y3 + y1*x2*y3 + y1*y2*x3"),
                      Sector::PositiveCone)
              .is_zero());
    // idempotent, degree preserving
    F2Element big = F2Element::parse("x1^2*y2^3*y3^2*x3");
    F2Element nf = normal_form(big, Sector::PositiveCone);
    CHECK(normal_form(nf, Sector::PositiveCone) == nf);
    for (auto& m : nf.monomials()) CHECK(m.degree() == big.degree());
    CHECK_THROWS_AS(normal_form(F2Element::parse("k1"), Sector::PositiveCone), IllFormed);
}

TEST_CASE("E-sector normal form") {
    CHECK(normal_form(F2Element::parse("k2*y2"), Sector::ESector).str() == "y1*y3");
    CHECK(normal_form(F2Element::parse("k2*x2"), Sector::ESector).str() ==
          "x1*y3 + y1*x3");
    // negative kappa2 powers do not rewrite
    F2Element lo = F2Element::parse("k2^-1*y2");
    CHECK(normal_form(lo, Sector::ESector) == lo);
    CHECK(normal_form(F2Element::parse("k2^2*y2^2"), Sector::ESector).str() ==
          "y1^2*y3^2");
    CHECK_THROWS_AS(normal_form(F2Element::parse("k1"), Sector::ESector), IllFormed);
}

TEST_CASE("Stong ring products") {
    StongElement x{Axis::Sigma, {{1, 0}}, {}};
    StongElement y{Axis::Sigma, {{0, 1}}, {}};
    StongElement th_x2y{Axis::Sigma, {}, {{2, 1}}};
    CHECK(stong_mul(x, th_x2y) == StongElement{Axis::Sigma, {}, {{1, 1}}});
    StongElement th{Axis::Sigma, {}, {{0, 0}}};
    CHECK(stong_mul(x, th) == StongElement{Axis::Sigma, {}, {}});  // theta*x = 0
    StongElement a{Axis::Sigma, {{2, 1}}, {}}, b{Axis::Sigma, {{1, 3}}, {}};
    CHECK(stong_mul(a, b) == StongElement{Axis::Sigma, {{3, 4}}, {}});
    // NC x NC = 0
    CHECK(stong_mul(th, th_x2y) == StongElement{Axis::Sigma, {}, {}});
    // x*(y*(th/xy)) = th, then every further generator kills it
    StongElement th_xy{Axis::Sigma, {}, {{1, 1}}};
    CHECK(stong_mul(x, stong_mul(y, th_xy)) == th);
    CHECK(stong_mul(y, stong_mul(x, stong_mul(y, th_xy))) ==
          StongElement{Axis::Sigma, {}, {}});
}

TEST_CASE("stong_dim") {
    CHECK(stong_dim(Axis::Sigma, 0, 0) == 1);
    CHECK(stong_dim(Axis::Sigma, 2, -2) == 1);  // theta1
    CHECK(stong_dim(Axis::Sigma, 1, -1) == 0);
    // agrees with the Poincare-series dimensions axis by axis
    for (int a = -10; a <= 10; ++a)
        for (int s = -6; s <= 6; ++s) {
            CHECK(stong_dim(Axis::Sigma, a, s) == dim_point(a, s, 0, 0));
            CHECK(stong_dim(Axis::Eps, a, s) == dim_point(a, 0, s, 0));
            CHECK(stong_dim(Axis::SigmaEps, a, s) == dim_point(a, 0, 0, s));
        }
}

TEST_CASE("stong_basis_monomial matches stong_dim") {
    for (int a = -8; a <= 8; ++a)
        for (int s = -6; s <= 6; ++s) {
            auto m = stong_basis_monomial(Axis::Eps, a, s);
            CHECK(m.has_value() == (stong_dim(Axis::Eps, a, s) == 1));
            if (m) CHECK(m->degree() == KleinDegree{a, 0, s, 0});
        }
}

TEST_CASE("positive-cone multiplication is associative and commutative") {
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<int> exp(0, 4), pick(0, 5);
    auto random_mono = [&] {
        Monomial m;
        for (int t = 0; t < 3; ++t) m.e[pick(rng)] += exp(rng) % 3;
        return m;
    };
    auto mul = [](const F2Element& u, const F2Element& v) {
        F2Element out;
        for (auto& a : u.monomials())
            for (auto& b : v.monomials()) {
                Monomial m = a;
                for (int i = 0; i < 6; ++i) m.e[i] += b.e[i];
                out.toggle(m);
            }
        return normal_form(out, Sector::PositiveCone);
    };
    for (int trial = 0; trial < 200; ++trial) {
        F2Element u = normal_form(F2Element{random_mono()}, Sector::PositiveCone);
        F2Element v = normal_form(F2Element{random_mono()}, Sector::PositiveCone);
        F2Element w = normal_form(F2Element{random_mono()}, Sector::PositiveCone);
        CHECK(mul(u, v) == mul(v, u));
        CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
    }
}

TEST_CASE("monomial string forms") {
    CHECK(mono(2, 0, 0, 1, 0, 0).str() == "x1^2*y2");
    CHECK(Monomial{}.str() == "1");
    CHECK(Monomial::theta_div(3, 2, 0).str() == "th3/(x3^2)");
    CHECK(Monomial::theta_div(2, 0, 0).str() == "th2");
    CHECK(Monomial::kappa2(-1).str() == "k2^-1");
}
