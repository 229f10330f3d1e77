#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bredon/motivic.hpp"
#include "bredon/series.hpp"
#include "bredon/spaces.hpp"

using namespace bredon;

TEST_CASE("region dispatch examples") {
    MotivicGroup g = motivic_group_R({3, -3, 1, -3});
    CHECK(g.region == Region::TildeRegion);
    CHECK(g.dimension == 1);

    g = motivic_group_R({1, 0, 2, 0});
    CHECK(g.region == Region::PointRegion);
    CHECK(g.dimension == 1);
    REQUIRE(g.basis.has_value());
    CHECK(*g.basis == std::vector<std::string>{"x2*y2"});

    g = motivic_group_R({0, 0, -1, 0});
    CHECK(g.region == Region::ZeroRegion);
    CHECK(g.dimension == 0);

    g = motivic_group_R({1, 0, -2, 3});
    CHECK(g.region == Region::BorelRegion);
    CHECK(g.dimension == 1);
}

TEST_CASE("weight-0 row reproduces the ordinary motivic cohomology of R") {
    for (int a = -6; a <= 6; ++a)
        for (int b = 0; b <= 4; ++b)
            CHECK(motivic_group_R({a, 0, b, 0}).dimension ==
                  ((0 <= a && a <= b) ? 1 : 0));
}

TEST_CASE("borel_group") {
    MotivicGroup g = borel_group({-2, 2, -1, 1});
    CHECK(g.dimension == 1);
    REQUIRE(g.basis.has_value());
    CHECK(*g.basis == std::vector<std::string>{"k2"});

    CHECK(borel_group({0, 0, 0, 1}).dimension == 0);
    for (int a = -4; a <= 4; ++a)
        for (int q = -5; q < -a / 2; ++q) {
            MotivicBidegree d{a, 0, a / 2, q};
            if (d.b + d.q < 0) CHECK(borel_group(d).dimension == 0);
        }
    // shift formula against the point group
    for (int a = -6; a <= 6; ++a)
        for (int p = -4; p <= 4; ++p)
            for (int b = -4; b <= 4; ++b)
                for (int q = -4; q <= 4; ++q) {
                    long want = b + q < 0 ? 0 : dim_point(a - 2 * b, p - q + b, 0, b + q);
                    CHECK(borel_group({a, p, b, q}).dimension == want);
                }
}

TEST_CASE("borel basis carries the kappa2 power") {
    MotivicGroup g = borel_group({2, 0, -1, 1});
    for (auto& s : *g.basis) CHECK(s.rfind("k2*", 0) == 0);
    g = borel_group({0, 0, 2, 0});  // b > 0: negative kappa2 power
    REQUIRE(g.basis.has_value());
    CHECK(*g.basis == std::vector<std::string>{"k2^-2*y1^2*y3^2"});
}

TEST_CASE("nilpotent sector flag") {
    // p <= q - b - 2 forces every basis monomial through a divided theta1
    for (int a = -6; a <= 6; ++a)
        for (int p = -4; p <= 4; ++p)
            for (int b = -4; b <= -1; ++b)
                for (int q = -b; q <= 4; ++q) {
                    MotivicGroup g = borel_group({a, p, b, q});
                    if (g.dimension == 0 || !g.basis) continue;
                    bool all_div = std::all_of(
                        g.basis->begin(), g.basis->end(), [](const std::string& s) {
                            return s.find("th1") != std::string::npos;
                        });
                    CHECK(g.nilpotent_sector == all_div);
                    if (p <= q - b - 2) CHECK(g.nilpotent_sector);
                }
}

TEST_CASE("tilde region dimension is independent of p and q") {
    for (int a = -2; a <= 8; ++a)
        for (int b = 1; b <= 4; ++b) {
            long base = -1;
            for (int p = -3; p <= 3; ++p)
                for (int q = -3; q - 1 >= -b - 3; --q) {
                    if (b + q >= 0) continue;
                    long d = motivic_group_R({a, p, b, q}).dimension;
                    if (base < 0) base = d;
                    CHECK(d == base);
                }
        }
}

TEST_CASE("tilde region matches the reduced Etilde groups where nonzero") {
    for (int a = -2; a <= 10; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int q = -b - 3; b + q < 0; ++q) {
                long d = motivic_group_R({a, 0, b, q}).dimension;
                if (2 <= a && a <= 2 * b + 1)
                    CHECK(d == etilde_space_dim(realize({a, 0, b, q})));
                else
                    CHECK(d == 0);  // vanishing outside the comparison window
            }
}

TEST_CASE("realization status") {
    auto st = realization_status({3, -3, 1, -3});
    CHECK(st.first == RealizationStatus::Mono);
    CHECK(st.second == RealizationStatus::MonoNotEpi);

    st = realization_status({3, -2, 1, -2});
    CHECK(st.first == RealizationStatus::Mono);
    CHECK(st.second == RealizationStatus::Iso);

    st = realization_status({0, 0, 1, 0});
    CHECK(st.second == RealizationStatus::Iso);

    st = realization_status({-1, 0, -2, 2});
    CHECK(st.first == RealizationStatus::Mono);

    CHECK(realization_status({0, 0, -1, 0}).first == RealizationStatus::ZeroDomain);
    // tilde region, domain vanishes for a > 2b+1 or a <= 1
    CHECK(realization_status({7, 0, 1, -3}).first == RealizationStatus::ZeroDomain);
    CHECK(realization_status({1, 0, 1, -3}).first == RealizationStatus::ZeroDomain);
}

TEST_CASE("borel refinement by dimension comparison") {
    for (int a = -6; a <= 8; ++a)
        for (int p = -4; p <= 4; ++p)
            for (int b = -4; b <= -1; ++b)
                for (int q = -b; q <= 5; ++q) {
                    MotivicGroup g = borel_group({a, p, b, q});
                    if (a <= 2 * b + 2) {
                        CHECK(g.raw == RealizationStatus::Iso);
                        CHECK(g.dimension == g.codomain_dimension);
                    } else {
                        CHECK(g.raw == RealizationStatus::Mono);
                        CHECK(g.dimension <= g.codomain_dimension);
                        CHECK(g.refined == (g.dimension == g.codomain_dimension
                                                ? RealizationStatus::Iso
                                                : RealizationStatus::MonoNotEpi));
                    }
                }
}

TEST_CASE("NC generator strings") {
    CHECK(NCGen{true, 0, 0, 0, 0, -1}.str() == "x3^-1*Sigma(c)");
    CHECK(NCGen{false, 0, 0, 1, 0, -2}.str() == "x3^-2*Sigma(b)");
    CHECK(NCGen{true, 1, 2, 3, 2, -8}.str() == "x1^2*x3^-8*x2*y2^2*Sigma(b^3*c)");
}

TEST_CASE("NC module action") {
    StongElement th1_div{Axis::Sigma, {}, {{1, 0}}};
    CHECK(nc_module_action(th1_div, {true, 0, 0, 0, 0, -1}).empty());

    StongElement y1{Axis::Sigma, {{0, 1}}, {}};
    // y1 * Sigma(c)/x3 = 0
    CHECK(nc_module_action(y1, {true, 0, 0, 0, 0, -1}).empty());
    // y1 * Sigma(b)/x3^2 = x1 * Sigma(c)/x3^2
    NCElement got = nc_module_action(y1, {false, 0, 0, 1, 0, -2});
    REQUIRE(got.size() == 1);
    CHECK(got[0] == NCGen{true, 0, 0, 0, 1, -2});

    // y1 * Sigma(b c)-shape splits into two terms
    got = nc_module_action(y1, {true, 0, 0, 1, 0, -3});
    CHECK(got.size() == 2);

    StongElement x1{Axis::Sigma, {{1, 0}}, {}};
    got = nc_module_action(x1, {true, 2, 1, 0, 0, -5});
    REQUIRE(got.size() == 1);
    CHECK(got[0].u == 1);

    CHECK_THROWS_AS(nc_module_action(StongElement{Axis::Eps, {{0, 1}}, {}},
                                     NCGen{true, 0, 0, 0, 0, 0}),
                    IllFormed);
    CHECK_THROWS_AS(nc_module_action(y1, NCGen{false, 0, 0, 0, 0, 0}), IllFormed);
}

TEST_CASE("decomposition tags partition the nonzero groups") {
    auto rows = decomposition_R(-4, 6, -3, 3, -3, 3, -3, 3);
    for (auto& row : rows) {
        CHECK(row.dimension > 0);
        CHECK(row.dimension == motivic_group_R(row.d).dimension);
        CHECK(row.in_r_summand == (row.d.b + row.d.q >= 0));
    }
    // kappa2 itself sits in the R summand; the x3^-3*Sigma(b) class in NC
    auto find = [&](MotivicBidegree d) {
        return std::find_if(rows.begin(), rows.end(),
                            [&](const DecompositionRow& r) { return r.d == d; });
    };
    auto it = find({-2, 2, -1, 1});
    REQUIRE(it != rows.end());
    CHECK(it->in_r_summand);
    it = find({3, -3, 1, -3});
    REQUIRE(it != rows.end());
    CHECK(!it->in_r_summand);
}

TEST_CASE("region map rendering") {
    std::string ascii = render_region_map_ascii(-6, 6, -6, 6);
    CHECK(ascii.find('k') != std::string::npos);  // kappa2 marker at (-1,1)
    CHECK(ascii.find('T') != std::string::npos);
    CHECK(ascii.find('Z') != std::string::npos);
    CHECK(ascii.find('B') != std::string::npos);
    CHECK(ascii.find('P') != std::string::npos);

    std::string svg = render_region_map_svg(-6, 6, -6, 6);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("k2") != std::string::npos);
}
