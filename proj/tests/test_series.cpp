#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bredon/series.hpp"

using namespace bredon;

namespace {

LaurentPoly geom(int lo, int hi) { return LaurentPoly::geometric(lo, hi); }

// G(N) = 1 + x + ... + x^N, zero when N < 0.
LaurentPoly G(int n) { return geom(0, n); }

}  // namespace

TEST_CASE("series_for base cases") {
    CHECK(series_for(0, 0, 0) == G(0));
    CHECK(series_for(2, 0, 0) == G(2));
    // negative single coefficient: x^{-n} + ... + x^{-2}
    CHECK(series_for(-3, 0, 0) == geom(-3, -2));
    CHECK(series_for(-1, 0, 0) == LaurentPoly{});
    // the lone class Theta at degree 3 - sigma - eps - sigma@eps
    LaurentPoly theta;
    theta = geom(-3, -3);
    CHECK(series_for(-1, -1, -1) == theta);
}

TEST_CASE("dim_point printed values") {
    CHECK(dim_point(2, 0, 1, -3) == 2);
    CHECK(dim_point(2, 0, 1, -2) == 1);
    CHECK(dim_point(1, -2, -2, 2) == 2);
    CHECK(dim_point(2, -2, -2, 2) == 2);
    CHECK(dim_point(3, -2, -2, 2) == 0);
    CHECK(dim_point(3, -3, -2, 3) == 1);
}

TEST_CASE("series_oracle convolution semantics") {
    CHECK(series_oracle({G(0)}) == G(0));
    LaurentPoly got = series_oracle({G(1), geom(-3, -2)});
    LaurentPoly want;
    want = geom(-3, -3) + geom(-2, -2) + geom(-2, -2) + geom(-1, -1);
    CHECK(got == want);
    CHECK(series_oracle({G(2)}, {-2}) == geom(-2, 0));
}

TEST_CASE("closed forms match their printed factorizations") {
    // all positive: G(l)G(m) + x G(l+m)G(n-1)
    for (int l = 1; l <= 6; ++l)
        for (int m = 1; m <= 6; ++m)
            for (int n = 1; n <= 6; ++n) {
                LaurentPoly want = series_oracle({G(l), G(m)}) +
                                   series_oracle({G(l + m), G(n - 1)}, {1, 0});
                CHECK(series_for(l, m, n) == want);
            }
    // one negative, k <= l, m
    for (int l = 1; l <= 6; ++l)
        for (int m = 1; m <= 6; ++m)
            for (int k = 1; k <= 6; ++k) {
                if (k > l || k > m) continue;
                LaurentPoly want = series_oracle({LaurentPoly::geometric(-k, -1), G(k - 2)}) +
                                   series_oracle({G(l - k), G(m - k)}, {k, 0});
                CHECK(series_for(l, m, -k) == want);
            }
    // one negative, k > l
    for (int l = 1; l <= 6; ++l)
        for (int m = 1; m <= 6; ++m)
            for (int k = l + 1; k <= 6; ++k) {
                LaurentPoly want = series_oracle({G(l), G(l - 1)}, {-(l + 1), 0}) +
                                   series_oracle({G(k - l - 2), G(l + m)}, {-k, 0});
                CHECK(series_for(l, m, -k) == want);
            }
    // two negative, j,k >= l+1
    for (int l = 1; l <= 6; ++l)
        for (int j = l + 1; j <= 6; ++j)
            for (int k = l + 1; k <= 6; ++k) {
                LaurentPoly want =
                    series_oracle({G(j - l - 2), G(k - l - 2)}, {-(j + k - l), 0}) +
                    series_oracle({G(l), G(l - 1)}, {-(l + 1), 0});
                CHECK(series_for(l, -j, -k) == want);
            }
    // two negative, l >= k
    for (int l = 1; l <= 6; ++l)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= l; ++k) {
                LaurentPoly want = series_oracle({G(j - 2), G(l - k)}, {-j, 0}) +
                                   series_oracle({G(l - 1), G(k - 1)}, {-k, 0});
                CHECK(series_for(l, -j, -k) == want);
            }
    // all negative
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                LaurentPoly want =
                    series_oracle({G(j + k - 2), G(i - 2)}, {-(i + j + k), 0}) +
                    series_oracle({G(k - 1), G(j - 1)}, {-(i + j + k) + i - 1, 0});
                CHECK(series_for(-i, -j, -k) == want);
            }
}

TEST_CASE("sub-case boundaries of the dispatch agree where they overlap") {
    // one negative at k = l <= m: both printed forms apply
    for (int l = 1; l <= 6; ++l)
        for (int m = l; m <= 6; ++m) {
            LaurentPoly via_min = series_oracle({LaurentPoly::geometric(-l, -1), G(l - 2)}) +
                                  series_oracle({G(0), G(m - l)}, {l, 0});
            CHECK(series_for(l, m, -l) == via_min);
        }
    // two negative at j = l+1 with k <= l: swapped sub-cases must agree
    for (int l = 1; l <= 6; ++l)
        for (int k = 1; k <= l; ++k)
            CHECK(series_for(l, -(l + 1), -k) == series_for(l, -k, -(l + 1)));
}

TEST_CASE("S3 symmetry in the three nontrivial irreducibles") {
    for (int a = -8; a <= 8; ++a)
        for (int p = -5; p <= 5; ++p)
            for (int b = -5; b <= 5; ++b)
                for (int q = -5; q <= 5; ++q) {
                    long d = dim_point(a, p, b, q);
                    CHECK(d == dim_point(a, p, q, b));
                    CHECK(d == dim_point(a, b, p, q));
                    CHECK(d == dim_point(a, b, q, p));
                    CHECK(d == dim_point(a, q, p, b));
                    CHECK(d == dim_point(a, q, b, p));
                }
}

TEST_CASE("vanishing ranges") {
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b)
            for (int q = -10; q <= 10; ++q) {
                if (a > b && b >= -q && -q > 0) CHECK(dim_point(a, q, b, q) == 0);
                if (b >= 0 && q >= 0 && a >= 1) CHECK(dim_point(a, q, b, q) == 0);
            }
}

TEST_CASE("coefficients are non-negative and finitely supported") {
    for (int p = -4; p <= 4; ++p)
        for (int b = -4; b <= 4; ++b)
            for (int q = -4; q <= 4; ++q) {
                LaurentPoly s = series_for(p, b, q);
                for (auto& [e, c] : s.coefficients()) CHECK(c > 0);
            }
}
