#include "bredon/spaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "bredon/series.hpp"

namespace bredon {

namespace {

std::string class_part(int delta, int e) {
    std::ostringstream os;
    if (delta) os << "c";
    if (e > 0) {
        if (delta) os << "*";
        os << "b";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string join_parts(const std::string& coeff, const std::string& cls) {
    if (coeff == "1" || coeff.empty()) return cls.empty() ? "1" : cls;
    return cls.empty() ? coeff : coeff + "*" + cls;
}

}  // namespace

GroupDescriptor b_space_group(int a, int b, bool reduced) {
    std::vector<std::string> basis;
    int emax = std::max({0, a + b, a - 2});
    for (int delta = 0; delta <= 1; ++delta)
        for (int e = 0; e <= emax; ++e) {
            if (reduced && delta == 0 && e == 0) continue;
            auto alpha = stong_basis_monomial(Axis::Eps, a - e, b - delta - e);
            if (!alpha) continue;
            basis.push_back(join_parts(alpha->str(), class_part(delta, e)));
        }
    GroupDescriptor g{{a, 0, b, 0}, static_cast<long>(basis.size()), std::move(basis)};
    return g;
}

long b_space_dim(int a, int b) { return b_space_group(a, b).dimension; }
long b_space_reduced_dim(int a, int b) { return b_space_group(a, b, true).dimension; }

GroupDescriptor bc2_motivic_group(int a, int w) {
    std::vector<std::string> basis;
    for (int delta = 0; delta <= 1; ++delta)
        for (int e = 0; 2 * e <= a - delta; ++e) {
            int j = a - delta - 2 * e;  // rho exponent
            int i = w - a + e;          // tau exponent
            if (j < 0 || i < 0) continue;
            std::ostringstream os;
            bool first = true;
            auto emit = [&](const char* name, int exp) {
                if (exp == 0) return;
                if (!first) os << "*";
                first = false;
                os << name;
                if (exp > 1) os << "^" << exp;
            };
            emit("tau", i);
            emit("rho", j);
            emit("s", delta);
            emit("t", e);
            basis.push_back(first ? "1" : os.str());
        }
    GroupDescriptor g{{a, 0, w, 0}, static_cast<long>(basis.size()), std::move(basis)};
    return g;
}

long bc2_motivic_dim(int a, int w) { return bc2_motivic_group(a, w).dimension; }

long w_q_motivic_dim(int q, int a, int w) {
    if (q < 1) throw IllFormed("W_q needs q >= 1");
    long count = 0;
    for (int delta = 0; delta <= 1; ++delta)
        for (int e = 0; e <= q - 1 && 2 * e <= a - delta; ++e) {
            int j = a - delta - 2 * e;
            int i = w - a + e;
            if (j >= 0 && i >= 0) ++count;
        }
    return count;
}

namespace {

// Number of (m1, m3) with 0 <= m1 <= s1, 0 <= m3 <= s3, m1 + m3 = sy.
long h3(long s1, long s3, long sy) {
    if (s1 < 0 || s3 < 0 || sy < 0) return 0;
    long lo = std::max(0L, sy - s3), hi = std::min(s1, sy);
    return std::max(0L, hi - lo + 1);
}

// Polynomial part of E: F2[x1,y1,x3,y3, k2^{+-1}]; eliminating x2,y2 through
// the invertibility of kappa2 pins the kappa2 exponent to -b.
long e_poly_dim(KleinDegree d) {
    long t = -d.b;
    return h3(d.p - t, d.q - t, -d.a - t);
}

// theta2-divided part of E: the colimit of cyclic modules
// R/((y1 y3)^{N+1}, (x1 y3 + x3 y1)^{N+1}) over representatives
// k2^t * theta2/(x2^N y2^N); the Koszul inclusion-exclusion below computes
// each graded piece, stabilizing once N dominates the degree window.
long e_theta_dim(KleinDegree d, long N) {
    long t = -d.b - 2 - 2 * N;
    long S1 = d.p - t, S3 = d.q - t, Sy = 2 + N - d.a - t;
    long A = N + 1;
    return h3(S1, S3, Sy) - h3(S1 - A, S3 - A, Sy - 2 * A) -
           h3(S1 - A, S3 - A, Sy - A) + h3(S1 - 2 * A, S3 - 2 * A, Sy - 3 * A);
}

long e_theta_dim_stable(KleinDegree d) {
    long N = 8 + std::abs(d.a) + std::abs(d.p) + std::abs(d.b) + std::abs(d.q);
    long v = e_theta_dim(d, N);
    while (e_theta_dim(d, N + 1) != v) {
        N *= 2;
        v = e_theta_dim(d, N);
    }
    return v;
}

}  // namespace

GroupDescriptor e_space_group(KleinDegree d) {
    long pdim = e_poly_dim(d);
    long tdim = e_theta_dim_stable(d);
    GroupDescriptor g{d, pdim + tdim, std::nullopt};
    if (tdim == 0) {
        // Pure polynomial degrees carry a clean monomial basis.
        std::vector<std::string> basis;
        int t = -d.b;
        for (int m1 = 0; m1 <= d.p - t; ++m1) {
            int m3 = -d.a - t - m1;
            if (m3 < 0 || m3 > d.q - t) continue;
            Monomial m = Monomial::kappa2(t);
            m.e[X1] = d.p - t - m1;
            m.e[Y1] = m1;
            m.e[X3] = d.q - t - m3;
            m.e[Y3] = m3;
            basis.push_back(m.str());
        }
        g.basis = std::move(basis);
    }
    return g;
}

long e_space_dim(KleinDegree d) {
    return e_poly_dim(d) + e_theta_dim_stable(d);
}

GroupDescriptor etilde_space_group(KleinDegree d) {
    // Reduced cohomology of Etilde = reduced B at (a-1, b), with x1^{+-1} and
    // x3^{+-1} periodicity absorbing the sigma coordinates.
    GroupDescriptor red = b_space_group(d.a - 1, d.b, true);
    GroupDescriptor g{d, red.dimension, std::nullopt};
    std::vector<std::string> basis;
    for (auto& cls : *red.basis) {
        std::ostringstream os;
        if (d.p != 0) os << "x1^" << d.p << "*";
        if (d.q != 0) os << "x3^" << d.q << "*";
        os << "Sigma(" << cls << ")";
        basis.push_back(os.str());
    }
    g.basis = std::move(basis);
    return g;
}

long etilde_space_dim(KleinDegree d) { return b_space_reduced_dim(d.a - 1, d.b); }

std::string realize_class(const std::string& name) {
    static const std::map<std::string, std::string> dict = {
        {"s", "c"},   {"t", "b"},   {"tau", "y2"}, {"rho", "x2"},
        {"x1", "x1"}, {"y1", "y1"}, {"x3", "x3"},  {"y3", "y3"},
        {"th1", "th1"}, {"k2", "k2"},
    };
    auto it = dict.find(name);
    if (it == dict.end()) throw IllFormed("unknown class: " + name);
    return it->second;
}

}  // namespace bredon
