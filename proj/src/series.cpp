#include "bredon/series.hpp"

#include <algorithm>

namespace bredon {

namespace {

LaurentPoly G(int n) { return LaurentPoly::geometric(0, n); }
// x^{-n} + ... + x^{-2}; empty when n < 2.
LaurentPoly D(int n) { return LaurentPoly::geometric(-n, -2); }

// All coefficients positive: (1+...+x^l)(1+...+x^m) + x(1+...+x^{l+m})(1+...+x^{n-1}).
LaurentPoly all_positive(int l, int m, int n) {
    return G(l) * G(m) + (G(l + m) * G(n - 1)).shifted(1);
}

// l,m positive, one coefficient -k.
LaurentPoly one_negative(int l, int m, int k) {
    if (k <= l && k <= m)
        return LaurentPoly::geometric(-k, -1) * G(k - 2) +
               (G(l - k) * G(m - k)).shifted(k);
    if (k > l)
        return (G(l) * G(l - 1)).shifted(-(l + 1)) +
               (G(k - l - 2) * G(l + m)).shifted(-k);
    // k > m: same with the roles of l and m swapped
    return (G(m) * G(m - 1)).shifted(-(m + 1)) +
           (G(k - m - 2) * G(m + l)).shifted(-k);
}

// l positive, coefficients -j, -k.
LaurentPoly two_negative(int l, int j, int k) {
    if (j >= l + 1 && k >= l + 1)
        return (G(j - l - 2) * G(k - l - 2)).shifted(-(j + k - l)) +
               (G(l) * G(l - 1)).shifted(-(l + 1));
    if (l >= k)
        return (G(j - 2) * G(l - k)).shifted(-j) +
               (G(l - 1) * G(k - 1)).shifted(-k);
    // l >= j: swap j and k
    return (G(k - 2) * G(l - j)).shifted(-k) +
           (G(l - 1) * G(j - 1)).shifted(-j);
}

// All coefficients negative: -i, -j, -k.
LaurentPoly all_negative(int i, int j, int k) {
    LaurentPoly inner = G(j + k - 2) * G(i - 2) + (G(k - 1) * G(j - 1)).shifted(i - 1);
    return inner.shifted(-(i + j + k));
}

}  // namespace

LaurentPoly series_for(int c1, int c2, int c3) {
    std::array<int, 3> v{c1, c2, c3};
    std::vector<int> pos, neg;
    for (int c : v) {
        if (c > 0) pos.push_back(c);
        if (c < 0) neg.push_back(-c);
    }
    switch (pos.size() + neg.size()) {
        case 0:
            return LaurentPoly::one();
        case 1:
            return pos.size() == 1 ? G(pos[0]) : D(neg[0]);
        case 2:
            if (pos.size() == 2) return G(pos[0]) * G(pos[1]);
            if (pos.size() == 1) return G(pos[0]) * D(neg[0]);
            return D(neg[0]) * D(neg[1]);
        default:
            if (pos.size() == 3) return all_positive(v[0], v[1], v[2]);
            if (pos.size() == 2) return one_negative(pos[0], pos[1], neg[0]);
            if (pos.size() == 1) return two_negative(pos[0], neg[0], neg[1]);
            return all_negative(-v[0], -v[1], -v[2]);
    }
}

long dim_point(KleinDegree d) {
    mpz_class c = series_for(d.p, d.b, d.q).coeff(-d.a);
    return static_cast<long>(c.get_si());
}

LaurentPoly series_oracle(const std::vector<LaurentPoly>& factors,
                          const std::vector<int>& shifts) {
    // Dense accumulation over an explicit support interval.
    long lo = 0, hi = 0;
    std::vector<std::pair<long, std::vector<mpz_class>>> dense;  // (offset, coeffs)
    for (size_t i = 0; i < factors.size(); ++i) {
        int sh = i < shifts.size() ? shifts[i] : 0;
        if (factors[i].is_zero()) return LaurentPoly{};
        auto& cs = factors[i].coefficients();
        long flo = cs.begin()->first + sh, fhi = cs.rbegin()->first + sh;
        std::vector<mpz_class> row(fhi - flo + 1);
        for (auto& [t, c] : cs) row[t + sh - flo] = c;
        dense.emplace_back(flo, std::move(row));
        lo += flo;
        hi += fhi;
    }
    if (dense.empty()) return LaurentPoly::one();
    std::vector<mpz_class> acc = dense[0].second;
    long off = dense[0].first;
    for (size_t i = 1; i < dense.size(); ++i) {
        auto& [foff, row] = dense[i];
        std::vector<mpz_class> next(acc.size() + row.size() - 1);
        for (size_t s = 0; s < acc.size(); ++s)
            for (size_t t = 0; t < row.size(); ++t) next[s + t] += acc[s] * row[t];
        acc = std::move(next);
        off += foff;
    }
    std::map<int, mpz_class> out;
    for (size_t s = 0; s < acc.size(); ++s)
        if (acc[s] != 0) out[static_cast<int>(off + s)] = acc[s];
    return LaurentPoly(std::move(out));
}

}  // namespace bredon
