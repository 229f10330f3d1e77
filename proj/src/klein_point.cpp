#include "bredon/klein_point.hpp"

#include <algorithm>

#include "bredon/series.hpp"

namespace bredon {

namespace {

Axis axis_of(int i) { return i == 1 ? Axis::Sigma : i == 2 ? Axis::Eps : Axis::SigmaEps; }

// Positive cone: x1^{p-m1} y1^{m1} x2^{b-m2} y2^{m2} x3^{q-m3} y3^{m3} with
// m1+m2+m3 = -a, excluding monomials divisible by the lead x1*y2*y3.
std::vector<std::string> positive_cone_basis(KleinDegree d) {
    std::vector<std::string> out;
    for (int m1 = 0; m1 <= d.p; ++m1)
        for (int m2 = 0; m2 <= d.b; ++m2) {
            int m3 = -d.a - m1 - m2;
            if (m3 < 0 || m3 > d.q) continue;
            if (d.p - m1 >= 1 && m2 >= 1 && m3 >= 1) continue;
            Monomial m;
            m.e[X1] = d.p - m1;
            m.e[Y1] = m1;
            m.e[X2] = d.b - m2;
            m.e[Y2] = m2;
            m.e[X3] = d.q - m3;
            m.e[Y3] = m3;
            out.push_back(m.str());
        }
    return out;
}

// Stong(w-axis) basis monomial times a free polynomial on the v-axis.
std::vector<std::string> mixed_sector_basis(KleinDegree d, int v_axis, int cv,
                                            int w_axis, int cw) {
    std::vector<std::string> out;
    for (int m2 = 0; m2 <= cv; ++m2) {
        auto st = stong_basis_monomial(axis_of(w_axis), d.a + m2, cw);
        if (!st) continue;
        Monomial m = *st;
        m.e[2 * (v_axis - 1)] = cv - m2;
        m.e[2 * (v_axis - 1) + 1] = m2;
        out.push_back(m.str());
    }
    return out;
}

}  // namespace

GroupDescriptor group_at(KleinDegree d) {
    GroupDescriptor g{d, dim_point(d), std::nullopt};
    int c[3] = {d.p, d.b, d.q};
    if (c[0] >= 0 && c[1] >= 0 && c[2] >= 0) {
        g.basis = positive_cone_basis(d);
        return g;
    }
    int zeros = 0;
    for (int v : c) zeros += (v == 0);
    if (zeros == 2) {
        int axis = c[0] != 0 ? 1 : c[1] != 0 ? 2 : 3;
        int s = c[axis - 1];
        std::vector<std::string> basis;
        if (auto m = stong_basis_monomial(axis_of(axis), d.a, s)) basis.push_back(m->str());
        g.basis = std::move(basis);
        return g;
    }
    if (zeros == 1) {
        int u = c[0] == 0 ? 1 : c[1] == 0 ? 2 : 3;
        int v = 0, w = 0;
        for (int ax = 1; ax <= 3; ++ax) {
            if (ax == u) continue;
            (c[ax - 1] >= 0 ? v : w) = ax;
        }
        if (v != 0 && w != 0) {
            g.basis = mixed_sector_basis(d, v, c[v - 1], w, c[w - 1]);
            return g;
        }
    }
    return g;  // dimension-only sector
}

namespace {

// Special-class codes for the ledger: kappa_i, iota_i, Theta.
enum class Spec { None, K1, K2, K3, I1, I2, I3, Th };

bool is_simple_special(const Monomial& m, Spec& out) {
    for (int v : m.e)
        if (v != 0) return false;
    if (m.theta != 0) return false;
    if (m.named != Named::None && m.k2 == 0) {
        switch (m.named) {
            case Named::K1: out = Spec::K1; break;
            case Named::K3: out = Spec::K3; break;
            case Named::I1: out = Spec::I1; break;
            case Named::I2: out = Spec::I2; break;
            case Named::I3: out = Spec::I3; break;
            default: out = Spec::Th; break;
        }
        return true;
    }
    if (m.named == Named::None && m.k2 == 1) {
        out = Spec::K2;
        return true;
    }
    return false;
}

bool is_kappa(Spec s, int& axis) {
    if (s == Spec::K1) axis = 1;
    else if (s == Spec::K2) axis = 2;
    else if (s == Spec::K3) axis = 3;
    else return false;
    return true;
}

bool is_iota(Spec s, int& axis) {
    if (s == Spec::I1) axis = 1;
    else if (s == Spec::I2) axis = 2;
    else if (s == Spec::I3) axis = 3;
    else return false;
    return true;
}

Monomial iota(int axis) {
    return Monomial::special(axis == 1 ? Named::I1 : axis == 2 ? Named::I2 : Named::I3);
}

bool bare_theta(const Monomial& m) {
    if (m.theta == 0 || m.tn != 0 || m.tm != 0 || m.named != Named::None || m.k2 != 0)
        return false;
    for (int v : m.e)
        if (v != 0) return false;
    return true;
}

std::vector<int> poly_support(const Monomial& m) {
    std::vector<int> axes;
    for (int ax = 1; ax <= 3; ++ax)
        if (m.e[2 * (ax - 1)] != 0 || m.e[2 * (ax - 1) + 1] != 0) axes.push_back(ax);
    return axes;
}

// kappa_i times one factor x_i or y_i, as a polynomial element.
F2Element kappa_times_factor(int i, bool is_x) {
    int j = i == 1 ? 2 : 1;
    int k = i == 3 ? 2 : 3;
    F2Element r;
    Monomial m1, m2;
    if (is_x) {
        m1.e[2 * (j - 1)] = 1;      // x_j
        m1.e[2 * (k - 1) + 1] = 1;  // y_k
        m2.e[2 * (j - 1) + 1] = 1;  // y_j
        m2.e[2 * (k - 1)] = 1;      // x_k
        r.toggle(m1);
        r.toggle(m2);
    } else {
        m1.e[2 * (j - 1) + 1] = 1;
        m1.e[2 * (k - 1) + 1] = 1;  // y_j * y_k
        r.toggle(m1);
    }
    return r;
}

std::optional<F2Element> special_pair(Spec s, Spec t) {
    int i, j;
    if (s == Spec::Th || t == Spec::Th) {
        // Theta^2 = theta_i Theta = kappa_i Theta = iota_i Theta = 0; the
        // remaining pairing is Th*Th which is also zero.
        return F2Element{};
    }
    if (is_kappa(s, i) && is_kappa(t, j)) {
        if (i == j) return std::nullopt;  // kappa_i^2 is not expressible
        int k = 6 - i - j;
        F2Element r;
        Monomial m;
        m.e[2 * (k - 1) + 1] = 2;  // y_k^2
        r.toggle(m);
        return r;
    }
    if (is_iota(s, i) && is_iota(t, j))
        return i == j ? std::optional<F2Element>{} : std::optional<F2Element>{F2Element{}};
    // one kappa, one iota
    if (is_iota(s, i)) std::swap(s, t);
    is_kappa(s, i);
    is_iota(t, j);
    if (i == j) return F2Element{};  // iota_i kappa_i = 0
    return std::nullopt;
}

F2Element poly_mul_nf(Monomial a, const Monomial& b) {
    for (int i = 0; i < 6; ++i) a.e[i] += b.e[i];
    return normal_form(F2Element{a}, Sector::PositiveCone);
}

std::optional<F2Element> special_times_monomial(Spec s, const Monomial& p) {
    bool p_has_poly = !poly_support(p).empty();
    if (s == Spec::Th) {
        if (p.theta != 0 && p.tn == 0 && p.tm == 0) return F2Element{};  // Theta*theta_i = 0
        if (p.theta == 0 && p_has_poly) return F2Element{};              // Theta*x = Theta*y = 0
        return std::nullopt;
    }
    int i;
    if (is_iota(s, i)) {
        for (int ax = 1; ax <= 3; ++ax)
            if (ax != i && (p.e[2 * (ax - 1)] != 0 || p.e[2 * (ax - 1) + 1] != 0))
                return F2Element{};  // iota_i * (other-axis generator) = 0
        if (bare_theta(p)) {
            if (p.theta == i) return F2Element{Monomial::special(Named::Th)};
            return F2Element{};  // iota_i theta_j = 0
        }
        return std::nullopt;  // iota_i * own-axis polynomial, theta-divided, ...
    }
    is_kappa(s, i);
    if (bare_theta(p)) {
        if (p.theta == i) return std::nullopt;  // kappa_i theta_i unknown
        int k = 6 - i - p.theta;
        return F2Element{iota(k)};  // kappa_i theta_j = iota_k
    }
    if (p.theta != 0) return std::nullopt;
    auto sup = poly_support(p);
    if (sup.size() == 1 && sup[0] == i && p.named == Named::None && p.k2 == 0) {
        Monomial rest = p;
        bool use_x = p.e[2 * (i - 1)] >= 1;
        rest.e[2 * (i - 1) + (use_x ? 0 : 1)]--;
        F2Element out;
        F2Element kf = kappa_times_factor(i, use_x);
        for (auto& lm : kf.monomials())
            out = out + poly_mul_nf(lm, rest);
        return out;
    }
    return std::nullopt;  // kappa_i across axes: no known closed form
}

std::optional<F2Element> mono_mul(const Monomial& a, const Monomial& b) {
    if (a.is_unit() || b.is_unit()) {
        const Monomial& other = a.is_unit() ? b : a;
        if (other.poly_only())
            return normal_form(F2Element{other}, Sector::PositiveCone);
        return F2Element{other};
    }
    Spec sa, sb;
    bool aspec = is_simple_special(a, sa), bspec = is_simple_special(b, sb);
    bool ahas = a.named != Named::None || a.k2 != 0;
    bool bhas = b.named != Named::None || b.k2 != 0;
    if (ahas || bhas) {
        if ((ahas && !aspec) || (bhas && !bspec)) return std::nullopt;
        if (aspec && bspec) return special_pair(sa, sb);
        return aspec ? special_times_monomial(sa, b) : special_times_monomial(sb, a);
    }
    if (a.theta == 0 && b.theta == 0) return poly_mul_nf(a, b);
    if (a.theta != 0 && b.theta != 0) {
        if (a.theta != b.theta) return std::nullopt;  // theta_j theta_k: nonzero, unexpressed
        std::vector<int> sup;
        for (int ax = 1; ax <= 3; ++ax) {
            if (ax == a.theta) continue;
            if (a.e[2 * (ax - 1)] || a.e[2 * (ax - 1) + 1] || b.e[2 * (ax - 1)] ||
                b.e[2 * (ax - 1) + 1])
                sup.push_back(ax);
        }
        return sup.size() <= 1 ? std::optional<F2Element>{F2Element{}} : std::nullopt;
    }
    const Monomial& t = a.theta != 0 ? a : b;
    const Monomial& p = a.theta != 0 ? b : a;
    int i = t.theta;
    // A bare theta_i against any other-axis content: nonzero but not
    // expressed in the printed fragments.
    if (bare_theta(t)) {
        for (int ax = 1; ax <= 3; ++ax)
            if (ax != i && (p.e[2 * (ax - 1)] || p.e[2 * (ax - 1) + 1]))
                return std::nullopt;
    }
    int cx = t.e[2 * (i - 1)] + p.e[2 * (i - 1)];
    int cy = t.e[2 * (i - 1) + 1] + p.e[2 * (i - 1) + 1];
    if (cx > t.tn || cy > t.tm) return F2Element{};  // theta*x = theta*y = 0 past the divisor
    Monomial r = Monomial::theta_div(i, t.tn - cx, t.tm - cy);
    std::vector<int> sup;
    for (int ax = 1; ax <= 3; ++ax) {
        if (ax == i) continue;
        r.e[2 * (ax - 1)] = t.e[2 * (ax - 1)] + p.e[2 * (ax - 1)];
        r.e[2 * (ax - 1) + 1] = t.e[2 * (ax - 1) + 1] + p.e[2 * (ax - 1) + 1];
        if (r.e[2 * (ax - 1)] || r.e[2 * (ax - 1) + 1]) sup.push_back(ax);
    }
    if (sup.size() > 1) return std::nullopt;  // theta-divided across both other axes
    return F2Element{r};
}

}  // namespace

ProductResult multiply(const F2Element& u, const F2Element& v) {
    u.degree();  // homogeneity checks; throw IllFormed if mixed
    v.degree();
    F2Element out;
    for (auto& a : u.monomials())
        for (auto& b : v.monomials()) {
            auto r = mono_mul(a, b);
            if (!r) return UnknownProduct{};
            out = out + *r;
        }
    return out;
}

namespace {

struct LevelInfo {
    std::vector<int> killed;           // generator indices mapped to zero
    int lead_x = -1, lead_y = -1;      // codomain relation lead pair
    int repl_y = -1, repl_x = -1;      // replacement pair
};

LevelInfo level_info(MackeyLevel l) {
    switch (l) {
        case MackeyLevel::C2Level: return {{X1}, X2, Y3, Y2, X3};
        case MackeyLevel::DeltaLevel: return {{X2}, X1, Y3, Y1, X3};
        case MackeyLevel::Sigma2Level: return {{X3}, X1, Y2, Y1, X2};
        case MackeyLevel::Bottom: return {{X1, X2, X3}, -1, -1, -1, -1};
        default: return {};
    }
}

// Any strict descent in the subgroup lattice is a composite of one-step
// restrictions, so it is permitted directly.
bool valid_step(MackeyLevel from, MackeyLevel to) {
    if (from == to) return false;
    if (from == MackeyLevel::Top) return true;
    return to == MackeyLevel::Bottom;
}

}  // namespace

F2Element mackey_restrict(MackeyLevel from, MackeyLevel to, const F2Element& e) {
    if (!valid_step(from, to)) throw IllFormed("restriction must descend one level");
    LevelInfo info = level_info(to);
    F2Element out;
    for (auto& m : e.monomials()) {
        if (!m.poly_only()) throw IllFormed("Mackey structure covers the positive cone only");
        bool dead = false;
        for (int g : info.killed) dead = dead || m.e[g] != 0;
        if (!dead) out.toggle(m);
    }
    if (info.lead_x < 0) return out;
    // Reduce by the codomain relation, e.g. x2*y3 -> y2*x3 at the C2-level.
    F2Element reduced;
    std::vector<Monomial> work(out.monomials().begin(), out.monomials().end());
    while (!work.empty()) {
        Monomial m = work.back();
        work.pop_back();
        if (m.e[info.lead_x] >= 1 && m.e[info.lead_y] >= 1) {
            m.e[info.lead_x]--;
            m.e[info.lead_y]--;
            m.e[info.repl_y]++;
            m.e[info.repl_x]++;
            work.push_back(m);
        } else {
            reduced.toggle(m);
        }
    }
    return reduced;
}

F2Element mackey_transfer(MackeyLevel from, MackeyLevel to, const F2Element& e) {
    if (!valid_step(to, from)) throw IllFormed("transfer must ascend one level");
    e.degree();
    return F2Element{};
}

const char* mackey_level_name(MackeyLevel l) {
    switch (l) {
        case MackeyLevel::Top: return "K";
        case MackeyLevel::C2Level: return "C2";
        case MackeyLevel::DeltaLevel: return "Delta";
        case MackeyLevel::Sigma2Level: return "Sigma2";
        default: return "trivial";
    }
}

}  // namespace bredon
