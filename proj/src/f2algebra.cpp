#include "bredon/f2algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bredon {

namespace {

constexpr KleinDegree kGenDeg[6] = {
    {0, 1, 0, 0}, {-1, 1, 0, 0},  // x1, y1
    {0, 0, 1, 0}, {-1, 0, 1, 0},  // x2, y2
    {0, 0, 0, 1}, {-1, 0, 0, 1},  // x3, y3
};

KleinDegree theta_deg(int axis) {
    KleinDegree d{2, 0, 0, 0};
    (axis == 1 ? d.p : axis == 2 ? d.b : d.q) = -2;
    return d;
}

KleinDegree named_deg(Named n) {
    switch (n) {
        case Named::K1: return {-1, -1, 1, 1};
        case Named::K3: return {-1, 1, 1, -1};
        case Named::I1: return {1, 1, -1, -1};
        case Named::I2: return {1, -1, 1, -1};
        case Named::I3: return {1, -1, -1, 1};
        case Named::Th: return {3, -1, -1, -1};
        default: return {};
    }
}

const char* named_str(Named n) {
    switch (n) {
        case Named::K1: return "k1";
        case Named::K3: return "k3";
        case Named::I1: return "i1";
        case Named::I2: return "i2";
        case Named::I3: return "i3";
        case Named::Th: return "Th";
        default: return "";
    }
}

constexpr const char* kGenName[6] = {"x1", "y1", "x2", "y2", "x3", "y3"};

}  // namespace

KleinDegree Monomial::degree() const {
    KleinDegree d{};
    for (int i = 0; i < 6; ++i) d = d + e[i] * kGenDeg[i];
    if (theta != 0) {
        d = d + theta_deg(theta);
        d = d - tn * kGenDeg[2 * (theta - 1)];
        d = d - tm * kGenDeg[2 * (theta - 1) + 1];
    }
    if (named != Named::None) d = d + named_deg(named);
    if (k2 != 0) d = d + k2 * KleinDegree{-1, 1, -1, 1};
    return d;
}

Monomial Monomial::gen(GenIndex g, int exp) {
    Monomial m;
    m.e[g] = exp;
    return m;
}

Monomial Monomial::theta_div(int axis, int n, int m) {
    Monomial r;
    r.theta = axis;
    r.tn = n;
    r.tm = m;
    return r;
}

Monomial Monomial::special(Named n) {
    Monomial m;
    m.named = n;
    return m;
}

Monomial Monomial::kappa2(int exp) {
    Monomial m;
    m.k2 = exp;
    return m;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    if (named != Named::None) {
        sep();
        os << named_str(named);
    }
    if (k2 != 0) {
        sep();
        os << "k2";
        if (k2 != 1) os << "^" << k2;
    }
    if (theta != 0) {
        sep();
        os << "th" << theta;
        if (tn > 0 || tm > 0) {
            os << "/(";
            bool dfirst = true;
            if (tn > 0) {
                os << kGenName[2 * (theta - 1)];
                if (tn != 1) os << "^" << tn;
                dfirst = false;
            }
            if (tm > 0) {
                if (!dfirst) os << "*";
                os << kGenName[2 * (theta - 1) + 1];
                if (tm != 1) os << "^" << tm;
            }
            os << ")";
        }
    }
    for (int i = 0; i < 6; ++i) {
        if (e[i] == 0) continue;
        sep();
        os << kGenName[i];
        if (e[i] != 1) os << "^" << e[i];
    }
    if (first) os << "1";
    return os.str();
}

void F2Element::toggle(const Monomial& m) {
    auto [it, inserted] = mons_.insert(m);
    if (!inserted) mons_.erase(it);
}

F2Element operator+(const F2Element& u, const F2Element& v) {
    F2Element r = u;
    for (auto& m : v.mons_) r.toggle(m);
    return r;
}

std::optional<KleinDegree> F2Element::degree() const {
    if (mons_.empty()) return std::nullopt;
    KleinDegree d = mons_.begin()->degree();
    for (auto& m : mons_)
        if (m.degree() != d) throw IllFormed("inhomogeneous element: " + str());
    return d;
}

std::string F2Element::str() const {
    if (mons_.empty()) return "0";
    // Descending lexicographic on the exponent vector, so e.g. the relation
    // prints as "y1*x2*y3 + y1*y2*x3".
    std::vector<const Monomial*> order;
    for (auto& m : mons_) order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [](const Monomial* a, const Monomial* b) { return *b < *a; });
    std::string out;
    for (auto* m : order) {
        if (!out.empty()) out += " + ";
        out += m->str();
    }
    return out;
}

namespace {

int parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw IllFormed("expected integer in '" + s + "'");
    return std::stoi(s.substr(start, i - start));
}

// Splits on '*' at paren depth zero.
std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

void apply_poly_factor(Monomial& m, const std::string& tok, int only_axis = 0) {
    size_t i = 0;
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y') || !std::isdigit(static_cast<unsigned char>(tok[1])))
        throw IllFormed("bad generator '" + tok + "'");
    int axis = tok[1] - '0';
    if (axis < 1 || axis > 3) throw IllFormed("bad axis in '" + tok + "'");
    if (only_axis && axis != only_axis)
        throw IllFormed("theta denominator must stay on its axis: '" + tok + "'");
    int idx = 2 * (axis - 1) + (tok[0] == 'y' ? 1 : 0);
    i = 2;
    int exp = 1;
    if (i < tok.size() && tok[i] == '^') {
        ++i;
        exp = parse_int(tok, i);
    }
    if (i != tok.size()) throw IllFormed("trailing characters in '" + tok + "'");
    if (exp < 0) throw IllFormed("negative exponent on '" + tok + "'");
    m.e[idx] += exp;
}

Monomial parse_monomial(const std::string& text) {
    Monomial m;
    for (std::string raw : split_factors(text)) {
        std::string tok = strip(raw);
        if (tok.empty()) throw IllFormed("empty factor in '" + text + "'");
        if (tok == "1") continue;
        if (tok.rfind("th", 0) == 0) {
            if (m.theta != 0) throw IllFormed("two theta factors in '" + text + "'");
            if (tok.size() < 3 || tok[2] < '1' || tok[2] > '3')
                throw IllFormed("bad theta '" + tok + "'");
            m.theta = tok[2] - '0';
            std::string rest = tok.substr(3);
            if (!rest.empty()) {
                if (rest[0] != '/') throw IllFormed("bad theta factor '" + tok + "'");
                rest = rest.substr(1);
                if (!rest.empty() && rest.front() == '(') {
                    if (rest.back() != ')') throw IllFormed("unbalanced parens in '" + tok + "'");
                    rest = rest.substr(1, rest.size() - 2);
                }
                Monomial denom;
                for (std::string dtok : split_factors(rest))
                    apply_poly_factor(denom, strip(dtok), m.theta);
                m.tn = denom.e[2 * (m.theta - 1)];
                m.tm = denom.e[2 * (m.theta - 1) + 1];
            }
            continue;
        }
        if (tok[0] == 'k' || tok[0] == 'i' || tok == "Th" || tok.rfind("Th^", 0) == 0) {
            std::string name = tok;
            int exp = 1;
            size_t caret = tok.find('^');
            if (caret != std::string::npos) {
                name = tok.substr(0, caret);
                size_t i = caret + 1;
                exp = parse_int(tok, i);
                if (i != tok.size()) throw IllFormed("trailing characters in '" + tok + "'");
            }
            if (name == "k2") {
                m.k2 += exp;
                continue;
            }
            Named n = Named::None;
            if (name == "k1") n = Named::K1;
            else if (name == "k3") n = Named::K3;
            else if (name == "i1") n = Named::I1;
            else if (name == "i2") n = Named::I2;
            else if (name == "i3") n = Named::I3;
            else if (name == "Th") n = Named::Th;
            else throw IllFormed("unknown generator '" + name + "'");
            if (exp != 1 || m.named != Named::None)
                throw IllFormed("named classes carry exponent 1 only: '" + text + "'");
            m.named = n;
            continue;
        }
        apply_poly_factor(m, tok);
    }
    return m;
}

}  // namespace

F2Element F2Element::parse(const std::string& text) {
    F2Element out;
    std::string cur;
    std::vector<std::string> terms;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    for (auto& t : terms) {
        std::string s = strip(t);
        if (s.empty() || s == "0") continue;
        out.toggle(parse_monomial(s));
    }
    return out;
}

namespace {

bool lead_divisible(const Monomial& m) {
    return m.e[X1] >= 1 && m.e[Y2] >= 1 && m.e[Y3] >= 1;
}

}  // namespace

F2Element normal_form(const F2Element& e, Sector sector) {
    F2Element out;
    std::vector<Monomial> work(e.monomials().begin(), e.monomials().end());
    while (!work.empty()) {
        Monomial m = work.back();
        work.pop_back();
        if (sector == Sector::PositiveCone) {
            if (!m.poly_only())
                throw IllFormed("non-polynomial monomial in positive cone: " + m.str());
            if (lead_divisible(m)) {
                // x1*y2*y3 -> y1*x2*y3 + y1*y2*x3
                Monomial r = m;
                r.e[X1]--; r.e[Y2]--; r.e[Y3]--;
                Monomial t1 = r, t2 = r;
                t1.e[Y1]++; t1.e[X2]++; t1.e[Y3]++;
                t2.e[Y1]++; t2.e[Y2]++; t2.e[X3]++;
                work.push_back(t1);
                work.push_back(t2);
                continue;
            }
        } else {
            if (m.named != Named::None || m.theta == 1 || m.theta == 3)
                throw IllFormed("monomial outside E-sector: " + m.str());
            if (m.k2 >= 1 && m.e[Y2] >= 1) {
                Monomial r = m;
                r.k2--; r.e[Y2]--; r.e[Y1]++; r.e[Y3]++;
                work.push_back(r);
                continue;
            }
            if (m.k2 >= 1 && m.e[X2] >= 1) {
                Monomial r = m;
                r.k2--; r.e[X2]--;
                Monomial t1 = r, t2 = r;
                t1.e[X1]++; t1.e[Y3]++;
                t2.e[X3]++; t2.e[Y1]++;
                work.push_back(t1);
                work.push_back(t2);
                continue;
            }
        }
        out.toggle(m);
    }
    return out;
}

// --- Stong ring ---

F2Element StongElement::to_element() const {
    int axis = this->axis == Axis::Sigma ? 1 : this->axis == Axis::Eps ? 2 : 3;
    F2Element out;
    for (auto& [n, m] : poly) {
        Monomial mon;
        mon.e[2 * (axis - 1)] = n;
        mon.e[2 * (axis - 1) + 1] = m;
        out.toggle(mon);
    }
    for (auto& [n, m] : nc) out.toggle(Monomial::theta_div(axis, n, m));
    return out;
}

StongElement stong_mul(const StongElement& u, const StongElement& v) {
    if (u.axis != v.axis) throw IllFormed("stong_mul across axes");
    StongElement r;
    r.axis = u.axis;
    auto toggle = [](std::set<std::pair<int, int>>& s, std::pair<int, int> k) {
        auto [it, ins] = s.insert(k);
        if (!ins) s.erase(it);
    };
    for (auto& [n1, m1] : u.poly)
        for (auto& [n2, m2] : v.poly) toggle(r.poly, {n1 + n2, m1 + m2});
    auto mixed = [&](const std::set<std::pair<int, int>>& polys,
                     const std::set<std::pair<int, int>>& ncs) {
        for (auto& [a, b] : polys)
            for (auto& [n, m] : ncs)
                if (n >= a && m >= b) toggle(r.nc, {n - a, m - b});
    };
    mixed(u.poly, v.nc);
    mixed(v.poly, u.nc);
    // NC x NC = 0
    return r;
}

int stong_dim(Axis, int a, int s) {
    int d = 0;
    if (a <= 0 && s >= -a) ++d;  // x^{s+a} y^{-a}
    if (a >= 2 && s <= -a) ++d;  // theta / x^{-s-a} y^{a-2}
    return d;
}

std::optional<Monomial> stong_basis_monomial(Axis axis, int a, int s) {
    int ax = axis == Axis::Sigma ? 1 : axis == Axis::Eps ? 2 : 3;
    if (a <= 0 && s >= -a) {
        Monomial m;
        m.e[2 * (ax - 1)] = s + a;
        m.e[2 * (ax - 1) + 1] = -a;
        return m;
    }
    if (a >= 2 && s <= -a) return Monomial::theta_div(ax, -s - a, a - 2);
    return std::nullopt;
}

}  // namespace bredon
