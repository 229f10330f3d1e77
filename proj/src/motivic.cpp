#include "bredon/motivic.hpp"

#include <algorithm>
#include <sstream>

#include "bredon/series.hpp"

namespace bredon {

const char* status_name(RealizationStatus s) {
    switch (s) {
        case RealizationStatus::Iso: return "Iso";
        case RealizationStatus::Mono: return "Mono";
        case RealizationStatus::MonoNotEpi: return "MonoNotEpi";
        default: return "ZeroDomain";
    }
}

std::string NCGen::str() const {
    std::ostringstream os;
    auto emit = [&](const char* name, int exp) {
        if (exp == 0) return;
        os << name;
        if (exp != 1) os << "^" << exp;
        os << "*";
    };
    emit("x1", u);
    emit("x3", v);
    emit("x2", n);
    emit("y2", m);
    os << "Sigma(";
    if (p > 0) {
        os << "b";
        if (p > 1) os << "^" << p;
        if (ctype) os << "*";
    }
    if (ctype) os << "c";
    os << ")";
    return os.str();
}

namespace {

// Generators of the NC summand at bidegree ((a,p),(b,q)), b>=1, b+q<0.
// The x3 exponent is pinned to q and the x1 exponent to p-q; the Sigma
// exponent ranges over an interval in each of the two shapes.
std::vector<NCGen> tilde_basis(MotivicBidegree d) {
    std::vector<NCGen> out;
    int u = d.p - d.q, v = d.q;
    for (int pc = std::max(0, d.a - d.b - 1); 2 * pc <= d.a - 2; ++pc)
        out.push_back({true, d.a - 2 * pc - 2, d.b + 1 - d.a + pc, pc, u, v});
    for (int pp = std::max(1, d.a - d.b - 1); 2 * pp <= d.a - 1; ++pp)
        out.push_back({false, d.a - 2 * pp - 1, d.b + 1 - d.a + pp, pp, u, v});
    return out;
}

long tilde_dim(MotivicBidegree d) { return static_cast<long>(tilde_basis(d).size()); }

void attach_status(MotivicGroup& g) {
    MotivicBidegree d = g.bidegree;
    g.codomain_dimension = dim_point(realize(d));
    switch (g.region) {
        case Region::PointRegion:
            g.raw = g.refined = RealizationStatus::Iso;
            break;
        case Region::BorelRegion:
            if (d.a <= 2 * d.b + 2) {
                g.raw = g.refined = RealizationStatus::Iso;
            } else {
                g.raw = RealizationStatus::Mono;
                g.refined = g.dimension == g.codomain_dimension
                                ? RealizationStatus::Iso
                                : RealizationStatus::MonoNotEpi;
            }
            break;
        case Region::TildeRegion:
            if (d.a > 2 * d.b + 1 || d.a <= 1 || d.b <= 0) {
                g.raw = g.refined = RealizationStatus::ZeroDomain;
            } else {
                g.raw = RealizationStatus::Mono;
                g.refined = g.dimension == g.codomain_dimension
                                ? RealizationStatus::Iso
                                : RealizationStatus::MonoNotEpi;
            }
            break;
        default:
            g.raw = g.refined = RealizationStatus::ZeroDomain;
    }
}

}  // namespace

MotivicGroup borel_group(MotivicBidegree d) {
    MotivicGroup g;
    g.bidegree = d;
    g.region = region_of(d);
    if (d.b + d.q < 0) return g;  // zero above the Borel range
    KleinDegree shifted{d.a - 2 * d.b, d.p - d.q + d.b, 0, d.b + d.q};
    GroupDescriptor pt = group_at(shifted);
    g.dimension = pt.dimension;
    if (pt.basis) {
        std::vector<std::string> basis;
        std::string prefix;
        if (d.b != 0) prefix = Monomial::kappa2(-d.b).str() + "*";
        bool all_divided = true;
        for (auto& mono : *pt.basis) {
            basis.push_back(mono == "1" && !prefix.empty()
                                ? prefix.substr(0, prefix.size() - 1)
                                : prefix + mono);
            all_divided = all_divided && mono.find("th1") != std::string::npos;
        }
        g.nilpotent_sector = g.dimension > 0 && all_divided;
        g.basis = std::move(basis);
    }
    attach_status(g);
    return g;
}

MotivicGroup motivic_group_R(MotivicBidegree d) {
    Region r = region_of(d);
    if (r == Region::BorelRegion) return borel_group(d);
    MotivicGroup g;
    g.bidegree = d;
    g.region = r;
    switch (r) {
        case Region::ZeroRegion:
            break;
        case Region::TildeRegion: {
            std::vector<std::string> basis;
            for (auto& gen : tilde_basis(d)) basis.push_back(gen.str());
            g.dimension = static_cast<long>(basis.size());
            g.basis = std::move(basis);
            break;
        }
        default: {  // PointRegion: realization is an isomorphism
            GroupDescriptor pt = group_at(realize(d));
            g.dimension = pt.dimension;
            g.basis = std::move(pt.basis);
        }
    }
    attach_status(g);
    return g;
}

std::pair<RealizationStatus, RealizationStatus> realization_status(MotivicBidegree d) {
    MotivicGroup g = motivic_group_R(d);
    return {g.raw, g.refined};
}

NCElement nc_module_action(const StongElement& coeff, const NCGen& gen) {
    if (coeff.axis != Axis::Sigma)
        throw IllFormed("NC module action takes sigma-axis coefficients");
    if (gen.n < 0 || gen.m < 0 || gen.p < 0 || (!gen.ctype && gen.p < 1))
        throw IllFormed("generator outside the NC alphabet");
    auto toggle = [](NCElement& el, const NCGen& g) {
        auto it = std::lower_bound(el.begin(), el.end(), g);
        if (it != el.end() && *it == g) el.erase(it);
        else el.insert(it, g);
    };
    // theta1-divided coefficients annihilate the whole module, so only the
    // polynomial part of the coefficient contributes.
    NCElement acc;
    for (auto& [n1, m1] : coeff.poly) {
        // y1 acts m1 times through the suspension rewrite, then x1^n1 freely.
        NCElement cur{gen};
        for (int step = 0; step < m1; ++step) {
            NCElement next;
            for (auto g : cur) {
                if (g.ctype) {
                    if (g.p == 0) continue;  // y1 kills the shape Sigma(c)
                    NCGen t1 = g;
                    t1.n++; t1.p--; t1.u++;
                    toggle(next, t1);
                    NCGen t2 = g;
                    t2.ctype = false; t2.m++; t2.u++;
                    toggle(next, t2);
                } else {
                    NCGen t = g;
                    t.ctype = true; t.p--; t.u++;
                    toggle(next, t);
                }
            }
            cur = std::move(next);
        }
        for (auto g : cur) {
            g.u += n1;
            toggle(acc, g);
        }
    }
    return acc;
}

std::vector<DecompositionRow> decomposition_R(int amin, int amax, int pmin, int pmax,
                                              int bmin, int bmax, int qmin, int qmax) {
    std::vector<DecompositionRow> rows;
    for (int a = amin; a <= amax; ++a)
        for (int p = pmin; p <= pmax; ++p)
            for (int b = bmin; b <= bmax; ++b)
                for (int q = qmin; q <= qmax; ++q) {
                    MotivicBidegree d{a, p, b, q};
                    long dim = motivic_group_R(d).dimension;
                    if (dim == 0) continue;
                    rows.push_back({d, dim, d.b + d.q >= 0});
                }
    return rows;
}

std::string render_region_map_ascii(int bmin, int bmax, int qmin, int qmax,
                                    bool with_dims, int a, int p) {
    std::ostringstream os;
    os << "weight plane (b horizontal, q vertical): P=point B=borel T=tilde "
          "Z=zero k=kappa2\n";
    for (int q = qmax; q >= qmin; --q) {
        os << "q=";
        os.width(3);
        os << q << " |";
        for (int b = bmin; b <= bmax; ++b) {
            MotivicBidegree d{a, p, b, q};
            char c;
            switch (region_of(d)) {
                case Region::ZeroRegion: c = 'Z'; break;
                case Region::TildeRegion: c = 'T'; break;
                case Region::PointRegion: c = 'P'; break;
                default: c = 'B';
            }
            if (b == -1 && q == 1) c = 'k';
            os << ' ' << c;
            if (with_dims) {
                long dim = motivic_group_R(d).dimension;
                os << (dim > 9 ? '+' : static_cast<char>('0' + dim));
            }
        }
        os << "\n";
    }
    os << "      +";
    for (int b = bmin; b <= bmax; ++b) os << (with_dims ? "---" : "--");
    os << "\n       ";
    for (int b = bmin; b <= bmax; ++b) {
        std::string label = std::to_string(b);
        os << ' ' << (b == 0 ? "0" : label.substr(label.size() - 1));
        if (with_dims) os << ' ';
    }
    os << "  (b from " << bmin << " to " << bmax << ")\n";
    return os.str();
}

std::string render_region_map_svg(int bmin, int bmax, int qmin, int qmax) {
    const int cell = 24, margin = 40;
    int w = (bmax - bmin + 1) * cell + 2 * margin;
    int h = (qmax - qmin + 1) * cell + 2 * margin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
       << h << "\">\n";
    for (int q = qmin; q <= qmax; ++q)
        for (int b = bmin; b <= bmax; ++b) {
            const char* fill;
            switch (region_of({0, 0, b, q})) {
                case Region::ZeroRegion: fill = "#dddddd"; break;
                case Region::TildeRegion: fill = "#9ecae1"; break;
                case Region::PointRegion: fill = "#a1d99b"; break;
                default: fill = "#fdae6b";
            }
            int x = margin + (b - bmin) * cell;
            int y = margin + (qmax - q) * cell;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
               << "\" height=\"" << cell << "\" fill=\"" << fill
               << "\" stroke=\"white\"/>\n";
            if (b == -1 && q == 1)
                os << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
                   << "\" text-anchor=\"middle\" font-size=\"12\">k2</text>\n";
        }
    os << "<text x=\"" << w / 2 << "\" y=\"" << h - 10
       << "\" text-anchor=\"middle\" font-size=\"12\">b</text>\n";
    os << "<text x=\"12\" y=\"" << h / 2 << "\" font-size=\"12\">q</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace bredon
