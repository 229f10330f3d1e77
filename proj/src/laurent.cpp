#include "bredon/laurent.hpp"

#include <sstream>

namespace bredon {

LaurentPoly::LaurentPoly(std::map<int, mpz_class> coeffs) : c_(std::move(coeffs)) {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::geometric(int lo, int hi) {
    LaurentPoly r;
    for (int t = lo; t <= hi; ++t) r.c_[t] = 1;
    return r;
}

mpz_class LaurentPoly::coeff(int t) const {
    auto it = c_.find(t);
    return it == c_.end() ? mpz_class(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly r;
    for (auto& [t, v] : c_) r.c_[t + s] = v;
    return r;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r = f;
    for (auto& [t, v] : g.c_) {
        auto& c = r.c_[t];
        c += v;
        if (c == 0) r.c_.erase(t);
    }
    return r;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r;
    for (auto& [s, u] : f.c_)
        for (auto& [t, v] : g.c_) {
            auto& c = r.c_[s + t];
            c += u * v;
        }
    for (auto it = r.c_.begin(); it != r.c_.end();)
        it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
    return r;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [t, v] : c_) {
        if (!first) os << " + ";
        first = false;
        if (v != 1 || t == 0) os << v.get_str();
        if (v != 1 && t != 0) os << "*";
        if (t == 1) os << "x";
        else if (t != 0) os << "x^" << t;
    }
    return os.str();
}

}  // namespace bredon
