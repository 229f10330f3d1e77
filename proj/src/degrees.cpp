#include "bredon/degrees.hpp"

#include <sstream>

namespace bredon {

namespace {
void append_term(std::ostringstream& os, int c, const char* sym, bool& first) {
    if (c == 0) return;
    if (!first && c > 0) os << "+";
    if (c == -1) os << "-";
    else if (c != 1) os << c;
    os << sym;
    first = false;
}
}  // namespace

std::string KleinDegree::str() const {
    std::ostringstream os;
    bool first = true;
    if (a != 0 || (p == 0 && b == 0 && q == 0)) {
        os << a;
        first = false;
    }
    append_term(os, p, "s", first);
    append_term(os, b, "e", first);
    append_term(os, q, "se", first);
    return os.str();
}

std::string MotivicBidegree::str() const {
    std::ostringstream os;
    os << "(" << a;
    if (p != 0) os << (p > 0 ? "+" : "") << p << "s";
    os << "," << b;
    if (q != 0) os << (q > 0 ? "+" : "") << q << "s";
    os << ")";
    return os.str();
}

const char* region_name(Region r) {
    switch (r) {
        case Region::ZeroRegion: return "ZeroRegion";
        case Region::TildeRegion: return "TildeRegion";
        case Region::PointRegion: return "PointRegion";
        default: return "BorelRegion";
    }
}

}  // namespace bredon
