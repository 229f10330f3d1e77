#ifndef BREDON_MOTIVIC_HPP
#define BREDON_MOTIVIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "bredon/spaces.hpp"

namespace bredon {

enum class RealizationStatus { Iso, Mono, MonoNotEpi, ZeroDomain };
const char* status_name(RealizationStatus s);

struct MotivicGroup {
    MotivicBidegree bidegree;
    Region region = Region::PointRegion;
    long dimension = 0;
    std::optional<std::vector<std::string>> basis;
    RealizationStatus raw = RealizationStatus::Iso;
    RealizationStatus refined = RealizationStatus::Iso;
    long codomain_dimension = 0;  // dim_point at the realized degree
    bool nilpotent_sector = false;  // Borel only: every basis monomial is theta1-divided
};

// Bredon motivic cohomology of Spec R at a bidegree, dispatched by region.
MotivicGroup motivic_group_R(MotivicBidegree d);

// Borel motivic cohomology H(EC2): zero for b+q<0, else the point group at
// the shifted degree (a-2b, p-q+b, 0, b+q), with basis carried back along
// multiplication by kappa2^{-b}.
MotivicGroup borel_group(MotivicBidegree d);

// (raw theorem-level status, dimension-refined status) of the realization
// map at d.  Refinement upgrades Mono to Iso/MonoNotEpi by comparing
// dimensions, which is legitimate for an injective map of Z/2-spaces.
std::pair<RealizationStatus, RealizationStatus> realization_status(MotivicBidegree d);

// --- NC module of the b+q<0, b>=1 range (suspension-monomial alphabet) ---

// x1^u * x3^v * x2^n * y2^m * Sigma(b^p * c)   (ctype)
// x1^u * x3^v * x2^n * y2^m * Sigma(b^p)       (!ctype, p >= 1)
struct NCGen {
    bool ctype = true;
    int n = 0, m = 0, p = 0;
    int u = 0, v = 0;  // x1 and x3 exponents, any sign

    auto operator<=>(const NCGen&) const = default;
    std::string str() const;
};
using NCElement = std::vector<NCGen>;  // kept sorted, F2 coefficients

// Action of a sigma-axis Stong element: theta1-divided coefficients
// annihilate, x1 acts freely, y1 acts through the suspension rewrite.
NCElement nc_module_action(const StongElement& coeff, const NCGen& gen);

struct DecompositionRow {
    MotivicBidegree d;
    long dimension = 0;
    bool in_r_summand = false;  // else NC
};

// Tags every nonzero group in the window as (R,kappa2) or NC.
std::vector<DecompositionRow> decomposition_R(int amin, int amax, int pmin, int pmax,
                                              int bmin, int bmax, int qmin, int qmax);

// Weight-plane chart; cell (b,q)=(-1,1) is marked 'k' (kappa2).
// with_dims annotates each cell with the dimension at the given (a, p).
std::string render_region_map_ascii(int bmin, int bmax, int qmin, int qmax,
                                    bool with_dims = false, int a = 0, int p = 0);
std::string render_region_map_svg(int bmin, int bmax, int qmin, int qmax);

}  // namespace bredon

#endif
