#ifndef BREDON_VERIFY_HPP
#define BREDON_VERIFY_HPP

#include <string>
#include <vector>

namespace bredon {

struct CheckReport {
    std::string name;
    std::string window;
    long pass = 0;
    long fail = 0;
    std::vector<std::string> counterexamples;  // "degree: got=…, want=…"

    bool ok() const { return fail == 0; }
};

// 2q-shift weight decomposition: dim at ((a,2q),(b,q)) equals the sum of
// ordinary motivic dimensions over the column, b,q >= 0.
CheckReport check_theorem_2q(int amin, int amax, int bmax, int qmax);

// dim E = dim pt + dim Etilde(a+1) on the sector p,q >= 0; the three
// dimensions come from independent enumerations.
CheckReport check_split_ses(int amax_abs, int pmax, int bmax_abs, int qmax);

// Basis cardinality equals the Poincare-series coefficient on every
// basis-bearing sector, exponents bounded by `bound`.
CheckReport check_series_vs_basis(int bound);

// Replays the known printed dimension and realization-status values.
CheckReport check_remark_examples();

std::vector<CheckReport> run_all_checks();

}  // namespace bredon

#endif
