#ifndef BREDON_LAURENT_HPP
#define BREDON_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace bredon {

// Finitely supported Laurent polynomial in one variable with non-negative
// integer coefficients (they count dimensions).
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, mpz_class> coeffs);

    // sum_{t=lo}^{hi} x^t; empty range gives the zero polynomial.
    static LaurentPoly geometric(int lo, int hi);
    static LaurentPoly one() { return geometric(0, 0); }

    const std::map<int, mpz_class>& coefficients() const { return c_; }
    mpz_class coeff(int t) const;
    bool is_zero() const { return c_.empty(); }

    LaurentPoly shifted(int s) const;
    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;

  private:
    std::map<int, mpz_class> c_;  // exponent -> nonzero coefficient
};

}  // namespace bredon

#endif
