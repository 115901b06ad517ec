#pragma once

#include <map>
#include <string>

#include "decat/ints.hpp"

namespace decat {

/// Laurent polynomial in q over Z, sparse map exponent -> coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Int& c) {  // NOLINT: implicit constant
        if (c != 0) c_[0] = c;
    }
    static LaurentPoly monomial(int exp, const Int& c = 1);

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Int>& terms() const { return c_; }
    Int coeff(int exp) const;

    void add_term(int exp, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    /// Exact division; throws if the remainder is nonzero.
    LaurentPoly divided_by(const LaurentPoly& d) const;

    /// q -> q^{-1}.
    LaurentPoly bar() const;
    /// Evaluate at q = 1.
    Int at_one() const;

    std::string str() const;

private:
    std::map<int, Int> c_;
};

/// Quantum integer [k] = (q^k - q^{-k})/(q - q^{-1}); [0] = 0, [-k] = -[k].
LaurentPoly qint(int k);
/// [j]! for j >= 0.
LaurentPoly qfact(int j);
/// Gaussian binomial via the product formula [m][m-1]...[m-j+1]/[j]!;
/// defined for every integer m and j >= 0.
LaurentPoly gauss_binom(int m, int j);

}  // namespace decat
