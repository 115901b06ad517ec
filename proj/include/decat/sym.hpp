#pragma once

#include <map>
#include <optional>
#include <vector>

#include "decat/ints.hpp"
#include "decat/partition.hpp"

namespace decat {

/// Element of the ring of symmetric functions in the Schur basis: a finite
/// integer linear combination of s_lambda.  An optional variable bound a
/// restricts support to partitions with at most a parts (the ring Sym_a);
/// bound -1 means the inverse-limit ring Sym.
class SymElement {
public:
    SymElement() = default;
    explicit SymElement(int bound) : bound_(bound) {}

    static SymElement zero(int bound = -1) { return SymElement(bound); }
    static SymElement one(int bound = -1);
    static SymElement schur(const Partition& lam, int bound = -1);

    int bound() const { return bound_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Partition, Int>& terms() const { return coeffs_; }
    Int coeff(const Partition& lam) const;

    void add_term(const Partition& lam, const Int& c);  // drops terms beyond bound

    SymElement& operator+=(const SymElement& o);
    SymElement& operator-=(const SymElement& o);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    friend SymElement operator*(const Int& c, const SymElement& x);
    friend SymElement operator*(const SymElement& x, const SymElement& y);
    SymElement operator-() const { return Int(-1) * *this; }
    bool operator==(const SymElement& o) const { return coeffs_ == o.coeffs_; }

    /// Drops every term with more than a parts and tightens the bound to a.
    SymElement truncate(int a) const;
    /// Same support, bound erased (viewed in Sym).
    SymElement unbounded() const;

    /// Hopf antipode S(s_lambda) = (-1)^{|lambda|} s_{lambda^t}; a ring map.
    SymElement antipode() const;
    /// omega(s_lambda) = s_{lambda^t}; a ring involution.
    SymElement omega() const;

    bool is_homogeneous() const;
    int degree() const;  // max |lambda| over support; -1 for zero
    SymElement homogeneous_part(int d) const;

    std::string str() const;

private:
    std::map<Partition, Int> coeffs_;
    int bound_ = -1;
};

/// Littlewood-Richardson product of two Schur functions in Sym (memoized).
const SymElement& mul_schur(const Partition& lam, const Partition& mu);

/// Pieri rules: all mu obtained from lambda by adding a horizontal
/// (resp. vertical) strip of r boxes.
std::vector<Partition> pieri_h(const Partition& lam, int r);
std::vector<Partition> pieri_e(const Partition& lam, int r);

/// Generator symbols for to_schur words: e_j, h_j, p_t, and e_{t,j}.
struct SymGen {
    enum class Kind { E, H, P, ETJ };
    Kind kind;
    int j = 0;  // index (for ETJ: the subscript j)
    int t = 0;  // ETJ only
};

SymElement gen_expansion(const SymGen& g);
SymElement to_schur(const std::vector<SymGen>& word);

inline SymGen gen_e(int j) { return {SymGen::Kind::E, j, 0}; }
inline SymGen gen_h(int j) { return {SymGen::Kind::H, j, 0}; }
inline SymGen gen_p(int t) { return {SymGen::Kind::P, t, 0}; }
inline SymGen gen_etj(int t, int j) { return {SymGen::Kind::ETJ, j, t}; }

/// Schur expansion of the power-sum monomial p_mu = p_{mu_1} p_{mu_2} ...
/// (all parts >= 1); integer coefficients.
const SymElement& p_monomial_schur(const Partition& mu);

/// Expansion of x in the power-sum basis, x = sum c_mu p_mu, over Q.
std::map<Partition, Rat> p_expand(const SymElement& x);

/// The three box duals of lambda in P(a,b): conjugate, complement, hat.
struct BoxDuals {
    Partition conjugate, complement, hat;
};
BoxDuals box_duals(const Partition& lam, int a, int b);

/// Wedge product Sym_a x Sym_b -> Sym_{a+b},
/// s_lambda ^ s_mu = s_{(lambda-b) cup mu} (straightened).
SymElement wedge(int a, int b, const SymElement& x, const SymElement& y);

}  // namespace decat
