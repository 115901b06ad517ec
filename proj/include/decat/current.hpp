#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "decat/sym.hpp"

namespace decat {
namespace cur {

/// Divided power X_i^(a) of a loop generator: loop index i >= 0, power a >= 1.
struct DividedPower {
    int index = 0;
    int power = 1;
    auto operator<=>(const DividedPower&) const = default;
};

/// Garland basis word 1_m F_{i_1}^{(a_1)} ... phi(s_tau) E_{k_1}^{(c_1)} ... 1_n
/// with loop indices strictly decreasing within each block.
struct GarlandWord {
    std::vector<DividedPower> f;  // strictly decreasing indices
    Partition tau;
    std::vector<DividedPower> e;  // strictly decreasing indices
    int n = 0;                    // source weight

    int e_weight() const;         // sum of E powers
    int f_weight() const;         // sum of F powers
    int target() const { return n + 2 * (e_weight() - f_weight()); }
    int loop_degree() const;      // sum i*a + |tau| + sum k*c
    bool valid() const;

    auto operator<=>(const GarlandWord&) const = default;
    std::string str() const;
};

/// Integer combination of Garland words with fixed source and target weights.
class GarlandElement {
public:
    GarlandElement() = default;
    GarlandElement(int src, int tgt) : src_(src), tgt_(tgt) {}

    static GarlandElement unit(int n);
    static GarlandElement gen_E(int index, int power, int n);  // E_i^(a) 1_n
    static GarlandElement gen_F(int index, int power, int n);  // F_i^(a) 1_n
    static GarlandElement word(const GarlandWord& w, const Int& c = 1);
    /// phi(x) 1_n for x a symmetric function (expanded in the phi(s_tau) basis).
    static GarlandElement phi_of(const SymElement& x, int n);

    int source() const { return src_; }
    int target() const { return tgt_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<GarlandWord, Int>& terms() const { return terms_; }
    Int coeff(const GarlandWord& w) const;

    void add_term(const GarlandWord& w, const Int& c);

    GarlandElement& operator+=(const GarlandElement& o);
    friend GarlandElement operator+(GarlandElement a, const GarlandElement& b) { return a += b; }
    GarlandElement operator-() const;
    friend GarlandElement operator-(GarlandElement a, const GarlandElement& b) {
        return a += -b;
    }
    bool operator==(const GarlandElement& o) const;

    std::string str() const;

private:
    int src_ = 0, tgt_ = 0;
    std::map<GarlandWord, Int> terms_;
};

/// Plain (non-divided) generator for normal_form input words.
struct QGen {
    enum class Kind { F = 0, H = 1, E = 2 };
    Kind kind;
    int index = 0;  // loop index, >= 0
    auto operator<=>(const QGen&) const = default;
};

/// Straightens a word of plain generators applied to 1_n into the integral
/// Garland basis: PBW order F < H < E over exact rationals, H_0 replaced by
/// the local weight, H-block converted to phi(s_tau) coordinates, and powers
/// regrouped into divided powers. Throws if the result is not integral.
GarlandElement normal_form(const std::vector<QGen>& word, int n);

/// Same, for a rational combination of generator words.
GarlandElement normal_form(const std::map<std::vector<QGen>, Rat>& words, int n);

/// Product of Garland elements (bilinear word concatenation + normal form).
GarlandElement mul(const GarlandElement& x, const GarlandElement& y);

/// phi: coordinates of x in the power-sum basis, i.e. x = sum c_mu p_mu gives
/// phi(x) = sum c_mu H_mu (H_mu = H_{mu_1} H_{mu_2} ...).
std::map<Partition, Rat> phi(const SymElement& x);
/// phi^{-1} of an integral combination of H-monomials (indices >= 1).
SymElement phi_inv(const std::map<Partition, Int>& hmono);

/// The automorphism Phi: E_i <-> F_i, H_i -> -H_i; negates weights.
GarlandElement apply_Phi(const GarlandElement& x);

/// Expansion in the mirrored integral basis 1_m E...phi(s_tau) F...1_n with
/// the E-block leftmost; returned words keep the E-block in `e` and the
/// F-block in `f`, the mirrored product order being understood.
std::map<GarlandWord, Int> ef_expansion(const GarlandElement& x);

/// All Garland words with source n, target m, loop degree <= D and F-side
/// total divided-power weight at most bmax.
std::vector<GarlandWord> enumerate_basis(int n, int m, int D, int bmax = 0);

}  // namespace cur
}  // namespace decat
