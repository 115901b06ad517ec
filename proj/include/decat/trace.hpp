#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "decat/current.hpp"
#include "decat/sym.hpp"

namespace decat {
namespace tr {

/// Triangular basis word Fhat^(b)_mu b+(tau) Ehat^(a)_lam 1_n.
struct TraceWord {
    int b = 0;
    Partition mu;   // in P(b)
    Partition tau;  // bubble part, any partition
    int a = 0;
    Partition lam;  // in P(a)
    int n = 0;      // source weight

    int target() const { return n + 2 * (a - b); }
    int degree() const { return 2 * (lam.size() + mu.size() + tau.size()); }
    bool valid() const {
        return a >= 0 && b >= 0 && lam.fits_rows(a) && mu.fits_rows(b);
    }

    auto operator<=>(const TraceWord&) const = default;
    std::string str() const;
};

/// Integer combination of triangular basis words at fixed (source, target).
class TraceElement {
public:
    TraceElement() = default;
    TraceElement(int src, int tgt) : src_(src), tgt_(tgt) {}

    static TraceElement unit(int n);
    static TraceElement E_hat(int a, const Partition& lam, int n);
    static TraceElement F_hat(int b, const Partition& mu, int n);
    /// sum_tau x_tau b+(tau) 1_n.
    static TraceElement bubble_plus(const SymElement& x, int n);
    /// b-(x) 1_n = b+(S(x)) 1_n.
    static TraceElement bubble_minus(const SymElement& x, int n);
    static TraceElement word(const TraceWord& w, const Int& c = 1);

    int source() const { return src_; }
    int target() const { return tgt_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TraceWord, Int>& terms() const { return terms_; }
    Int coeff(const TraceWord& w) const;

    void add_term(const TraceWord& w, const Int& c);

    TraceElement& operator+=(const TraceElement& o);
    friend TraceElement operator+(TraceElement a, const TraceElement& b) { return a += b; }
    TraceElement operator-() const;
    friend TraceElement operator-(TraceElement a, const TraceElement& b) { return a += -b; }
    bool operator==(const TraceElement& o) const;

    std::string str() const;

private:
    int src_ = 0, tgt_ = 0;
    std::map<TraceWord, Int> terms_;
};

/// Element of the plus part at fixed thickness a and source weight n:
/// integer combination of Ehat^(a)_lam 1_n, lambda in P(a).
struct PlusElement {
    int a = 0;
    int n = 0;
    std::map<Partition, Int> coeffs;

    int target() const { return n + 2 * a; }
    static PlusElement make(int a, const Partition& lam, int n);
    void add_term(const Partition& lam, const Int& c);
    bool operator==(const PlusElement& o) const = default;
    std::string str() const;
};

/// Composition in the plus part by the wedge-product formula:
/// Ehat^(a)_x o Ehat^(b)_y = sum_{tau in P(a,b)} (-1)^{|tau-hat|}
/// Ehat^(a+b)(wedge_{a,b}(x s_tau, s_{tau-hat} y)).
PlusElement compose_plus(const PlusElement& x, const PlusElement& y);

/// Rectangle sequence (l_1,a_1) ... (l_p,a_p) with l_1 > ... > l_p >= 0; stands
/// for the composite Ehat^(a_1)_{l_1^{a_1}} o ... o Ehat^(a_p)_{l_p^{a_p}}.
using RectSeq = std::vector<std::pair<int, int>>;

/// Unitriangular change of basis Ehat^(a)_lam = sum over rectangle sequences
/// (memoized; weight-independent integer coefficients).
const std::map<RectSeq, Int>& rect_decompose(int a, const Partition& lam);
/// Expands a rectangle product in the {Ehat^(a)_lam} basis.
PlusElement rect_recompose(const RectSeq& seq, int n);
/// Coefficients of rect_recompose (weight-free).
std::map<Partition, Int> rect_expand(const RectSeq& seq);

/// Mutually inverse linear isomorphisms with the Garland basis:
/// rectangles to divided powers on both sides, b+(tau) <-> (-1)^{|tau|} phi(s_{tau^t}).
cur::GarlandElement to_current(const TraceElement& x);
TraceElement from_current(const cur::GarlandElement& y);

/// Full composition, transported through the current algebra.
TraceElement compose(const TraceElement& x, const TraceElement& y);

/// Change of basis to the E-before-F triangular basis Ehat^(a)_lam b+(tau)
/// Fhat^(b)_mu 1_n; the returned words reuse TraceWord with that order
/// understood. The F-before-E form remains the storage basis.
std::map<TraceWord, Int> to_ef_basis(const TraceElement& x);

/// Number of triangular basis words of degree 2d from n to m with F-thickness
/// at most bmax; zero for d < 0.
long graded_dim(int n, int m, int d, int bmax);
/// Plus-part graded dimension at (n, n+2a): partitions of d with at most a parts.
long plus_graded_dim(int a, int d);

TraceElement from_plus(const PlusElement& p);

}  // namespace tr
}  // namespace decat
