#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "decat/ints.hpp"
#include "decat/partition.hpp"

namespace decat {
namespace vp {

/// Generator of the presented category V(n,m): thin cup t_j, thin cap u_j,
/// Schur decorations d_lambda (F strand), d'_lambda (E strand), bubble b_lambda.
struct VGen {
    enum class Kind { T = 0, D = 1, Dp = 2, U = 3, B = 4 };
    Kind kind;
    int dots = 0;   // T/U only
    Partition lam;  // D/Dp/B only

    auto operator<=>(const VGen&) const = default;
    std::string str() const;
};

using VWord = std::vector<VGen>;  // leftmost applied last; source object kept by the element

/// Linear combination of composable words at a fixed source object (b0,a0) in
/// the hom-category V(n,m); all words share the source.
class VElement {
public:
    VElement() = default;
    VElement(int n, int m, int b0, int a0);

    int n() const { return n_; }
    int m() const { return m_; }
    int source_b() const { return b0_; }
    int source_a() const { return a0_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<VWord, Int>& terms() const { return terms_; }

    /// Adds c*word, applying the vanishing rules (decoration too long for its
    /// strand, cap on zero thickness); invalid words are dropped as zero.
    void add_word(const VWord& w, const Int& c);

    VElement& operator+=(const VElement& o);
    friend VElement operator+(VElement a, const VElement& b) { return a += b; }
    VElement operator-() const;
    friend VElement operator-(VElement a, const VElement& b) { return a += -b; }
    bool operator==(const VElement& o) const;

    std::string str() const;

private:
    int n_ = 0, m_ = 0, b0_ = 0, a0_ = 0;
    std::map<VWord, Int> terms_;
};

enum class Strategy { LeftmostFirst, RightmostFirst };

/// The element c~_k at object (b,a): sum_{i+i'+i''=k} (-1)^{i'}
/// d_{(1^{i'})} d'_{(i'')} b_{(i)} (canonically ordered); zero for k < 0.
VElement c_tilde(int k, int n, int m, int b, int a);

/// Rewrites to the normal-form span B(n,a,b,delta): t-run, d, d', u-run, b.
VElement normal_form(const VElement& x, Strategy strategy = Strategy::LeftmostFirst);

/// Degree of a generator at ambient weights (n,m): t_j,u_j have degree
/// 1+(n+m)/2+2j, decorations 2|lambda|.
int gen_degree(const VGen& g, int n, int m);
int word_degree(const VWord& w, int n, int m);

/// Is w a normal-form word (shape t_nu d_mu d'_lam u_sigma b_tau)?
bool is_normal_word(const VWord& w);

/// Degree-indexed counts of the normal-form set B(n,a,b,delta) up to Dmax,
/// degrees summed along the word from the V-side generator degrees.
std::map<int, long> enumerate_forms(int n, int a, int b, int delta, int Dmax);
/// Degree-indexed counts of the f-basis B+(n,a,b,delta) (resp. g-basis B-)
/// up to Dmax, degrees from the closed thick-calculus formula
/// +-(i+j)(n+m)/2 + i^2 + j^2 + 2(sum of partition sizes).
std::map<int, long> enumerate_Bplus(int n, int a, int b, int delta, int Dmax);
std::map<int, long> enumerate_Bminus(int n, int a, int b, int delta, int Dmax);

}  // namespace vp
}  // namespace decat
