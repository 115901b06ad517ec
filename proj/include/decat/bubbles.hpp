#pragma once

#include <vector>

#include "decat/sym.hpp"

namespace decat {
namespace bub {

/// Element of the center End(1_n), stored in b+ coordinates as a symmetric
/// function; the s_tau term sits in degree 2|tau|.
struct CenterElement {
    int n = 0;
    SymElement value;

    bool operator==(const CenterElement& o) const { return n == o.n && value == o.value; }
};

/// b+(x): stores x verbatim.
CenterElement b_plus(const SymElement& x, int n);
/// b-(x) = b+(S(x)), the antipode image in b+ coordinates.
CenterElement b_minus(const SymElement& x, int n);

/// Counterclockwise bubble values of degrees 0..2D obtained by inverting the
/// clockwise generating series sum_j b+(h_j) t^j term by term; entry m is the
/// degree-2m coefficient.
std::vector<CenterElement> fake_bubble_series(int n, int D);

/// sum_{l=0}^{m} (-1)^{m-l} l h_l e_{m-l} in the Schur basis; equals p_m.
SymElement commutator_identity(int m);

}  // namespace bub
}  // namespace decat
