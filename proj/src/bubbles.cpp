#include "decat/bubbles.hpp"

#include <stdexcept>

namespace decat {
namespace bub {

CenterElement b_plus(const SymElement& x, int n) { return {n, x.unbounded()}; }

CenterElement b_minus(const SymElement& x, int n) { return {n, x.antipode()}; }

std::vector<CenterElement> fake_bubble_series(int n, int D) {
    if (D < 0) throw std::invalid_argument("fake_bubble_series: D must be nonnegative");
    // (sum_j h_j t^j)(sum_m c_m t^m) = 1  =>  c_0 = 1, c_m = -sum_{i=1}^m h_i c_{m-i}
    std::vector<SymElement> c(static_cast<size_t>(D) + 1);
    c[0] = SymElement::one();
    for (int m = 1; m <= D; ++m) {
        SymElement s;
        for (int i = 1; i <= m; ++i)
            s += gen_expansion(gen_h(i)) * c[static_cast<size_t>(m - i)];
        c[static_cast<size_t>(m)] = -s;
    }
    std::vector<CenterElement> out;
    out.reserve(c.size());
    for (auto& v : c) out.push_back({n, std::move(v)});
    return out;
}

SymElement commutator_identity(int m) {
    if (m <= 0) throw std::invalid_argument("commutator_identity: m must be positive");
    SymElement r;
    for (int l = 0; l <= m; ++l) {
        if (l == 0) continue;  // factor l
        SymElement term = gen_expansion(gen_h(l)) * gen_expansion(gen_e(m - l));
        r += Int(((m - l) % 2 == 0) ? l : -l) * term;
    }
    return r;
}

}  // namespace bub
}  // namespace decat
