#include "decat/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace decat {
namespace oracle {

namespace {

// SSYT of shape lam with entries in 1..k, built cell by cell: rows weakly
// increase left to right, columns strictly increase top to bottom.
void gen_ssyt(const std::vector<int>& shape, int k, std::vector<std::vector<int>>& tab, int row,
              int col, Poly& out) {
    int nrows = static_cast<int>(shape.size());
    if (row == nrows) {
        std::vector<int> expo(static_cast<size_t>(k), 0);
        for (const auto& r : tab)
            for (int v : r) expo[static_cast<size_t>(v - 1)]++;
        out[expo] += 1;
        return;
    }
    if (col == shape[static_cast<size_t>(row)]) {
        gen_ssyt(shape, k, tab, row + 1, 0, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[static_cast<size_t>(row)][static_cast<size_t>(col - 1)]);
    if (row > 0) lo = std::max(lo, tab[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1);
    for (int v = lo; v <= k; ++v) {
        tab[static_cast<size_t>(row)].push_back(v);
        gen_ssyt(shape, k, tab, row, col + 1, out);
        tab[static_cast<size_t>(row)].pop_back();
    }
}

}  // namespace

Poly schur_poly(const Partition& lam, int k) {
    Poly out;
    if (lam.length() > k) return out;  // s_lambda = 0 in k variables
    if (lam.empty()) {
        out[std::vector<int>(static_cast<size_t>(k), 0)] = 1;
        return out;
    }
    std::vector<std::vector<int>> tab(lam.parts().size());
    gen_ssyt(lam.parts(), k, tab, 0, 0, out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Int& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    return r;
}

std::map<Partition, Int> schur_decompose(Poly p, int k) {
    std::map<Partition, Int> out;
    while (!p.empty()) {
        // lex-greatest exponent vector of a symmetric polynomial is a partition
        auto it = std::prev(p.end());
        std::vector<int> expo = it->first;
        Int c = it->second;
        for (size_t i = 0; i + 1 < expo.size(); ++i)
            if (expo[i] < expo[i + 1])
                throw std::runtime_error("schur_decompose: leading exponent not a partition");
        Partition lam(expo);
        out[lam] += c;
        Poly s = schur_poly(lam, k);
        for (const auto& [e, v] : s) {
            Int& slot = p[e];
            slot -= c * v;
            if (slot == 0) p.erase(e);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly alternant(const std::vector<int>& mu) {
    int k = static_cast<int>(mu.size());
    for (int e : mu)
        if (e < 0) throw std::invalid_argument("alternant: negative exponent");
    Poly out;
    std::vector<int> perm(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        std::vector<int> expo(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) expo[static_cast<size_t>(perm[static_cast<size_t>(i)])] =
            mu[static_cast<size_t>(i)];
        Int& slot = out[expo];
        slot += (inv % 2 == 0) ? 1 : -1;
        if (slot == 0) out.erase(expo);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace oracle
}  // namespace decat
