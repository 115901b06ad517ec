#include "decat/sym.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace decat {

SymElement SymElement::one(int bound) {
    SymElement r(bound);
    r.coeffs_[Partition{}] = 1;
    return r;
}

SymElement SymElement::schur(const Partition& lam, int bound) {
    SymElement r(bound);
    r.add_term(lam, 1);
    return r;
}

Int SymElement::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void SymElement::add_term(const Partition& lam, const Int& c) {
    if (c == 0) return;
    if (bound_ >= 0 && !lam.fits_rows(bound_)) return;
    Int& slot = coeffs_[lam];
    slot += c;
    if (slot == 0) coeffs_.erase(lam);
}

SymElement& SymElement::operator+=(const SymElement& o) {
    for (const auto& [lam, c] : o.coeffs_) add_term(lam, c);
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
    for (const auto& [lam, c] : o.coeffs_) add_term(lam, -c);
    return *this;
}

SymElement operator*(const Int& c, const SymElement& x) {
    SymElement r(x.bound_);
    if (c == 0) return r;
    for (const auto& [lam, v] : x.coeffs_) r.coeffs_[lam] = c * v;
    return r;
}

SymElement SymElement::truncate(int a) const {
    SymElement r(a);
    for (const auto& [lam, c] : coeffs_) r.add_term(lam, c);
    return r;
}

SymElement SymElement::unbounded() const {
    SymElement r;
    r.coeffs_ = coeffs_;
    return r;
}

SymElement SymElement::antipode() const {
    SymElement r(bound_ >= 0 ? -1 : bound_);  // conjugation does not respect a row bound
    for (const auto& [lam, c] : coeffs_)
        r.add_term(lam.conjugate(), (lam.size() % 2 == 0) ? c : -c);
    return r;
}

SymElement SymElement::omega() const {
    SymElement r;
    for (const auto& [lam, c] : coeffs_) r.add_term(lam.conjugate(), c);
    return r;
}

bool SymElement::is_homogeneous() const {
    int d = -1;
    for (const auto& [lam, c] : coeffs_) {
        if (d < 0) d = lam.size();
        else if (lam.size() != d) return false;
    }
    return true;
}

int SymElement::degree() const {
    int d = -1;
    for (const auto& [lam, c] : coeffs_) d = std::max(d, lam.size());
    return d;
}

SymElement SymElement::homogeneous_part(int d) const {
    SymElement r(bound_);
    for (const auto& [lam, c] : coeffs_)
        if (lam.size() == d) r.add_term(lam, c);
    return r;
}

std::string SymElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << "s" << lam.str();
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Pieri rules

namespace {

void gen_hstrips(const Partition& lam, int r, int row, int prev_mu, std::vector<int>& cur,
                 std::vector<Partition>& out) {
    // horizontal strip: lam_{i-1} >= mu_i >= lam_i (interlacing), sum of additions = r
    int len = lam.length();
    if (row > len) {
        if (r == 0) out.emplace_back(cur);
        return;
    }
    int lo = lam.part(row);          // mu_row >= lam_row
    int hi = row == 0 ? lam.part(0) + r : std::min(prev_mu, lam.part(row - 1));
    if (row == len) {
        // last (possibly new) row; remaining boxes must fit here
        int want = lam.part(row) + r;
        if (want >= lo && want <= hi) {
            cur.push_back(want);
            out.emplace_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int m = lo; m <= hi && m - lam.part(row) <= r; ++m) {
        cur.push_back(m);
        gen_hstrips(lam, r - (m - lam.part(row)), row + 1, m, cur, out);
        cur.pop_back();
    }
}

void gen_vstrips(const Partition& lam, int r, int row, int prev_mu, std::vector<int>& cur,
                 std::vector<Partition>& out) {
    // vertical strip: mu_i in {lam_i, lam_i+1}, weakly decreasing
    int len = lam.length();
    if (r == 0) {
        // remaining rows copy lam verbatim
        std::vector<int> mu = cur;
        for (int i = row; i < len; ++i) mu.push_back(lam.part(i));
        out.emplace_back(std::move(mu));
        return;
    }
    if (row >= len) {
        // r leftover boxes become r new rows of size 1
        if (row == 0 || prev_mu >= 1) {
            std::vector<int> mu = cur;
            mu.insert(mu.end(), static_cast<size_t>(r), 1);
            out.emplace_back(std::move(mu));
        }
        return;
    }
    for (int add = 0; add <= 1; ++add) {
        int m = lam.part(row) + add;
        if (row > 0 && m > prev_mu) continue;
        cur.push_back(m);
        gen_vstrips(lam, r - add, row + 1, m, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> pieri_h(const Partition& lam, int r) {
    std::vector<Partition> out;
    if (r < 0) return out;
    if (r == 0) return {lam};
    std::vector<int> cur;
    gen_hstrips(lam, r, 0, 0, cur, out);
    return out;
}

std::vector<Partition> pieri_e(const Partition& lam, int r) {
    std::vector<Partition> out;
    if (r < 0) return out;
    if (r == 0) return {lam};
    std::vector<int> cur;
    gen_vstrips(lam, r, 0, 0, cur, out);
    return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson multiplication via Jacobi-Trudi + iterated Pieri

namespace {

// Expands det(h_{mu_i - i + j}) into signed multisets of h-subscripts,
// pruning branches with a negative subscript.
void jt_expand(const std::vector<int>& mu, int row, unsigned used, int sign,
               std::vector<int>& hs, std::map<std::vector<int>, Int>& out) {
    int l = static_cast<int>(mu.size());
    if (row == l) {
        std::vector<int> key = hs;
        std::sort(key.begin(), key.end(), std::greater<int>());
        out[key] += sign;
        return;
    }
    // parity of the permutation built so far: count used columns > chosen column
    for (int col = 0; col < l; ++col) {
        if (used & (1u << col)) continue;
        int sub = mu[static_cast<size_t>(row)] - (row + 1) + (col + 1);
        if (sub < 0) continue;
        int inv = 0;
        for (int c = col + 1; c < l; ++c)
            if (used & (1u << c)) ++inv;
        if (sub > 0) hs.push_back(sub);
        jt_expand(mu, row + 1, used | (1u << col), (inv % 2 == 0) ? sign : -sign, hs, out);
        if (sub > 0) hs.pop_back();
    }
}

SymElement mul_schur_impl(const Partition& lam, const Partition& mu) {
    // multiply lam by h_r / e_r directly where possible
    if (mu.empty()) return SymElement::schur(lam);
    if (mu.length() == 1) {
        SymElement r;
        for (const auto& nu : pieri_h(lam, mu.part(0))) r.add_term(nu, 1);
        return r;
    }
    if (mu.part(0) == 1) {
        SymElement r;
        for (const auto& nu : pieri_e(lam, mu.length())) r.add_term(nu, 1);
        return r;
    }
    std::map<std::vector<int>, Int> hterms;
    std::vector<int> hs;
    jt_expand(mu.parts(), 0, 0, 1, hs, hterms);
    SymElement result;
    for (const auto& [subs, c] : hterms) {
        if (c == 0) continue;
        std::map<Partition, Int> cur{{lam, c}};
        for (int r : subs) {
            std::map<Partition, Int> next;
            for (const auto& [p, v] : cur)
                for (const auto& q : pieri_h(p, r)) next[q] += v;
            cur = std::move(next);
        }
        for (const auto& [p, v] : cur) result.add_term(p, v);
    }
    return result;
}

}  // namespace

const SymElement& mul_schur(const Partition& lam, const Partition& mu) {
    // cache population is race-free by idempotence: the lock is never held
    // while computing, and emplace keeps the first value for a key
    static std::map<std::pair<Partition, Partition>, SymElement> cache;
    static std::mutex mtx;
    // JT expansion on the factor with fewer rows
    const Partition& a = (lam.length() <= mu.length()) ? mu : lam;
    const Partition& b = (lam.length() <= mu.length()) ? lam : mu;
    auto key = std::make_pair(a, b);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymElement val = mul_schur_impl(a, b);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

SymElement operator*(const SymElement& x, const SymElement& y) {
    int bound = -1;
    if (x.bound_ >= 0 && y.bound_ >= 0) bound = std::min(x.bound_, y.bound_);
    else if (x.bound_ >= 0) bound = x.bound_;
    else if (y.bound_ >= 0) bound = y.bound_;
    SymElement r(bound);
    for (const auto& [lam, c] : x.coeffs_)
        for (const auto& [mu, d] : y.coeffs_) {
            const SymElement& prod = mul_schur(lam, mu);
            for (const auto& [nu, v] : prod.terms()) r.add_term(nu, c * d * v);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Generator expansions

namespace {

SymElement p_schur(int t) {
    // p_t = s_t - s_{t-1,1} + s_{t-2,1,1} - ... + (-1)^{t-1} s_{1^t}
    if (t == 0) throw std::invalid_argument("p_0 is not an element of Sym");
    SymElement r;
    for (int k = 0; k < t; ++k) {
        std::vector<int> hook{t - k};
        hook.insert(hook.end(), static_cast<size_t>(k), 1);
        r.add_term(Partition(std::move(hook)), (k % 2 == 0) ? 1 : -1);
    }
    return r;
}

const SymElement& etj_schur(int t, int j) {
    static std::map<std::pair<int, int>, SymElement> cache;
    static std::mutex mtx;
    auto key = std::make_pair(t, j);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymElement r;
    if (j == 0) {
        r = SymElement::one();
    } else {
        // j e_{t,j} = sum_{i=1..j} (-1)^{i-1} e_{t,j-i} p_{it}
        for (int i = 1; i <= j; ++i) {
            SymElement term = etj_schur(t, j - i) * p_schur(i * t);
            if (i % 2 == 0) term = -term;
            r += term;
        }
        SymElement q;
        for (const auto& [lam, c] : r.terms()) q.add_term(lam, div_exact(c, j));
        r = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(r)).first->second;
}

}  // namespace

SymElement gen_expansion(const SymGen& g) {
    switch (g.kind) {
        case SymGen::Kind::E: {
            std::vector<int> col(static_cast<size_t>(g.j), 1);
            return SymElement::schur(Partition(std::move(col)));
        }
        case SymGen::Kind::H:
            return g.j == 0 ? SymElement::one() : SymElement::schur(Partition({g.j}));
        case SymGen::Kind::P:
            return p_schur(g.j);
        case SymGen::Kind::ETJ:
            if (g.t < 1 || g.j < 0) throw std::invalid_argument("e_{t,j} needs t >= 1, j >= 0");
            return etj_schur(g.t, g.j);
    }
    throw std::logic_error("gen_expansion: bad kind");
}

SymElement to_schur(const std::vector<SymGen>& word) {
    SymElement r = SymElement::one();
    for (const auto& g : word) r = r * gen_expansion(g);
    return r;
}

// ---------------------------------------------------------------------------
// Power-sum expansion

const SymElement& p_monomial_schur(const Partition& mu) {
    static std::map<Partition, SymElement> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    SymElement r = SymElement::one();
    for (int p : mu.parts()) r = r * p_schur(p);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(mu, std::move(r)).first->second;
}

namespace {

// Per-degree inverse transition matrix: s_lambda = sum_mu inv[lambda][mu] p_mu.
struct PDegreeData {
    std::vector<Partition> parts;
    std::vector<std::vector<Rat>> inv;
};

const PDegreeData& p_degree_data(int d) {
    static std::map<int, PDegreeData> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }

    PDegreeData data;
    data.parts = partitions_of(d);
    size_t n = data.parts.size();
    // A[mu][lambda]: coefficient of s_lambda in p_mu
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, 0));
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < n; ++i) index[data.parts[i]] = i;
    for (size_t i = 0; i < n; ++i) {
        const SymElement& e = p_monomial_schur(data.parts[i]);
        for (const auto& [lam, c] : e.terms()) A[i][index.at(lam)] = Rat(c);
    }
    // invert A^T: solve for inv with s_lambda = sum inv[lambda][mu] p_mu,
    // i.e. inv * A = Id (rows indexed by lambda).
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = A[j][i];  // M = A^T
        M[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("p_degree_data: singular transition matrix");
        std::swap(M[piv], M[col]);
        Rat d0 = M[col][col];
        for (size_t j = 0; j < 2 * n; ++j) M[col][j] /= d0;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (size_t j = 0; j < 2 * n; ++j) M[r][j] -= f * M[col][j];
        }
    }
    // (A^T)^{-1} rows: x with A^T x = e_lambda, i.e. coefficients over mu of s_lambda.
    data.inv.assign(n, std::vector<Rat>(n, 0));
    for (size_t lam = 0; lam < n; ++lam)
        for (size_t mu = 0; mu < n; ++mu) data.inv[lam][mu] = M[mu][n + lam];
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(d, std::move(data)).first->second;
}

}  // namespace

std::map<Partition, Rat> p_expand(const SymElement& x) {
    std::map<Partition, Rat> out;
    for (const auto& [lam, c] : x.terms()) {
        int d = lam.size();
        if (d == 0) {
            out[Partition{}] += Rat(c);
            continue;
        }
        const PDegreeData& data = p_degree_data(d);
        size_t il = static_cast<size_t>(
            std::find(data.parts.begin(), data.parts.end(), lam) - data.parts.begin());
        for (size_t im = 0; im < data.parts.size(); ++im) {
            if (data.inv[il][im] == 0) continue;
            Rat& slot = out[data.parts[im]];
            slot += Rat(c) * data.inv[il][im];
            if (slot == 0) out.erase(data.parts[im]);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// ---------------------------------------------------------------------------

BoxDuals box_duals(const Partition& lam, int a, int b) {
    if (!lam.fits_box(a, b))
        throw std::invalid_argument("box_duals: " + lam.str() + " not in P(" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
    return {lam.conjugate(), lam.complement(a, b), lam.hat(a, b)};
}

SymElement wedge(int a, int b, const SymElement& x, const SymElement& y) {
    SymElement r(a + b);
    for (const auto& [lam, c] : x.terms()) {
        if (!lam.fits_rows(a)) throw std::invalid_argument("wedge: x not supported on P(a)");
        for (const auto& [mu, d] : y.terms()) {
            if (!mu.fits_rows(b)) throw std::invalid_argument("wedge: y not supported on P(b)");
            std::vector<int> idx = lam.padded(a);
            for (int& v : idx) v -= b;
            std::vector<int> mp = mu.padded(b);
            idx.insert(idx.end(), mp.begin(), mp.end());
            Straightened s = straighten(idx);
            if (s.zero) continue;
            r.add_term(s.lambda, c * d * s.sign);
        }
    }
    return r;
}

}  // namespace decat
