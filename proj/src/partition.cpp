#include "decat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace decat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("Partition: parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
}

std::vector<int> Partition::padded(int a) const {
    if (length() > a) throw std::invalid_argument("Partition::padded: more than a parts");
    std::vector<int> v = parts_;
    v.resize(static_cast<size_t>(a), 0);
    return v;
}

bool Partition::fits_box(int a, int b) const { return length() <= a && part(0) <= b; }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[static_cast<size_t>(j)]++;
    return Partition(std::move(c));
}

Partition Partition::complement(int a, int b) const {
    if (!fits_box(a, b)) throw std::invalid_argument("Partition::complement: not in P(a,b)");
    std::vector<int> p = padded(a), c;
    c.reserve(p.size());
    for (auto it = p.rbegin(); it != p.rend(); ++it) c.push_back(b - *it);
    return Partition(std::move(c));
}

Partition Partition::hat(int a, int b) const { return complement(a, b).conjugate(); }

int Partition::mult(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    size_t n = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < parts_.size() ? parts_[i] : 0;
        int b = i < o.parts_.size() ? o.parts_[i] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void gen_partitions(int n, int max_part, int max_parts, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    return partitions_of_max_parts(n, n);
}

std::vector<Partition> partitions_of_max_parts(int n, int max_parts) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, max_parts, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int a, int b) {
    std::vector<Partition> out;
    for (int n = 0; n <= a * b; ++n) {
        std::vector<int> cur;
        gen_partitions(n, b, a, cur, out);
    }
    return out;
}

long count_partitions_max_parts(int n, int max_parts) {
    if (n < 0) return 0;
    // p(n, k): partitions of n into parts of size <= k equals partitions into <= k parts.
    std::vector<long> dp(static_cast<size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= max_parts; ++k)
        for (int m = k; m <= n; ++m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - k)];
    return dp[static_cast<size_t>(n)];
}

bool is_quasi_index(const std::vector<int>& mtilde) {
    int a = static_cast<int>(mtilde.size());
    for (int j = 1; j <= a; ++j)
        if (mtilde[static_cast<size_t>(j - 1)] < j - a) return false;
    return true;
}

Straightened straighten(const std::vector<int>& mtilde) {
    if (!is_quasi_index(mtilde))
        throw std::invalid_argument("straighten: entry below the tP(a) bound");
    int a = static_cast<int>(mtilde.size());
    // v = m + delta with delta = (a-1,...,1,0); all entries nonnegative.
    std::vector<int> v(mtilde);
    for (int j = 0; j < a; ++j) v[static_cast<size_t>(j)] += a - 1 - j;

    // Sort strictly decreasing, tracking the permutation sign by inversion count.
    int sign = 1;
    for (int i = 1; i < a; ++i)
        for (int k = i; k > 0 && v[static_cast<size_t>(k)] > v[static_cast<size_t>(k - 1)]; --k) {
            std::swap(v[static_cast<size_t>(k)], v[static_cast<size_t>(k - 1)]);
            sign = -sign;
        }
    for (int i = 0; i + 1 < a; ++i)
        if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(i + 1)]) return {};

    std::vector<int> lam(v);
    for (int j = 0; j < a; ++j) lam[static_cast<size_t>(j)] -= a - 1 - j;
    Straightened s;
    s.zero = false;
    s.sign = sign;
    s.lambda = Partition(std::move(lam));
    return s;
}

}  // namespace decat
