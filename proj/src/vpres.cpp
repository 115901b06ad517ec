#include "decat/vpres.hpp"

#include <algorithm>
#include <sstream>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "decat/sym.hpp"

namespace decat {
namespace vp {

std::string VGen::str() const {
    switch (kind) {
        case Kind::T: return "t" + std::to_string(dots);
        case Kind::U: return "u" + std::to_string(dots);
        case Kind::D: return "d" + lam.str();
        case Kind::Dp: return "d'" + lam.str();
        case Kind::B: return "b" + lam.str();
    }
    return "?";
}

VElement::VElement(int n, int m, int b0, int a0) : n_(n), m_(m), b0_(b0), a0_(a0) {
    if ((m - n) % 2 != 0) throw std::invalid_argument("VElement: m-n must be even");
    if (2 * (a0 - b0) != m - n)
        throw std::invalid_argument("VElement: source object off the weight line");
}

namespace {

int rank(VGen::Kind k) { return static_cast<int>(k); }

// Validity walk right to left; returns false when the word is zero.
// Decorations on empty partitions are removed in place.
bool normalize_word(VWord& w, int b0, int a0) {
    int b = b0, a = a0;
    std::vector<char> keep(w.size(), 1);
    for (size_t k = w.size(); k > 0; --k) {
        VGen& g = w[k - 1];
        switch (g.kind) {
            case VGen::Kind::T:
                ++b, ++a;
                break;
            case VGen::Kind::U:
                if (a == 0 || b == 0) return false;
                --b, --a;
                break;
            case VGen::Kind::D:
                if (g.lam.length() > b) return false;
                if (g.lam.empty()) keep[k - 1] = 0;
                break;
            case VGen::Kind::Dp:
                if (g.lam.length() > a) return false;
                if (g.lam.empty()) keep[k - 1] = 0;
                break;
            case VGen::Kind::B:
                if (g.lam.empty()) keep[k - 1] = 0;
                break;
        }
    }
    VWord out;
    out.reserve(w.size());
    for (size_t k = 0; k < w.size(); ++k)
        if (keep[k]) out.push_back(std::move(w[k]));
    w = std::move(out);
    return true;
}

// object (b,a) immediately to the right of position i
std::pair<int, int> object_right_of(const VWord& w, size_t i, int b0, int a0) {
    int b = b0, a = a0;
    for (size_t k = w.size(); k > i; --k) {
        if (w[k - 1].kind == VGen::Kind::T) ++b, ++a;
        if (w[k - 1].kind == VGen::Kind::U) --b, --a;
    }
    return {b, a};
}

// all nu with lam/nu a horizontal strip; paired with the strip size m
const std::vector<std::pair<Partition, int>>& hstrip_subs(const Partition& lam) {
    static std::map<Partition, std::vector<std::pair<Partition, int>>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::pair<Partition, int>> out;
    int l = lam.length();
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row) -> void {
        if (row == l) {
            Partition nu(cur);
            out.emplace_back(nu, lam.size() - nu.size());
            return;
        }
        for (int v = lam.part(row + 1); v <= lam.part(row); ++v) {
            cur.push_back(v);
            self(self, row + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(lam, std::move(out)).first->second;
}

}  // namespace

void VElement::add_word(const VWord& w, const Int& c) {
    if (c == 0) return;
    VWord copy = w;
    if (!normalize_word(copy, b0_, a0_)) return;
    Int& slot = terms_[copy];
    slot += c;
    if (slot == 0) terms_.erase(copy);
}

VElement& VElement::operator+=(const VElement& o) {
    if (terms_.empty()) {
        n_ = o.n_;
        m_ = o.m_;
        b0_ = o.b0_;
        a0_ = o.a0_;
    } else if (!o.terms_.empty() &&
               (n_ != o.n_ || m_ != o.m_ || b0_ != o.b0_ || a0_ != o.a0_)) {
        throw std::invalid_argument("VElement: mixing different hom data");
    }
    for (const auto& [w, c] : o.terms_) add_word(w, c);
    return *this;
}

VElement VElement::operator-() const {
    VElement r(n_, m_, b0_, a0_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

bool VElement::operator==(const VElement& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return n_ == o.n_ && m_ == o.m_ && b0_ == o.b0_ && a0_ == o.a0_ && terms_ == o.terms_;
}

std::string VElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int v = abs(c);
        if (v != 1) os << v.get_str() << "*";
        if (w.empty()) os << "id";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << " ";
            os << w[i].str();
        }
        first = false;
    }
    return os.str();
}

VElement c_tilde(int k, int n, int m, int b, int a) {
    VElement r(n, m, b, a);
    if (k < 0) return r;
    for (int i = 0; i <= k; ++i)
        for (int ip = 0; ip + i <= k; ++ip) {
            int ipp = k - i - ip;
            VWord w;
            if (ip > 0)
                w.push_back({VGen::Kind::D, 0, Partition(std::vector<int>(static_cast<size_t>(ip), 1))});
            if (ipp > 0) w.push_back({VGen::Kind::Dp, 0, Partition({ipp})});
            if (i > 0) w.push_back({VGen::Kind::B, 0, Partition({i})});
            r.add_word(w, (ip % 2 == 0) ? 1 : -1);
        }
    return r;
}

namespace {

// Finds a bad adjacent pair; returns word size when none.
size_t find_bad(const VWord& w, Strategy strategy) {
    auto bad_at = [&](size_t i) {
        const VGen& x = w[i];
        const VGen& y = w[i + 1];
        if (x.kind == y.kind) {
            switch (x.kind) {
                case VGen::Kind::T: return x.dots <= y.dots;
                case VGen::Kind::U: return x.dots >= y.dots;
                default: return true;  // merge decorations
            }
        }
        return rank(x.kind) > rank(y.kind);
    };
    if (w.size() < 2) return w.size();
    if (strategy == Strategy::LeftmostFirst) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (bad_at(i)) return i;
    } else {
        for (size_t i = w.size() - 1; i-- > 0;)
            if (bad_at(i)) return i;
    }
    return w.size();
}

}  // namespace

bool is_normal_word(const VWord& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const VGen& x = w[i];
        const VGen& y = w[i + 1];
        if (x.kind == y.kind) {
            if (x.kind == VGen::Kind::T && x.dots <= y.dots) return false;
            if (x.kind == VGen::Kind::U && x.dots >= y.dots) return false;
            if (x.kind != VGen::Kind::T && x.kind != VGen::Kind::U) return false;
        } else if (rank(x.kind) > rank(y.kind)) {
            return false;
        }
    }
    for (const VGen& g : w)
        if (g.kind != VGen::Kind::T && g.kind != VGen::Kind::U && g.lam.empty()) return false;
    return true;
}

namespace {

struct VWordHash {
    size_t operator()(const VWord& w) const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](size_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const VGen& g : w) {
            mix(static_cast<size_t>(g.kind) * 31 + static_cast<size_t>(g.dots) + 1);
            for (int p : g.lam.parts()) mix(static_cast<size_t>(p) + 131);
        }
        return h;
    }
};

using WordMap = std::unordered_map<VWord, Int, VWordHash>;

struct RewriteCtx {
    int n, m, b0, a0;
    Strategy strategy;
    long steps = 0;
    static constexpr long kMaxSteps = 50'000'000;
};

// Runs the worklist until every word is normal; merges equal words eagerly.
// The processing order does not affect the exact integer sums accumulated in
// the result.
WordMap rewrite_worklist(WordMap work, RewriteCtx& ctx) {
    WordMap done;
    while (!work.empty()) {
        if (++ctx.steps > RewriteCtx::kMaxSteps)
            throw std::runtime_error("vp::normal_form: step limit exceeded");
        auto node = work.extract(work.begin());
        VWord w = std::move(node.key());
        Int c = std::move(node.mapped());
        if (c == 0) continue;
        size_t i = find_bad(w, ctx.strategy);
        if (i == w.size()) {
            Int& slot = done[w];
            slot += c;
            if (slot == 0) done.erase(w);
            continue;
        }
        auto emit = [&](VWord nw, const Int& nc) {
            if (nc == 0) return;
            if (!normalize_word(nw, ctx.b0, ctx.a0)) return;
            Int& slot = work[nw];
            slot += nc;
            if (slot == 0) work.erase(nw);
        };
        auto splice = [&](const std::vector<VWord>& repls, const std::vector<Int>& cs) {
            for (size_t r = 0; r < repls.size(); ++r) {
                VWord nw(w.begin(), w.begin() + static_cast<long>(i));
                nw.insert(nw.end(), repls[r].begin(), repls[r].end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                emit(std::move(nw), c * cs[r]);
            }
        };
        const VGen x0 = w[i], y0 = w[i + 1];
        if (x0.kind == y0.kind) {
            switch (x0.kind) {
                case VGen::Kind::T:
                case VGen::Kind::U:
                    if (x0.dots == y0.dots) break;  // square of an odd generator: zero
                    splice({{y0, x0}}, {-1});
                    break;
                default: {
                    std::vector<VWord> repls;
                    std::vector<Int> cs;
                    for (const auto& [nu, lr] : mul_schur(x0.lam, y0.lam).terms()) {
                        repls.push_back({VGen{x0.kind, 0, nu}});
                        cs.push_back(lr);
                    }
                    splice(repls, cs);
                }
            }
        } else if (x0.kind == VGen::Kind::B ||
                   (x0.kind == VGen::Kind::Dp && y0.kind == VGen::Kind::D)) {
            splice({{y0, x0}}, {1});  // central / commuting decorations
        } else if ((x0.kind == VGen::Kind::D || x0.kind == VGen::Kind::Dp) &&
                   y0.kind == VGen::Kind::T) {
            // d_lam t_i = sum_m N^lam_{(m),nu} t_{i+m} d_nu  (Pieri slide)
            std::vector<VWord> repls;
            std::vector<Int> cs;
            for (const auto& [nu, mm] : hstrip_subs(x0.lam)) {
                VWord r{{VGen::Kind::T, y0.dots + mm, {}}};
                if (!nu.empty()) r.push_back({x0.kind, 0, nu});
                repls.push_back(std::move(r));
                cs.push_back(1);
            }
            splice(repls, cs);
        } else if (x0.kind == VGen::Kind::U &&
                   (y0.kind == VGen::Kind::D || y0.kind == VGen::Kind::Dp)) {
            // u_i d_lam = sum_m N^lam_{(m),nu} d_nu u_{i+m}
            std::vector<VWord> repls;
            std::vector<Int> cs;
            for (const auto& [nu, mm] : hstrip_subs(y0.lam)) {
                VWord r;
                if (!nu.empty()) r.push_back({y0.kind, 0, nu});
                r.push_back({VGen::Kind::U, x0.dots + mm, {}});
                repls.push_back(std::move(r));
                cs.push_back(1);
            }
            splice(repls, cs);
        } else if (x0.kind == VGen::Kind::U && y0.kind == VGen::Kind::T) {
            // u_i t_j = -t_j u_i + c~_{1+(m+n)/2+i+j}
            splice({{y0, x0}}, {-1});
            auto [ob, oa] = object_right_of(w, i + 2, ctx.b0, ctx.a0);
            VElement ct = c_tilde(1 + (ctx.m + ctx.n) / 2 + x0.dots + y0.dots, ctx.n, ctx.m, ob, oa);
            for (const auto& [cw, cc] : ct.terms()) {
                VWord nw(w.begin(), w.begin() + static_cast<long>(i));
                nw.insert(nw.end(), cw.begin(), cw.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                emit(std::move(nw), c * cc);
            }
        } else {
            throw std::logic_error("vp::normal_form: unhandled pair " + x0.str() + " " + y0.str());
        }
    }
    return done;
}

}  // namespace

VElement normal_form(const VElement& x, Strategy strategy) {
    VElement done(x.n(), x.m(), x.source_b(), x.source_a());
    RewriteCtx ctx{x.n(), x.m(), x.source_b(), x.source_a(), strategy};
    for (const auto& [w, c] : x.terms()) {
        // insert generators right to left, keeping the accumulation normal; the
        // merged intermediate combos keep the term count at its true size
        WordMap acc{{{}, 1}};
        for (size_t k = w.size(); k > 0 && !acc.empty(); --k) {
            WordMap staged;
            for (const auto& [tail, tc] : acc) {
                VWord start;
                start.push_back(w[k - 1]);
                start.insert(start.end(), tail.begin(), tail.end());
                if (!normalize_word(start, ctx.b0, ctx.a0)) continue;
                Int& slot = staged[start];
                slot += tc;
                if (slot == 0) staged.erase(start);
            }
            acc = rewrite_worklist(std::move(staged), ctx);
        }
        for (const auto& [nw, nc] : acc) done.add_word(nw, c * nc);
    }
    return done;
}

int gen_degree(const VGen& g, int n, int m) {
    switch (g.kind) {
        case VGen::Kind::T:
        case VGen::Kind::U:
            return 1 + (n + m) / 2 + 2 * g.dots;
        default:
            return 2 * g.lam.size();
    }
}

int word_degree(const VWord& w, int n, int m) {
    int d = 0;
    for (const VGen& g : w) d += gen_degree(g, n, m);
    return d;
}

namespace {

// Builds the normal-form word t_nu d_mu d'_lam u_sigma b_tau at source (b,a).
VWord make_B_word(int i, const Partition& nu, int j, const Partition& sigma,
                  const Partition& lam, const Partition& mu, const Partition& tau) {
    VWord w;
    for (int k = 1; k <= i; ++k) w.push_back({VGen::Kind::T, nu.part(k - 1) + i - k, {}});
    if (!mu.empty()) w.push_back({VGen::Kind::D, 0, mu});
    if (!lam.empty()) w.push_back({VGen::Kind::Dp, 0, lam});
    for (int k = j; k >= 1; --k) w.push_back({VGen::Kind::U, sigma.part(k - 1) + j - k, {}});
    if (!tau.empty()) w.push_back({VGen::Kind::B, 0, tau});
    return w;
}

template <typename DegreeFn>
std::map<int, long> enumerate_B(int a, int b, int delta, int Dmax, DegreeFn degree_of) {
    std::map<int, long> out;
    for (int j = std::max(0, -delta); j <= std::min(a, b); ++j) {
        int i = delta + j;
        if (i < 0) continue;
        // every box in any partition contributes degree 2
        int base = degree_of(i, j, 0);
        if (base > Dmax) continue;
        int max_boxes = (Dmax - base) / 2;
        for (int boxes = 0; boxes <= max_boxes; ++boxes) {
            long count = 0;
            for (int bn = 0; bn <= boxes; ++bn)
                for (int bs = 0; bn + bs <= boxes; ++bs)
                    for (int bl = 0; bn + bs + bl <= boxes; ++bl)
                        for (int bm = 0; bn + bs + bl + bm <= boxes; ++bm) {
                            int bt = boxes - bn - bs - bl - bm;
                            count += count_partitions_max_parts(bn, i) *
                                     count_partitions_max_parts(bs, j) *
                                     count_partitions_max_parts(bl, a - j) *
                                     count_partitions_max_parts(bm, b - j) *
                                     count_partitions_max_parts(bt, bt);
                        }
            if (count) out[degree_of(i, j, boxes)] += count;
        }
    }
    return out;
}

}  // namespace

std::map<int, long> enumerate_forms(int n, int a, int b, int delta, int Dmax) {
    int m = n + 2 * (a - b);
    std::map<int, long> out;
    for (int j = std::max(0, -delta); j <= std::min(a, b); ++j) {
        int i = delta + j;
        if (i < 0) continue;
        int base = word_degree(make_B_word(i, {}, j, {}, {}, {}, {}), n, m);
        if (base > Dmax) continue;
        int max_boxes = (Dmax - base) / 2;
        for (int bn = 0; bn <= max_boxes; ++bn)
            for (const auto& nu : partitions_of_max_parts(bn, i))
                for (int bs = 0; bn + bs <= max_boxes; ++bs)
                    for (const auto& sg : partitions_of_max_parts(bs, j))
                        for (int bl = 0; bn + bs + bl <= max_boxes; ++bl)
                            for (const auto& lm : partitions_of_max_parts(bl, a - j))
                                for (int bm = 0; bn + bs + bl + bm <= max_boxes; ++bm)
                                    for (const auto& mu : partitions_of_max_parts(bm, b - j))
                                        for (int bt = 0; bn + bs + bl + bm + bt <= max_boxes; ++bt)
                                            for (const auto& tau : partitions_of(bt)) {
                                                VWord w = make_B_word(i, nu, j, sg, lm, mu, tau);
                                                out[word_degree(w, n, m)] += 1;
                                            }
    }
    return out;
}

std::map<int, long> enumerate_Bplus(int n, int a, int b, int delta, int Dmax) {
    int s = n + a - b;  // (n+m)/2
    return enumerate_B(a, b, delta, Dmax, [s](int i, int j, int boxes) {
        return (i + j) * s + i * i + j * j + 2 * boxes;
    });
}

std::map<int, long> enumerate_Bminus(int n, int a, int b, int delta, int Dmax) {
    int s = n + a - b;
    return enumerate_B(a, b, delta, Dmax, [s](int i, int j, int boxes) {
        return -(i + j) * s + i * i + j * j + 2 * boxes;
    });
}

}  // namespace vp
}  // namespace decat
