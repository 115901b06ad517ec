#include "decat/trace.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace decat {
namespace tr {

std::string TraceWord::str() const {
    std::ostringstream os;
    if (b > 0) os << "F^(" << b << ")_" << mu.str() << " ";
    if (!tau.empty()) os << "b+" << tau.str() << " ";
    if (a > 0) os << "E^(" << a << ")_" << lam.str() << " ";
    os << "1_{" << n << "}";
    return os.str();
}

TraceElement TraceElement::unit(int n) { return word(TraceWord{0, {}, {}, 0, {}, n}); }

TraceElement TraceElement::E_hat(int a, const Partition& lam, int n) {
    return word(TraceWord{0, {}, {}, a, lam, n});
}

TraceElement TraceElement::F_hat(int b, const Partition& mu, int n) {
    return word(TraceWord{b, mu, {}, 0, {}, n});
}

TraceElement TraceElement::bubble_plus(const SymElement& x, int n) {
    TraceElement r(n, n);
    for (const auto& [tau, c] : x.terms()) r.add_term(TraceWord{0, {}, tau, 0, {}, n}, c);
    return r;
}

TraceElement TraceElement::bubble_minus(const SymElement& x, int n) {
    return bubble_plus(x.antipode(), n);
}

TraceElement TraceElement::word(const TraceWord& w, const Int& c) {
    if (!w.valid()) throw std::invalid_argument("TraceElement: malformed word " + w.str());
    TraceElement e(w.n, w.target());
    e.add_term(w, c);
    return e;
}

Int TraceElement::coeff(const TraceWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void TraceElement::add_term(const TraceWord& w, const Int& c) {
    if (c == 0) return;
    if (w.n != src_ || w.target() != tgt_)
        throw std::invalid_argument("TraceElement::add_term: weight mismatch at " + w.str());
    Int& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
}

TraceElement& TraceElement::operator+=(const TraceElement& o) {
    if (terms_.empty()) {
        src_ = o.src_;
        tgt_ = o.tgt_;
    }
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TraceElement TraceElement::operator-() const {
    TraceElement r(src_, tgt_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

bool TraceElement::operator==(const TraceElement& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
}

std::string TraceElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int v = abs(c);
        if (v != 1) os << v.get_str() << "*";
        os << w.str();
        first = false;
    }
    return os.str();
}

PlusElement PlusElement::make(int a, const Partition& lam, int n) {
    PlusElement p;
    p.a = a;
    p.n = n;
    p.add_term(lam, 1);
    return p;
}

void PlusElement::add_term(const Partition& lam, const Int& c) {
    if (c == 0) return;
    if (!lam.fits_rows(a))
        throw std::invalid_argument("PlusElement: " + lam.str() + " has more than " +
                                    std::to_string(a) + " parts");
    Int& slot = coeffs[lam];
    slot += c;
    if (slot == 0) coeffs.erase(lam);
}

std::string PlusElement::str() const {
    std::ostringstream os;
    os << "[a=" << a << ", n=" << n << "]";
    bool first = true;
    for (const auto& [lam, c] : coeffs) {
        os << (first ? " " : " + ") << c.get_str() << "*E_" << lam.str();
        first = false;
    }
    return os.str();
}

PlusElement compose_plus(const PlusElement& x, const PlusElement& y) {
    if (x.n != y.target())
        throw std::invalid_argument("compose_plus: weight mismatch");
    PlusElement r;
    r.a = x.a + y.a;
    r.n = y.n;
    for (const auto& tau : partitions_in_box(x.a, y.a)) {
        Partition tau_hat = tau.hat(x.a, y.a);
        int sign = (tau_hat.size() % 2 == 0) ? 1 : -1;
        SymElement st = SymElement::schur(tau), sth = SymElement::schur(tau_hat);
        for (const auto& [lx, cx] : x.coeffs) {
            SymElement u = SymElement::schur(lx, x.a) * st;
            if (u.is_zero()) continue;
            for (const auto& [ly, cy] : y.coeffs) {
                SymElement v = sth * SymElement::schur(ly, y.a);
                if (v.is_zero()) continue;
                SymElement w = wedge(x.a, y.a, u, v);
                for (const auto& [nu, cw] : w.terms()) r.add_term(nu, cx * cy * sign * cw);
            }
        }
    }
    return r;
}

namespace {

std::map<std::pair<int, Partition>, std::map<RectSeq, Int>>& rect_cache() {
    static std::map<std::pair<int, Partition>, std::map<RectSeq, Int>> cache;
    return cache;
}
std::mutex& rect_cache_mtx() {
    static std::mutex mtx;
    return mtx;
}

}  // namespace

const std::map<RectSeq, Int>& rect_decompose(int a, const Partition& lam) {
    // population is race-free by idempotence: never computes under the lock
    auto key = std::make_pair(a, lam);
    {
        std::lock_guard<std::mutex> lock(rect_cache_mtx());
        auto it = rect_cache().find(key);
        if (it != rect_cache().end()) return it->second;
    }
    if (!lam.fits_rows(a)) throw std::invalid_argument("rect_decompose: lambda not in P(a)");

    std::map<RectSeq, Int> result;
    if (a == 0) {
        result[{}] = 1;
        std::lock_guard<std::mutex> lock(rect_cache_mtx());
        return rect_cache().emplace(std::move(key), std::move(result)).first->second;
    }
    std::vector<int> padded = lam.padded(a);
    int l = padded[0];
    int k = 0;
    while (k < a && padded[static_cast<size_t>(k)] == l) ++k;
    std::vector<int> rest_parts(padded.begin() + k, padded.end());
    Partition rest(std::move(rest_parts));

    // Ehat^(k)_{l^k} o Ehat^(a-k)_{rest} = Ehat^(a)_lam + lex-lower terms
    PlusElement top = PlusElement::make(k, Partition(std::vector<int>(static_cast<size_t>(k), l)),
                                        2 * (a - k));
    PlusElement bottom = PlusElement::make(a - k, rest, 0);
    PlusElement prod = compose_plus(top, bottom);
    if (prod.coeffs.find(lam) == prod.coeffs.end() || prod.coeffs.at(lam) != 1)
        throw std::logic_error("rect_decompose: leading coefficient is not 1 at " + lam.str());

    for (const auto& [seq, c] : rect_decompose(a - k, rest)) {
        RectSeq s;
        s.emplace_back(l, k);
        s.insert(s.end(), seq.begin(), seq.end());
        result[s] += c;
    }
    for (const auto& [tau, c] : prod.coeffs) {
        if (tau == lam) continue;
        if (!(tau < lam))
            throw std::logic_error("rect_decompose: non-triangular term " + tau.str() +
                                   " above " + lam.str());
        for (const auto& [seq, d] : rect_decompose(a, tau)) {
            Int& slot = result[seq];
            slot -= c * d;
            if (slot == 0) result.erase(seq);
        }
    }
    std::lock_guard<std::mutex> lock(rect_cache_mtx());
    return rect_cache().emplace(std::move(key), std::move(result)).first->second;
}

PlusElement rect_recompose(const RectSeq& seq, int n) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i].first <= seq[i + 1].first)
            throw std::invalid_argument("rect_recompose: indices must strictly decrease");
    PlusElement acc;
    acc.a = 0;
    acc.n = n;
    acc.coeffs[Partition{}] = 1;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        auto [l, th] = *it;
        if (th < 1 || l < 0) throw std::invalid_argument("rect_recompose: malformed rectangle");
        PlusElement x = PlusElement::make(
            th, Partition(std::vector<int>(static_cast<size_t>(l > 0 ? th : 0), l)), acc.target());
        acc = compose_plus(x, acc);
    }
    return acc;
}

std::map<Partition, Int> rect_expand(const RectSeq& seq) {
    return rect_recompose(seq, 0).coeffs;
}

cur::GarlandElement to_current(const TraceElement& x) {
    cur::GarlandElement out(x.source(), x.target());
    for (const auto& [w, c] : x.terms()) {
        const auto& edec = rect_decompose(w.a, w.lam);
        const auto& fdec = rect_decompose(w.b, w.mu);
        Partition taut = w.tau.conjugate();
        Int sgn = (w.tau.size() % 2 == 0) ? 1 : -1;
        for (const auto& [eseq, ce] : edec)
            for (const auto& [fseq, cf] : fdec) {
                cur::GarlandWord gw;
                gw.n = w.n;
                gw.tau = taut;
                for (const auto& [l, th] : eseq) gw.e.push_back({l, th});
                for (const auto& [l, th] : fseq) gw.f.push_back({l, th});
                out.add_term(gw, c * ce * cf * sgn);
            }
    }
    return out;
}

TraceElement from_current(const cur::GarlandElement& y) {
    TraceElement out(y.source(), y.target());
    for (const auto& [w, c] : y.terms()) {
        RectSeq eseq, fseq;
        for (const auto& d : w.e) eseq.emplace_back(d.index, d.power);
        for (const auto& d : w.f) fseq.emplace_back(d.index, d.power);
        std::map<Partition, Int> pe = rect_expand(eseq);
        std::map<Partition, Int> pf = rect_expand(fseq);
        int A = 0, B = 0;
        for (const auto& d : w.e) A += d.power;
        for (const auto& d : w.f) B += d.power;
        Partition taut = w.tau.conjugate();
        Int sgn = (w.tau.size() % 2 == 0) ? 1 : -1;
        for (const auto& [lam, ce] : pe)
            for (const auto& [mu, cf] : pf)
                out.add_term(TraceWord{B, mu, taut, A, lam, w.n}, c * ce * cf * sgn);
    }
    return out;
}

TraceElement compose(const TraceElement& x, const TraceElement& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.source() != y.target())
        throw std::invalid_argument("tr::compose: weight mismatch (x source " +
                                    std::to_string(x.source()) + " vs y target " +
                                    std::to_string(y.target()) + ")");
    return from_current(cur::mul(to_current(x), to_current(y)));
}

std::map<TraceWord, Int> to_ef_basis(const TraceElement& x) {
    std::map<TraceWord, Int> out;
    for (const auto& [w, c] : cur::ef_expansion(to_current(x))) {
        RectSeq eseq, fseq;
        for (const auto& d : w.e) eseq.emplace_back(d.index, d.power);
        for (const auto& d : w.f) fseq.emplace_back(d.index, d.power);
        int A = 0, B = 0;
        for (const auto& d : w.e) A += d.power;
        for (const auto& d : w.f) B += d.power;
        Partition taut = w.tau.conjugate();
        Int sgn = (w.tau.size() % 2 == 0) ? c : -c;
        for (const auto& [lam, ce] : rect_expand(eseq))
            for (const auto& [mu, cf] : rect_expand(fseq)) {
                TraceWord tw{B, mu, taut, A, lam, w.n};
                Int& slot = out[tw];
                slot += sgn * ce * cf;
                if (slot == 0) out.erase(tw);
            }
    }
    return out;
}

long graded_dim(int n, int m, int d, int bmax) {
    if (d < 0) return 0;
    if ((m - n) % 2 != 0) return 0;
    int half = (m - n) / 2;
    long total = 0;
    for (int b = 0; b <= bmax; ++b) {
        int a = b + half;
        if (a < 0) continue;
        for (int dl = 0; dl <= d; ++dl)
            for (int dm = 0; dm + dl <= d; ++dm) {
                int dt = d - dl - dm;
                total += count_partitions_max_parts(dl, a) * count_partitions_max_parts(dm, b) *
                         count_partitions_max_parts(dt, dt);
            }
    }
    return total;
}

long plus_graded_dim(int a, int d) {
    if (d < 0) return 0;
    return count_partitions_max_parts(d, a);
}

TraceElement from_plus(const PlusElement& p) {
    TraceElement r(p.n, p.target());
    for (const auto& [lam, c] : p.coeffs) r.add_term(TraceWord{0, {}, {}, p.a, lam, p.n}, c);
    return r;
}

}  // namespace tr
}  // namespace decat
