#include "decat/blm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace decat {
namespace blm {

bool CanonicalWord::valid() const {
    if (a < 0 || b < 0) return false;
    if (a == 0 || b == 0) return !ef;
    return ef ? (n < b - a) : (n >= b - a);
}

CanonicalWord CanonicalWord::make(int a, int b, int n, bool ef) {
    CanonicalWord w{a, b, n, ef};
    if (a == 0 || b == 0 || n == b - a) w.ef = false;
    if (!w.valid())
        throw std::invalid_argument("CanonicalWord: shape/weight constraint violated: " + w.str());
    return w;
}

std::string CanonicalWord::str() const {
    std::ostringstream os;
    auto pw = [&](const char* X, int p) {
        if (p == 1) os << X;
        else if (p > 1) os << X << "^(" << p << ")";
    };
    if (ef) {
        pw("E", a);
        pw("F", b);
    } else {
        pw("F", b);
        pw("E", a);
    }
    os << "1_{" << n << "}";
    return os.str();
}

BlmElement BlmElement::unit(int n) { return word(CanonicalWord::make(0, 0, n, false)); }
BlmElement BlmElement::gen_E(int a, int n) { return word(CanonicalWord::make(a, 0, n, false)); }
BlmElement BlmElement::gen_F(int b, int n) { return word(CanonicalWord::make(0, b, n, false)); }

BlmElement BlmElement::word(const CanonicalWord& w) {
    BlmElement e(w.n, w.target());
    e.add_term(w, LaurentPoly(1));
    return e;
}

void BlmElement::add_term(const CanonicalWord& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (w.n != src_ || w.target() != tgt_)
        throw std::invalid_argument("BlmElement::add_term: weight mismatch");
    LaurentPoly& slot = terms_[w];
    slot += c;
    if (slot.is_zero()) terms_.erase(w);
}

BlmElement& BlmElement::operator+=(const BlmElement& o) {
    if (terms_.empty()) {
        src_ = o.src_;
        tgt_ = o.tgt_;
    }
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

bool BlmElement::operator==(const BlmElement& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
}

std::string BlmElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << w.str();
        first = false;
    }
    return os.str();
}

namespace {

struct Block {
    char type;  // 'E' or 'F'
    int pow;
};

using Word = std::vector<Block>;  // leftmost applied last; source weight kept separately

// weight immediately to the right of position i (i.e. after applying blocks i..end)
int weight_left_of(const Word& w, size_t i, int n) {
    int wt = n;
    for (size_t k = w.size(); k > i; --k) {
        const Block& b = w[k - 1];
        wt += (b.type == 'E' ? 2 : -2) * b.pow;
    }
    return wt;
}

// One canonicalization pass: returns true when the word is canonical.
// Accumulates rewritten terms into `out` otherwise.
bool canonical_step(Word w, LaurentPoly coeff, int n,
                    std::vector<std::pair<Word, LaurentPoly>>& out) {
    // drop trivial blocks, merge adjacent equal-type blocks
    for (size_t i = 0; i < w.size();) {
        if (w[i].pow == 0) {
            w.erase(w.begin() + static_cast<long>(i));
            i = i > 0 ? i - 1 : 0;
            continue;
        }
        if (i + 1 < w.size() && w[i].type == w[i + 1].type) {
            coeff = coeff * gauss_binom(w[i].pow + w[i + 1].pow, w[i + 1].pow);
            w[i].pow += w[i + 1].pow;
            w.erase(w.begin() + static_cast<long>(i) + 1);
            continue;
        }
        ++i;
    }
    int etot = 0, ftot = 0;
    for (const Block& b : w) (b.type == 'E' ? etot : ftot) += b.pow;
    bool want_fe = n >= ftot - etot;  // target canonical shape for this weight

    // find leftmost adjacent pair in the wrong order
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        bool bad = want_fe ? (w[i].type == 'E' && w[i + 1].type == 'F')
                           : (w[i].type == 'F' && w[i + 1].type == 'E');
        if (!bad) continue;
        int np = weight_left_of(w, i + 2, n);  // weight right of the pair
        int A = w[i].pow, B = w[i + 1].pow;    // powers of left, right block
        for (int j = 0; j <= std::min(A, B); ++j) {
            Word nw(w.begin(), w.begin() + static_cast<long>(i));
            LaurentPoly c = coeff;
            if (want_fe) {
                // E^(A)F^(B)1_np = sum_j [A-B+np; j] F^(B-j)E^(A-j)1_np
                c = c * gauss_binom(A - B + np, j);
                nw.push_back({'F', B - j});
                nw.push_back({'E', A - j});
            } else {
                // F^(B')E^(A')1_np = sum_j [B'-A'-np; j] E^(A'-j)F^(B'-j)1_np
                // here left block is F with power A, right is E with power B
                c = c * gauss_binom(A - B - np, j);
                nw.push_back({'E', B - j});
                nw.push_back({'F', A - j});
            }
            nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            if (!c.is_zero()) out.emplace_back(std::move(nw), std::move(c));
        }
        return false;
    }
    out.emplace_back(std::move(w), std::move(coeff));
    return true;
}

}  // namespace

BlmElement mul(const BlmElement& x, const BlmElement& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.source() != y.target())
        throw std::invalid_argument("blm::mul: weight mismatch (x source " +
                                    std::to_string(x.source()) + " vs y target " +
                                    std::to_string(y.target()) + ")");
    BlmElement result(y.source(), x.target());
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            Word start;
            auto push = [&](const CanonicalWord& cw) {
                if (cw.ef) {
                    if (cw.a) start.push_back({'E', cw.a});
                    if (cw.b) start.push_back({'F', cw.b});
                } else {
                    if (cw.b) start.push_back({'F', cw.b});
                    if (cw.a) start.push_back({'E', cw.a});
                }
            };
            push(wx);
            push(wy);
            int n = y.source();
            std::vector<std::pair<Word, LaurentPoly>> work{{std::move(start), cx * cy}};
            while (!work.empty()) {
                auto [w, c] = std::move(work.back());
                work.pop_back();
                std::vector<std::pair<Word, LaurentPoly>> next;
                if (canonical_step(std::move(w), std::move(c), n, next)) {
                    const auto& [cw, cc] = next.front();
                    int a = 0, b = 0;
                    bool ef = false;
                    for (const Block& blk : cw) {
                        if (blk.type == 'E') a = blk.pow;
                        else b = blk.pow;
                    }
                    if (cw.size() == 2) ef = (cw.front().type == 'E');
                    result.add_term(CanonicalWord::make(a, b, n, ef), cc);
                } else {
                    for (auto& t : next) work.emplace_back(std::move(t));
                }
            }
        }
    }
    return result;
}

std::map<CanonicalWord, Int> specialize_q1(const BlmElement& x) {
    std::map<CanonicalWord, Int> out;
    for (const auto& [w, c] : x.terms()) {
        Int v = c.at_one();
        if (v != 0) out[w] = v;
    }
    return out;
}

std::vector<CanonicalWord> enumerate_words(int n, int m, int bmax) {
    std::vector<CanonicalWord> out;
    if ((m - n) % 2 != 0) return out;
    int half = (m - n) / 2;  // = a - b
    for (int b = 0; b <= bmax; ++b) {
        int a = b + half;
        if (a < 0) continue;
        out.push_back(CanonicalWord::make(a, b, n, a > 0 && b > 0 && n < b - a));
    }
    return out;
}

}  // namespace blm
}  // namespace decat
