#include "decat/current.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace decat {
namespace cur {

int GarlandWord::e_weight() const {
    int s = 0;
    for (const auto& d : e) s += d.power;
    return s;
}

int GarlandWord::f_weight() const {
    int s = 0;
    for (const auto& d : f) s += d.power;
    return s;
}

int GarlandWord::loop_degree() const {
    int s = tau.size();
    for (const auto& d : f) s += d.index * d.power;
    for (const auto& d : e) s += d.index * d.power;
    return s;
}

bool GarlandWord::valid() const {
    auto ok = [](const std::vector<DividedPower>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].power < 1 || v[i].index < 0) return false;
            if (i + 1 < v.size() && v[i].index <= v[i + 1].index) return false;
        }
        return true;
    };
    return ok(f) && ok(e);
}

std::string GarlandWord::str() const {
    std::ostringstream os;
    auto pr = [&](const char* X, const std::vector<DividedPower>& v) {
        for (const auto& d : v) {
            os << X << d.index;
            if (d.power > 1) os << "^(" << d.power << ")";
            os << " ";
        }
    };
    pr("F", f);
    if (!tau.empty()) os << "phi(s" << tau.str() << ") ";
    pr("E", e);
    os << "1_{" << n << "}";
    return os.str();
}

GarlandElement GarlandElement::unit(int n) { return word(GarlandWord{{}, Partition{}, {}, n}); }

GarlandElement GarlandElement::gen_E(int index, int power, int n) {
    return word(GarlandWord{{}, Partition{}, {{index, power}}, n});
}

GarlandElement GarlandElement::gen_F(int index, int power, int n) {
    return word(GarlandWord{{{index, power}}, Partition{}, {}, n});
}

GarlandElement GarlandElement::word(const GarlandWord& w, const Int& c) {
    if (!w.valid()) throw std::invalid_argument("GarlandElement: malformed word " + w.str());
    GarlandElement e(w.n, w.target());
    e.add_term(w, c);
    return e;
}

GarlandElement GarlandElement::phi_of(const SymElement& x, int n) {
    GarlandElement r(n, n);
    for (const auto& [tau, c] : x.terms()) r.add_term(GarlandWord{{}, tau, {}, n}, c);
    return r;
}

Int GarlandElement::coeff(const GarlandWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void GarlandElement::add_term(const GarlandWord& w, const Int& c) {
    if (c == 0) return;
    if (w.n != src_ || w.target() != tgt_)
        throw std::invalid_argument("GarlandElement::add_term: weight mismatch at " + w.str());
    Int& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
}

GarlandElement& GarlandElement::operator+=(const GarlandElement& o) {
    if (terms_.empty()) {
        src_ = o.src_;
        tgt_ = o.tgt_;
    }
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GarlandElement GarlandElement::operator-() const {
    GarlandElement r(src_, tgt_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

bool GarlandElement::operator==(const GarlandElement& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
}

std::string GarlandElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << w.str();
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// PBW straightening over Q

namespace {

enum class Order { FE, EF };  // FE: F < H < E (Garland); EF: the mirrored basis

int rank(QGen::Kind k, Order ord) {
    int r = static_cast<int>(k);  // F=0, H=1, E=2
    return ord == Order::FE ? r : 2 - r;
}

// Normal-orders every word using the loop sl2 relations, then sorts each
// block, eliminates H_0 against the local weight, and accumulates.
std::map<std::vector<QGen>, Rat> normalize_pbw(std::map<std::vector<QGen>, Rat> work, int n,
                                               Order ord = Order::FE) {
    std::map<std::vector<QGen>, Rat> done;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        std::vector<QGen> w = std::move(node.key());
        Rat c = std::move(node.mapped());
        if (c == 0) continue;

        size_t bad = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (rank(w[i].kind, ord) > rank(w[i + 1].kind, ord)) {
                bad = i;
                break;
            }
        if (bad == w.size()) {
            // sort blocks (generators of equal kind commute)
            for (size_t i = 0; i < w.size();) {
                size_t j = i;
                while (j < w.size() && w[j].kind == w[i].kind) ++j;
                std::sort(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j),
                          [](const QGen& a, const QGen& b) { return a.index > b.index; });
                i = j;
            }
            // H_0 acts on the weight to its right
            long right_weight = 0;
            {
                bool seen_h = false;
                for (auto it = w.rbegin(); it != w.rend(); ++it) {
                    if (it->kind == QGen::Kind::H) {
                        seen_h = true;
                        break;
                    }
                    right_weight += it->kind == QGen::Kind::E ? 2 : -2;
                }
                (void)seen_h;
            }
            long h0 = 0;
            std::erase_if(w, [&](const QGen& g) {
                if (g.kind == QGen::Kind::H && g.index == 0) {
                    ++h0;
                    return true;
                }
                return false;
            });
            for (long k = 0; k < h0; ++k) c *= (n + right_weight);
            if (c == 0) continue;
            Rat& slot = done[w];
            slot += c;
            if (slot == 0) done.erase(w);
            continue;
        }

        const QGen x = w[bad], y = w[bad + 1];
        auto push = [&](std::vector<QGen> nw, const Rat& nc) {
            if (nc == 0) return;
            Rat& slot = work[nw];
            slot += nc;
            if (slot == 0) work.erase(nw);
        };
        std::vector<QGen> swapped = w;
        std::swap(swapped[bad], swapped[bad + 1]);
        std::vector<QGen> contracted(w.begin(), w.begin() + static_cast<long>(bad));
        auto finish = [&](QGen::Kind kind, const Rat& coeff) {
            contracted.push_back({kind, x.index + y.index});
            contracted.insert(contracted.end(), w.begin() + static_cast<long>(bad) + 2, w.end());
            push(std::move(swapped), c);
            push(std::move(contracted), coeff);
        };
        if (x.kind == QGen::Kind::E && y.kind == QGen::Kind::H) {
            finish(QGen::Kind::E, -2 * c);  // E_i H_j = H_j E_i - 2 E_{i+j}
        } else if (x.kind == QGen::Kind::H && y.kind == QGen::Kind::E) {
            finish(QGen::Kind::E, 2 * c);  // H_i E_j = E_j H_i + 2 E_{i+j}
        } else if (x.kind == QGen::Kind::E && y.kind == QGen::Kind::F) {
            finish(QGen::Kind::H, c);  // E_i F_j = F_j E_i + H_{i+j}
        } else if (x.kind == QGen::Kind::F && y.kind == QGen::Kind::E) {
            finish(QGen::Kind::H, -c);  // F_j E_i = E_i F_j - H_{i+j}
        } else if (x.kind == QGen::Kind::H && y.kind == QGen::Kind::F) {
            finish(QGen::Kind::F, -2 * c);  // H_i F_j = F_j H_i - 2 F_{i+j}
        } else {
            finish(QGen::Kind::F, 2 * c);  // F_j H_i = H_i F_j + 2 F_{i+j}
        }
    }
    return done;
}

// Collects a normal-ordered word into divided powers and phi coordinates; the
// blocks are contiguous and internally sorted, so grouping by kind suffices
// for either block order.
std::map<GarlandWord, Rat> collect_garland(const std::map<std::vector<QGen>, Rat>& normal, int n) {
    std::map<GarlandWord, Rat> accum;
    for (const auto& [w, c] : normal) {
        GarlandWord gw;
        gw.n = n;
        std::vector<int> hparts;
        Rat coeff = c;
        auto group_in = [&](std::vector<DividedPower>& out, const QGen& g) {
            if (!out.empty() && out.back().index == g.index) {
                out.back().power++;
                coeff *= out.back().power;  // builds the factorial incrementally
            } else {
                out.push_back({g.index, 1});
            }
        };
        for (const QGen& g : w) {
            switch (g.kind) {
                case QGen::Kind::F: group_in(gw.f, g); break;
                case QGen::Kind::E: group_in(gw.e, g); break;
                case QGen::Kind::H: hparts.push_back(g.index); break;
            }
        }
        std::sort(hparts.begin(), hparts.end(), std::greater<int>());
        Partition mu(std::move(hparts));
        const SymElement& sexp = p_monomial_schur(mu);
        for (const auto& [tau, z] : sexp.terms()) {
            GarlandWord out = gw;
            out.tau = tau;
            Rat& slot = accum[out];
            slot += coeff * Rat(z);
            if (slot == 0) accum.erase(out);
        }
    }
    return accum;
}

GarlandElement to_garland(const std::map<std::vector<QGen>, Rat>& normal, int n, int tgt) {
    GarlandElement result(n, tgt);
    for (const auto& [w, c] : collect_garland(normal, n)) {
        if (!is_integral(c))
            throw std::runtime_error("normal_form: non-integral coefficient " +
                                     std::string(c.get_str()) + " at " + w.str());
        result.add_term(w, c.get_num());
    }
    return result;
}

int word_weight(const std::vector<QGen>& w) {
    int s = 0;
    for (const QGen& g : w) {
        if (g.kind == QGen::Kind::E) s += 2;
        if (g.kind == QGen::Kind::F) s -= 2;
    }
    return s;
}

std::map<std::vector<QGen>, Rat> garland_to_pbw(const GarlandWord& w) {
    Rat base(1);
    std::vector<QGen> fe_prefix, e_suffix;
    for (const auto& d : w.f) {
        for (int k = 0; k < d.power; ++k) fe_prefix.push_back({QGen::Kind::F, d.index});
        base /= factorial(d.power);
    }
    for (const auto& d : w.e) {
        for (int k = 0; k < d.power; ++k) e_suffix.push_back({QGen::Kind::E, d.index});
        base /= factorial(d.power);
    }
    std::map<std::vector<QGen>, Rat> out;
    auto pexp = p_expand(SymElement::schur(w.tau));
    for (const auto& [mu, r] : pexp) {
        std::vector<QGen> word = fe_prefix;
        for (int idx : mu.parts()) word.push_back({QGen::Kind::H, idx});
        word.insert(word.end(), e_suffix.begin(), e_suffix.end());
        Rat& slot = out[word];
        slot += base * r;
        if (slot == 0) out.erase(word);
    }
    return out;
}

}  // namespace

GarlandElement normal_form(const std::vector<QGen>& word, int n) {
    std::map<std::vector<QGen>, Rat> in{{word, Rat(1)}};
    return normal_form(in, n);
}

GarlandElement normal_form(const std::map<std::vector<QGen>, Rat>& words, int n) {
    int wt = 0;
    bool first = true;
    for (const auto& [w, c] : words) {
        if (first) {
            wt = word_weight(w);
            first = false;
        } else if (word_weight(w) != wt) {
            throw std::invalid_argument("normal_form: inhomogeneous weight");
        }
    }
    return to_garland(normalize_pbw(words, n), n, n + wt);
}

GarlandElement mul(const GarlandElement& x, const GarlandElement& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.source() != y.target())
        throw std::invalid_argument("cur::mul: weight mismatch (x source " +
                                    std::to_string(x.source()) + " vs y target " +
                                    std::to_string(y.target()) + ")");
    int n = y.source();
    std::map<std::vector<QGen>, Rat> big;
    for (const auto& [wx, cx] : x.terms()) {
        auto px = garland_to_pbw(wx);
        for (const auto& [wy, cy] : y.terms()) {
            auto py = garland_to_pbw(wy);
            for (const auto& [gx, rx] : px)
                for (const auto& [gy, ry] : py) {
                    std::vector<QGen> cat = gx;
                    cat.insert(cat.end(), gy.begin(), gy.end());
                    Rat& slot = big[cat];
                    slot += Rat(cx) * Rat(cy) * rx * ry;
                    if (slot == 0) big.erase(cat);
                }
        }
    }
    return to_garland(normalize_pbw(std::move(big), n), n, x.target());
}

std::map<GarlandWord, Int> ef_expansion(const GarlandElement& x) {
    std::map<std::vector<QGen>, Rat> big;
    for (const auto& [w, c] : x.terms()) {
        for (const auto& [gens, r] : garland_to_pbw(w)) {
            Rat& slot = big[gens];
            slot += Rat(c) * r;
            if (slot == 0) big.erase(gens);
        }
    }
    std::map<GarlandWord, Int> out;
    for (const auto& [w, c] :
         collect_garland(normalize_pbw(std::move(big), x.source(), Order::EF), x.source())) {
        if (!is_integral(c))
            throw std::runtime_error("ef_expansion: non-integral coefficient at " + w.str());
        if (c != 0) out[w] = c.get_num();
    }
    return out;
}

std::map<Partition, Rat> phi(const SymElement& x) { return p_expand(x); }

SymElement phi_inv(const std::map<Partition, Int>& hmono) {
    SymElement r;
    for (const auto& [mu, c] : hmono) r += c * p_monomial_schur(mu);
    return r;
}

GarlandElement apply_Phi(const GarlandElement& x) {
    if (x.is_zero()) return {};
    // Phi(F_i^(a)) = E_i^(a), Phi(E_k^(c)) = F_k^(c), Phi(phi(s_tau)) = phi(S(s_tau));
    // the image word E...phi...F is out of Garland order and gets re-straightened.
    std::map<std::vector<QGen>, Rat> big;
    for (const auto& [w, c] : x.terms()) {
        Rat base(c);
        std::vector<QGen> egens, fgens;
        for (const auto& d : w.f) {
            for (int k = 0; k < d.power; ++k) egens.push_back({QGen::Kind::E, d.index});
            base /= factorial(d.power);
        }
        for (const auto& d : w.e) {
            for (int k = 0; k < d.power; ++k) fgens.push_back({QGen::Kind::F, d.index});
            base /= factorial(d.power);
        }
        auto pexp = p_expand(SymElement::schur(w.tau).antipode());
        for (const auto& [mu, r] : pexp) {
            std::vector<QGen> word = egens;
            for (int idx : mu.parts()) word.push_back({QGen::Kind::H, idx});
            word.insert(word.end(), fgens.begin(), fgens.end());
            Rat& slot = big[word];
            slot += base * r;
            if (slot == 0) big.erase(word);
        }
    }
    return to_garland(normalize_pbw(std::move(big), -x.source()), -x.source(), -x.target());
}

namespace {

void gen_divided_lists(int max_index, int rem_power, int rem_loop,
                       std::vector<DividedPower>& cur,
                       std::vector<std::vector<DividedPower>>& out) {
    if (rem_power == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = std::min(max_index, rem_power >= 1 ? std::max(rem_loop, 0) : 0); i >= 0; --i) {
        for (int a = 1; a <= rem_power && i * a <= rem_loop; ++a) {
            cur.push_back({i, a});
            gen_divided_lists(i - 1, rem_power - a, rem_loop - i * a, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<std::vector<DividedPower>> divided_lists(int total_power, int max_loop) {
    std::vector<std::vector<DividedPower>> out;
    std::vector<DividedPower> cur;
    gen_divided_lists(std::max(max_loop, 0), total_power, max_loop, cur, out);
    return out;
}

}  // namespace

std::vector<GarlandWord> enumerate_basis(int n, int m, int D, int bmax) {
    std::vector<GarlandWord> out;
    if ((m - n) % 2 != 0) throw std::invalid_argument("enumerate_basis: m-n must be even");
    int half = (m - n) / 2;
    for (int A = 0; A <= bmax; ++A) {
        int C = A + half;
        if (C < 0) continue;
        for (const auto& fl : divided_lists(A, D)) {
            int df = 0;
            for (const auto& d : fl) df += d.index * d.power;
            for (const auto& el : divided_lists(C, D - df)) {
                int de = df;
                for (const auto& d : el) de += d.index * d.power;
                for (int t = 0; t + de <= D; ++t)
                    for (const auto& tau : partitions_of(t))
                        out.push_back(GarlandWord{fl, tau, el, n});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cur
}  // namespace decat
