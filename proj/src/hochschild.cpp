#include "decat/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace decat {
namespace hh {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("IntMatrix::mul: shape mismatch");
    IntMatrix r(r_, o.c_);
    for (long i = 0; i < r_; ++i)
        for (long k = 0; k < c_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < o.c_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Ops {
    IntMatrix* U = nullptr;  // row ops mirror
    IntMatrix* V = nullptr;  // col ops mirror

    static void swap_rows(IntMatrix& A, long i, long j) {
        for (long k = 0; k < A.cols(); ++k) std::swap(A.at(i, k), A.at(j, k));
    }
    static void add_row(IntMatrix& A, long dst, long src, const Int& f) {
        for (long k = 0; k < A.cols(); ++k) A.at(dst, k) += f * A.at(src, k);
    }
    static void swap_cols(IntMatrix& A, long i, long j) {
        for (long k = 0; k < A.rows(); ++k) std::swap(A.at(k, i), A.at(k, j));
    }
    static void add_col(IntMatrix& A, long dst, long src, const Int& f) {
        for (long k = 0; k < A.rows(); ++k) A.at(k, dst) += f * A.at(k, src);
    }
    static void neg_row(IntMatrix& A, long i) {
        for (long k = 0; k < A.cols(); ++k) A.at(i, k) = -A.at(i, k);
    }
};

}  // namespace

SnfResult snf(IntMatrix A, bool with_transforms, Pivot pivot) {
    SnfResult res;
    long r = A.rows(), c = A.cols();
    IntMatrix U, V;
    if (with_transforms) {
        U = IntMatrix::identity(r);
        V = IntMatrix::identity(c);
    }
    long t = 0;
    while (t < std::min(r, c)) {
        // pick pivot in the trailing submatrix
        long pi = -1, pj = -1;
        if (pivot == Pivot::FirstNonzero) {
            for (long i = t; i < r && pi < 0; ++i)
                for (long j = t; j < c; ++j)
                    if (A.at(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
        } else {
            Int best = 0;
            for (long i = t; i < r; ++i)
                for (long j = t; j < c; ++j) {
                    const Int& v = A.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pi < 0 || av < best) {
                        pi = i;
                        pj = j;
                        best = av;
                    }
                }
        }
        if (pi < 0) break;  // all zero
        Ops::swap_rows(A, t, pi);
        if (with_transforms) Ops::swap_rows(U, t, pi);
        Ops::swap_cols(A, t, pj);
        if (with_transforms) Ops::swap_cols(V, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (long i = t + 1; i < r; ++i) {
                if (A.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
                Ops::add_row(A, i, t, -q);
                if (with_transforms) Ops::add_row(U, i, t, -q);
                if (A.at(i, t) != 0) {
                    Ops::swap_rows(A, t, i);
                    if (with_transforms) Ops::swap_rows(U, t, i);
                    clean = false;
                }
            }
            for (long j = t + 1; j < c; ++j) {
                if (A.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
                Ops::add_col(A, j, t, -q);
                if (with_transforms) Ops::add_col(V, j, t, -q);
                if (A.at(t, j) != 0) {
                    Ops::swap_cols(A, t, j);
                    if (with_transforms) Ops::swap_cols(V, t, j);
                    clean = false;
                }
            }
        }
        if (A.at(t, t) < 0) {
            Ops::neg_row(A, t);
            if (with_transforms) Ops::neg_row(U, t);
        }
        // enforce divisibility of the remaining block by the pivot
        bool redo = false;
        for (long i = t + 1; i < r && !redo; ++i)
            for (long j = t + 1; j < c; ++j) {
                if (A.at(i, j) % A.at(t, t) != 0) {
                    Ops::add_row(A, t, i, 1);
                    if (with_transforms) Ops::add_row(U, t, i, 1);
                    redo = true;
                    break;
                }
            }
        if (!redo) ++t;
    }
    res.rank = t;
    res.diag.resize(static_cast<size_t>(std::min(r, c)));
    for (long i = 0; i < std::min(r, c); ++i) res.diag[static_cast<size_t>(i)] = A.at(i, i);
    if (with_transforms) {
        res.U = std::move(U);
        res.V = std::move(V);
    }
    return res;
}

std::string Homology::str() const {
    std::ostringstream os;
    if (free_rank == 0 && torsion.empty()) return "0";
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

Homology homology_at(const IntMatrix& d_out, const IntMatrix& d_in, Pivot pivot) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_at: middle ranks disagree");
    SnfResult so = snf(d_out, false, pivot);
    SnfResult si = snf(d_in, false, pivot);
    Homology h;
    h.free_rank = d_out.cols() - so.rank - si.rank;
    for (long i = 0; i < si.rank; ++i) {
        const Int& v = si.diag[static_cast<size_t>(i)];
        if (v != 1 && v != -1) h.torsion.push_back(abs(v));
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

Homology homology_via_quotient(const IntMatrix& d_out, const IntMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_via_quotient: middle ranks disagree");
    long nmid = d_out.cols();
    // integer kernel basis of d_out: columns of V beyond the rank
    SnfResult so = snf(d_out, true, Pivot::FirstNonzero);
    long kdim = nmid - so.rank;
    IntMatrix K(nmid, kdim);
    for (long i = 0; i < nmid; ++i)
        for (long j = 0; j < kdim; ++j) K.at(i, j) = so.V.at(i, so.rank + j);
    // solve K * M = d_in  (image lies in the kernel)
    SnfResult sk = snf(K, true, Pivot::FirstNonzero);
    if (sk.rank != kdim) throw std::logic_error("homology_via_quotient: kernel basis not free");
    IntMatrix Y = sk.U.mul(d_in);
    IntMatrix X(kdim, d_in.cols());
    for (long i = 0; i < Y.rows(); ++i)
        for (long j = 0; j < Y.cols(); ++j) {
            if (i < kdim) X.at(i, j) = div_exact(Y.at(i, j), sk.diag[static_cast<size_t>(i)]);
            else if (Y.at(i, j) != 0)
                throw std::logic_error("homology_via_quotient: image escapes the kernel");
        }
    IntMatrix M = sk.V.mul(X);
    SnfResult sm = snf(std::move(M), false, Pivot::MinAbs);
    Homology h;
    h.free_rank = kdim - sm.rank;
    for (long i = 0; i < sm.rank; ++i) {
        const Int& v = sm.diag[static_cast<size_t>(i)];
        if (v != 1 && v != -1) h.torsion.push_back(abs(v));
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

// ---------------------------------------------------------------------------
// FinLinCat

int FinLinCat::add_object(const std::string& name) {
    objects_.push_back(name);
    return static_cast<int>(objects_.size()) - 1;
}

void FinLinCat::set_hom(int x, int y, const std::vector<std::string>& basis) {
    homs_[{x, y}] = basis;
}

void FinLinCat::set_identity(int x, const Combo& combo) { identities_[x] = combo; }

void FinLinCat::set_compose(const MorKey& g, const MorKey& f, const Combo& result) {
    if (f.to != g.from) throw std::invalid_argument("set_compose: not composable");
    comp_[{g, f}] = result;
}

int FinLinCat::hom_rank(int x, int y) const {
    auto it = homs_.find({x, y});
    return it == homs_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& FinLinCat::hom_basis(int x, int y) const {
    static const std::vector<std::string> kEmpty;
    auto it = homs_.find({x, y});
    return it == homs_.end() ? kEmpty : it->second;
}

const std::string& FinLinCat::mor_name(const MorKey& k) const {
    return hom_basis(k.from, k.to)[static_cast<size_t>(k.idx)];
}

const Combo& FinLinCat::identity(int x) const {
    auto it = identities_.find(x);
    if (it == identities_.end())
        throw std::invalid_argument("identity of " + objects_[static_cast<size_t>(x)] + " missing");
    return it->second;
}

Combo FinLinCat::compose(const MorKey& g, const MorKey& f) const {
    auto it = comp_.find({g, f});
    return it == comp_.end() ? Combo{} : it->second;
}

std::vector<MorKey> FinLinCat::all_morphisms() const {
    std::vector<MorKey> out;
    for (const auto& [xy, basis] : homs_)
        for (int k = 0; k < static_cast<int>(basis.size()); ++k)
            out.push_back({xy.first, xy.second, k});
    return out;
}

namespace {

Combo compose_combo(const FinLinCat& C, int gx, int gy, const Combo& g, int fx, int fy,
                    const Combo& f) {
    // g in C(gx,gy) combo, f in C(fx,fy) combo, fy == gx
    std::map<int, Int> acc;
    for (const auto& [gi, gc] : g)
        for (const auto& [fi, fc] : f)
            for (const auto& [ri, rc] : C.compose({gx, gy, gi}, {fx, fy, fi})) acc[ri] += gc * fc * rc;
    Combo out;
    for (const auto& [i, c] : acc)
        if (c != 0) out.emplace_back(i, c);
    return out;
}

bool combo_eq(Combo a, Combo b) {
    auto norm = [](Combo& x) {
        std::sort(x.begin(), x.end());
        std::erase_if(x, [](const auto& p) { return p.second == 0; });
    };
    norm(a);
    norm(b);
    return a == b;
}

}  // namespace

void FinLinCat::default_identity_compositions() {
    for (const MorKey& f : all_morphisms()) {
        const Combo& idt = identity(f.to);
        const Combo& ids = identity(f.from);
        for (const auto& [gi, gc] : idt) {
            MorKey g{f.to, f.to, gi};
            if (comp_.find({g, f}) == comp_.end()) {
                // id_to o f = f: distribute so the identity law holds when the
                // identity is a single basis vector with coefficient 1
                if (idt.size() == 1 && idt[0].second == 1) comp_[{g, f}] = {{f.idx, 1}};
            }
        }
        for (const auto& [gi, gc] : ids) {
            MorKey g{f.from, f.from, gi};
            if (comp_.find({f, g}) == comp_.end()) {
                if (ids.size() == 1 && ids[0].second == 1) comp_[{f, g}] = {{f.idx, 1}};
            }
        }
    }
}

void FinLinCat::validate() const {
    // identity laws
    for (const MorKey& f : all_morphisms()) {
        Combo lhs = compose_combo(*this, f.to, f.to, identity(f.to), f.from, f.to, {{f.idx, 1}});
        if (!combo_eq(lhs, {{f.idx, 1}}))
            throw std::runtime_error("identity law fails: id_{" +
                                     objects_[static_cast<size_t>(f.to)] + "} o " + mor_name(f));
        Combo rhs = compose_combo(*this, f.from, f.to, {{f.idx, 1}}, f.from, f.from, identity(f.from));
        if (!combo_eq(rhs, {{f.idx, 1}}))
            throw std::runtime_error("identity law fails: " + mor_name(f) + " o id_{" +
                                     objects_[static_cast<size_t>(f.from)] + "}");
    }
    // associativity on basis triples
    std::vector<MorKey> mors = all_morphisms();
    for (const MorKey& h : mors)
        for (const MorKey& g : mors) {
            if (g.to != h.from) continue;
            Combo hg = compose(h, g);  // in C(g.from, h.to)
            for (const MorKey& f : mors) {
                if (f.to != g.from) continue;
                Combo gf = compose(g, f);  // in C(f.from, g.to)
                Combo h_gf = compose_combo(*this, h.from, h.to, {{h.idx, 1}}, f.from, g.to, gf);
                Combo hg_f = compose_combo(*this, g.from, h.to, hg, f.from, f.to, {{f.idx, 1}});
                if (!combo_eq(h_gf, hg_f))
                    throw std::runtime_error("associativity fails on (" + mor_name(h) + ", " +
                                             mor_name(g) + ", " + mor_name(f) + ")");
            }
        }
}

// ---------------------------------------------------------------------------
// Bar complex

BarComplex bar_complex(const FinLinCat& C, int maxdeg, long max_entries) {
    BarComplex bc;
    std::vector<MorKey> mors = C.all_morphisms();
    // degree 0: single morphisms with matching endpoints (cyclic tuples of length 1)
    bc.basis.resize(static_cast<size_t>(maxdeg) + 1);
    for (const MorKey& f : mors)
        if (f.from == f.to) bc.basis[0].push_back({f});
    for (int d = 1; d <= maxdeg; ++d) {
        // cyclic composable chains x_0 -> x_1 -> ... -> x_d -> x_0, built in
        // application order f_0, ..., f_d, stored reversed as [f_d, ..., f_0]
        std::vector<std::vector<MorKey>> app_tuples;
        std::function<void(std::vector<MorKey>&)> rec0 = [&](std::vector<MorKey>& cur) {
            if (static_cast<int>(cur.size()) == d + 1) {
                if (cur.back().to == cur.front().from) app_tuples.push_back(cur);
                return;
            }
            for (const MorKey& f : mors) {
                if (!cur.empty() && f.from != cur.back().to) continue;
                cur.push_back(f);
                rec0(cur);
                cur.pop_back();
            }
        };
        std::vector<MorKey> cur;
        rec0(cur);
        for (auto& t : app_tuples) {
            std::reverse(t.begin(), t.end());
            bc.basis[static_cast<size_t>(d)].push_back(std::move(t));
        }
    }
    bc.ranks.resize(static_cast<size_t>(maxdeg) + 1);
    for (int d = 0; d <= maxdeg; ++d) bc.ranks[static_cast<size_t>(d)] =
        static_cast<long>(bc.basis[static_cast<size_t>(d)].size());
    for (int d = 0; d + 1 <= maxdeg; ++d) {
        long rows = bc.ranks[static_cast<size_t>(d)], cols = bc.ranks[static_cast<size_t>(d + 1)];
        if (rows * cols > max_entries)
            throw std::runtime_error("bar_complex: size guard exceeded at degree " +
                                     std::to_string(d + 1) + " (" + std::to_string(rows * cols) +
                                     " entries)");
    }
    // index maps
    std::vector<std::map<std::vector<MorKey>, long>> index(static_cast<size_t>(maxdeg) + 1);
    for (int d = 0; d <= maxdeg; ++d)
        for (long i = 0; i < bc.ranks[static_cast<size_t>(d)]; ++i)
            index[static_cast<size_t>(d)][bc.basis[static_cast<size_t>(d)][static_cast<size_t>(i)]] = i;

    for (int d = 1; d <= maxdeg; ++d) {
        IntMatrix M(bc.ranks[static_cast<size_t>(d - 1)], bc.ranks[static_cast<size_t>(d)]);
        for (long col = 0; col < bc.ranks[static_cast<size_t>(d)]; ++col) {
            const auto& t = bc.basis[static_cast<size_t>(d)][static_cast<size_t>(col)];
            // t = [f_d, f_{d-1}, ..., f_0]
            auto add = [&](const std::vector<MorKey>& prefix, const MorKey& a, const MorKey& b,
                           int sign, const std::vector<MorKey>& suffix) {
                for (const auto& [ri, rc] : C.compose(a, b)) {
                    std::vector<MorKey> nt = prefix;
                    nt.push_back({b.from, a.to, ri});
                    nt.insert(nt.end(), suffix.begin(), suffix.end());
                    M.at(index[static_cast<size_t>(d - 1)].at(nt), col) += sign * rc;
                }
            };
            for (int i = 0; i < d; ++i) {
                std::vector<MorKey> prefix(t.begin(), t.begin() + i);
                std::vector<MorKey> suffix(t.begin() + i + 2, t.end());
                add(prefix, t[static_cast<size_t>(i)], t[static_cast<size_t>(i) + 1],
                    (i % 2 == 0) ? 1 : -1, suffix);
            }
            {
                // last term: (-1)^d f_0 f_d tensor f_{d-1} ... f_1
                std::vector<MorKey> suffix(t.begin() + 1, t.end() - 1);
                const MorKey& f0 = t.back();
                const MorKey& fd = t.front();
                for (const auto& [ri, rc] : C.compose(f0, fd)) {
                    std::vector<MorKey> nt;
                    nt.push_back({fd.from, f0.to, ri});
                    nt.insert(nt.end(), suffix.begin(), suffix.end());
                    M.at(index[static_cast<size_t>(d - 1)].at(nt), col) +=
                        ((d % 2 == 0) ? 1 : -1) * rc;
                }
            }
        }
        bc.d.push_back(std::move(M));
    }
    return bc;
}

std::vector<Homology> hochschild(const FinLinCat& C, int maxdeg, long max_entries) {
    BarComplex bc = bar_complex(C, maxdeg, max_entries);
    std::vector<Homology> out;
    for (int k = 0; k + 1 <= maxdeg; ++k) {
        IntMatrix d_out = (k == 0) ? IntMatrix(0, bc.ranks[0]) : bc.d[static_cast<size_t>(k - 1)];
        out.push_back(homology_at(d_out, bc.d[static_cast<size_t>(k)]));
    }
    return out;
}

Trace0 trace0(const FinLinCat& C) {
    BarComplex bc = bar_complex(C, 1);
    Trace0 t;
    t.c0_rank = bc.ranks[0];
    // offset of each object's End block inside the C_0 basis
    t.c0_offset_by_object.assign(static_cast<size_t>(C.num_objects()), -1);
    for (long i = 0; i < bc.ranks[0]; ++i) {
        int x = bc.basis[0][static_cast<size_t>(i)][0].from;
        if (t.c0_offset_by_object[static_cast<size_t>(x)] < 0)
            t.c0_offset_by_object[static_cast<size_t>(x)] = i;
    }
    SnfResult s = snf(bc.d.empty() ? IntMatrix(bc.ranks[0], 0) : bc.d[0], true, Pivot::MinAbs);
    t.U = std::move(s.U);
    t.diag = std::move(s.diag);
    t.rank = s.rank;
    t.h.free_rank = t.c0_rank - t.rank;
    for (long i = 0; i < t.rank; ++i) {
        const Int& v = t.diag[static_cast<size_t>(i)];
        if (v != 1 && v != -1) t.h.torsion.push_back(abs(v));
    }
    std::sort(t.h.torsion.begin(), t.h.torsion.end());
    return t;
}

std::vector<Int> Trace0::class_of_vector(const std::vector<Int>& c0) const {
    if (static_cast<long>(c0.size()) != c0_rank)
        throw std::invalid_argument("class_of_vector: wrong length");
    std::vector<Int> z(static_cast<size_t>(c0_rank), 0);
    for (long i = 0; i < c0_rank; ++i) {
        Int s = 0;
        for (long j = 0; j < c0_rank; ++j)
            if (U.at(i, j) != 0 && c0[static_cast<size_t>(j)] != 0)
                s += U.at(i, j) * c0[static_cast<size_t>(j)];
        z[static_cast<size_t>(i)] = s;
    }
    std::vector<Int> out;
    for (long i = 0; i < c0_rank; ++i) {
        if (i < rank) {
            Int d = abs(diag[static_cast<size_t>(i)]);
            if (d == 1) continue;
            Int v;
            mpz_fdiv_r(v.get_mpz_t(), z[static_cast<size_t>(i)].get_mpz_t(), d.get_mpz_t());
            out.push_back(v);
        } else {
            out.push_back(z[static_cast<size_t>(i)]);
        }
    }
    return out;
}

std::vector<Int> endo_vector(const FinLinCat& C, const Trace0& t, int x, const Combo& f) {
    std::vector<Int> v(static_cast<size_t>(t.c0_rank), 0);
    long off = t.c0_offset_by_object[static_cast<size_t>(x)];
    if (off < 0) throw std::invalid_argument("endo_vector: object has no endomorphisms");
    for (const auto& [i, c] : f) v[static_cast<size_t>(off + i)] += c;
    (void)C;
    return v;
}

std::vector<Int> matrix_trace(const FinLinCat& C, const Trace0& t, const std::vector<int>& xs,
                              const std::vector<std::vector<Combo>>& blocks) {
    size_t k = xs.size();
    if (blocks.size() != k) throw std::invalid_argument("matrix_trace: block shape mismatch");
    std::vector<Int> acc(static_cast<size_t>(t.c0_rank), 0);
    for (size_t i = 0; i < k; ++i) {
        if (blocks[i].size() != k) throw std::invalid_argument("matrix_trace: block shape mismatch");
        std::vector<Int> v = endo_vector(C, t, xs[i], blocks[i][i]);
        for (size_t j = 0; j < v.size(); ++j) acc[j] += v[j];
    }
    return t.class_of_vector(acc);
}

TriangularCheck check_upper_triangular(const FinLinCat& C) {
    int n = C.num_objects();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && C.hom_rank(x, y) > 0) adj[static_cast<size_t>(x)].push_back(y);
    // Kahn toposort
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y : adj[static_cast<size_t>(x)]) indeg[static_cast<size_t>(y)]++;
    std::vector<int> stack, order;
    for (int x = 0; x < n; ++x)
        if (indeg[static_cast<size_t>(x)] == 0) stack.push_back(x);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : adj[static_cast<size_t>(x)])
            if (--indeg[static_cast<size_t>(y)] == 0) stack.push_back(y);
    }
    TriangularCheck res;
    if (static_cast<int>(order.size()) == n) {
        res.upper_triangular = true;
        res.order = std::move(order);
        return res;
    }
    // find a cycle among remaining vertices by DFS
    std::vector<int> state(static_cast<size_t>(n), 0), parent(static_cast<size_t>(n), -1);
    std::function<bool(int)> dfs = [&](int x) {
        state[static_cast<size_t>(x)] = 1;
        for (int y : adj[static_cast<size_t>(x)]) {
            if (state[static_cast<size_t>(y)] == 1) {
                res.cycle.push_back(y);
                int cur = x;
                while (cur != y) {
                    res.cycle.push_back(cur);
                    cur = parent[static_cast<size_t>(cur)];
                }
                std::reverse(res.cycle.begin(), res.cycle.end());
                return true;
            }
            if (state[static_cast<size_t>(y)] == 0) {
                parent[static_cast<size_t>(y)] = x;
                if (dfs(y)) return true;
            }
        }
        state[static_cast<size_t>(x)] = 2;
        return false;
    };
    for (int x = 0; x < n; ++x)
        if (state[static_cast<size_t>(x)] == 0 && dfs(x)) break;
    return res;
}

FinLinCat endo_category(const FinLinCat& C, int x) {
    FinLinCat E;
    E.add_object(C.object_name(x));
    E.set_hom(0, 0, C.hom_basis(x, x));
    E.set_identity(0, C.identity(x));
    int r = C.hom_rank(x, x);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) E.set_compose({0, 0, i}, {0, 0, j}, C.compose({x, x, i}, {x, x, j}));
    return E;
}

bool verify_triangular_decomposition(const FinLinCat& C, int maxdeg, long max_entries) {
    TriangularCheck tri = check_upper_triangular(C);
    if (!tri.upper_triangular)
        throw std::invalid_argument("verify_triangular_decomposition: category is not upper-triangular");
    std::vector<Homology> whole = hochschild(C, maxdeg, max_entries);
    std::vector<Homology> sum(whole.size());
    for (int x = 0; x < C.num_objects(); ++x) {
        std::vector<Homology> part = hochschild(endo_category(C, x), maxdeg, max_entries);
        for (size_t i = 0; i < sum.size(); ++i) {
            sum[i].free_rank += part[i].free_rank;
            sum[i].torsion.insert(sum[i].torsion.end(), part[i].torsion.begin(),
                                  part[i].torsion.end());
        }
    }
    for (size_t i = 0; i < whole.size(); ++i) {
        std::sort(sum[i].torsion.begin(), sum[i].torsion.end());
        if (!(whole[i] == sum[i])) return false;
    }
    return true;
}

}  // namespace hh
}  // namespace decat
