#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decat/ints.hpp"

namespace decat {
namespace hh {

/// Dense integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols)) {}

    long rows() const { return r_; }
    long cols() const { return c_; }
    Int& at(long i, long j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    const Int& at(long i, long j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

    static IntMatrix identity(long n);
    IntMatrix mul(const IntMatrix& o) const;
    bool is_zero() const;

private:
    long r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

enum class Pivot { MinAbs, FirstNonzero };

/// Smith normal form U*A*V = D with unimodular U, V; diag holds the full
/// diagonal (invariant factors first, then zeros), divisibility enforced.
struct SnfResult {
    std::vector<Int> diag;
    long rank = 0;
    IntMatrix U, V;  // only filled when with_transforms
};

SnfResult snf(IntMatrix A, bool with_transforms, Pivot pivot = Pivot::MinAbs);

/// One homology group: free rank plus torsion invariant factors (> 1, each
/// dividing the next).
struct Homology {
    long free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const Homology& o) const = default;
    std::string str() const;
};

/// H = ker(d_out) / im(d_in) for  C_+ --d_in--> C --d_out--> C_-  via ranks
/// and the invariant factors of d_in.
Homology homology_at(const IntMatrix& d_out, const IntMatrix& d_in, Pivot pivot = Pivot::MinAbs);
/// Independent route: explicit integer kernel basis of d_out, image expressed
/// in it, Smith form of the resulting presentation.
Homology homology_via_quotient(const IntMatrix& d_out, const IntMatrix& d_in);

/// Morphism basis element reference: objects by index, k-th basis vector.
struct MorKey {
    int from = 0, to = 0, idx = 0;
    auto operator<=>(const MorKey&) const = default;
};

using Combo = std::vector<std::pair<int, Int>>;  // basis index -> coefficient

/// Finite integral linear category: finitely many objects, free hom modules
/// with named bases, composition structure constants, identity expansions.
class FinLinCat {
public:
    int add_object(const std::string& name);
    void set_hom(int x, int y, const std::vector<std::string>& basis);
    void set_identity(int x, const Combo& combo);
    /// result of g o f expressed in the basis of C(f.from, g.to)
    void set_compose(const MorKey& g, const MorKey& f, const Combo& result);

    int num_objects() const { return static_cast<int>(objects_.size()); }
    const std::string& object_name(int x) const { return objects_[static_cast<size_t>(x)]; }
    int hom_rank(int x, int y) const;
    const std::vector<std::string>& hom_basis(int x, int y) const;
    const std::string& mor_name(const MorKey& k) const;
    const Combo& identity(int x) const;
    /// zero when the pair was never set
    Combo compose(const MorKey& g, const MorKey& f) const;

    /// Fills unspecified compositions with identities by the identity laws.
    void default_identity_compositions();
    /// Checks identity laws and associativity on all basis triples; throws a
    /// detailed error naming the offending morphisms.
    void validate() const;

    std::vector<MorKey> all_morphisms() const;

private:
    std::vector<std::string> objects_;
    std::map<std::pair<int, int>, std::vector<std::string>> homs_;
    std::map<int, Combo> identities_;
    std::map<std::pair<MorKey, MorKey>, Combo> comp_;
};

/// Truncated Hochschild-Mitchell complex: C_0..C_maxdeg with differentials
/// d[k]: C_{k+1} -> C_k (k = 0..maxdeg-1); basis tuples kept per degree.
struct BarComplex {
    std::vector<long> ranks;
    std::vector<IntMatrix> d;
    std::vector<std::vector<std::vector<MorKey>>> basis;
};

BarComplex bar_complex(const FinLinCat& C, int maxdeg, long max_entries = 2'000'000);

/// HH_0..HH_{maxdeg-1}.
std::vector<Homology> hochschild(const FinLinCat& C, int maxdeg, long max_entries = 2'000'000);

/// The trace (HH_0) with a canonical-coordinates map for endomorphism classes.
struct Trace0 {
    Homology h;
    long c0_rank = 0;
    std::vector<long> c0_offset_by_object;  // offset of End(x) in C_0 coordinates
    IntMatrix U;                            // row transform of d_1
    std::vector<Int> diag;                  // full SNF diagonal of d_1
    long rank = 0;

    /// canonical coordinates of a C_0 vector in coker(d_1): torsion coords
    /// reduced mod d_i (entries with d_i = 1 dropped), free coords verbatim
    std::vector<Int> class_of_vector(const std::vector<Int>& c0) const;
};

Trace0 trace0(const FinLinCat& C);

/// C_0 coordinate vector of an endomorphism combo at object x.
std::vector<Int> endo_vector(const FinLinCat& C, const Trace0& t, int x, const Combo& f);

/// Class of a block-matrix endomorphism of x_1 + ... + x_k: the sum of the
/// diagonal block classes. blocks[i][j] is a combo in C(x_j, x_i).
std::vector<Int> matrix_trace(const FinLinCat& C, const Trace0& t, const std::vector<int>& xs,
                              const std::vector<std::vector<Combo>>& blocks);

/// Topological order on objects witnessing upper-triangularity, or a cycle of
/// objects through nonzero homs.
struct TriangularCheck {
    bool upper_triangular = false;
    std::vector<int> order;  // topological order when triangular
    std::vector<int> cycle;  // offending object cycle otherwise
};

TriangularCheck check_upper_triangular(const FinLinCat& C);

/// The one-object full subcategory on x (endomorphism ring).
FinLinCat endo_category(const FinLinCat& C, int x);

/// For an upper-triangular category: checks HH_*(C) = direct sum over objects
/// of HH_*(End(x)) degreewise up to maxdeg; throws if C is not triangular.
bool verify_triangular_decomposition(const FinLinCat& C, int maxdeg,
                                     long max_entries = 2'000'000);

}  // namespace hh
}  // namespace decat
