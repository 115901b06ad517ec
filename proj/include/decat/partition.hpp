#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace decat {

/// Integer partition: weakly decreasing positive parts, trailing zeros trimmed.
/// The empty partition is P() or Partition{}.
class Partition {
public:
    Partition() = default;
    /// Accepts any weakly decreasing sequence of nonnegative ints; trims zeros.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                  // 0-indexed, 0 beyond length
    bool empty() const { return parts_.empty(); }

    /// Padded copy with trailing zeros up to length a (requires length() <= a).
    std::vector<int> padded(int a) const;

    bool fits_box(int a, int b) const;      // lambda in P(a,b)
    bool fits_rows(int a) const { return length() <= a; }  // lambda in P(a)

    Partition conjugate() const;
    Partition complement(int a, int b) const;  // (b-l_a,...,b-l_1); requires fits_box
    Partition hat(int a, int b) const;         // (complement)^t, lies in P(b,a)

    int mult(int i) const;                  // m_i(lambda): number of parts equal to i

    /// Lexicographic order on padded part sequences; shorter prefix < longer.
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const = default;

    std::string str() const;                // "(3,1,1)" or "()"

private:
    std::vector<int> parts_;
};

/// All partitions of n (n >= 0).
std::vector<Partition> partitions_of(int n);
/// All partitions of n with at most max_parts parts.
std::vector<Partition> partitions_of_max_parts(int n, int max_parts);
/// All partitions fitting in an a x b box (any size), i.e. P(a,b).
std::vector<Partition> partitions_in_box(int a, int b);
/// Number of partitions of n with at most max_parts parts.
long count_partitions_max_parts(int n, int max_parts);

/// Result of straightening a quasi-index from tP(a): zero, or a sign and a partition.
struct Straightened {
    bool zero = true;
    int sign = 0;
    Partition lambda;
};

/// Straightens m (entries m_j >= j-a, 1-indexed) by the staircase rule:
/// zero if m+delta has a repeated entry, otherwise the sign of the sorting
/// permutation and the sorted partition.
Straightened straighten(const std::vector<int>& mtilde);

/// Checks the tP(a) entry bound m_j >= j-a for all j.
bool is_quasi_index(const std::vector<int>& mtilde);

}  // namespace decat
