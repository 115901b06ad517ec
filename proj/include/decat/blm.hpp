#pragma once

#include <compare>
#include <map>
#include <string>

#include "decat/laurent.hpp"

namespace decat {
namespace blm {

/// Lusztig canonical basis word of the idempotented quantum sl2:
/// either E^(a)F^(b)1_n with n <= b-a, or F^(b)E^(a)1_n with n >= b-a.
/// At n = b-a (and whenever a or b vanishes) both shapes denote the same
/// element; such words are normalized to the FE form.
struct CanonicalWord {
    int a = 0;           // E divided power
    int b = 0;           // F divided power
    int n = 0;           // source weight
    bool ef = false;     // true: E^(a)F^(b)1_n; false: F^(b)E^(a)1_n

    int target() const { return n + 2 * (a - b); }
    bool valid() const;
    static CanonicalWord make(int a, int b, int n, bool ef);

    auto operator<=>(const CanonicalWord&) const = default;
    std::string str() const;
};

/// Element of a hom-space 1_m (AUdot) 1_n: Laurent-coefficient combination of
/// canonical words sharing source and target weights.
class BlmElement {
public:
    BlmElement() = default;
    BlmElement(int src, int tgt) : src_(src), tgt_(tgt) {}

    static BlmElement unit(int n);                  // 1_n
    static BlmElement gen_E(int a, int n);          // E^(a)1_n
    static BlmElement gen_F(int b, int n);          // F^(b)1_n
    static BlmElement word(const CanonicalWord& w); // canonical word, coefficient 1

    int source() const { return src_; }
    int target() const { return tgt_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<CanonicalWord, LaurentPoly>& terms() const { return terms_; }

    void add_term(const CanonicalWord& w, const LaurentPoly& c);

    BlmElement& operator+=(const BlmElement& o);
    friend BlmElement operator+(BlmElement a, const BlmElement& b) { return a += b; }
    bool operator==(const BlmElement& o) const;

    std::string str() const;

private:
    int src_ = 0, tgt_ = 0;
    std::map<CanonicalWord, LaurentPoly> terms_;
};

/// Product x*y (x composed after y); rewrites to the canonical basis using the
/// divided-power merge and EF/FE commutation relations. Throws on weight mismatch.
BlmElement mul(const BlmElement& x, const BlmElement& y);

/// Every Laurent coefficient evaluated at q = 1.
std::map<CanonicalWord, Int> specialize_q1(const BlmElement& x);

/// Canonical basis words from m to n with F-power at most bmax.
std::vector<CanonicalWord> enumerate_words(int n, int m, int bmax);

}  // namespace blm
}  // namespace decat
