#include "decat/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace decat {

LaurentPoly LaurentPoly::monomial(int exp, const Int& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Int& c) {
    if (c == 0) return;
    Int& slot = c_[exp];
    slot += c;
    if (slot == 0) c_.erase(exp);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [e1, c1] : a.c_)
        for (const auto& [e2, c2] : b.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    if (is_zero()) return {};
    // shift both to ordinary polynomials and long-divide
    int sn = c_.begin()->first, sd = d.c_.begin()->first;
    int deg_n = c_.rbegin()->first - sn, deg_d = d.c_.rbegin()->first - sd;
    if (deg_n < deg_d) throw std::runtime_error("LaurentPoly: inexact division");
    std::vector<Int> N(static_cast<size_t>(deg_n) + 1, 0), D(static_cast<size_t>(deg_d) + 1, 0);
    for (const auto& [e, c] : c_) N[static_cast<size_t>(e - sn)] = c;
    for (const auto& [e, c] : d.c_) D[static_cast<size_t>(e - sd)] = c;
    std::vector<Int> Q(static_cast<size_t>(deg_n - deg_d) + 1, 0);
    for (int k = deg_n - deg_d; k >= 0; --k) {
        Int lead = N[static_cast<size_t>(k + deg_d)];
        if (lead == 0) continue;
        Int q = div_exact(lead, D[static_cast<size_t>(deg_d)]);
        Q[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= deg_d; ++i) N[static_cast<size_t>(k + i)] -= q * D[static_cast<size_t>(i)];
    }
    for (const Int& rem : N)
        if (rem != 0) throw std::runtime_error("LaurentPoly: inexact division");
    LaurentPoly out;
    for (int k = 0; k <= deg_n - deg_d; ++k)
        out.add_term(k + sn - sd, Q[static_cast<size_t>(k)]);
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly qint(int k) {
    LaurentPoly p;
    int a = k >= 0 ? k : -k;
    for (int e = a - 1; e >= -a + 1; e -= 2) p.add_term(e, k >= 0 ? 1 : -1);
    return p;
}

LaurentPoly qfact(int j) {
    LaurentPoly p(1);
    for (int i = 1; i <= j; ++i) p = p * qint(i);
    return p;
}

LaurentPoly gauss_binom(int m, int j) {
    if (j < 0) throw std::invalid_argument("gauss_binom: j must be nonnegative");
    LaurentPoly num(1);
    for (int i = 1; i <= j; ++i) {
        if (m - i + 1 == 0) return {};
        num = num * qint(m - i + 1);
    }
    return num.divided_by(qfact(j));
}

}  // namespace decat
