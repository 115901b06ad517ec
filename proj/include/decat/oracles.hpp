#pragma once

#include <map>
#include <vector>

#include "decat/ints.hpp"
#include "decat/partition.hpp"

namespace decat {
namespace oracle {

/// Reference implementations used only by the verification suites and tests.
/// They work with explicit monomial expansions in k variables and share no
/// code with the Schur-basis kernel.

/// Symmetric polynomial in k variables as exponent-vector -> coefficient.
using Poly = std::map<std::vector<int>, Int>;

/// Monomial expansion of s_lambda(x_1..x_k) by semistandard tableaux.
Poly schur_poly(const Partition& lam, int k);

Poly poly_mul(const Poly& a, const Poly& b);

/// Schur coefficients of a symmetric polynomial by greedy subtraction of the
/// lex-leading monomial; throws if the input is not symmetric enough to reduce.
std::map<Partition, Int> schur_decompose(Poly p, int k);

/// Alternant a_mu = sum_sigma sign(sigma) x^{sigma(mu)} in k = |mu| variables.
Poly alternant(const std::vector<int>& mu);

}  // namespace oracle
}  // namespace decat
