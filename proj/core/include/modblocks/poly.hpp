#pragma once

// Univariate polynomials over GF(p^m): arithmetic, gcd, modular powering,
// and factorization by squarefree splitting, distinct-degree, and
// equal-degree (Cantor-Zassenhaus) stages. The equal-degree splitters draw
// from a fixed-seed generator, so factor order is reproducible.

#include <utility>
#include <vector>

#include "modblocks/fields.hpp"

namespace modblocks::poly {

using fields::Field;
using fields::scalar;
using Poly = std::vector<scalar>;  // coefficients, low degree first

int degree(const Poly& f);  // -1 for the zero polynomial
void normalize(Poly& f);
bool is_zero(const Poly& f);
Poly constant(scalar c);
Poly monomial_x();

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
// quotient and remainder by a nonzero divisor
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly make_monic(const Field& F, Poly f);
Poly gcd(const Field& F, Poly a, Poly b);  // monic
Poly derivative(const Field& F, const Poly& f);
scalar eval(const Field& F, const Poly& f, scalar x);
Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& modulus);
// inverse of a modulo f; requires gcd(a, f) = 1
Poly invmod(const Field& F, const Poly& a, const Poly& f);

// Monic irreducible factors with multiplicities, sorted by (degree,
// coefficient tuple). The product of factor^multiplicity recovers f up to
// its leading coefficient.
std::vector<std::pair<Poly, unsigned>> factor(const Field& F, Poly f);

}  // namespace modblocks::poly
