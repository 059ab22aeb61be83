#pragma once

// Jacobson radical of kG in characteristic p, radical power chains, Loewy
// lengths with layer dimensions per block, and the simple-module count
// e(B) = dim Z(B/Rad B).
//
// The radical is found in two steps. First the subspace
// T = { x : x^(p^N) lies in the commutator span [A,A] }, with p^N >= dim A,
// which equals Rad(A) + [A,A]; on the group basis the power map permutes
// basis vectors, so T falls out of a partition of G. Then Rad(A) is cut out
// of T as the largest right ideal it contains, by intersecting with
// generator translates until stable. Certificates: the result is checked to
// be a two-sided ideal, nilpotent (power chain hits zero), and to leave a
// semisimple quotient (the same algorithm re-run on A/Rad returns zero).

#include <vector>

#include "modblocks/algebra.hpp"

namespace modblocks::loewy {

using algebra::Context;
using algebra::Subspace;
using algebra::Vec;

// Multiplication table of a finite-dimensional unital algebra in some fixed
// basis; used for quotient algebras and small test algebras.
struct AlgebraTable {
  fields::Field F;
  unsigned dim = 0;
  std::vector<Vec> prod;  // prod[i*dim + j] = coordinates of b_i * b_j
  Vec one;

  Vec mul(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, std::uint64_t e) const;
};

struct RadicalOptions {
  bool certify_nilpotent = true;
  bool certify_quotient = true;
};

// J(kG) as an echelon subspace of kG. Works over any finite field of
// characteristic p; certificates are controlled by opts.
Subspace radical_basis(const Context& ctx, RadicalOptions opts = {});

// Rad(B) = e_B * J(kG)
Subspace block_radical(const Context& ctx, const Vec& e, const Subspace& J);

struct LoewyProfile {
  unsigned ll = 1;
  std::vector<unsigned> layers;  // dims of J^k / J^(k+1), k = 0..ll-1
};

// Loewy length and layer dimensions of the unital algebra with dimension
// dim_b and radical radB. The chain J^(k+1) = sum_i x_i J^k runs over lifts
// x_i of a basis of J/J^2, realized as left-multiplication matrices.
LoewyProfile loewy_length(const Context& ctx, unsigned dim_b, const Subspace& radB);

// dim Z(B / Rad B); block_rows == nullptr means the whole algebra kG.
unsigned simple_count(const Context& ctx, const Subspace* block_rows, const Subspace& radB);

// Quotient algebra numerator/denominator in transversal coordinates;
// numerator == nullptr means all of kG.
AlgebraTable quotient_table(const Context& ctx, const Subspace* numerator,
                            const Subspace& denom);

// Radical of an abstract algebra given by its multiplication table.
Subspace radical_of_table(const AlgebraTable& A);

}  // namespace modblocks::loewy
