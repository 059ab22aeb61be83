#include "modblocks/loewy.hpp"

#include <algorithm>

namespace modblocks::loewy {

using algebra::axpy;
using algebra::basis_vec;
using algebra::is_zero;
using algebra::leftmul_apply;
using algebra::leftmul_matrix;
using algebra::multiply;
using algebra::zero_vec;
using fields::Field;
using fields::scalar;

Vec AlgebraTable::mul(const Vec& a, const Vec& b) const {
  Vec out(dim, 0);
  for (unsigned i = 0; i < dim; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < dim; ++j) {
      if (!b[j]) continue;
      axpy(F, out, F.mul(a[i], b[j]), prod[std::size_t(i) * dim + j]);
    }
  }
  return out;
}

Vec AlgebraTable::power(const Vec& a, std::uint64_t e) const {
  Vec r = one, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

namespace {

// exponent p^N with p^N >= bound
std::uint64_t p_power_at_least(unsigned p, std::uint64_t bound) {
  std::uint64_t e = 1;
  while (e < bound) e *= p;
  return e;
}

unsigned pow_element(const groups::FiniteGroup& G, unsigned g, std::uint64_t e) {
  e %= G.order_of(g);
  unsigned r = 0, base = g;
  while (e) {
    if (e & 1) r = G.mult(r, base);
    base = G.mult(base, base);
    e >>= 1;
  }
  return r;
}

// T = Rad + [A,A] on the group basis: x = sum a_g g lies in T iff for every
// conjugacy class C the coefficients over { g : g^(p^N) in C } sum to zero,
// so differences within those fibers form a basis.
Subspace group_power_subspace(const Context& ctx) {
  const auto& G = ctx.group();
  const std::size_t n = G.size();
  const std::uint64_t e = p_power_at_least(ctx.F.p(), n);
  std::vector<int> fiber_first(G.conjugacy_classes().size(), -1);
  Subspace T(n);
  for (unsigned g = 0; g < n; ++g) {
    unsigned cls = G.class_of(pow_element(G, g, e));
    if (fiber_first[cls] < 0) {
      fiber_first[cls] = int(g);
      continue;
    }
    Vec v = zero_vec(n);
    v[g] = 1;
    v[unsigned(fiber_first[cls])] = std::uint16_t(ctx.F.neg(1));
    T.insert(ctx.F, std::move(v));
  }
  return T;
}

// Largest right ideal inside U: intersect with right translates by the
// generators until stable. The fixed point is exactly the radical since any
// right ideal of the semisimple quotient killed by all component traces is
// zero.
Subspace largest_right_ideal_group(const Context& ctx, Subspace W) {
  const auto& gens = ctx.group().generator_positions();
  if (gens.empty()) {
    // trivial group: A = k is semisimple unless U already vanishes
    return Subspace(ctx.dim());
  }
  while (W.dim() > 0) {
    std::vector<Vec> conditions(W.dim());
    bool all_zero = true;
    for (unsigned i = 0; i < W.dim(); ++i) {
      Vec cond;
      cond.reserve(gens.size() * ctx.dim());
      for (auto s : gens) {
        Vec r = W.reduce(ctx.F, algebra::right_translate(ctx, W.rows()[i], s));
        if (!is_zero(r)) all_zero = false;
        cond.insert(cond.end(), r.begin(), r.end());
      }
      conditions[i] = std::move(cond);
    }
    if (all_zero) break;
    auto alphas = algebra::kernel(ctx.F, conditions);
    Subspace next(ctx.dim());
    for (const auto& a : alphas) {
      Vec v = zero_vec(ctx.dim());
      for (unsigned i = 0; i < W.dim(); ++i)
        if (a[i]) axpy(ctx.F, v, a[i], W.rows()[i]);
      next.insert(ctx.F, std::move(v));
    }
    if (next.dim() == W.dim()) throw InternalDefect("radical: refinement failed to descend");
    W = std::move(next);
  }
  return W;
}

// power chain J^2, J^3, ... returning the dims; throws unless it reaches 0
std::vector<unsigned> radical_chain_dims(const Context& ctx, const Subspace& radB) {
  std::vector<unsigned> dims{radB.dim()};
  if (radB.dim() == 0) return dims;
  // J^2 by spanning all products of basis vectors
  Subspace J2(ctx.dim());
  for (const auto& b : radB.rows()) {
    auto cols = leftmul_matrix(ctx, b);
    for (const auto& c : radB.rows()) J2.insert(ctx.F, leftmul_apply(ctx.F, cols, c));
  }
  // lifts of a basis of J/J^2: rows of J whose pivot is not a pivot of J^2
  std::vector<std::vector<Vec>> lift_cols;
  for (unsigned i = 0; i < radB.dim(); ++i) {
    if (!std::binary_search(J2.pivots().begin(), J2.pivots().end(), radB.pivots()[i]))
      lift_cols.push_back(leftmul_matrix(ctx, radB.rows()[i]));
  }
  Subspace cur = std::move(J2);
  while (true) {
    dims.push_back(cur.dim());
    if (cur.dim() == 0) break;
    if (dims.size() > ctx.dim() + 2) throw InternalDefect("radical chain does not terminate");
    if (dims[dims.size() - 1] >= dims[dims.size() - 2])
      throw InternalDefect("radical chain is not strictly descending");
    Subspace next(ctx.dim());
    for (const auto& cols : lift_cols)
      for (const auto& r : cur.rows()) next.insert(ctx.F, leftmul_apply(ctx.F, cols, r));
    cur = std::move(next);
  }
  return dims;
}

}  // namespace

Subspace radical_basis(const Context& ctx, RadicalOptions opts) {
  Subspace T = group_power_subspace(ctx);
  Subspace J = largest_right_ideal_group(ctx, std::move(T));

  // certificate: two-sided ideal
  for (auto s : ctx.group().generator_positions()) {
    for (const auto& r : J.rows()) {
      if (!J.member(ctx.F, algebra::left_translate(ctx, s, r)))
        throw InternalDefect("radical: not a left ideal");
      if (!J.member(ctx.F, algebra::right_translate(ctx, r, s)))
        throw InternalDefect("radical: not a right ideal");
    }
  }
  if (opts.certify_nilpotent) radical_chain_dims(ctx, J);
  if (opts.certify_quotient) {
    AlgebraTable q = quotient_table(ctx, nullptr, J);
    if (radical_of_table(q).dim() != 0)
      throw InternalDefect("radical: quotient is not semisimple");
  }
  return J;
}

Subspace block_radical(const Context& ctx, const Vec& e, const Subspace& J) {
  auto cols = leftmul_matrix(ctx, e);
  Subspace out(ctx.dim());
  for (const auto& r : J.rows()) out.insert(ctx.F, leftmul_apply(ctx.F, cols, r));
  return out;
}

LoewyProfile loewy_length(const Context& ctx, unsigned dim_b, const Subspace& radB) {
  std::vector<unsigned> dims = radical_chain_dims(ctx, radB);
  LoewyProfile out;
  out.ll = unsigned(dims.size());  // dims = [dim J^1, ..., dim J^ll = 0]
  out.layers.resize(out.ll);
  out.layers[0] = dim_b - dims[0];
  for (unsigned k = 1; k < out.ll; ++k) out.layers[k] = dims[k - 1] - dims[k];
  unsigned total = 0;
  for (unsigned v : out.layers) {
    if (v == 0) throw InternalDefect("loewy_length: zero layer");
    total += v;
  }
  if (total != dim_b) throw InternalDefect("loewy_length: layers do not sum to dim B");
  return out;
}

AlgebraTable quotient_table(const Context& ctx, const Subspace* numerator,
                            const Subspace& denom) {
  const Field& F = ctx.F;
  const std::size_t n = ctx.dim();
  // transversal representatives and their pivot positions
  std::vector<Vec> reps;
  std::vector<int> piv;
  if (numerator == nullptr) {
    for (unsigned pos = 0; pos < n; ++pos)
      if (!std::binary_search(denom.pivots().begin(), denom.pivots().end(), int(pos))) {
        reps.push_back(basis_vec(n, pos));
        piv.push_back(int(pos));
      }
  } else {
    for (unsigned i = 0; i < numerator->dim(); ++i)
      if (!std::binary_search(denom.pivots().begin(), denom.pivots().end(),
                              numerator->pivots()[i])) {
        reps.push_back(numerator->rows()[i]);
        piv.push_back(numerator->pivots()[i]);
      }
  }
  const unsigned d = unsigned(reps.size());
  auto coords = [&](Vec v) {
    v = denom.reduce(F, std::move(v));
    Vec c(d, 0);
    for (unsigned i = 0; i < d; ++i) c[i] = v[piv[i]];
    return c;
  };
  AlgebraTable A;
  A.F = F;
  A.dim = d;
  A.prod.resize(std::size_t(d) * d);
  for (unsigned i = 0; i < d; ++i) {
    auto cols = leftmul_matrix(ctx, reps[i]);
    for (unsigned j = 0; j < d; ++j)
      A.prod[std::size_t(i) * d + j] = coords(leftmul_apply(F, cols, reps[j]));
  }
  if (numerator == nullptr) {
    A.one = coords(basis_vec(n, 0));
  } else {
    // identity of the block: reconstruct e from the numerator rows; the
    // caller passes block rows whose span contains the idempotent, and the
    // quotient identity is its image. Solve 1*x = x on the basis instead.
    // For a unital subalgebra the identity is the unique element acting as
    // identity; recover it by solving e * b_j = b_j for all j.
    std::vector<Vec> conds(d);
    for (unsigned i = 0; i < d; ++i) {
      Vec cond;
      cond.reserve(std::size_t(d) * d);
      for (unsigned j = 0; j < d; ++j) {
        const Vec& pij = A.prod[std::size_t(i) * d + j];
        cond.insert(cond.end(), pij.begin(), pij.end());
      }
      conds[i] = std::move(cond);
    }
    // solve sum_i e_i (b_i b_j) = b_j simultaneously: move the target to the
    // left by appending a fixed row with coefficient -1
    Vec target;
    for (unsigned j = 0; j < d; ++j) {
      Vec unit(d, 0);
      unit[j] = 1;
      target.insert(target.end(), unit.begin(), unit.end());
    }
    for (auto& x : target) x = std::uint16_t(F.neg(x));
    conds.push_back(std::move(target));
    auto sols = algebra::kernel(F, conds);
    Vec e;
    for (const auto& s : sols)
      if (s[d] != 0) {
        scalar c = F.inv(s[d]);
        e.assign(d, 0);
        for (unsigned i = 0; i < d; ++i) e[i] = std::uint16_t(F.mul(c, s[i]));
        break;
      }
    if (e.empty()) throw InternalDefect("quotient_table: no identity in quotient");
    A.one = std::move(e);
  }
  return A;
}

Subspace radical_of_table(const AlgebraTable& A) {
  const Field& F = A.F;
  const unsigned d = A.dim;
  if (d == 0) return Subspace(0);
  // commutator span [A,A]
  Subspace K(d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      K.insert(F, algebra::sub(F, A.prod[std::size_t(i) * d + j],
                               A.prod[std::size_t(j) * d + i]));
  // T = { x : x^(p^N) in [A,A] } via the p^N-semilinear power map
  const std::uint64_t e = p_power_at_least(F.p(), d);
  unsigned steps = 0;
  for (std::uint64_t v = 1; v < e; v *= F.p()) ++steps;
  std::vector<Vec> conditions(d);
  for (unsigned i = 0; i < d; ++i) {
    Vec b(d, 0);
    b[i] = 1;
    conditions[i] = K.reduce(F, A.power(b, e));
  }
  Subspace T(d);
  for (const auto& alpha : algebra::semilinear_kernel(F, conditions, steps))
    T.insert(F, alpha);
  // largest right ideal inside T, refining against all basis multipliers
  Subspace W = std::move(T);
  while (W.dim() > 0) {
    std::vector<Vec> conds(W.dim());
    bool all_zero = true;
    for (unsigned i = 0; i < W.dim(); ++i) {
      Vec cond;
      cond.reserve(std::size_t(d) * d);
      for (unsigned j = 0; j < d; ++j) {
        Vec bj(d, 0);
        bj[j] = 1;
        Vec r = W.reduce(F, A.mul(W.rows()[i], bj));
        if (!is_zero(r)) all_zero = false;
        cond.insert(cond.end(), r.begin(), r.end());
      }
      conds[i] = std::move(cond);
    }
    if (all_zero) break;
    auto alphas = algebra::kernel(F, conds);
    Subspace next(d);
    for (const auto& a : alphas) {
      Vec v(d, 0);
      for (unsigned i = 0; i < W.dim(); ++i)
        if (a[i]) axpy(F, v, a[i], W.rows()[i]);
      next.insert(F, std::move(v));
    }
    if (next.dim() == W.dim()) throw InternalDefect("radical_of_table: refinement stalled");
    W = std::move(next);
  }
  return W;
}

unsigned simple_count(const Context& ctx, const Subspace* block_rows, const Subspace& radB) {
  AlgebraTable A = quotient_table(ctx, block_rows, radB);
  if (A.dim == 0) throw InternalDefect("simple_count: zero quotient");
  const unsigned d = A.dim;
  std::vector<Vec> conds(d);
  for (unsigned i = 0; i < d; ++i) {
    Vec cond;
    cond.reserve(2 * std::size_t(d) * d);
    for (unsigned j = 0; j < d; ++j) {
      Vec diff = algebra::sub(A.F, A.prod[std::size_t(i) * d + j],
                              A.prod[std::size_t(j) * d + i]);
      cond.insert(cond.end(), diff.begin(), diff.end());
    }
    conds[i] = std::move(cond);
  }
  return unsigned(algebra::kernel(A.F, conds).size());
}

}  // namespace modblocks::loewy
