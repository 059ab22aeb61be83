#include "modblocks/blocks.hpp"

#include <algorithm>

#include "modblocks/poly.hpp"

namespace modblocks::blocks {

using algebra::axpy;
using algebra::basis_vec;
using algebra::is_zero;
using algebra::multiply;
using algebra::zero_vec;
using fields::Field;
using fields::scalar;

namespace {

// The splitting works in Zbar = Z(kG)/J(Z(kG)). Central elements are kept as
// full kG vectors for multiplication and as class-coordinate vectors (one
// coefficient per conjugacy class) for the linear algebra.
struct CenterSplitter {
  const Context& ctx;
  const Field& F;
  unsigned nclasses;
  Subspace radZ;  // J(Z) in class coordinates

  explicit CenterSplitter(const Context& c)
      : ctx(c), F(c.F), nclasses(unsigned(c.class_sums.size())), radZ(nclasses) {
    // J(Z) = nilpotent part: kernel of z -> z^(p^t) with p^t >= dim Z,
    // a p^t-semilinear map on the commutative algebra Z.
    unsigned t = 0;
    std::uint64_t pt = 1;
    while (pt < nclasses) {
      pt *= F.p();
      ++t;
    }
    std::vector<Vec> conditions;
    for (unsigned i = 0; i < nclasses; ++i) {
      Vec z = ctx.class_sums[i];
      for (unsigned k = 0; k < t; ++k) {
        // z <- z^p
        Vec acc = z;
        for (unsigned j = 1; j < F.p(); ++j) acc = multiply(ctx, acc, z);
        z = std::move(acc);
      }
      conditions.push_back(compress(z));
    }
    for (auto& alpha : algebra::semilinear_kernel(F, conditions, t)) radZ.insert(F, alpha);
  }

  // class coordinates of a central vector
  Vec compress(const Vec& v) const {
    Vec out(nclasses, 0);
    const auto& classes = ctx.group().conjugacy_classes();
    for (unsigned c = 0; c < nclasses; ++c) out[c] = v[classes[c][0]];
    return out;
  }

  Vec expand(const Vec& coords) const {
    Vec out = zero_vec(ctx.dim());
    for (unsigned c = 0; c < nclasses; ++c)
      if (coords[c]) axpy(F, out, coords[c], ctx.class_sums[c]);
    return out;
  }

  // normal form in Zbar: class coordinates reduced modulo J(Z)
  Vec nf(const Vec& coords) const { return radZ.reduce(F, coords); }

  Vec mul_bar(const Vec& a, const Vec& b) const {
    return nf(compress(multiply(ctx, expand(a), expand(b))));
  }

  // monic minimal polynomial of u within the unital component e*Zbar
  poly::Poly minpoly(const Vec& u, const Vec& e) const {
    std::vector<Vec> rows;
    std::vector<int> pivots;
    std::vector<poly::Poly> track;
    Vec w = e;  // u^0 relative to the identity e of the component
    unsigned k = 0;
    while (true) {
      Vec v = w;
      poly::Poly t(k + 1, 0);
      t[k] = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        scalar c = v[pivots[r]];
        if (c) {
          scalar nc = F.neg(c);
          axpy(F, v, nc, rows[r]);
          poly::Poly scaled = track[r];
          for (auto& x : scaled) x = F.mul(nc, x);
          t = poly::add(F, t, scaled);
        }
      }
      int piv = -1;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) {
          piv = int(i);
          break;
        }
      if (piv < 0) return t;  // monic by construction
      scalar ic = F.inv(v[piv]);
      algebra::scale(F, v, ic);
      for (auto& x : t) x = F.mul(ic, x);
      rows.push_back(std::move(v));
      pivots.push_back(piv);
      track.push_back(std::move(t));
      w = mul_bar(w, u);
      ++k;
      if (k > nclasses + 1) throw InternalDefect("minpoly: no dependency found");
    }
  }

  // evaluate h at u inside the component with identity e
  Vec eval_at(const poly::Poly& h, const Vec& u, const Vec& e) const {
    Vec acc(nclasses, 0);
    for (std::size_t i = h.size(); i-- > 0;) {
      acc = mul_bar(acc, u);
      if (h[i]) {
        Vec c = e;
        algebra::scale(F, c, h[i]);
        axpy(F, acc, 1, c);
      }
    }
    return nf(acc);
  }

  std::vector<Vec> primitive_idempotents() {
    std::vector<Vec> work{nf(compress(basis_vec(ctx.dim(), 0)))};  // the identity
    std::vector<Vec> done;
    while (!work.empty()) {
      Vec e = work.back();
      work.pop_back();
      bool split = false;
      for (unsigned cidx = 0; cidx < nclasses && !split; ++cidx) {
        Vec u = mul_bar(nf(compress(ctx.class_sums[cidx])), e);
        poly::Poly mu = minpoly(u, e);
        if (poly::degree(mu) < 2) continue;
        auto factors = poly::factor(F, mu);
        if (factors.size() < 2) continue;  // irreducible: cannot split along u
        for (const auto& [f, mult] : factors) {
          if (mult != 1)
            throw InternalDefect("central splitting: repeated factor in semisimple quotient");
          poly::Poly cof = poly::divmod(F, mu, f).first;
          poly::Poly h = poly::mod(F, poly::mul(F, cof, poly::invmod(F, cof, f)), mu);
          Vec ei = eval_at(h, u, e);
          if (is_zero(ei)) throw InternalDefect("central splitting: zero idempotent piece");
          work.push_back(std::move(ei));
        }
        split = true;
      }
      if (!split) done.push_back(e);
    }
    // primitivity certificate: each surviving component must be 1-dimensional,
    // otherwise its residue field exceeds the coefficient field
    for (const auto& e : done) {
      Subspace span(nclasses);
      for (unsigned cidx = 0; cidx < nclasses; ++cidx)
        span.insert(F, mul_bar(nf(compress(ctx.class_sums[cidx])), e));
      if (span.dim() != 1)
        throw FieldTooSmall(
            "block decomposition needs a splitting field: use extension degree >= " +
            std::to_string(ctx.required_degree));
    }
    return done;
  }

  // Newton lift along Z -> Zbar: e <- 3e^2 - 2e^3 squeezes the defect into
  // J(Z)^2 each round.
  Vec lift(const Vec& coords) const {
    Vec z = expand(coords);
    unsigned rounds = 1;
    while ((1u << rounds) < nclasses) ++rounds;
    rounds += 1;
    const scalar three = F.from_int(3), mtwo = F.neg(F.from_int(2));
    for (unsigned r = 0; r < rounds + 4; ++r) {
      Vec z2 = multiply(ctx, z, z);
      if (r >= rounds && z2 == z) return z;
      Vec z3 = multiply(ctx, z2, z);
      Vec out = zero_vec(ctx.dim());
      axpy(F, out, three, z2);
      axpy(F, out, mtwo, z3);
      z = std::move(out);
    }
    throw InternalDefect("idempotent lifting did not converge");
  }
};

}  // namespace

std::vector<Vec> central_idempotents(const Context& ctx) {
  CenterSplitter splitter(ctx);
  std::vector<Vec> lifted;
  for (const auto& e : splitter.primitive_idempotents()) lifted.push_back(splitter.lift(e));
  // exactness checks: orthogonal idempotents summing to 1
  const Field& F = ctx.F;
  Vec total = zero_vec(ctx.dim());
  for (const auto& e : lifted) {
    if (multiply(ctx, e, e) != e) throw InternalDefect("lifted idempotent is not idempotent");
    if (!algebra::is_central(ctx, e)) throw InternalDefect("lifted idempotent is not central");
    axpy(F, total, 1, e);
  }
  if (total != basis_vec(ctx.dim(), 0)) throw InternalDefect("idempotents do not sum to 1");
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = i + 1; j < lifted.size(); ++j)
      if (!is_zero(multiply(ctx, lifted[i], lifted[j])))
        throw InternalDefect("idempotents are not orthogonal");
  std::sort(lifted.begin(), lifted.end(), [](const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((a[i] != 0) != (b[i] != 0)) return a[i] != 0;  // smaller pivot first
    }
    return a < b;
  });
  return lifted;
}

Vec brauer_map(const Context& ctx, const Vec& z, const groups::Subgroup& Q) {
  if (!groups::is_p_group(Q, ctx.F.p()))
    throw InputError("brauer_map: Q must be a p-subgroup");
  groups::Subgroup C = groups::centralizer(ctx.group(), Q);
  Vec out = zero_vec(ctx.dim());
  for (auto pos : C.elems) out[pos] = z[pos];
  return out;
}

std::vector<Block> decompose(const Context& ctx) {
  std::vector<Vec> es = central_idempotents(ctx);
  const auto& G = ctx.group();
  const Field& F = ctx.F;

  groups::Subgroup P = groups::sylow(G, F.p());
  std::vector<groups::Subgroup> pool = groups::subgroups_of_pgroup(P);

  std::vector<Block> out;
  unsigned principal_count = 0;
  std::size_t dim_total = 0;
  for (unsigned bi = 0; bi < es.size(); ++bi) {
    Block b;
    b.index = bi;
    b.idempotent = es[bi];
    Subspace rows(ctx.dim());
    for (unsigned g = 0; g < G.size(); ++g)
      rows.insert(F, algebra::right_translate(ctx, b.idempotent, g));
    b.dim = rows.dim();
    b.algebra_rows = std::move(rows);
    dim_total += b.dim;
    b.principal = algebra::augmentation(F, b.idempotent) == F.one();
    principal_count += b.principal;

    // defect group: maximal-order subgroup of P with nonvanishing Brauer image
    std::size_t best_order = 0;
    const groups::Subgroup* best = nullptr;
    for (const auto& Q : pool) {
      if (Q.size() <= best_order) continue;
      if (!is_zero(brauer_map(ctx, b.idempotent, Q))) {
        best = &Q;
        best_order = Q.size();
      }
    }
    if (!best) throw InternalDefect("defect search: no subgroup with nonzero Brauer image");
    b.defect_group = *best;
    unsigned d = 0;
    for (std::size_t o = best_order; o > 1; o /= F.p()) ++d;
    b.defect = d;
    b.abelian_defect = groups::is_abelian(b.defect_group);
    if (b.abelian_defect) b.shape = groups::abelian_invariants(b.defect_group, F.p());
    out.push_back(std::move(b));
  }
  if (dim_total != ctx.dim()) throw InternalDefect("block dimensions do not sum to |G|");
  if (principal_count != 1) throw InternalDefect("principal block must be unique");
  return out;
}

const Block& principal_block(const std::vector<Block>& blocks) {
  for (const auto& b : blocks)
    if (b.principal) return b;
  throw InternalDefect("no principal block present");
}

Vec embed(const Context& ctx_G, const std::vector<std::uint16_t>& to_parent, const Vec& v) {
  Vec out = zero_vec(ctx_G.dim());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out[to_parent[i]] = v[i];
  return out;
}

bool covers(const Context& ctx, const Vec& e_B, const Vec& e_b_embedded) {
  return !is_zero(multiply(ctx, e_B, e_b_embedded));
}

}  // namespace modblocks::blocks
