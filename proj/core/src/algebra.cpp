#include "modblocks/algebra.hpp"

#include <algorithm>

namespace modblocks::algebra {

Context make_context(std::shared_ptr<const groups::FiniteGroup> G, const Field& F) {
  if (F.q() > (1u << 16))
    throw CapExceeded("group-algebra contexts require q <= 65536");
  Context ctx;
  ctx.G = std::move(G);
  ctx.F = F;
  std::uint64_t e = groups::p_prime_exponent(*ctx.G, F.p());
  ctx.required_degree = fields::splitting_degree(F.p(), e);
  const auto& classes = ctx.G->conjugacy_classes();
  for (const auto& cls : classes) {
    Vec v = zero_vec(ctx.G->size());
    for (auto pos : cls) v[pos] = 1;
    ctx.class_sums.push_back(std::move(v));
  }
  return ctx;
}

Vec zero_vec(std::size_t n) { return Vec(n, 0); }

Vec basis_vec(std::size_t n, unsigned pos, scalar c) {
  Vec v(n, 0);
  v[pos] = std::uint16_t(c);
  return v;
}

bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

scalar augmentation(const Field& F, const Vec& v) {
  scalar s = 0;
  for (auto x : v) s = F.add(s, x);
  return s;
}

void axpy(const Field& F, Vec& dst, scalar c, const Vec& src) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  const std::uint16_t* mt = F.mul_table();
  if (F.p() == 2 && mt) {
    const std::uint16_t* row = mt + std::size_t(c) * F.q();
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
    return;
  }
  const std::uint16_t* at = F.add_table();
  if (mt && at) {
    const std::uint16_t* row = mt + std::size_t(c) * F.q();
    const std::size_t q = std::size_t(F.q());
    for (std::size_t i = 0; i < n; ++i) dst[i] = at[std::size_t(dst[i]) * q + row[src[i]]];
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = std::uint16_t(F.add(dst[i], F.mul(c, src[i])));
}

void scale(const Field& F, Vec& v, scalar c) {
  if (c == 1) return;
  for (auto& x : v) x = std::uint16_t(F.mul(c, x));
}

Vec add(const Field& F, const Vec& a, const Vec& b) {
  Vec out = a;
  axpy(F, out, 1, b);
  return out;
}

Vec sub(const Field& F, const Vec& a, const Vec& b) {
  Vec out = a;
  axpy(F, out, F.neg(1), b);
  return out;
}

Vec multiply(const Context& ctx, const Vec& x, const Vec& y) {
  const auto& G = ctx.group();
  const Field& F = ctx.F;
  const std::size_t n = G.size();
  Vec out(n, 0);
  const std::uint16_t* mt = F.mul_table();
  const std::uint16_t* at = F.add_table();
  const std::size_t q = std::size_t(F.q());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    if (F.p() == 2 && mt) {
      const std::uint16_t* row = mt + std::size_t(x[i]) * q;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        out[G.mult(unsigned(i), unsigned(j))] ^= row[y[j]];
      }
    } else if (mt && at) {
      const std::uint16_t* row = mt + std::size_t(x[i]) * q;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        auto& slot = out[G.mult(unsigned(i), unsigned(j))];
        slot = at[std::size_t(slot) * q + row[y[j]]];
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        auto& slot = out[G.mult(unsigned(i), unsigned(j))];
        slot = std::uint16_t(F.add(slot, F.mul(x[i], y[j])));
      }
    }
  }
  return out;
}

Vec right_translate(const Context& ctx, const Vec& x, unsigned g) {
  const auto& G = ctx.group();
  Vec out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out[G.mult(unsigned(i), g)] = x[i];
  return out;
}

Vec left_translate(const Context& ctx, unsigned g, const Vec& x) {
  const auto& G = ctx.group();
  Vec out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out[G.mult(g, unsigned(i))] = x[i];
  return out;
}

std::vector<Vec> leftmul_matrix(const Context& ctx, const Vec& x) {
  const std::size_t n = ctx.dim();
  std::vector<Vec> cols(n);
  for (unsigned j = 0; j < n; ++j) cols[j] = right_translate(ctx, x, j);
  return cols;
}

Vec leftmul_apply(const Field& F, const std::vector<Vec>& cols, const Vec& v) {
  Vec out(cols.empty() ? 0 : cols[0].size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) axpy(F, out, v[j], cols[j]);
  return out;
}

bool Subspace::insert(const Field& F, Vec v) {
  if (ambient_ == 0) ambient_ = v.size();
  v = reduce(F, v);
  int piv = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) {
      piv = int(i);
      break;
    }
  if (piv < 0) return false;
  scale(F, v, F.inv(v[piv]));
  // eliminate the new pivot from existing rows to keep full reduction
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r][piv]) axpy(F, rows_[r], F.neg(rows_[r][piv]), v);
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t at = std::size_t(it - pivots_.begin());
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

Vec Subspace::reduce(const Field& F, Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    scalar c = v[pivots_[r]];
    if (c) axpy(F, v, F.neg(c), rows_[r]);
  }
  return v;
}

bool Subspace::member(const Field& F, const Vec& v) const { return is_zero(reduce(F, v)); }

bool Subspace::contains(const Field& F, const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!member(F, r)) return false;
  return true;
}

Subspace echelonize(const Field& F, std::size_t ambient, const std::vector<Vec>& vs) {
  Subspace S(ambient);
  for (const auto& v : vs) S.insert(F, v);
  return S;
}

Subspace sum(const Field& F, const Subspace& U, const Subspace& V) {
  Subspace S = U;
  for (const auto& r : V.rows()) S.insert(F, r);
  return S;
}

Subspace intersect(const Field& F, const Subspace& U, const Subspace& V) {
  // Zassenhaus: echelonize [u | u] for u in U and [v | 0] for v in V;
  // rows whose pivot falls in the right block carry the intersection there.
  const std::size_t n = std::max(U.ambient(), V.ambient());
  Subspace big(2 * n);
  for (const auto& u : U.rows()) {
    Vec w(2 * n, 0);
    std::copy(u.begin(), u.end(), w.begin());
    std::copy(u.begin(), u.end(), w.begin() + n);
    big.insert(F, std::move(w));
  }
  for (const auto& v : V.rows()) {
    Vec w(2 * n, 0);
    std::copy(v.begin(), v.end(), w.begin());
    big.insert(F, std::move(w));
  }
  Subspace out(n);
  for (std::size_t r = 0; r < big.rows().size(); ++r)
    if (big.pivots()[r] >= int(n))
      out.insert(F, Vec(big.rows()[r].begin() + n, big.rows()[r].end()));
  return out;
}

Subspace product_span(const Context& ctx, const std::vector<Vec>& left, const Subspace& right) {
  Subspace out(ctx.dim());
  for (const auto& x : left) {
    auto cols = leftmul_matrix(ctx, x);
    for (const auto& r : right.rows()) out.insert(ctx.F, leftmul_apply(ctx.F, cols, r));
  }
  return out;
}

Subspace center_basis(const Context& ctx) {
  Subspace S(ctx.dim());
  for (const auto& cs : ctx.class_sums) S.insert(ctx.F, cs);
  if (S.dim() != ctx.class_sums.size())
    throw InternalDefect("center_basis: class sums must be independent");
  return S;
}

bool is_central(const Context& ctx, const Vec& v) {
  const auto& G = ctx.group();
  for (auto s : G.generator_positions()) {
    Vec a = right_translate(ctx, v, s);
    Vec b = left_translate(ctx, s, v);
    if (a != b) return false;
  }
  return true;
}

std::vector<Vec> kernel(const Field& F, const std::vector<Vec>& conditions) {
  const std::size_t u = conditions.size();
  if (u == 0) return {};
  const std::size_t w = conditions[0].size();
  // echelonize rows [condition | unit], collect kernel rows from the tracker
  std::vector<Vec> rows;
  std::vector<int> pivots;
  std::vector<Vec> track;
  std::vector<Vec> out;
  for (std::size_t i = 0; i < u; ++i) {
    Vec v = conditions[i];
    Vec t(u, 0);
    t[i] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      scalar c = v[pivots[r]];
      if (c) {
        scalar nc = F.neg(c);
        axpy(F, v, nc, rows[r]);
        axpy(F, t, nc, track[r]);
      }
    }
    int piv = -1;
    for (std::size_t k = 0; k < w; ++k)
      if (v[k]) {
        piv = int(k);
        break;
      }
    if (piv < 0) {
      out.push_back(std::move(t));
      continue;
    }
    scalar ic = F.inv(v[piv]);
    scale(F, v, ic);
    scale(F, t, ic);
    rows.push_back(std::move(v));
    track.push_back(std::move(t));
    pivots.push_back(piv);
  }
  return out;
}

std::vector<Vec> semilinear_kernel(const Field& F, const std::vector<Vec>& conditions,
                                   unsigned e) {
  std::vector<Vec> beta = kernel(F, conditions);
  if (e % F.m() == 0) return beta;
  for (auto& v : beta)
    for (auto& x : v) x = std::uint16_t(F.pow_p_inverse(x, e));
  return beta;
}

}  // namespace modblocks::algebra
