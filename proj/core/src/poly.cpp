#include "modblocks/poly.hpp"

#include <algorithm>
#include <map>

#include "modblocks/util.hpp"

namespace modblocks::poly {

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i]) return int(i);
  return -1;
}

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

Poly constant(scalar c) { return c ? Poly{c} : Poly{}; }

Poly monomial_x() { return Poly{0, 1}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  normalize(c);
  return c;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  normalize(c);
  return c;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  normalize(c);
  return c;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  int db = degree(b);
  if (db < 0) throw InputError("polynomial division by zero");
  Poly r = a;
  normalize(r);
  if (int(r.size()) - 1 < db) return {Poly{}, r};
  Poly q(r.size() - db, 0);
  scalar lead_inv = F.inv(b[db]);
  for (int i = int(r.size()) - 1; i >= db; --i) {
    if (!r[i]) continue;
    scalar c = F.mul(r[i], lead_inv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  normalize(q);
  normalize(r);
  return {q, r};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly make_monic(const Field& F, Poly f) {
  normalize(f);
  int d = degree(f);
  if (d < 0) return f;
  scalar c = F.inv(f[d]);
  for (auto& x : f) x = F.mul(x, c);
  return f;
}

Poly gcd(const Field& F, Poly a, Poly b) {
  normalize(a);
  normalize(b);
  while (!is_zero(b)) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

Poly derivative(const Field& F, const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(F.mul(F.from_int(i), f[i]));
  normalize(d);
  return d;
}

scalar eval(const Field& F, const Poly& f, scalar x) {
  scalar acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& modulus) {
  Poly r = constant(1);
  base = mod(F, base, modulus);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, base), modulus);
    base = mod(F, mul(F, base, base), modulus);
    e >>= 1;
  }
  return r;
}

Poly invmod(const Field& F, const Poly& a, const Poly& f) {
  // extended Euclid on (f, a mod f)
  Poly r0 = f, r1 = mod(F, a, f);
  Poly t0, t1 = constant(1);
  while (!is_zero(r1)) {
    auto [q, r2] = divmod(F, r0, r1);
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw InputError("invmod: arguments are not coprime");
  scalar c = F.inv(r0[0]);
  for (auto& x : t0) x = F.mul(x, c);
  normalize(t0);
  return t0;
}

namespace {

// p-th root of f when f'(x) = 0, i.e. f = g(x^p); subfield-safe since
// finite fields are perfect.
Poly pth_root(const Field& F, const Poly& f) {
  const unsigned p = F.p();
  Poly g((f.size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    if (i % p != 0) throw InternalDefect("pth_root: polynomial is not a p-th power");
    g[i / p] = F.pow_p_inverse(f[i], 1);
  }
  normalize(g);
  return g;
}

// Cantor-Zassenhaus equal-degree splitting; every irreducible factor of f
// has degree d. Splitting elements come from a fixed-seed stream.
void equal_degree(const Field& F, const Poly& f, unsigned d, std::vector<Poly>& out,
                  SplitMix64& rng) {
  const int df = degree(f);
  if (df == int(d)) {
    out.push_back(make_monic(F, f));
    return;
  }
  while (true) {
    Poly r(std::size_t(df), 0);
    for (auto& c : r) c = scalar(rng.below(F.q()));
    normalize(r);
    if (degree(r) < 1) continue;
    Poly split;
    if (F.p() == 2) {
      // trace map over GF(2): r + r^2 + r^4 + ... (m*d terms)
      Poly t;
      Poly cur = mod(F, r, f);
      for (unsigned i = 0; i < F.m() * d; ++i) {
        t = add(F, t, cur);
        cur = mod(F, mul(F, cur, cur), f);
      }
      split = gcd(F, t, f);
    } else {
      // r^((q^d-1)/2) - 1 via the norm chain to keep exponents small
      Poly w = mod(F, r, f);
      Poly v = w;
      for (unsigned i = 1; i < d; ++i) {
        v = powmod(F, v, F.q(), f);
        w = mod(F, mul(F, w, v), f);
      }
      Poly s = powmod(F, w, (F.q() - 1) / 2, f);
      split = gcd(F, sub(F, s, constant(1)), f);
    }
    int ds = degree(split);
    if (ds > 0 && ds < df) {
      equal_degree(F, split, d, out, rng);
      equal_degree(F, divmod(F, f, split).first, d, out, rng);
      return;
    }
  }
}

// distinct-degree stage on squarefree monic f
void squarefree_factor(const Field& F, Poly f, std::vector<Poly>& out, SplitMix64& rng) {
  Poly h = monomial_x();  // x^(q^d) mod f, advanced once per degree step
  unsigned d = 0;
  while (2 * (d + 1) <= unsigned(degree(f))) {
    ++d;
    h = powmod(F, h, F.q(), f);
    Poly g = gcd(F, sub(F, h, monomial_x()), f);
    if (degree(g) > 0) {
      equal_degree(F, g, d, out, rng);
      f = divmod(F, f, g).first;
      h = mod(F, h, f);
    }
  }
  if (degree(f) > 0) out.push_back(make_monic(F, f));
}

void factor_rec(const Field& F, Poly f, unsigned mult,
                std::map<Poly, unsigned>& acc, SplitMix64& rng) {
  normalize(f);
  if (degree(f) <= 0) return;
  f = make_monic(F, f);
  if (degree(f) == 1) {
    acc[f] += mult;
    return;
  }
  Poly df = derivative(F, f);
  if (is_zero(df)) {
    factor_rec(F, pth_root(F, f), mult * F.p(), acc, rng);
    return;
  }
  Poly g = gcd(F, f, df);
  if (degree(g) == 0) {
    std::vector<Poly> irr;
    squarefree_factor(F, f, irr, rng);
    for (auto& h : irr) acc[h] += mult;
    return;
  }
  factor_rec(F, divmod(F, f, g).first, mult, acc, rng);
  factor_rec(F, g, mult, acc, rng);
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Field& F, Poly f) {
  normalize(f);
  if (degree(f) < 1) return {};
  SplitMix64 rng(0xEDF0EDF0EDF0EDFULL);
  std::map<Poly, unsigned> acc;
  factor_rec(F, std::move(f), 1, acc, rng);
  std::vector<std::pair<Poly, unsigned>> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

}  // namespace modblocks::poly
