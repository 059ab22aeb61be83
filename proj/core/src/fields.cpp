#include "modblocks/fields.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace modblocks::fields {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned splitting_degree(unsigned p, std::uint64_t e) {
  if (e == 0) throw InputError("splitting_degree: modulus e must be positive");
  if (std::gcd(std::uint64_t(p), e) != 1)
    throw InputError("splitting_degree: gcd(p, e) must be 1");
  if (e == 1) return 1;
  std::uint64_t cur = p % e;
  unsigned k = 1;
  while (cur != 1) {
    cur = (cur * p) % e;
    ++k;
    if (k > e) throw InternalDefect("splitting_degree: order scan overran e");
  }
  return k;
}

namespace {

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using PolyP = std::vector<unsigned>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mul_polyp(const PolyP& a, const PolyP& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a by monic divisor d.
PolyP mod_polyp(PolyP a, const PolyP& d, unsigned p) {
  trim(a);
  while (a.size() >= d.size()) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - d.size();
    if (lead != 0)
      for (std::size_t i = 0; i < d.size(); ++i)
        a[shift + i] = (a[shift + i] + p * p - lead * d[i] % p) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

// Enumerates monic polynomials of the given degree in lexicographic order of
// the low-first coefficient tuple. idx encodes the tuple in base p.
PolyP monic_by_index(std::uint64_t idx, unsigned degree, unsigned p) {
  PolyP f(degree + 1, 0);
  f[degree] = 1;
  // low-degree-first comparison: c_0 is the most significant digit of idx
  for (unsigned i = 0; i < degree; ++i) {
    std::uint64_t weight = 1;
    for (unsigned k = i + 1; k < degree; ++k) weight *= p;
    f[i] = unsigned(idx / weight);
    idx %= weight;
  }
  return f;
}

bool is_irreducible(const PolyP& f, unsigned p) {
  unsigned deg = unsigned(f.size()) - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // trial division by every monic polynomial of degree 1..deg/2
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PolyP g = monic_by_index(idx, d, p);
      if (mod_polyp(f, g, p).empty()) return false;
    }
  }
  return true;
}

PolyP smallest_irreducible(unsigned p, unsigned m) {
  if (m == 1) return PolyP{0, 1};  // x
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PolyP f = monic_by_index(idx, m, p);
    if (is_irreducible(f, p)) return f;
  }
  throw InternalDefect("smallest_irreducible: no irreducible of requested degree");
}

constexpr std::uint64_t kMulTableMaxQ = 2048;   // q*q uint16 table, <= 8 MB
constexpr std::uint64_t kAddTableMaxQ = 4096;   // only needed when p != 2
constexpr std::uint64_t kUnaryTableMaxQ = 1 << 16;

}  // namespace

struct Field::Tables {
  std::vector<std::uint16_t> mul;       // q*q, optional
  std::vector<std::uint16_t> add;       // q*q, optional (p != 2)
  std::vector<std::uint32_t> explog_e;  // 2q, optional
  std::vector<std::uint32_t> explog_l;  // q, optional
  std::vector<std::uint32_t> negt;      // q, optional
  std::vector<std::uint32_t> frob;      // q, optional
};

std::vector<unsigned> Field::digits(scalar a) const {
  std::vector<unsigned> d(m_);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

scalar Field::from_digits(const std::vector<unsigned>& d) const {
  scalar a = 0;
  for (unsigned i = m_; i-- > 0;) a = a * p_ + (i < d.size() ? d[i] % p_ : 0);
  return a;
}

scalar Field::add_slow(scalar a, scalar b) const {
  scalar out = 0, weight = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += weight * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    weight *= p_;
  }
  return out;
}

scalar Field::mul_slow(scalar a, scalar b) const {
  // schoolbook product of digit vectors followed by reduction
  std::vector<unsigned> da = digits(a), db = digits(b);
  std::vector<unsigned> prod(2 * m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // reduce modulo the monic modulus
  for (unsigned k = 2 * m_; k-- > m_;) {
    unsigned lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i)
      prod[k - m_ + i] = (prod[k - m_ + i] + p_ * p_ - lead * modulus_[i] % p_) % p_;
  }
  scalar out = 0;
  for (unsigned i = m_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

scalar Field::add(scalar a, scalar b) const {
  if (p_ == 2) return a ^ b;
  if (tables_ && !tables_->add.empty()) return tables_->add[std::size_t(a) * q_ + b];
  return add_slow(a, b);
}

scalar Field::sub(scalar a, scalar b) const { return add(a, neg(b)); }

scalar Field::neg(scalar a) const {
  if (p_ == 2) return a;
  if (tables_ && !tables_->negt.empty()) return tables_->negt[a];
  scalar out = 0, weight = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += weight * ((p_ - a % p_) % p_);
    a /= p_;
    weight *= p_;
  }
  return out;
}

scalar Field::mul(scalar a, scalar b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) {
    if (!tables_->mul.empty()) return tables_->mul[std::size_t(a) * q_ + b];
    if (!tables_->explog_l.empty())
      return tables_->explog_e[tables_->explog_l[a] + tables_->explog_l[b]];
  }
  return mul_slow(a, b);
}

scalar Field::inv(scalar a) const {
  if (a == 0) throw InputError("field inverse of zero");
  if (tables_ && !tables_->explog_l.empty())
    return tables_->explog_e[(q_ - 1) - tables_->explog_l[a]];
  return pow(a, q_ - 2);
}

scalar Field::pow(scalar a, std::uint64_t e) const {
  scalar r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

scalar Field::pow_p(scalar a, unsigned e) const {
  e %= m_;
  if (e == 0) return a;
  if (tables_ && !tables_->frob.empty()) {
    scalar r = a;
    for (unsigned i = 0; i < e; ++i) r = tables_->frob[r];
    return r;
  }
  scalar r = a;
  for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
  return r;
}

scalar Field::pow_p_inverse(scalar a, unsigned e) const {
  e %= m_;
  if (e == 0) return a;
  return pow_p(a, m_ - e);
}

const std::uint16_t* Field::mul_table() const {
  return (tables_ && !tables_->mul.empty()) ? tables_->mul.data() : nullptr;
}

const std::uint16_t* Field::add_table() const {
  return (tables_ && !tables_->add.empty()) ? tables_->add.data() : nullptr;
}

Field Field::make(unsigned p, unsigned m) {
  if (!is_prime(p) || p > 5)
    throw InputError("Field::make: p must be a prime in {2, 3, 5}");
  if (m < 1 || m > 12) throw InputError("Field::make: extension degree must be in [1, 12]");
  Field f{raw_tag{}};
  f.p_ = p;
  f.m_ = m;
  f.q_ = 1;
  for (unsigned i = 0; i < m; ++i) f.q_ *= p;
  f.modulus_ = smallest_irreducible(p, m);

  auto t = std::make_shared<Tables>();
  if (f.q_ <= kUnaryTableMaxQ) {
    const std::size_t q = std::size_t(f.q_);
    // negation and Frobenius
    t->negt.resize(q);
    t->frob.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
      scalar out = 0, weight = 1, x = scalar(a);
      for (unsigned i = 0; i < m; ++i) {
        out += weight * ((p - x % p) % p);
        x /= p;
        weight *= p;
      }
      t->negt[a] = out;
    }
    // exp/log over a generator of the multiplicative group; smallest code wins
    std::uint64_t qm1 = f.q_ - 1;
    std::vector<std::uint64_t> prime_factors;
    {
      std::uint64_t n = qm1;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
          if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
          n /= d;
        }
      if (n > 1) prime_factors.push_back(n);
    }
    auto pow_slow = [&f](scalar a, std::uint64_t e) {
      scalar r = 1, base = a;
      while (e) {
        if (e & 1) r = f.mul_slow(r, base);
        base = f.mul_slow(base, base);
        e >>= 1;
      }
      return r;
    };
    scalar gen = 1;
    for (scalar cand = 1; cand < f.q_; ++cand) {
      bool ok = true;
      for (std::uint64_t d : prime_factors)
        if (pow_slow(cand, qm1 / d) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = cand;
        break;
      }
    }
    t->explog_e.assign(2 * q, 1);
    t->explog_l.assign(q, 0);
    scalar cur = 1;
    for (std::uint64_t k = 0; k < qm1; ++k) {
      t->explog_e[k] = cur;
      t->explog_e[k + qm1] = cur;
      t->explog_l[cur] = std::uint32_t(k);
      cur = f.mul_slow(cur, gen);
    }
    for (std::size_t a = 0; a < q; ++a) t->frob[a] = pow_slow(scalar(a), p);
  }
  if (f.q_ <= kMulTableMaxQ) {
    const std::size_t q = std::size_t(f.q_);
    t->mul.assign(q * q, 0);
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        t->mul[a * q + b] =
            std::uint16_t(t->explog_e[t->explog_l[a] + t->explog_l[b]]);
  }
  if (p != 2 && f.q_ <= kAddTableMaxQ) {
    const std::size_t q = std::size_t(f.q_);
    t->add.assign(q * q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        t->add[a * q + b] = std::uint16_t(f.add_slow(scalar(a), scalar(b)));
  }
  f.tables_ = std::move(t);
  return f;
}

}  // namespace modblocks::fields
