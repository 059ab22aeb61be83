#pragma once

// Exact arithmetic in GF(p) and GF(p^m), polynomial-basis representation.
//
// A scalar is the packed coefficient vector of a residue polynomial:
// code = sum c_i * p^i with 0 <= c_i < p. Arithmetic is performed modulo a
// deterministic irreducible modulus, so two processes constructing the same
// (p, m) agree on every code. Small fields get lookup tables; larger ones
// fall back to digit arithmetic.

#include <cstdint>
#include <memory>
#include <vector>

#include "modblocks/util.hpp"

namespace modblocks::fields {

using scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

// Multiplicative order of p modulo e; requires gcd(p, e) = 1.
// GF(p^m) with m this order splits every semisimple algebra whose
// p'-exponent divides e.
unsigned splitting_degree(unsigned p, std::uint64_t e);

class Field {
 public:
  // GF(2) until make() replaces it; default-constructible so contexts can
  // hold a Field by value.
  Field() : Field(raw_tag{}) { *this = make(2, 1); }

  // Deterministic construction: the modulus is the lexicographically
  // smallest monic irreducible polynomial of degree m over GF(p),
  // coefficients compared low-degree-first. Supported: p in {2,3,5}, 1<=m<=12.
  static Field make(unsigned p, unsigned m);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  // m+1 coefficients, low degree first, leading coefficient 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  scalar zero() const { return 0; }
  scalar one() const { return 1; }
  scalar from_int(std::uint64_t v) const { return scalar(v % p_); }

  scalar add(scalar a, scalar b) const;
  scalar sub(scalar a, scalar b) const;
  scalar neg(scalar a) const;
  scalar mul(scalar a, scalar b) const;
  scalar inv(scalar a) const;  // throws InputError on zero
  scalar pow(scalar a, std::uint64_t e) const;
  scalar frobenius(scalar a) const { return pow_p(a, 1); }
  // x -> x^(p^e); e may exceed m (reduced mod m internally).
  scalar pow_p(scalar a, unsigned e) const;
  // Inverse of x -> x^(p^e).
  scalar pow_p_inverse(scalar a, unsigned e) const;

  std::vector<unsigned> digits(scalar a) const;
  scalar from_digits(const std::vector<unsigned>& d) const;

  bool operator==(const Field& o) const { return p_ == p_ && p_ == o.p_ && m_ == o.m_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // Raw tables for hot loops; null when the field is too large to table.
  // mul_table()[a*q+b] = a*b, add_table()[a*q+b] = a+b.
  const std::uint16_t* mul_table() const;
  const std::uint16_t* add_table() const;

 private:
  struct raw_tag {};
  explicit Field(raw_tag) {}
  struct Tables;
  unsigned p_ = 2, m_ = 1;
  std::uint64_t q_ = 2;
  std::vector<unsigned> modulus_;
  std::shared_ptr<const Tables> tables_;

  scalar mul_slow(scalar a, scalar b) const;
  scalar add_slow(scalar a, scalar b) const;
};

}  // namespace modblocks::fields
