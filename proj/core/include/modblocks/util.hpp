#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modblocks {

// Raised when an input exceeds a documented resource cap (group order,
// subgroup-enumeration order, field size).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed user input (group specs, shape strings, suite files).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the coefficient field cannot split the algebra at hand.
struct FieldTooSmall : std::runtime_error {
  explicit FieldTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal certificate fails; indicates a bug, not bad input.
struct InternalDefect : std::logic_error {
  explicit InternalDefect(const std::string& what) : std::logic_error(what) {}
};

// splitmix64: tiny deterministic generator for property sampling and for
// the equal-degree factorization splitters. Fixed seeds keep every run
// byte-reproducible.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace modblocks
