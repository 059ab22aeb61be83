#pragma once

// Finite permutation groups with full element enumeration: Cayley index,
// conjugacy classes, Sylow subgroups, subgroup enumeration inside p-groups,
// abelian invariants, direct products, quotients by normal subgroups, and
// the group-definition text format used by the CLI.
//
// Everything is ordered canonically (elements sorted by image sequence,
// identity first) so downstream computations are deterministic.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modblocks/util.hpp"

namespace modblocks::groups {

constexpr std::size_t kGroupOrderCap = 5000;
constexpr std::size_t kSubgroupEnumCap = 64;

using Perm = std::vector<std::uint16_t>;  // images on 0..degree-1, a bijection

Perm identity_perm(unsigned degree);
Perm compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm inverse_perm(const Perm& f);
bool is_perm(const Perm& f);

// Cycle notation, 1-based points: "(1 2 3)(4 5)". Whitespace or commas
// separate points. Degree must cover every moved point.
Perm parse_cycles(const std::string& text, unsigned degree);
std::string cycle_string(const Perm& f);

class FiniteGroup {
 public:
  // Closes the generators; throws CapExceeded above kGroupOrderCap.
  static FiniteGroup close(unsigned degree, std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<std::uint16_t>& generator_positions() const { return gen_pos_; }

  unsigned mult(unsigned i, unsigned j) const { return cayley_[std::size_t(i) * size_ + j]; }
  unsigned inv(unsigned i) const { return inverse_[i]; }
  unsigned order_of(unsigned i) const { return order_[i]; }
  unsigned conjugate(unsigned g, unsigned x) const {  // g x g^-1
    return mult(mult(g, x), inv(g));
  }

  unsigned class_of(unsigned i) const { return class_of_[i]; }
  const std::vector<std::vector<std::uint16_t>>& conjugacy_classes() const { return classes_; }

  std::optional<unsigned> position_of(const Perm& x) const;

 private:
  unsigned degree_ = 1;
  std::size_t size_ = 1;
  std::vector<Perm> generators_;
  std::vector<std::uint16_t> gen_pos_;
  std::vector<Perm> elements_;
  std::vector<std::uint16_t> cayley_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint16_t> class_of_;
  std::vector<std::vector<std::uint16_t>> classes_;
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<std::uint16_t> elems;  // sorted positions, always contains 0
  std::vector<std::uint16_t> gens;   // positions generating the subgroup

  std::size_t size() const { return elems.size(); }
  bool contains(unsigned pos) const;
  bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup closure(const FiniteGroup& G, std::vector<std::uint16_t> seed_positions);

bool is_abelian(const Subgroup& S);
bool is_normal(const FiniteGroup& G, const Subgroup& S);
bool is_p_group(const Subgroup& S, unsigned p);

// Sylow p-subgroup by normalizer ascent; trivial when p does not divide |G|.
Subgroup sylow(const FiniteGroup& G, unsigned p);

// Every subgroup of the p-group P, deduplicated, sorted by (order, elements).
// Requires |P| <= kSubgroupEnumCap.
std::vector<Subgroup> subgroups_of_pgroup(const Subgroup& P);

Subgroup centralizer(const FiniteGroup& G, const Subgroup& S);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& S);

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);

// lcm of the p'-parts of all element orders.
std::uint64_t p_prime_exponent(const FiniteGroup& G, unsigned p);

// C_{p^{a_1}} x ... x C_{p^{a_r}} x (C_p)^s with all a_i >= 2, a_i descending.
struct AbelianShape {
  unsigned p = 2;
  std::vector<unsigned> exps;  // the a_i
  unsigned s = 0;
  unsigned r = 0;
  unsigned d = 0;  // sum a_i + s
  std::uint64_t order() const;
  std::string to_string() const;  // "2^2x2" for C4 x C2, "1" for trivial
};

// Cyclic decomposition with witnesses: orders descending, gens[i] generates
// the i-th direct factor.
struct AbelianBasis {
  std::vector<std::uint16_t> gens;
  std::vector<std::uint64_t> orders;
};

AbelianBasis abelian_basis(const Subgroup& A, unsigned p);
AbelianShape abelian_invariants(const Subgroup& A, unsigned p);

// All normal subgroups (joins of normal closures of cyclic subgroups),
// sorted by (order, elements).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G);

// A minimal normal subgroup; the identity subgroup only for trivial G.
Subgroup minimal_normal_subgroup(const FiniteGroup& G);

// Permutation action on the right cosets of normal M; isomorphic to G/M.
FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& M);

// Every chief factor a p-group or p'-group, tested by recursive reduction
// through minimal normal subgroups.
bool is_p_solvable(const FiniteGroup& G, unsigned p);

// Presents a subgroup as a standalone group over the same points, along with
// the position map into the parent's element list.
struct SubgroupAlgebraMap {
  FiniteGroup group;
  std::vector<std::uint16_t> to_parent;  // subgroup position -> parent position
};
SubgroupAlgebraMap subgroup_as_group(const FiniteGroup& G, const Subgroup& S);

// --- group-definition text format ------------------------------------------
//
//   name  <identifier>
//   degree <n>
//   gen   (1 2 3)(4 5)        # repeatable
//   product <name> <name>     # direct product of earlier/builtin groups
//
// Builtins: C<n>, E<p>^<k>, S3, A3, A4, V4, A5, A6, PSL28, and infix
// x-expressions such as "C4 x A5".

FiniteGroup builtin_group(const std::string& name);
bool is_builtin_name(const std::string& name);

struct GroupSpecEnv {
  std::map<std::string, FiniteGroup> named;
};

// spec = builtin name | "A x B x ..." | "@path/to/file"
FiniteGroup parse_group_spec(const std::string& spec);
FiniteGroup parse_group_spec(const std::string& spec, GroupSpecEnv& env);
// Parses a definition file and returns the last completed definition.
FiniteGroup parse_group_file(const std::string& path, GroupSpecEnv& env);

}  // namespace modblocks::groups
