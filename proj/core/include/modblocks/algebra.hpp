#pragma once

// Linear algebra over GF(p^m) and the group-algebra structure: elements as
// dense coefficient vectors indexed by group-element position, convolution
// multiplication through the Cayley index, class sums, the center, and
// row-reduced echelon subspaces with exact membership tests.

#include <cstdint>
#include <memory>
#include <vector>

#include "modblocks/fields.hpp"
#include "modblocks/groups.hpp"

namespace modblocks::algebra {

using fields::Field;
using fields::scalar;
using Vec = std::vector<std::uint16_t>;  // field codes

struct Context {
  std::shared_ptr<const groups::FiniteGroup> G;
  Field F;
  unsigned required_degree = 1;  // splitting_degree(p, p'-exponent of G)
  std::vector<Vec> class_sums;

  std::size_t dim() const { return G->size(); }
  const groups::FiniteGroup& group() const { return *G; }
};

Context make_context(std::shared_ptr<const groups::FiniteGroup> G, const Field& F);

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, unsigned pos, scalar c = 1);
bool is_zero(const Vec& v);
scalar augmentation(const Field& F, const Vec& v);

// dst += c * src
void axpy(const Field& F, Vec& dst, scalar c, const Vec& src);
void scale(const Field& F, Vec& v, scalar c);
Vec add(const Field& F, const Vec& a, const Vec& b);
Vec sub(const Field& F, const Vec& a, const Vec& b);

// Convolution product: coefficient of g in x*y is sum over uv = g.
Vec multiply(const Context& ctx, const Vec& x, const Vec& y);
// x * g and g * x for a single group element
Vec right_translate(const Context& ctx, const Vec& x, unsigned g);
Vec left_translate(const Context& ctx, unsigned g, const Vec& x);

// Columns of left multiplication by x: cols[j] = x * g_j. Apply with
// leftmul_apply to turn repeated convolutions into matrix-vector sweeps.
std::vector<Vec> leftmul_matrix(const Context& ctx, const Vec& x);
Vec leftmul_apply(const Field& F, const std::vector<Vec>& cols, const Vec& v);

// Row-reduced echelon subspace; pivot = lowest nonzero position, rows kept
// fully reduced and sorted by pivot, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  unsigned dim() const { return unsigned(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Returns true if v enlarged the span.
  bool insert(const Field& F, Vec v);
  // v reduced against the rows; zero iff member.
  Vec reduce(const Field& F, Vec v) const;
  bool member(const Field& F, const Vec& v) const;
  bool contains(const Field& F, const Subspace& other) const;
  bool same_space(const Subspace& other) const {
    return pivots_ == other.pivots_ && rows_ == other.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Subspace echelonize(const Field& F, std::size_t ambient, const std::vector<Vec>& vs);
Subspace sum(const Field& F, const Subspace& U, const Subspace& V);
Subspace intersect(const Field& F, const Subspace& U, const Subspace& V);
// span of all pairwise products left[i] * row_j(right)
Subspace product_span(const Context& ctx, const std::vector<Vec>& left, const Subspace& right);

// class sums in conjugacy-class order; dimension = number of classes
Subspace center_basis(const Context& ctx);
bool is_central(const Context& ctx, const Vec& v);

// Nullspace of the linear map alpha -> sum_i alpha_i * conditions[i]:
// conditions[i] is the row of constraints contributed by unknown i.
// Result rows are coefficient vectors of length `unknowns`.
std::vector<Vec> kernel(const Field& F, const std::vector<Vec>& conditions);

// Solves sum_i alpha_i^(p^e) * conditions[i] = 0 by substituting
// beta = alpha^(p^e) and applying the inverse Frobenius power to the kernel.
std::vector<Vec> semilinear_kernel(const Field& F, const std::vector<Vec>& conditions, unsigned e);

}  // namespace modblocks::algebra
