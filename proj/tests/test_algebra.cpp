#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modblocks/algebra.hpp"
#include "modblocks/util.hpp"

using namespace modblocks;
using namespace modblocks::algebra;
using groups::FiniteGroup;

namespace {

Context ctx_for(const std::string& spec, unsigned p, unsigned m) {
  auto G = std::make_shared<FiniteGroup>(groups::parse_group_spec(spec));
  return make_context(G, Field::make(p, m));
}

Vec random_vec(const Context& ctx, SplitMix64& rng) {
  Vec v(ctx.dim(), 0);
  for (auto& x : v) x = std::uint16_t(rng.below(ctx.F.q()));
  return v;
}

Vec random_central(const Context& ctx, SplitMix64& rng) {
  Vec v(ctx.dim(), 0);
  for (const auto& cs : ctx.class_sums) axpy(ctx.F, v, scalar(rng.below(ctx.F.q())), cs);
  return v;
}

}  // namespace

TEST_CASE("identity and characteristic-2 squares") {
  Context c2 = ctx_for("C2", 2, 1);
  Vec one = basis_vec(2, 0);
  Vec x{1, 1};  // 1 + g
  CHECK(multiply(c2, one, x) == x);
  CHECK(is_zero(multiply(c2, x, x)));  // (1+g)^2 = 0 in characteristic 2
}

TEST_CASE("associativity on random triples") {
  for (auto [spec, p, m] : {std::tuple{"S3", 2u, 2u}, {"A4", 3u, 1u}, {"C4 x C2", 2u, 1u}}) {
    Context ctx = ctx_for(spec, p, m);
    SplitMix64 rng(42);
    for (int t = 0; t < 10; ++t) {
      Vec x = random_vec(ctx, rng), y = random_vec(ctx, rng), z = random_vec(ctx, rng);
      CHECK(multiply(ctx, multiply(ctx, x, y), z) == multiply(ctx, x, multiply(ctx, y, z)));
    }
  }
}

TEST_CASE("center has class-count dimension and commutes") {
  Context a5 = ctx_for("A5", 2, 4);
  CHECK(center_basis(a5).dim() == 5);
  Context c4 = ctx_for("C4", 2, 1);
  CHECK(center_basis(c4).dim() == 4);
  Context s3 = ctx_for("S3", 2, 2);
  CHECK(center_basis(s3).dim() == 3);

  SplitMix64 rng(1);
  Vec zr = random_central(s3, rng);
  CHECK(is_central(s3, zr));
  Vec any = random_vec(s3, rng);
  CHECK(multiply(s3, s3.class_sums[1], any) == multiply(s3, any, s3.class_sums[1]));
}

TEST_CASE("echelon canonical form") {
  Context ctx = ctx_for("C4 x C2", 2, 1);
  SplitMix64 rng(5);
  std::vector<Vec> vs;
  for (int i = 0; i < 6; ++i) vs.push_back(random_vec(ctx, rng));
  Subspace a = echelonize(ctx.F, ctx.dim(), vs);
  // idempotent and insertion-order independent
  Subspace b = echelonize(ctx.F, ctx.dim(), a.rows());
  CHECK(a.same_space(b));
  std::vector<Vec> rev(vs.rbegin(), vs.rend());
  Subspace c = echelonize(ctx.F, ctx.dim(), rev);
  CHECK(a.same_space(c));

  Vec x = random_vec(ctx, rng);
  if (is_zero(x)) x = basis_vec(ctx.dim(), 1);
  Subspace dup = echelonize(ctx.F, ctx.dim(), {x, x});
  CHECK(dup.dim() == 1);
  CHECK(dup.member(ctx.F, x));

  Subspace one = echelonize(ctx.F, ctx.dim(), {basis_vec(ctx.dim(), 0)});
  CHECK(one.member(ctx.F, basis_vec(ctx.dim(), 0)));
}

TEST_CASE("dimension formula for sums and intersections") {
  Context ctx = ctx_for("A4", 2, 2);
  SplitMix64 rng(9);
  for (int t = 0; t < 8; ++t) {
    std::vector<Vec> us, ws;
    for (int i = 0; i < 5; ++i) us.push_back(random_vec(ctx, rng));
    for (int i = 0; i < 5; ++i) ws.push_back(random_vec(ctx, rng));
    Subspace U = echelonize(ctx.F, ctx.dim(), us);
    Subspace W = echelonize(ctx.F, ctx.dim(), ws);
    Subspace S = sum(ctx.F, U, W);
    Subspace I = intersect(ctx.F, U, W);
    CHECK(S.dim() + I.dim() == U.dim() + W.dim());
    for (const auto& r : I.rows()) {
      CHECK(U.member(ctx.F, r));
      CHECK(W.member(ctx.F, r));
    }
  }
}

TEST_CASE("product_span with the identity is the identity") {
  Context ctx = ctx_for("S3", 2, 1);
  SplitMix64 rng(3);
  std::vector<Vec> vs;
  for (int i = 0; i < 3; ++i) vs.push_back(random_vec(ctx, rng));
  Subspace S = echelonize(ctx.F, ctx.dim(), vs);
  Subspace P = product_span(ctx, {basis_vec(ctx.dim(), 0)}, S);
  CHECK(P.same_space(S));
}

TEST_CASE("left-multiplication matrices agree with convolution") {
  Context ctx = ctx_for("A4", 2, 2);
  SplitMix64 rng(12);
  Vec x = random_vec(ctx, rng), y = random_vec(ctx, rng);
  auto cols = leftmul_matrix(ctx, x);
  CHECK(leftmul_apply(ctx.F, cols, y) == multiply(ctx, x, y));
}

TEST_CASE("kernel solves semilinear systems") {
  Field F = Field::make(2, 2);
  // alpha_0 * [1,0] + alpha_1 * [1,0] = 0 -> alpha_0 = alpha_1
  std::vector<Vec> conds{{1, 0}, {1, 0}};
  auto k = kernel(F, conds);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{1, 1});

  SplitMix64 rng(77);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> cs(3, Vec(2, 0));
    for (auto& c : cs)
      for (auto& v : c) v = std::uint16_t(rng.below(F.q()));
    auto basis = semilinear_kernel(F, cs, 1);
    for (const auto& alpha : basis) {
      Vec acc(2, 0);
      for (std::size_t i = 0; i < cs.size(); ++i)
        axpy(F, acc, F.pow_p(alpha[i], 1), cs[i]);
      CHECK(is_zero(acc));
    }
  }
}

TEST_CASE("augmentation") {
  Context ctx = ctx_for("C4", 2, 1);
  Vec ones(4, 1);
  CHECK(augmentation(ctx.F, ones) == 0);  // 4 = 0 mod 2
  CHECK(augmentation(ctx.F, basis_vec(4, 0)) == 1);
}
