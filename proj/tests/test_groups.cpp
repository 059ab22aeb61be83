#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "modblocks/groups.hpp"
#include "modblocks/util.hpp"

using namespace modblocks;
using namespace modblocks::groups;

namespace {

// independent quadratic closure, used as the oracle for group_close
std::set<Perm> naive_closure(unsigned degree, const std::vector<Perm>& gens) {
  std::set<Perm> S;
  S.insert(identity_perm(degree));
  for (const auto& g : gens) S.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(S.begin(), S.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (S.insert(compose(a, b)).second) grew = true;
  }
  return S;
}

}  // namespace

TEST_CASE("closure sizes and Cayley consistency") {
  FiniteGroup c4 = FiniteGroup::close(4, {parse_cycles("(1 2 3 4)", 4)});
  CHECK(c4.size() == 4);

  FiniteGroup triv = FiniteGroup::close(1, {});
  CHECK(triv.size() == 1);

  FiniteGroup a5 = builtin_group("A5");
  CHECK(a5.size() == 60);
  auto oracle = naive_closure(5, a5.generators());
  CHECK(oracle.size() == 60);
  // identity is element 0 and the table matches actual composition
  CHECK(a5.elements()[0] == identity_perm(5));
  SplitMix64 rng(7);
  for (int t = 0; t < 200; ++t) {
    unsigned i = unsigned(rng.below(a5.size())), j = unsigned(rng.below(a5.size()));
    Perm prod = compose(a5.elements()[i], a5.elements()[j]);
    CHECK(a5.elements()[a5.mult(i, j)] == prod);
    CHECK(a5.mult(i, a5.inv(i)) == 0);
  }
}

TEST_CASE("builtins have the expected orders") {
  CHECK(builtin_group("S3").size() == 6);
  CHECK(builtin_group("A3").size() == 3);
  CHECK(builtin_group("A4").size() == 12);
  CHECK(builtin_group("V4").size() == 4);
  CHECK(builtin_group("A6").size() == 360);
  CHECK(builtin_group("PSL28").size() == 504);
  CHECK(builtin_group("C12").size() == 12);
  CHECK(builtin_group("E2^3").size() == 8);
  CHECK(builtin_group("E3^2").size() == 9);
  CHECK_THROWS_AS(builtin_group("Q8"), InputError);
}

TEST_CASE("conjugacy classes") {
  FiniteGroup a5 = builtin_group("A5");
  std::multiset<std::size_t> sizes;
  for (const auto& c : a5.conjugacy_classes()) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 12, 12, 15, 20});

  FiniteGroup c4 = builtin_group("C4");
  CHECK(c4.conjugacy_classes().size() == 4);

  FiniteGroup s3 = builtin_group("S3");
  std::multiset<std::size_t> s3sizes;
  for (const auto& c : s3.conjugacy_classes()) s3sizes.insert(c.size());
  CHECK(s3sizes == std::multiset<std::size_t>{1, 2, 3});

  // class sizes divide the order and sum to it
  std::size_t total = 0;
  for (const auto& c : a5.conjugacy_classes()) {
    CHECK(a5.size() % c.size() == 0);
    total += c.size();
  }
  CHECK(total == a5.size());
}

TEST_CASE("sylow subgroups") {
  FiniteGroup a5 = builtin_group("A5");
  Subgroup syl2 = sylow(a5, 2);
  CHECK(syl2.size() == 4);
  CHECK(is_abelian(syl2));
  for (auto x : syl2.elems)
    if (x != 0) CHECK(a5.order_of(x) == 2);  // Klein four

  FiniteGroup c12 = builtin_group("C12");
  CHECK(sylow(c12, 2).size() == 4);
  CHECK(sylow(c12, 3).size() == 3);
  CHECK(sylow(c12, 5).size() == 1);

  FiniteGroup psl = builtin_group("PSL28");
  Subgroup syl = sylow(psl, 2);
  CHECK(syl.size() == 8);
  CHECK(is_abelian(syl));
  for (auto x : syl.elems)
    if (x != 0) CHECK(psl.order_of(x) == 2);  // elementary abelian

  // order is exactly the p-part
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    std::size_t n = psl.size();
    std::size_t pp = 1;
    while (n % p == 0) {
      pp *= p;
      n /= p;
    }
    CHECK(sylow(psl, p).size() == pp);
  }
}

TEST_CASE("subgroup enumeration inside p-groups") {
  FiniteGroup v4 = builtin_group("V4");
  CHECK(subgroups_of_pgroup(whole_group(v4)).size() == 5);

  FiniteGroup c4 = builtin_group("C4");
  CHECK(subgroups_of_pgroup(whole_group(c4)).size() == 3);

  FiniteGroup e8 = builtin_group("E2^3");
  auto subs = subgroups_of_pgroup(whole_group(e8));
  CHECK(subs.size() == 16);  // 1 + 7 + 7 + 1 subspaces of F2^3

  // closed under pairwise intersection, contains trivial and full
  std::set<std::vector<std::uint16_t>> have;
  for (const auto& s : subs) have.insert(s.elems);
  CHECK(have.count(trivial_subgroup(e8).elems) == 1);
  CHECK(have.count(whole_group(e8).elems) == 1);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      std::vector<std::uint16_t> meet;
      std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                            std::back_inserter(meet));
      CHECK(have.count(meet) == 1);
    }

  FiniteGroup big = builtin_group("C128");
  CHECK_THROWS_AS(subgroups_of_pgroup(whole_group(big)), CapExceeded);
}

TEST_CASE("abelian invariants") {
  auto shape_of = [](const std::string& name, unsigned p) {
    FiniteGroup g = parse_group_spec(name);
    return abelian_invariants(whole_group(g), p);
  };
  AbelianShape s1 = shape_of("C4 x C2 x C2", 2);
  CHECK(s1.r == 1);
  CHECK(s1.exps == std::vector<unsigned>{2});
  CHECK(s1.s == 2);
  CHECK(s1.d == 4);
  CHECK(s1.to_string() == "2^2x2x2");

  AbelianShape v4 = shape_of("V4", 2);
  CHECK(v4.r == 0);
  CHECK(v4.s == 2);
  CHECK(v4.d == 2);

  AbelianShape c8 = shape_of("C8", 2);
  CHECK(c8.exps == std::vector<unsigned>{3});
  CHECK(c8.s == 0);
  CHECK(c8.d == 3);

  // round-trip: rebuilding the abstract group from the shape and recomputing
  // invariants is the identity
  for (const auto& spec : {"C8 x C4 x C2", "C16 x C2", "C9 x C3", "E2^4", "C27"}) {
    FiniteGroup g = parse_group_spec(spec);
    unsigned p = g.size() % 2 == 0 ? 2 : 3;
    AbelianShape s = abelian_invariants(whole_group(g), p);
    std::string rebuilt;
    for (unsigned a : s.exps) {
      std::uint64_t n = 1;
      for (unsigned i = 0; i < a; ++i) n *= p;
      rebuilt += (rebuilt.empty() ? "" : " x ") + ("C" + std::to_string(n));
    }
    for (unsigned i = 0; i < s.s; ++i) rebuilt += (rebuilt.empty() ? "" : " x ") + ("C" + std::to_string(p));
    AbelianShape s2 = abelian_invariants(whole_group(parse_group_spec(rebuilt)), p);
    CHECK(s.exps == s2.exps);
    CHECK(s.s == s2.s);
  }

  FiniteGroup s3 = builtin_group("S3");
  CHECK_THROWS_AS(abelian_invariants(whole_group(s3), 3), InputError);
}

TEST_CASE("centralizer, normalizer, Lagrange") {
  FiniteGroup a5 = builtin_group("A5");
  Subgroup syl2 = sylow(a5, 2);
  Subgroup c = centralizer(a5, syl2);
  CHECK(c.size() == 4);  // the Sylow itself
  Subgroup n = normalizer(a5, syl2);
  CHECK(n.size() == 12);  // A4 inside A5
  CHECK(a5.size() % c.size() == 0);
  CHECK(a5.size() % n.size() == 0);
}

TEST_CASE("direct products") {
  FiniteGroup prod = parse_group_spec("C4 x A5");
  CHECK(prod.size() == 240);
  CHECK(prod.degree() == 9);
  CHECK(prod.conjugacy_classes().size() == 4 * 5);

  FiniteGroup c2a5 = parse_group_spec("C2 x A5");
  CHECK(c2a5.size() == 120);
  CHECK(parse_group_spec("A5 x A5").size() == 3600);
  CHECK_THROWS_AS(parse_group_spec("A6 x A5"), CapExceeded);
}

TEST_CASE("p_prime_exponent") {
  CHECK(p_prime_exponent(builtin_group("A5"), 2) == 15);
  CHECK(p_prime_exponent(builtin_group("PSL28"), 2) == 63);
  CHECK(p_prime_exponent(builtin_group("A6"), 3) == 20);
  CHECK(p_prime_exponent(builtin_group("C8"), 2) == 1);
}

TEST_CASE("normal subgroups and quotients") {
  FiniteGroup a4 = builtin_group("A4");
  auto normals = normal_subgroups(a4);
  CHECK(normals.size() == 3);  // 1, V4, A4
  CHECK(normals[1].size() == 4);

  Subgroup v4 = normals[1];
  FiniteGroup q = quotient_group(a4, v4);
  CHECK(q.size() == 3);

  Subgroup m = minimal_normal_subgroup(a4);
  CHECK(m.size() == 4);

  FiniteGroup a5 = builtin_group("A5");
  CHECK(normal_subgroups(a5).size() == 2);  // simple
}

TEST_CASE("p-solvability") {
  CHECK(is_p_solvable(builtin_group("A4"), 2));
  CHECK(is_p_solvable(builtin_group("A4"), 3));
  CHECK(is_p_solvable(builtin_group("S3"), 2));
  CHECK(is_p_solvable(builtin_group("S3"), 3));
  CHECK(is_p_solvable(builtin_group("C8"), 2));
  CHECK(!is_p_solvable(builtin_group("A5"), 2));
  CHECK(!is_p_solvable(builtin_group("PSL28"), 2));
  CHECK(is_p_solvable(builtin_group("A5"), 7));  // 7 does not divide 60... vacuously solvable
}

TEST_CASE("subgroup_as_group keeps positions aligned") {
  FiniteGroup a4 = builtin_group("A4");
  Subgroup v4 = minimal_normal_subgroup(a4);
  auto sub = subgroup_as_group(a4, v4);
  CHECK(sub.group.size() == 4);
  for (unsigned i = 0; i < sub.group.size(); ++i)
    CHECK(a4.elements()[sub.to_parent[i]] == sub.group.elements()[i]);
}

TEST_CASE("group definition files") {
  std::string path = "/tmp/mb_test_groups_def.txt";
  {
    FILE* f = fopen(path.c_str(), "w");
    fputs("# sample\nname K\ndegree 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n\nname KP\nproduct K C3\n", f);
    fclose(f);
  }
  FiniteGroup g = parse_group_spec("@" + path);
  CHECK(g.size() == 12);  // V4 x C3
  CHECK_THROWS_AS(parse_group_spec("@/nonexistent/file"), InputError);
  CHECK_THROWS_AS(parse_group_spec("C4 x"), InputError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), InputError);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 4), InputError);
}
