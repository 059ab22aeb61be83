#include "modblocks/groups.hpp"

#include "modblocks/fields.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace modblocks::groups {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& f) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : f) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

}  // namespace

Perm identity_perm(unsigned degree) {
  Perm f(degree);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[x] = f[g[x]];
  return h;
}

Perm inverse_perm(const Perm& f) {
  Perm h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[f[x]] = std::uint16_t(x);
  return h;
}

bool is_perm(const Perm& f) {
  std::vector<bool> seen(f.size(), false);
  for (auto v : f) {
    if (v >= f.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm parse_cycles(const std::string& text, unsigned degree) {
  Perm f = identity_perm(degree);
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw InputError("cycle notation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<unsigned> cycle;
    std::string num;
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (c == ' ' || c == ',' || c == '\t') {
        if (!num.empty()) {
          cycle.push_back(unsigned(std::stoul(num)));
          num.clear();
        }
      } else {
        throw InputError("cycle notation: unexpected character in \"" + text + "\"");
      }
      ++i;
    }
    if (i == text.size()) throw InputError("cycle notation: missing ')' in \"" + text + "\"");
    ++i;
    if (!num.empty()) cycle.push_back(unsigned(std::stoul(num)));
    if (cycle.size() < 2) {
      any = true;
      continue;  // fixed point, harmless
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      unsigned a = cycle[k], b = cycle[(k + 1) % cycle.size()];
      if (a < 1 || a > degree || b < 1 || b > degree)
        throw InputError("cycle notation: point out of range in \"" + text + "\"");
      if (f[a - 1] != a - 1) throw InputError("cycle notation: point repeated in \"" + text + "\"");
      f[a - 1] = std::uint16_t(b - 1);
    }
    any = true;
  }
  if (!any) throw InputError("cycle notation: empty permutation string");
  if (!is_perm(f)) throw InputError("cycle notation: not a permutation: \"" + text + "\"");
  return f;
}

std::string cycle_string(const Perm& f) {
  std::string out;
  std::vector<bool> seen(f.size(), false);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (seen[x] || f[x] == x) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      seen[y] = true;
      y = f[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup FiniteGroup::close(unsigned degree, std::vector<Perm> generators) {
  if (degree == 0) throw InputError("group degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree || !is_perm(g))
      throw InputError("invalid generator permutation");
  }
  // drop identity generators and duplicates, keep order otherwise
  const Perm id = identity_perm(degree);
  std::vector<Perm> gens;
  for (auto& g : generators)
    if (g != id && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);

  // breadth-first closure in discovery order, remembering one factorization
  // elem[i] = gen[s] o elem[a] per element
  std::vector<Perm> disc{id};
  std::unordered_map<Perm, unsigned, PermHash> index;
  index.emplace(id, 0);
  std::vector<std::pair<unsigned, unsigned>> fact{{0, 0}};  // (gen, parent), unused for identity
  for (std::size_t head = 0; head < disc.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm nxt = compose(gens[s], disc[head]);
      if (index.emplace(nxt, unsigned(disc.size())).second) {
        disc.push_back(std::move(nxt));
        fact.emplace_back(unsigned(s), unsigned(head));
        if (disc.size() > kGroupOrderCap)
          throw CapExceeded("group closure exceeds order cap " + std::to_string(kGroupOrderCap));
      }
    }
  }
  const std::size_t n = disc.size();

  // Cayley table in discovery indices. Generator rows are composed directly;
  // every other row is filled through its factorization in O(1) per entry.
  std::vector<std::uint16_t> table(n * n);
  std::vector<unsigned> gen_disc(gens.size());
  for (unsigned j = 0; j < n; ++j) table[j] = std::uint16_t(j);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    unsigned gi = index.at(gens[s]);
    gen_disc[s] = gi;
    for (unsigned j = 0; j < n; ++j)
      table[std::size_t(gi) * n + j] = std::uint16_t(index.at(compose(gens[s], disc[j])));
  }
  std::vector<bool> done(n, false);
  done[0] = true;
  for (std::size_t s = 0; s < gens.size(); ++s) done[gen_disc[s]] = true;
  for (unsigned i = 1; i < n; ++i) {
    if (done[i]) continue;
    auto [s, a] = fact[i];
    const std::uint16_t* grow = &table[std::size_t(gen_disc[s]) * n];
    const std::uint16_t* arow = &table[std::size_t(a) * n];
    std::uint16_t* row = &table[std::size_t(i) * n];
    // elem_i = gen_s o elem_a, so elem_i o elem_j = gen_s o (elem_a o elem_j).
    // Rows are filled in discovery order, so row a is already complete.
    for (unsigned j = 0; j < n; ++j) row[j] = grow[arow[j]];
  }

  // canonical order: sort by image sequence; identity lands at position 0
  std::vector<unsigned> by_sorted(n);
  std::iota(by_sorted.begin(), by_sorted.end(), 0);
  std::sort(by_sorted.begin(), by_sorted.end(),
            [&](unsigned a, unsigned b) { return disc[a] < disc[b]; });
  std::vector<unsigned> sorted_of(n);
  for (unsigned k = 0; k < n; ++k) sorted_of[by_sorted[k]] = k;

  FiniteGroup G;
  G.degree_ = degree;
  G.size_ = n;
  G.generators_ = gens;
  G.elements_.resize(n);
  for (unsigned k = 0; k < n; ++k) G.elements_[k] = disc[by_sorted[k]];
  G.cayley_.resize(n * n);
  for (unsigned i = 0; i < n; ++i) {
    const std::uint16_t* row = &table[std::size_t(by_sorted[i]) * n];
    std::uint16_t* out = &G.cayley_[std::size_t(i) * n];
    for (unsigned j = 0; j < n; ++j) out[j] = std::uint16_t(sorted_of[row[by_sorted[j]]]);
  }
  for (std::size_t s = 0; s < gens.size(); ++s)
    G.gen_pos_.push_back(std::uint16_t(sorted_of[gen_disc[s]]));

  G.inverse_.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j)
      if (G.mult(i, j) == 0) {
        G.inverse_[i] = std::uint16_t(j);
        break;
      }
  }
  G.order_.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    unsigned o = 1, cur = i;
    while (cur != 0) {
      cur = G.mult(cur, i);
      ++o;
    }
    G.order_[i] = o;
  }
  // conjugacy classes, ordered by least member
  G.class_of_.assign(n, std::uint16_t(0xffff));
  for (unsigned i = 0; i < n; ++i) {
    if (G.class_of_[i] != 0xffff) continue;
    std::uint16_t cid = std::uint16_t(G.classes_.size());
    std::set<unsigned> orbit;
    for (unsigned g = 0; g < n; ++g) orbit.insert(G.conjugate(g, i));
    std::vector<std::uint16_t> cls(orbit.begin(), orbit.end());
    for (unsigned x : cls) G.class_of_[x] = cid;
    G.classes_.push_back(std::move(cls));
  }
  return G;
}

std::optional<unsigned> FiniteGroup::position_of(const Perm& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return unsigned(it - elements_.begin());
}

bool Subgroup::contains(unsigned pos) const {
  return std::binary_search(elems.begin(), elems.end(), std::uint16_t(pos));
}

namespace {

// small generating set by greedy closure; used only for modest subgroups
std::vector<std::uint16_t> reduce_generators(const FiniteGroup& G,
                                             const std::vector<std::uint16_t>& elems) {
  std::vector<std::uint16_t> gens;
  std::vector<std::uint16_t> have{0};
  for (auto x : elems) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    std::vector<std::uint16_t> seed = have;
    seed.push_back(x);
    Subgroup h = closure(G, seed);
    have = h.elems;
    if (have.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{&G, {0}, {}}; }

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup s;
  s.parent = &G;
  s.elems.resize(G.size());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  s.gens = G.generator_positions();
  return s;
}

Subgroup closure(const FiniteGroup& G, std::vector<std::uint16_t> seed) {
  std::vector<bool> in(G.size(), false);
  std::vector<std::uint16_t> list{0};
  in[0] = true;
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto s : seed) {
      unsigned nxt = G.mult(list[head], s);
      if (!in[nxt]) {
        in[nxt] = true;
        list.push_back(std::uint16_t(nxt));
      }
    }
  }
  Subgroup out;
  out.parent = &G;
  out.elems = list;
  std::sort(out.elems.begin(), out.elems.end());
  std::vector<std::uint16_t> g;
  for (auto s : seed)
    if (s != 0) g.push_back(s);
  out.gens = g;
  return out;
}

bool is_abelian(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  for (auto a : S.elems)
    for (auto b : S.elems) {
      if (b > a) break;
      if (G.mult(a, b) != G.mult(b, a)) return false;
    }
  return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  const auto& gens = S.gens.empty() ? S.elems : S.gens;
  for (unsigned g = 0; g < G.size(); ++g)
    for (auto s : gens)
      if (!S.contains(G.conjugate(g, s))) return false;
  return true;
}

bool is_p_group(const Subgroup& S, unsigned p) {
  std::uint64_t n = S.size();
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup sylow(const FiniteGroup& G, unsigned p) {
  const std::uint64_t pp = p_part(G.size(), p);
  if (pp == 1) return trivial_subgroup(G);
  // seed with a p-element of maximal order
  unsigned best = 0, best_ord = 1;
  for (unsigned i = 1; i < G.size(); ++i) {
    unsigned o = G.order_of(i);
    if (p_part(o, p) == o && o > best_ord) {
      best = i;
      best_ord = o;
    }
  }
  Subgroup Q = closure(G, {std::uint16_t(best)});
  while (Q.size() < pp) {
    Subgroup N = normalizer(G, Q);
    bool extended = false;
    for (auto y : N.elems) {
      unsigned o = G.order_of(y);
      if (o == 1 || p_part(o, p) != o || Q.contains(y)) continue;
      std::vector<std::uint16_t> seed = Q.gens;
      if (seed.empty()) seed = Q.elems;
      seed.push_back(y);
      Subgroup Q2 = closure(G, seed);
      if (Q2.size() > Q.size() && is_p_group(Q2, p)) {
        Q = Q2;
        extended = true;
        break;
      }
    }
    if (!extended) throw InternalDefect("sylow: normalizer ascent stalled");
  }
  Q.gens = reduce_generators(G, Q.elems);
  return Q;
}

std::vector<Subgroup> subgroups_of_pgroup(const Subgroup& P) {
  if (P.size() > kSubgroupEnumCap)
    throw CapExceeded("subgroup enumeration cap " + std::to_string(kSubgroupEnumCap) +
                      " exceeded (|P| = " + std::to_string(P.size()) + ")");
  const FiniteGroup& G = *P.parent;
  std::set<std::vector<std::uint16_t>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> cyclics;
  auto push = [&](Subgroup s) -> bool {
    if (seen.insert(s.elems).second) {
      out.push_back(std::move(s));
      return true;
    }
    return false;
  };
  push(trivial_subgroup(G));
  for (auto x : P.elems) {
    Subgroup c = closure(G, {x});
    if (seen.insert(c.elems).second) {
      cyclics.push_back(c);
      out.push_back(c);
    }
  }
  // join everything reachable with a cyclic; every subgroup is such a join
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& c : cyclics) {
      bool inside = std::includes(out[head].elems.begin(), out[head].elems.end(),
                                  c.elems.begin(), c.elems.end());
      if (inside) continue;
      std::vector<std::uint16_t> seed = out[head].gens;
      if (seed.empty()) seed = out[head].elems;
      seed.insert(seed.end(), c.gens.begin(), c.gens.end());
      Subgroup j = closure(G, seed);
      push(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& S) {
  const auto& gens = S.gens.empty() ? S.elems : S.gens;
  Subgroup out;
  out.parent = &G;
  for (unsigned g = 0; g < G.size(); ++g) {
    bool ok = true;
    for (auto s : gens)
      if (G.mult(g, s) != G.mult(s, g)) {
        ok = false;
        break;
      }
    if (ok) out.elems.push_back(std::uint16_t(g));
  }
  out.gens = out.elems.size() <= 256 ? reduce_generators(G, out.elems) : out.elems;
  return out;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
  const auto& gens = S.gens.empty() ? S.elems : S.gens;
  Subgroup out;
  out.parent = &G;
  for (unsigned g = 0; g < G.size(); ++g) {
    bool ok = true;
    for (auto s : gens)
      if (!S.contains(G.conjugate(g, s))) {
        ok = false;
        break;
      }
    if (ok) out.elems.push_back(std::uint16_t(g));
  }
  out.gens = out.elems.size() <= 256 ? reduce_generators(G, out.elems) : out.elems;
  return out;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const unsigned dg = G.degree(), dh = H.degree();
  if (std::uint64_t(G.size()) * H.size() > kGroupOrderCap)
    throw CapExceeded("direct product exceeds order cap");
  std::vector<Perm> gens;
  for (const auto& g : G.generators()) {
    Perm f = identity_perm(dg + dh);
    for (unsigned x = 0; x < dg; ++x) f[x] = g[x];
    gens.push_back(f);
  }
  for (const auto& h : H.generators()) {
    Perm f = identity_perm(dg + dh);
    for (unsigned x = 0; x < dh; ++x) f[dg + x] = std::uint16_t(dg + h[x]);
    gens.push_back(f);
  }
  return FiniteGroup::close(dg + dh, gens);
}

std::uint64_t p_prime_exponent(const FiniteGroup& G, unsigned p) {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < G.size(); ++i) {
    std::uint64_t o = G.order_of(i);
    o /= p_part(o, p);
    e = std::lcm(e, o);
  }
  return e;
}

std::uint64_t AbelianShape::order() const {
  std::uint64_t n = 1;
  for (unsigned a : exps)
    for (unsigned i = 0; i < a; ++i) n *= p;
  for (unsigned i = 0; i < s; ++i) n *= p;
  return n;
}

std::string AbelianShape::to_string() const {
  if (exps.empty() && s == 0) return "1";
  std::string out;
  for (unsigned a : exps) {
    if (!out.empty()) out += 'x';
    out += std::to_string(p) + "^" + std::to_string(a);
  }
  for (unsigned i = 0; i < s; ++i) {
    if (!out.empty()) out += 'x';
    out += std::to_string(p);
  }
  return out;
}

AbelianBasis abelian_basis(const Subgroup& A, unsigned p) {
  const FiniteGroup& G = *A.parent;
  if (!is_p_group(A, p)) throw InputError("abelian_basis: not a p-group for the given p");
  if (!is_abelian(A)) throw InputError("abelian_basis: subgroup is not abelian");
  AbelianBasis out;
  std::vector<std::uint16_t> cur = A.elems;
  while (cur.size() > 1) {
    unsigned best = 0, best_ord = 1;
    for (auto x : cur)
      if (G.order_of(x) > best_ord) {
        best = x;
        best_ord = G.order_of(x);
      }
    Subgroup cyc = closure(G, {std::uint16_t(best)});
    out.gens.push_back(std::uint16_t(best));
    out.orders.push_back(best_ord);
    // greedy complement: maximal subgroup meeting <x> trivially is a complement
    std::vector<std::uint16_t> K{0};
    for (auto y : cur) {
      if (std::binary_search(K.begin(), K.end(), y)) continue;
      std::vector<std::uint16_t> seed = K;
      seed.push_back(y);
      Subgroup K2 = closure(G, seed);
      bool meets = false;
      for (auto z : K2.elems)
        if (z != 0 && cyc.contains(z)) {
          meets = true;
          break;
        }
      if (!meets) K = K2.elems;
    }
    if (std::uint64_t(K.size()) * cyc.size() != cur.size())
      throw InternalDefect("abelian_basis: complement size mismatch");
    cur = K;
  }
  return out;
}

AbelianShape abelian_invariants(const Subgroup& A, unsigned p) {
  AbelianBasis b = abelian_basis(A, p);
  AbelianShape shape;
  shape.p = p;
  for (auto o : b.orders) {
    unsigned a = 0;
    std::uint64_t v = o;
    while (v > 1) {
      v /= p;
      ++a;
    }
    if (a >= 2)
      shape.exps.push_back(a);
    else if (a == 1)
      ++shape.s;
  }
  std::sort(shape.exps.rbegin(), shape.exps.rend());
  shape.r = unsigned(shape.exps.size());
  shape.d = shape.s;
  for (unsigned a : shape.exps) shape.d += a;
  if (shape.order() != A.size()) throw InternalDefect("abelian_invariants: order mismatch");
  return shape;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G) {
  std::set<std::vector<std::uint16_t>> seen;
  std::vector<Subgroup> out;
  auto push = [&](Subgroup s) {
    if (seen.insert(s.elems).second) out.push_back(std::move(s));
  };
  push(trivial_subgroup(G));
  // normal closure of one element per conjugacy class
  for (const auto& cls : G.conjugacy_classes()) {
    Subgroup n = closure(G, cls);
    n.gens = n.elems.size() <= 256 ? reduce_generators(G, n.elems) : n.elems;
    push(std::move(n));
  }
  // close under joins
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<std::uint16_t> seed = out[a].elems;
      seed.insert(seed.end(), out[b].elems.begin(), out[b].elems.end());
      Subgroup j = closure(G, seed);
      j.gens = j.elems.size() <= 256 ? reduce_generators(G, j.elems) : j.elems;
      push(std::move(j));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.elems.size() != y.elems.size()) return x.elems.size() < y.elems.size();
    return x.elems < y.elems;
  });
  return out;
}

Subgroup minimal_normal_subgroup(const FiniteGroup& G) {
  if (G.size() == 1) return trivial_subgroup(G);
  Subgroup best;
  for (const auto& cls : G.conjugacy_classes()) {
    unsigned rep = cls[0];
    if (rep == 0) continue;
    if (!fields::is_prime(G.order_of(rep))) continue;
    Subgroup n = closure(G, cls);
    if (best.parent == nullptr || n.size() < best.size()) best = n;
  }
  if (best.parent == nullptr) throw InternalDefect("minimal_normal_subgroup: no prime-order class");
  best.gens = best.elems.size() <= 256 ? reduce_generators(G, best.elems) : best.elems;
  return best;
}

FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& M) {
  if (!is_normal(G, M)) throw InputError("quotient_group: subgroup is not normal");
  const std::size_t n = G.size();
  std::vector<std::uint32_t> coset_rep(n, UINT32_MAX);
  std::vector<std::uint16_t> reps;
  for (unsigned g = 0; g < n; ++g) {
    if (coset_rep[g] != UINT32_MAX) continue;
    // right coset Mg; its minimal member is g itself by the scan order
    for (auto m : M.elems) coset_rep[G.mult(m, g)] = g;
    reps.push_back(std::uint16_t(g));
  }
  std::vector<std::uint32_t> coset_id(n);
  for (unsigned g = 0; g < n; ++g) {
    unsigned rep = coset_rep[g];
    coset_id[g] = std::uint32_t(std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin());
  }
  const unsigned deg = unsigned(reps.size());
  std::vector<Perm> gens;
  for (auto s : G.generator_positions()) {
    Perm f(deg);
    for (unsigned c = 0; c < deg; ++c) f[c] = std::uint16_t(coset_id[G.mult(reps[c], s)]);
    gens.push_back(f);
  }
  FiniteGroup Q = FiniteGroup::close(deg == 0 ? 1 : deg, gens);
  if (Q.size() * M.size() != G.size()) throw InternalDefect("quotient_group: order mismatch");
  return Q;
}

bool is_p_solvable(const FiniteGroup& G, unsigned p) {
  if (G.size() == 1) return true;
  Subgroup M = minimal_normal_subgroup(G);
  bool pg = is_p_group(M, p);
  bool ppg = true;
  for (auto x : M.elems)
    if (G.order_of(x) % p == 0) {
      ppg = false;
      break;
    }
  if (!pg && !ppg) return false;
  if (M.size() == G.size()) return true;
  return is_p_solvable(quotient_group(G, M), p);
}

SubgroupAlgebraMap subgroup_as_group(const FiniteGroup& G, const Subgroup& S) {
  std::vector<Perm> gens;
  const auto& gp = S.gens.empty() ? S.elems : S.gens;
  for (auto s : gp) gens.push_back(G.elements()[s]);
  SubgroupAlgebraMap out{FiniteGroup::close(G.degree(), gens), {}};
  if (out.group.size() != S.size()) throw InternalDefect("subgroup_as_group: closure mismatch");
  out.to_parent.resize(S.size());
  for (unsigned i = 0; i < out.group.size(); ++i) {
    auto pos = G.position_of(out.group.elements()[i]);
    if (!pos) throw InternalDefect("subgroup_as_group: element missing in parent");
    out.to_parent[i] = std::uint16_t(*pos);
  }
  return out;
}

// --- builtins and parsing ----------------------------------------------------

namespace {

FiniteGroup cyclic_group(unsigned n) {
  if (n == 0) throw InputError("C0 is not a group");
  if (n == 1) return FiniteGroup::close(1, {});
  if (n > kGroupOrderCap) throw CapExceeded("cyclic group exceeds order cap");
  Perm c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = std::uint16_t((i + 1) % n);
  return FiniteGroup::close(n, {c});
}

FiniteGroup elementary_abelian(unsigned p, unsigned k) {
  if (!fields::is_prime(p)) throw InputError("E<p>^<k>: p must be prime");
  if (k == 0) throw InputError("E<p>^<k>: k must be positive");
  std::vector<Perm> gens;
  unsigned deg = p * k;
  for (unsigned i = 0; i < k; ++i) {
    Perm f = identity_perm(deg);
    for (unsigned x = 0; x < p; ++x) f[i * p + x] = std::uint16_t(i * p + (x + 1) % p);
    gens.push_back(f);
  }
  return FiniteGroup::close(deg, gens);
}

FiniteGroup psl_2_8() {
  // points: field codes 0..7 of GF(8) = GF(2)[t]/(t^3+t+1), plus infinity = 8
  auto f8mul = [](unsigned a, unsigned b) {
    unsigned r = 0;
    for (unsigned i = 0; i < 3; ++i)
      if (b & (1u << i)) r ^= a << i;
    for (unsigned i = 5; i >= 3; --i)
      if (r & (1u << i)) r ^= (0b1011u << (i - 3));
    return r;
  };
  Perm add1(9), mult(9), invp(9);
  for (unsigned x = 0; x < 8; ++x) add1[x] = std::uint16_t(x ^ 1);
  add1[8] = 8;
  mult[0] = 0;
  mult[8] = 8;
  for (unsigned x = 1; x < 8; ++x) mult[x] = std::uint16_t(f8mul(x, 2));
  invp[0] = 8;
  invp[8] = 0;
  for (unsigned x = 1; x < 8; ++x)
    for (unsigned y = 1; y < 8; ++y)
      if (f8mul(x, y) == 1) invp[x] = std::uint16_t(y);
  return FiniteGroup::close(9, {add1, mult, invp});
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool is_builtin_name(const std::string& name) {
  static const std::set<std::string> fixed{"S3", "A3", "A4", "V4", "A5", "A6", "PSL28"};
  if (fixed.count(name)) return true;
  if (name.size() >= 2 && name[0] == 'C') {
    return name.find_first_not_of("0123456789", 1) == std::string::npos;
  }
  if (name.size() >= 4 && name[0] == 'E' && name.find('^') != std::string::npos) return true;
  return false;
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "S3") return FiniteGroup::close(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
  if (name == "A3") return FiniteGroup::close(3, {parse_cycles("(1 2 3)", 3)});
  if (name == "A4") return FiniteGroup::close(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)});
  if (name == "V4") return elementary_abelian(2, 2);
  if (name == "A5") return FiniteGroup::close(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(3 4 5)", 5)});
  if (name == "A6") return FiniteGroup::close(6, {parse_cycles("(1 2 3 4 5)", 6), parse_cycles("(4 5 6)", 6)});
  if (name == "PSL28") return psl_2_8();
  if (!name.empty() && name[0] == 'C') {
    auto digits = name.substr(1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return cyclic_group(unsigned(std::stoul(digits)));
  }
  if (!name.empty() && name[0] == 'E') {
    auto caret = name.find('^');
    if (caret != std::string::npos) {
      auto ps = name.substr(1, caret - 1), ks = name.substr(caret + 1);
      if (!ps.empty() && !ks.empty() &&
          ps.find_first_not_of("0123456789") == std::string::npos &&
          ks.find_first_not_of("0123456789") == std::string::npos)
        return elementary_abelian(unsigned(std::stoul(ps)), unsigned(std::stoul(ks)));
    }
  }
  throw InputError("unknown builtin group \"" + name + "\"");
}

FiniteGroup parse_group_spec(const std::string& spec) {
  GroupSpecEnv env;
  return parse_group_spec(spec, env);
}

FiniteGroup parse_group_spec(const std::string& spec, GroupSpecEnv& env) {
  std::string s = strip(spec);
  if (s.empty()) throw InputError("empty group spec");
  if (s[0] == '@') return parse_group_file(s.substr(1), env);
  // split on whitespace; "A x B x C" builds left-associated products
  std::istringstream iss(s);
  std::vector<std::string> tokens;
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  auto resolve = [&](const std::string& name) -> FiniteGroup {
    auto it = env.named.find(name);
    if (it != env.named.end()) return it->second;
    return builtin_group(name);
  };
  if (tokens.size() == 1) return resolve(tokens[0]);
  if (tokens.size() % 2 == 0) throw InputError("malformed product expression \"" + s + "\"");
  FiniteGroup acc = resolve(tokens[0]);
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    if (tokens[i] != "x") throw InputError("expected 'x' in product expression \"" + s + "\"");
    acc = direct_product(acc, resolve(tokens[i + 1]));
  }
  return acc;
}

FiniteGroup parse_group_file(const std::string& path, GroupSpecEnv& env) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file \"" + path + "\"");
  std::string line, cur_name;
  std::optional<unsigned> degree;
  std::vector<Perm> gens;
  bool have_def = false;
  std::string last_name;
  auto finish = [&]() {
    if (cur_name.empty()) return;
    if (!degree) throw InputError("group \"" + cur_name + "\": missing degree directive");
    env.named[cur_name] = FiniteGroup::close(*degree, gens);
    last_name = cur_name;
    have_def = true;
    cur_name.clear();
    degree.reset();
    gens.clear();
  };
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream iss(t);
    std::string cmd;
    iss >> cmd;
    if (cmd == "name") {
      finish();
      iss >> cur_name;
      if (cur_name.empty()) throw InputError("name directive without identifier");
    } else if (cmd == "degree") {
      unsigned d = 0;
      if (!(iss >> d) || d == 0) throw InputError("bad degree directive: " + t);
      degree = d;
    } else if (cmd == "gen") {
      if (!degree) throw InputError("gen directive before degree: " + t);
      std::string rest;
      std::getline(iss, rest);
      gens.push_back(parse_cycles(strip(rest), *degree));
    } else if (cmd == "product") {
      std::string a, b;
      iss >> a >> b;
      if (a.empty() || b.empty()) throw InputError("bad product directive: " + t);
      auto resolve = [&](const std::string& n) -> FiniteGroup {
        auto it = env.named.find(n);
        if (it != env.named.end()) return it->second;
        return builtin_group(n);
      };
      std::string pname = cur_name.empty() ? a + "x" + b : cur_name;
      cur_name.clear();
      degree.reset();
      gens.clear();
      env.named[pname] = direct_product(resolve(a), resolve(b));
      last_name = pname;
      have_def = true;
    } else {
      throw InputError("unknown directive \"" + cmd + "\" in group file");
    }
  }
  finish();
  if (!have_def) throw InputError("group file \"" + path + "\" defines no group");
  return env.named.at(last_name);
}

}  // namespace modblocks::groups
