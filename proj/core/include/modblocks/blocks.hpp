#pragma once

// Block decomposition of kG: primitive central idempotents over a splitting
// field, the covering relation for normal subgroups, the Brauer truncation
// map, and defect-group identification by maximal Brauer-nonvanishing
// subgroups of a fixed Sylow subgroup.

#include <vector>

#include "modblocks/algebra.hpp"
#include "modblocks/groups.hpp"

namespace modblocks::blocks {

using algebra::Context;
using algebra::Subspace;
using algebra::Vec;

struct Block {
  unsigned index = 0;
  Vec idempotent;
  unsigned dim = 0;  // dim of e*kG
  bool principal = false;
  groups::Subgroup defect_group;
  unsigned defect = 0;
  bool abelian_defect = true;
  groups::AbelianShape shape;  // meaningful only when abelian_defect
  Subspace algebra_rows;       // echelon basis of e*kG
};

// Primitive central idempotents, pairwise orthogonal, summing to 1, in
// deterministic order (smallest pivot position first). The splitting is
// self-certifying: if any central component keeps a residue field larger
// than the coefficient field, FieldTooSmall is raised and the caller must
// enlarge the field to at least ctx.required_degree.
std::vector<Vec> central_idempotents(const Context& ctx);

// Brauer truncation: restrict the coefficients of central z to C_G(Q).
// Q must be a p-subgroup for the characteristic p of ctx.
Vec brauer_map(const Context& ctx, const Vec& z, const groups::Subgroup& Q);

// Full decomposition: idempotents, dimensions, principal flag, defect
// groups with defects and abelian shapes. Dimensions sum to |G|.
std::vector<Block> decompose(const Context& ctx);

const Block& principal_block(const std::vector<Block>& blocks);

// Whether block B of G covers block b of normal N <= G, i.e. e_B * e_b != 0
// with e_b embedded along the position map of N inside G.
bool covers(const Context& ctx, const Vec& e_B, const Vec& e_b_embedded);

// Embeds a kN coefficient vector into kG along subgroup positions.
Vec embed(const Context& ctx_G, const std::vector<std::uint16_t>& to_parent, const Vec& v);

}  // namespace modblocks::blocks
