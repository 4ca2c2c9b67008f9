#pragma once

#include "strata/bipartition.hpp"
#include "strata/family.hpp"

namespace strata {

/// b-invariant of the hyperoctahedral representation labelled by lambda:
/// 2 n(alpha) + 2 n(beta) + |beta|, with alpha the odd positions, beta the
/// even positions and n(mu) = sum (i-1) mu_i.
int b_invariant(const Bipartition& lambda);

struct RankAndDimension {
    int rk_D;
    int dim_G0;
};

/// Classical families only.
RankAndDimension rank_and_dimension(const FamilyContext& ctx);

/// The stratum index set of a classical family is BP^size_excess.
struct IndexShape {
    int size;
    ExcessPair excess;
};

IndexShape index_shape(const FamilyContext& ctx);
bool in_index_set(const Bipartition& lambda, const FamilyContext& ctx);

/// dim G0 - 2 b(lambda) - rk_D: the common dimension of the G0-orbits in the
/// stratum labelled by lambda.
int stratum_orbit_dimension(const Bipartition& lambda, const FamilyContext& ctx);

} // namespace strata
