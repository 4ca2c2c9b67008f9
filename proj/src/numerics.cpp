#include "strata/numerics.hpp"

#include "strata/error.hpp"

namespace strata {

int b_invariant(const Bipartition& lambda) {
    int b = 0;
    for (std::size_t pos = 1; pos <= lambda.length(); ++pos) {
        const int row = static_cast<int>((pos - 1) / 2);  // i-1 within its own partition
        b += 2 * row * lambda[pos];
        if (pos % 2 == 0) b += lambda[pos];
    }
    return b;
}

RankAndDimension rank_and_dimension(const FamilyContext& ctx) {
    const int N = ctx.N;
    const int n = ctx.half_rank();
    switch (ctx.family) {
    case Family::twistedA: return {N / 2, N * N};
    case Family::twistedD: return {n - 1, n * (2 * n - 1)};
    case Family::Sp: return {n, n * (2 * n + 1)};
    case Family::SOodd: return {n, n * (2 * n + 1)};
    case Family::SOeven: return {n, n * (2 * n - 1)};
    case Family::twistedE6:
    case Family::tripleD4: break;
    }
    throw InvalidArgument("rank_and_dimension: " + to_string(ctx.family) + " carries stored constants");
}

IndexShape index_shape(const FamilyContext& ctx) {
    const int N = ctx.N;
    switch (ctx.family) {
    case Family::twistedD: return {(N - 2) / 2, {4, 0}};
    case Family::twistedA: return N % 2 == 1 ? IndexShape{(N - 1) / 2, {3, 1}} : IndexShape{N / 2, {1, 3}};
    case Family::Sp:
    case Family::SOodd: return {ctx.half_rank(), {2, 2}};
    case Family::SOeven: return {ctx.half_rank(), {0, 4}};
    case Family::twistedE6:
    case Family::tripleD4: break;
    }
    throw InvalidArgument("index_shape: " + to_string(ctx.family) + " is not indexed by bipartitions");
}

bool in_index_set(const Bipartition& lambda, const FamilyContext& ctx) {
    const IndexShape shape = index_shape(ctx);
    return size(lambda) == shape.size && has_excess(lambda, shape.excess);
}

int stratum_orbit_dimension(const Bipartition& lambda, const FamilyContext& ctx) {
    require(in_index_set(lambda, ctx), to_string(lambda) + " is not a stratum label of " + to_string(ctx));
    const auto [rk, dim] = rank_and_dimension(ctx);
    const int d = dim - 2 * b_invariant(lambda) - rk;
    if (d < 0) throw InternalError("negative orbit dimension for " + to_string(lambda) + " in " + to_string(ctx));
    return d;
}

} // namespace strata
