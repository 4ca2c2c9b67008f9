#include "strata/classifier.hpp"

#include <algorithm>
#include <set>

#include "strata/error.hpp"
#include "strata/numerics.hpp"
#include "strata/splitting.hpp"
#include "strata/springer.hpp"

namespace strata {

std::string to_string(EigClass e) {
    switch (e) {
    case EigClass::one: return "one";
    case EigClass::minus_one: return "minus_one";
    case EigClass::pair: return "pair";
    }
    return "?";
}

EigClass eig_class_from_string(const std::string& s) {
    if (s == "one") return EigClass::one;
    if (s == "minus_one") return EigClass::minus_one;
    if (s == "pair") return EigClass::pair;
    throw InvalidArgument("unknown eigenvalue class '" + s + "'");
}

std::string to_string(const StratumLabel& label) {
    return std::visit([](const auto& l) { return strata::to_string(l); }, label);
}

namespace {

// Jordan kind of the unipotent part on the c = +-1 eigenspace.
JordanKind kind_for(const FamilyContext& ctx, EigClass e, int dim) {
    if (ctx.family == Family::twistedD) return JordanKind::orthogonal_odd;
    if (e == EigClass::minus_one) return JordanKind::symplectic;
    return dim % 2 == 1 ? JordanKind::orthogonal_odd : JordanKind::orthogonal_even;
}

} // namespace

void ElementData::validate() const {
    require(context.is_twisted_classical(), "element data requires a twistedA or twistedD family");
    int total = 0;
    int ones = 0, minus_ones = 0;
    std::set<std::string> tags;
    for (const auto& blk : blocks) {
        total += blk.dimension();
        if (blk.eig == EigClass::pair) {
            require(!blk.tag.empty(), "pair blocks need a tag");
            require(tags.insert(blk.tag).second, "duplicate pair tag '" + blk.tag + "'");
            require(!blk.partition.empty(), "pair block '" + blk.tag + "' has an empty partition");
            continue;
        }
        require(blk.tag.empty(), "only pair blocks carry a tag");
        (blk.eig == EigClass::one ? ones : minus_ones)++;
        const int d = blk.partition.size();
        if (context.family == Family::twistedD)
            require(d % 2 == 1, "twistedD eigenvalue +-1 blocks must have odd dimension");
        const JordanKind k = kind_for(context, blk.eig, d);
        require(JordanPartition::is_valid(blk.partition, k),
                to_string(blk.eig) + " block " + to_string(blk.partition) + " is not a valid " + to_string(k) +
                    " Jordan type");
    }
    require(ones <= 1 && minus_ones <= 1, "eigenvalue classes one and minus_one may appear at most once");
    if (context.family == Family::twistedD)
        require(ones == 1 && minus_ones == 1, "twistedD elements need both a one and a minus_one block");
    require(total == context.N, "block dimensions sum to " + std::to_string(total) + ", expected N = " +
                                    std::to_string(context.N));
}

Bipartition classify(const ElementData& g) {
    g.validate();
    require(g.context.p != 2, "the twisted classical classifier requires p != 2");
    Bipartition label;
    for (const auto& blk : g.blocks) {
        if (blk.eig == EigClass::pair) {
            label = add(label, as_bipartition(blk.partition));
        } else if (!blk.partition.empty()) {
            const JordanKind k = kind_for(g.context, blk.eig, blk.partition.size());
            label = add(label, springer_label(JordanPartition(blk.partition, k)));
        }
    }
    if (!in_index_set(label, g.context))
        throw InternalError("classify produced " + to_string(label) + " outside the index set of " +
                            to_string(g.context));
    return label;
}

std::vector<Bipartition> classical_index_set(const FamilyContext& ctx) {
    const IndexShape shape = index_shape(ctx);
    return enumerate(shape.size, shape.excess);
}

std::vector<StratumLabel> strata_index_set(const FamilyContext& ctx) {
    std::vector<StratumLabel> out;
    if (ctx.is_exceptional()) {
        for (auto& l : table(ctx.family, ctx.p)) out.emplace_back(std::move(l));
        return out;
    }
    for (auto& b : classical_index_set(ctx)) out.emplace_back(std::move(b));
    return out;
}

ElementData surjectivity_witness(const Bipartition& lambda, const FamilyContext& ctx) {
    require(ctx.is_twisted_classical(), "surjectivity witnesses exist for twistedA and twistedD only");
    require(ctx.p != 2, "the twisted classical classifier requires p != 2");
    require(in_index_set(lambda, ctx), to_string(lambda) + " is not a stratum label of " + to_string(ctx));

    ElementData g{ctx, {}};
    auto push = [&](EigClass e, const Bipartition& part, JordanKind k) {
        JordanPartition j = springer_label_inverse(part, k);
        if (!j.partition.empty()) g.blocks.push_back({e, "", std::move(j.partition)});
    };
    if (ctx.family == Family::twistedD) {
        auto [first, second] = decompose(lambda, {2, 0}, {2, 0});
        push(EigClass::one, first, JordanKind::orthogonal_odd);
        push(EigClass::minus_one, second, JordanKind::orthogonal_odd);
    } else {
        const bool odd = ctx.N % 2 == 1;
        const ExcessPair y = odd ? ExcessPair{2, 0} : ExcessPair{0, 2};
        auto [first, second] = decompose(lambda, {1, 1}, y);
        push(EigClass::minus_one, first, JordanKind::symplectic);
        push(EigClass::one, second, odd ? JordanKind::orthogonal_odd : JordanKind::orthogonal_even);
    }
    g.validate();
    return g;
}

bool admissible_subset(const std::vector<int>& coeffs, int p, const std::vector<int>& subset) {
    require(!coeffs.empty() && coeffs.front() == 1, "coefficient list must start with n_0 = 1");
    require(!subset.empty(), "subset must be non-empty");
    require(p == 0 || is_prime(p), "characteristic must be 0 or a prime");
    for (int i : subset)
        require(i >= 0 && static_cast<std::size_t>(i) < coeffs.size(), "subset index out of range");
    if (p == 0) return true;
    return std::any_of(subset.begin(), subset.end(), [&](int i) { return coeffs[i] % p != 0; });
}

std::vector<Bipartition> zero_special_set(const FamilyContext& ctx) {
    require(ctx.is_connected(), "zero_special_set is defined for Sp, SOodd and SOeven");
    const int n = ctx.half_rank();
    // primed flags of the two generators
    const bool first_primed = ctx.family == Family::SOeven;
    const bool second_primed = ctx.family != Family::SOodd;
    std::set<Bipartition> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            const Bipartition base = add(generator_Y(a, first_primed), generator_Y(b, second_primed));
            for (const auto& c : partitions_of(n - a - b)) out.insert(add(base, as_bipartition(c)));
        }
    return {out.begin(), out.end()};
}

} // namespace strata
