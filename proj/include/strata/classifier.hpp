#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strata/bipartition.hpp"
#include "strata/exceptional.hpp"
#include "strata/family.hpp"

namespace strata {

/// Eigenvalue class of a spectral block: c = 1, c = -1, or an orbit {c, 1/c}
/// with c^2 != 1 identified by a tag.
enum class EigClass { one, minus_one, pair };

struct SpectralBlock {
    EigClass eig;
    std::string tag;       // pair blocks only
    Partition partition;   // Jordan block sizes on the eigenspace (one member of a pair)

    int dimension() const { return eig == EigClass::pair ? 2 * partition.size() : partition.size(); }
};

/// Symbolic description of an element g of the outer component: its
/// semisimple-part eigenspaces and the Jordan type of the unipotent part on each.
struct ElementData {
    FamilyContext context;
    std::vector<SpectralBlock> blocks;

    /// Throws InvalidArgument naming the first violated constraint.
    void validate() const;
};

/// Bipartition for classical families, d_b symbol for exceptional ones.
using StratumLabel = std::variant<Bipartition, IrrLabel>;

std::string to_string(const StratumLabel& label);

/// The stratum label of g: Springer labels of the c^2 = 1 blocks plus every
/// pair partition, summed positionally. Requires p != 2.
Bipartition classify(const ElementData& g);

std::vector<StratumLabel> strata_index_set(const FamilyContext& ctx);
/// Same as strata_index_set for classical families, unwrapped.
std::vector<Bipartition> classical_index_set(const FamilyContext& ctx);

/// An element whose classify() is lambda, obtained by splitting lambda into
/// two Springer labels and pulling each back to a Jordan type.
ElementData surjectivity_witness(const Bipartition& lambda, const FamilyContext& ctx);

/// With p > 1, K is admissible iff some i in K has coeffs[i] not divisible by p.
/// Every K is admissible when p = 0.
bool admissible_subset(const std::vector<int>& coeffs, int p, const std::vector<int>& subset);

/// Bipartitions Y_a + Y'_b + C (Sp), Y_a + Y_b + C (SOodd) or Y'_a + Y'_b + C
/// (SOeven) with C a partition of n - a - b. Sorted, without duplicates.
std::vector<Bipartition> zero_special_set(const FamilyContext& ctx);

std::string to_string(EigClass e);
EigClass eig_class_from_string(const std::string& s);

} // namespace strata
