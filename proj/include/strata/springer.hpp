#pragma once

#include <string>
#include <vector>

#include "strata/bipartition.hpp"

namespace strata {

enum class JordanKind { symplectic, orthogonal_odd, orthogonal_even };

std::string to_string(JordanKind kind);
JordanKind jordan_kind_from_string(const std::string& s);

/// Jordan type of a unipotent element in Sp, SO_odd or SO_even.
///
/// symplectic:      |nu| even, odd parts have even multiplicity.
/// orthogonal_odd:  |nu| odd,  even parts have even multiplicity.
/// orthogonal_even: |nu| even, even parts have even multiplicity.
struct JordanPartition {
    Partition partition;
    JordanKind kind;

    JordanPartition(Partition nu, JordanKind k);
    static bool is_valid(const Partition& nu, JordanKind k);

    friend bool operator==(const JordanPartition&, const JordanPartition&) = default;
};

/// Rank n of the ambient group (Sp_{2n}, SO_{2n+1}, SO_{2n}).
int rank_of(const JordanPartition& j);

/// Excess of the target bipartition set: (1,1), (2,0), (0,2).
ExcessPair label_excess(JordanKind kind);

/// Every valid Jordan partition of the given kind and total size, in the
/// order of partitions_of(). Very even orthogonal partitions appear once.
std::vector<JordanPartition> jordan_partitions(JordanKind kind, int total);

/// Springer label via Lusztig symbols, written as an interleaved bipartition.
/// Lands in BP^n_{1,1}, BP^n_{2,0}, BP^n_{0,2} for the three kinds.
Bipartition springer_label(const JordanPartition& j);

/// Two-sided inverse of springer_label. Throws NotInImage outside the target set.
JordanPartition springer_label_inverse(const Bipartition& lambda, JordanKind kind);

/// dim of the centralizer, in sp or so, of a nilpotent element with Jordan
/// type j. Exact rational elimination; |nu| <= 12.
int centralizer_dimension_oracle(const JordanPartition& j);

inline constexpr int kOracleSizeLimit = 12;

} // namespace strata
