#pragma once

#include <span>
#include <string>
#include <vector>

#include "strata/bipartition.hpp"

namespace strata {

/// Which of the two gapped-sequence spaces a HatSequence lives in.
///
/// Unprimed: length 2m+1, entry 2m equal to e', last entry 0.
/// Primed:   length 2m,   entry 2m-1 equal to e,  last entry 0.
/// Both: weakly decreasing, and entries two apart differ by at least e+e'.
enum class HatKind { unprimed, primed };

class HatSequence {
public:
    /// Validates every invariant of the space selected by `kind`.
    HatSequence(HatKind kind, int m, ExcessPair excess, std::vector<int> entries);

    /// All-zero unprimed sequence of excess (0,0).
    static HatSequence zero(int m, HatKind kind = HatKind::unprimed);

    HatKind kind() const { return kind_; }
    int m() const { return m_; }
    ExcessPair excess() const { return excess_; }
    std::span<const int> entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    /// 1-indexed.
    int operator[](std::size_t i) const { return entries_.at(i - 1); }

    friend bool operator==(const HatSequence&, const HatSequence&) = default;

    static bool satisfies_invariants(HatKind kind, int m, ExcessPair excess, std::span<const int> entries);

private:
    HatKind kind_;
    int m_;
    ExcessPair excess_;
    std::vector<int> entries_;
};

/// Smallest m >= 1 for which kappa (resp. kappa_prime) accepts lambda.
int minimal_m(const Bipartition& lambda, HatKind kind = HatKind::unprimed);

HatSequence kappa(const Bipartition& lambda, int m, ExcessPair x);
HatSequence kappa_prime(const Bipartition& lambda, int m, ExcessPair x);
/// Dispatches on `kind`.
HatSequence kappa(const Bipartition& lambda, int m, ExcessPair x, HatKind kind);

/// Subtracts the kappa offsets; throws NotInImage when the difference is not
/// a bipartition with the sequence's excess.
Bipartition kappa_inverse(const HatSequence& hat);

/// Coordinatewise sum; the excess of the result is the sum of the excesses.
HatSequence hat_add(const HatSequence& a, const HatSequence& b);

std::string to_string(const HatSequence& hat);

} // namespace strata
