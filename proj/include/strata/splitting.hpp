#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/bipartition.hpp"
#include "strata/hat_sequence.hpp"

namespace strata {

/// A weakly increasing sequence A_1 <= ... <= A_u with A_1 = 0, A_2 = c and
/// A_{i+2} - A_i >= N, the input of the splitting induction.
class ASequence {
public:
    ASequence(std::vector<int> entries, int gap, int c);

    std::span<const int> entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    int gap() const { return gap_; }
    int c() const { return c_; }
    int epsilon() const { return c_ == 0 ? 0 : 1; }
    int operator[](std::size_t i) const { return entries_.at(i - 1); }

    static bool is_valid(std::span<const int> entries, int gap, int c);

private:
    std::vector<int> entries_;
    int gap_;
    int c_;
};

struct Split {
    std::vector<int> b;
    std::vector<int> c;
};

/// The inductive split A = B + C. B_1 = 0, B_2 = epsilon, B has gaps >= 1 two
/// apart, C has gaps >= N-1 two apart, and B, C are both weakly increasing.
/// B_s is chosen by which of s, s-1, s-2 are "single" (their value occurs
/// exactly once in A).
Split split_sequence(const ASequence& a);

/// Which of the seven rules fixed B_s, for s >= 3. Index 0 and 1 are unused.
std::vector<int> split_case_trace(const ASequence& a);

/// Checks every postcondition of split_sequence, including the two running
/// inequalities of the induction. Returns an empty string on success.
std::string check_split(const ASequence& a, const Split& s);

struct Peeled {
    HatSequence piece;  // excess (0,1) when f' >= 1, else (1,0)
    HatSequence rest;
};

/// Splits off one excess-(0,1) piece if f' >= 1, else one (1,0) piece.
/// Requires f + f' >= 2.
Peeled peel(const HatSequence& hat);

/// f' pieces of excess (0,1), then f pieces of excess (1,0), then one (0,0)
/// remainder, in that order; they sum coordinatewise to `hat`.
std::vector<HatSequence> decompose_atoms(const HatSequence& hat);

/// lambda = first + second with first in BP_x and second in BP_y. The (0,0)
/// remainder goes to `first`.
std::pair<Bipartition, Bipartition> decompose(const Bipartition& lambda, ExcessPair x, ExcessPair y);

struct SurjectivityReport {
    ExcessPair x;
    ExcessPair y;
    int n_max = 0;
    std::map<int, int> checked;   // n -> number of bipartitions decomposed
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

SurjectivityReport verify_surjectivity(ExcessPair x, ExcessPair y, int n_max);

} // namespace strata
