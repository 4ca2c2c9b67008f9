#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace strata {

/// The pair (e, e') parametrizing the families BP_{e,e'}.
struct ExcessPair {
    int e = 0;
    int e_prime = 0;

    ExcessPair() = default;
    ExcessPair(int e_, int e_prime_);

    friend ExcessPair operator+(ExcessPair a, ExcessPair b) { return {a.e + b.e, a.e_prime + b.e_prime}; }
    friend bool operator==(const ExcessPair&, const ExcessPair&) = default;
    friend auto operator<=>(const ExcessPair&, const ExcessPair&) = default;

    int total() const { return e + e_prime; }
};

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Accepts trailing zeros and drops them; throws on any other violation.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const;
    /// 1-indexed part access, zero past the end.
    int operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    /// Number of parts equal to `value`.
    int multiplicity(int value) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A finitely supported non-negative sequence whose odd-position and
/// even-position subsequences are each weakly decreasing.
///
/// Stored with trailing zeros trimmed, so equality and ordering are those of
/// the trimmed entry vector. Positions are 1-indexed.
class Bipartition {
public:
    Bipartition() = default;
    explicit Bipartition(std::vector<int> entries);
    Bipartition(std::initializer_list<int> entries) : Bipartition(std::vector<int>(entries)) {}

    std::span<const int> entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<int> entries_;
};

int size(const Bipartition& lambda);
bool has_excess(const Bipartition& lambda, ExcessPair x);
Bipartition add(const Bipartition& lambda, const Bipartition& mu);
inline Bipartition operator+(const Bipartition& a, const Bipartition& b) { return add(a, b); }

/// All bipartitions of size n with excess x, sorted lexicographically on entries.
std::vector<Bipartition> enumerate(int n, ExcessPair x);

/// Y_a (ones at positions 2,4,...,2a) or, when primed, Y'_a (ones at 1,3,...,2a-1).
Bipartition generator_Y(int a, bool primed);

/// Odd positions go to the first partition, even positions to the second.
std::pair<Partition, Partition> to_partition_pair(const Bipartition& lambda);
Bipartition from_partition_pair(const Partition& odd, const Partition& even);

/// A partition read positionally as an excess-(0,0) bipartition.
Bipartition as_bipartition(const Partition& nu);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

std::string to_string(const Bipartition& lambda);
std::string to_string(const Partition& nu);
std::ostream& operator<<(std::ostream& os, const Bipartition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& nu);
std::ostream& operator<<(std::ostream& os, ExcessPair x);

} // namespace strata
