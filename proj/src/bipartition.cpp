#include "strata/bipartition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

void trim_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Partitions of n with every part <= max_part, largest-first order.
void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

ExcessPair::ExcessPair(int e_, int e_prime_) : e(e_), e_prime(e_prime_) {
    require(e >= 0 && e_prime >= 0, "excess entries must be non-negative");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    trim_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "partition parts must be positive");
        require(i == 0 || parts_[i - 1] >= parts_[i], "partition must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Bipartition::Bipartition(std::vector<int> entries) : entries_(std::move(entries)) {
    trim_zeros(entries_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        require(entries_[i] >= 0, "bipartition entries must be non-negative");
        if (i >= 2)
            require(entries_[i - 2] >= entries_[i],
                    "bipartition odd and even subsequences must be weakly decreasing");
    }
}

int size(const Bipartition& lambda) {
    auto e = lambda.entries();
    return std::accumulate(e.begin(), e.end(), 0);
}

bool has_excess(const Bipartition& lambda, ExcessPair x) {
    // Checks beyond length()+1 compare zeros and always hold.
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const int slack = (i % 2 == 1) ? x.e : x.e_prime;
        if (lambda[i] + slack < lambda[i + 1]) return false;
    }
    return true;
}

Bipartition add(const Bipartition& lambda, const Bipartition& mu) {
    std::vector<int> out(std::max(lambda.length(), mu.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda[i + 1] + mu[i + 1];
    return Bipartition(std::move(out));
}

std::vector<Bipartition> enumerate(int n, ExcessPair x) {
    require(n >= 0, "size must be non-negative");
    std::vector<Bipartition> out;
    for (int k = 0; k <= n; ++k) {
        for (const auto& alpha : partitions_of(k)) {
            for (const auto& beta : partitions_of(n - k)) {
                Bipartition lambda = from_partition_pair(alpha, beta);
                if (has_excess(lambda, x)) out.push_back(std::move(lambda));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Bipartition generator_Y(int a, bool primed) {
    require(a >= 0, "generator index must be non-negative");
    std::vector<int> v(static_cast<std::size_t>(2 * a), 0);
    for (int i = 0; i < a; ++i) v[static_cast<std::size_t>(2 * i + (primed ? 0 : 1))] = 1;
    return Bipartition(std::move(v));
}

std::pair<Partition, Partition> to_partition_pair(const Bipartition& lambda) {
    std::vector<int> odd, even;
    for (std::size_t i = 1; i <= lambda.length(); ++i) (i % 2 == 1 ? odd : even).push_back(lambda[i]);
    return {Partition(std::move(odd)), Partition(std::move(even))};
}

Bipartition from_partition_pair(const Partition& odd, const Partition& even) {
    const std::size_t len = std::max(2 * odd.length(), 2 * even.length());
    std::vector<int> v(len, 0);
    for (std::size_t i = 0; i < len; ++i) v[i] = (i % 2 == 0) ? odd[i / 2 + 1] : even[i / 2 + 1];
    return Bipartition(std::move(v));
}

Bipartition as_bipartition(const Partition& nu) {
    auto p = nu.parts();
    return Bipartition(std::vector<int>(p.begin(), p.end()));
}

std::vector<Partition> partitions_of(int n) {
    require(n >= 0, "size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

namespace {
std::string join(std::span<const int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}
} // namespace

std::string to_string(const Bipartition& lambda) { return join(lambda.entries()); }
std::string to_string(const Partition& nu) { return join(nu.parts()); }
std::ostream& operator<<(std::ostream& os, const Bipartition& lambda) { return os << to_string(lambda); }
std::ostream& operator<<(std::ostream& os, const Partition& nu) { return os << to_string(nu); }
std::ostream& operator<<(std::ostream& os, ExcessPair x) { return os << '(' << x.e << ',' << x.e_prime << ')'; }

} // namespace strata
