#include "strata/hat_sequence.hpp"

#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

std::size_t expected_length(HatKind kind, int m) {
    return static_cast<std::size_t>(kind == HatKind::unprimed ? 2 * m + 1 : 2 * m);
}

// Offset added at 1-indexed position `pos` by kappa / kappa_prime.
int offset(HatKind kind, int m, ExcessPair x, std::size_t pos) {
    const int i = static_cast<int>((pos + 1) / 2);
    const bool odd = pos % 2 == 1;
    if (kind == HatKind::unprimed) {
        if (pos == static_cast<std::size_t>(2 * m + 1)) return 0;
        return odd ? (m - i + 1) * x.total() : (m - i) * x.e + (m - i + 1) * x.e_prime;
    }
    return odd ? (m - i + 1) * x.e + (m - i) * x.e_prime : (m - i) * x.total();
}

} // namespace

bool HatSequence::satisfies_invariants(HatKind kind, int m, ExcessPair excess, std::span<const int> v) {
    if (m < 1 || v.size() != expected_length(kind, m)) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
        if (i + 2 < v.size() && v[i] - v[i + 2] < excess.total()) return false;
    }
    const std::size_t n = v.size();
    if (v[n - 1] != 0) return false;
    return v[n - 2] == (kind == HatKind::unprimed ? excess.e_prime : excess.e);
}

HatSequence::HatSequence(HatKind kind, int m, ExcessPair excess, std::vector<int> entries)
    : kind_(kind), m_(m), excess_(excess), entries_(std::move(entries)) {
    require(m_ >= 1, "hat sequence requires m >= 1");
    if (!satisfies_invariants(kind_, m_, excess_, entries_))
        throw InvalidArgument("sequence " + to_string(*this) + " violates the hat-sequence invariants");
}

HatSequence HatSequence::zero(int m, HatKind kind) {
    return HatSequence(kind, m, {0, 0}, std::vector<int>(expected_length(kind, m), 0));
}

int minimal_m(const Bipartition& lambda, HatKind kind) {
    const int len = static_cast<int>(lambda.length());
    // unprimed needs len <= 2m-1, primed needs len <= 2m-2
    const int m = kind == HatKind::unprimed ? (len + 2) / 2 : (len + 3) / 2;
    return std::max(m, 1);
}

HatSequence kappa(const Bipartition& lambda, int m, ExcessPair x, HatKind kind) {
    require(m >= 1, "m must be positive");
    require(has_excess(lambda, x), "bipartition " + to_string(lambda) + " does not have the requested excess");
    const std::size_t n = expected_length(kind, m);
    // The last two positions must be zero in lambda.
    require(lambda.length() + 2 <= n, "m too small for bipartition " + to_string(lambda));
    std::vector<int> out(n);
    for (std::size_t pos = 1; pos <= n; ++pos) out[pos - 1] = lambda[pos] + offset(kind, m, x, pos);
    return HatSequence(kind, m, x, std::move(out));
}

HatSequence kappa(const Bipartition& lambda, int m, ExcessPair x) {
    return kappa(lambda, m, x, HatKind::unprimed);
}

HatSequence kappa_prime(const Bipartition& lambda, int m, ExcessPair x) {
    return kappa(lambda, m, x, HatKind::primed);
}

Bipartition kappa_inverse(const HatSequence& hat) {
    std::vector<int> v(hat.length());
    for (std::size_t pos = 1; pos <= v.size(); ++pos) {
        v[pos - 1] = hat[pos] - offset(hat.kind(), hat.m(), hat.excess(), pos);
        if (v[pos - 1] < 0) throw NotInImage("hat sequence " + to_string(hat) + " has a negative preimage entry");
    }
    for (std::size_t i = 2; i < v.size(); ++i)
        if (v[i - 2] < v[i]) throw NotInImage("preimage of " + to_string(hat) + " is not a bipartition");
    Bipartition lambda(std::move(v));
    if (!has_excess(lambda, hat.excess()))
        throw NotInImage("preimage of " + to_string(hat) + " lacks the sequence's excess");
    return lambda;
}

HatSequence hat_add(const HatSequence& a, const HatSequence& b) {
    require(a.kind() == b.kind(), "cannot add primed and unprimed hat sequences");
    require(a.m() == b.m(), "cannot add hat sequences with different m");
    std::vector<int> out(a.length());
    for (std::size_t i = 1; i <= out.size(); ++i) out[i - 1] = a[i] + b[i];
    return HatSequence(a.kind(), a.m(), a.excess() + b.excess(), std::move(out));
}

std::string to_string(const HatSequence& hat) {
    std::ostringstream os;
    os << (hat.kind() == HatKind::primed ? "hat'" : "hat") << "[m=" << hat.m() << ",excess=" << hat.excess() << "](";
    auto e = hat.entries();
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    return os.str() + ")";
}

} // namespace strata
