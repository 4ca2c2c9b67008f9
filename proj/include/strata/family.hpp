#pragma once

#include <string>

namespace strata {

enum class Family { twistedA, twistedD, twistedE6, tripleD4, Sp, SOodd, SOeven };

/// A group family plus the characteristic of the base field.
///
/// `N` is the dimension of the natural module: twistedA(N), twistedD(N),
/// Sp(N = 2n), SOodd(N = 2n+1), SOeven(N = 2n). It is ignored for the
/// exceptional families.
struct FamilyContext {
    Family family;
    int N = 0;
    int p = 0;

    FamilyContext(Family f, int n = 0, int characteristic = 0);

    static FamilyContext twisted_A(int n, int p = 0) { return {Family::twistedA, n, p}; }
    static FamilyContext twisted_D(int n, int p = 0) { return {Family::twistedD, n, p}; }
    static FamilyContext twisted_E6(int p = 0) { return {Family::twistedE6, 0, p}; }
    static FamilyContext triple_D4(int p = 0) { return {Family::tripleD4, 0, p}; }
    static FamilyContext symplectic(int n, int p = 0) { return {Family::Sp, 2 * n, p}; }
    static FamilyContext so_odd(int n, int p = 0) { return {Family::SOodd, 2 * n + 1, p}; }
    static FamilyContext so_even(int n, int p = 0) { return {Family::SOeven, 2 * n, p}; }

    bool is_exceptional() const { return family == Family::twistedE6 || family == Family::tripleD4; }
    bool is_twisted_classical() const { return family == Family::twistedA || family == Family::twistedD; }
    bool is_connected() const { return family == Family::Sp || family == Family::SOodd || family == Family::SOeven; }
    /// n with N = 2n or 2n+1.
    int half_rank() const { return N / 2; }

    friend bool operator==(const FamilyContext&, const FamilyContext&) = default;
};

bool is_prime(int p);

std::string to_string(Family f);
Family family_from_string(const std::string& s);
std::string to_string(const FamilyContext& ctx);

} // namespace strata
