#include "strata/family.hpp"

#include "strata/error.hpp"

namespace strata {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FamilyContext::FamilyContext(Family f, int n, int characteristic) : family(f), N(n), p(characteristic) {
    require(p == 0 || is_prime(p), "characteristic must be 0 or a prime");
    switch (family) {
    case Family::twistedA: require(N >= 2, "twistedA requires N >= 2"); break;
    case Family::twistedD: require(N >= 4 && N % 2 == 0, "twistedD requires even N >= 4"); break;
    case Family::Sp: require(N >= 0 && N % 2 == 0, "Sp requires even N"); break;
    case Family::SOodd: require(N >= 1 && N % 2 == 1, "SOodd requires odd N"); break;
    case Family::SOeven: require(N >= 0 && N % 2 == 0, "SOeven requires even N"); break;
    case Family::twistedE6:
    case Family::tripleD4: N = 0; break;
    }
}

std::string to_string(Family f) {
    switch (f) {
    case Family::twistedA: return "twistedA";
    case Family::twistedD: return "twistedD";
    case Family::twistedE6: return "twistedE6";
    case Family::tripleD4: return "tripleD4";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SOodd";
    case Family::SOeven: return "SOeven";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    for (Family f : {Family::twistedA, Family::twistedD, Family::twistedE6, Family::tripleD4, Family::Sp,
                     Family::SOodd, Family::SOeven})
        if (to_string(f) == s) return f;
    throw InvalidArgument("unknown family '" + s + "'");
}

std::string to_string(const FamilyContext& ctx) {
    std::string s = to_string(ctx.family);
    if (!ctx.is_exceptional()) s += "(" + std::to_string(ctx.N) + ")";
    if (ctx.p) s += "[p=" + std::to_string(ctx.p) + "]";
    return s;
}

} // namespace strata
