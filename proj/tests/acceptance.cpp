// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "strata/classifier.hpp"
#include "strata/exceptional.hpp"
#include "strata/hat_sequence.hpp"
#include "strata/numerics.hpp"
#include "strata/splitting.hpp"
#include "strata/springer.hpp"

using namespace strata;

namespace {

struct Outcome {
    bool pass = true;
    long checked = 0;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

Outcome split_sweep() {
    Outcome o;
    for (int gap = 2; gap <= 6; ++gap)
        for (int c = 0; c <= gap; ++c)
            for (int u = 3; u <= 13; ++u)
                oracle::for_each_a_sequence(u, gap, c, 24, [&](const std::vector<int>& v) {
                    const ASequence a(v, gap, c);
                    const auto problems = check_split(a, split_sequence(a));
                    if (!problems.empty()) o.fail(problems);
                    ++o.checked;
                });
    return o;
}

Outcome surjectivity() {
    Outcome o;
    const std::vector<std::pair<ExcessPair, ExcessPair>> maps = {
        {{1, 0}, {0, 1}}, {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}},
        {{1, 1}, {1, 1}}, {{2, 0}, {0, 2}}, {{0, 2}, {0, 2}},
    };
    for (const auto& [x, y] : maps) {
        const auto r = verify_surjectivity(x, y, 8);
        for (const auto& [n, count] : r.checked) o.checked += count;
        if (!r.ok()) o.fail(r.failures.front());
    }
    return o;
}

Outcome kappa_suite() {
    Outcome o;
    std::map<std::pair<int, int>, std::vector<Bipartition>> pool;  // (e, e') -> BP with |lambda| <= 8
    for (int e = 0; e <= 4; ++e)
        for (int ep = 0; ep <= 4; ++ep)
            for (int n = 0; n <= 8; ++n)
                for (auto& b : enumerate(n, {e, ep})) pool[{e, ep}].push_back(b);

    for (HatKind kind : {HatKind::unprimed, HatKind::primed}) {
        for (const auto& [ex, lambdas] : pool) {
            const ExcessPair x{ex.first, ex.second};
            for (const auto& l : lambdas)
                for (int m : {minimal_m(l, kind), minimal_m(l, kind) + 2}) {
                    ++o.checked;
                    if (kappa_inverse(kappa(l, m, x, kind)) != l) o.fail("round trip " + to_string(l));
                }
        }
        // additivity over excess splits whose sum stays within (4, 4)
        for (int e1 = 0; e1 <= 2; ++e1)
            for (int ep1 = 0; ep1 <= 2; ++ep1)
                for (int e2 = 0; e2 <= 2; ++e2)
                    for (int ep2 = 0; ep2 <= 2; ++ep2) {
                        const ExcessPair x{e1, ep1}, y{e2, ep2};
                        for (const auto& l : pool[{e1, ep1}])
                            for (const auto& mu : pool[{e2, ep2}]) {
                                if (size(l) + size(mu) > 8) continue;
                                const Bipartition s = add(l, mu);
                                const int m0 = std::max({minimal_m(l, kind), minimal_m(mu, kind), minimal_m(s, kind)});
                                for (int m : {m0, m0 + 2}) {
                                    ++o.checked;
                                    if (hat_add(kappa(l, m, x, kind), kappa(mu, m, y, kind)) != kappa(s, m, x + y, kind))
                                        o.fail("additivity " + to_string(l) + " + " + to_string(mu));
                                }
                            }
                    }
    }
    return o;
}

Outcome springer_pinning() {
    Outcome o;
    const std::vector<std::pair<JordanKind, int>> dims = {{JordanKind::symplectic, 0},
                                                          {JordanKind::orthogonal_odd, 1}};
    for (const auto& [k, extra] : dims)
        for (int n = 0; 2 * n + extra <= 10 + extra; ++n)
            for (const auto& j : jordan_partitions(k, 2 * n + extra)) {
                ++o.checked;
                if (centralizer_dimension_oracle(j) != 2 * b_invariant(springer_label(j)) + n)
                    o.fail("dimension identity at " + to_string(j.partition));
            }
    for (JordanKind k : {JordanKind::symplectic, JordanKind::orthogonal_odd, JordanKind::orthogonal_even})
        for (int n = 0;; ++n) {
            const int total = k == JordanKind::orthogonal_odd ? 2 * n + 1 : 2 * n;
            if (total > 12) break;
            std::set<Bipartition> images;
            const auto parts = jordan_partitions(k, total);
            for (const auto& j : parts) {
                const Bipartition l = springer_label(j);
                if (size(l) != n || !has_excess(l, label_excess(k))) o.fail("label outside target " + to_string(l));
                images.insert(l);
            }
            const auto target = enumerate(n, label_excess(k));
            ++o.checked;
            if (images.size() != parts.size() || images != std::set<Bipartition>(target.begin(), target.end()))
                o.fail("not a bijection for " + to_string(k) + " n=" + std::to_string(n));
        }
    return o;
}

Outcome twisted_A3() {
    Outcome o;
    const auto ctx = FamilyContext::twisted_A(3);
    const auto set = classical_index_set(ctx);
    std::multiset<int> dims;
    for (const auto& l : set) dims.insert(stratum_orbit_dimension(l, ctx));
    if (set.size() != 2) o.fail("index set size " + std::to_string(set.size()));
    if (dims != std::multiset<int>{6, 8}) o.fail("orbit dimensions differ");
    // regular: g_u regular unipotent on V_1 = line, pair eigenspaces of dim 1
    const ElementData regular{ctx, {{EigClass::one, "", {1}}, {EigClass::pair, "t", {1}}}};
    const ElementData subregular{ctx, {{EigClass::one, "", {1}}, {EigClass::minus_one, "", {1, 1}}}};
    if (classify(regular) != Bipartition{1}) o.fail("regular witness");
    if (classify(subregular) != Bipartition{0, 1}) o.fail("subregular witness");
    if (stratum_orbit_dimension(classify(regular), ctx) != 8) o.fail("regular dimension");
    if (stratum_orbit_dimension(classify(subregular), ctx) != 6) o.fail("subregular dimension");
    o.checked = 2;
    return o;
}

Outcome twisted_bijection() {
    Outcome o;
    std::vector<FamilyContext> ctxs;
    for (int N : {4, 6, 8}) ctxs.push_back(FamilyContext::twisted_D(N));
    for (int N = 2; N <= 7; ++N) ctxs.push_back(FamilyContext::twisted_A(N));
    for (const auto& ctx : ctxs)
        for (const auto& l : classical_index_set(ctx)) {
            ++o.checked;
            const Bipartition got = classify(surjectivity_witness(l, ctx));
            if (got != l) o.fail(to_string(ctx) + ": " + to_string(l) + " -> " + to_string(got));
            if (!in_index_set(got, ctx)) o.fail(to_string(ctx) + ": output outside index set");
        }
    return o;
}

Outcome exceptional_tables() {
    Outcome o;
    auto db = [](const std::vector<IrrLabel>& t) {
        std::multiset<std::pair<int, int>> s;
        for (const auto& l : t) s.emplace(l.degree, l.b);
        return s;
    };
    const auto d4 = table(Family::tripleD4);
    std::multiset<int> bs;
    for (const auto& l : d4) bs.insert(l.b);
    if (d4.size() != 5 || bs != std::multiset<int>{0, 1, 2, 3, 6}) o.fail("tripleD4 labels");
    const std::multiset<std::pair<int, int>> e6_expected = {
        {1, 0}, {4, 1}, {9, 2},  {12, 4}, {16, 5}, {9, 10}, {4, 13}, {1, 24}, {8, 3},
        {8, 3}, {8, 9}, {8, 9},  {6, 6},  {9, 6},  {4, 7},  {1, 12}, {2, 16}};
    const auto e6 = table(Family::twistedE6);
    if (e6.size() != 17 || db(e6) != e6_expected) o.fail("twistedE6 labels");
    for (Family f : {Family::twistedE6, Family::tripleD4})
        for (int p : {2, 3, 5, 7, 11}) {
            ++o.checked;
            if (table(f, p) != table(f, 0)) o.fail("characteristic dependence");
        }
    // Each mark: the marked subset is inadmissible exactly at its prime, and
    // every unmarked one-element subset survives that prime.
    for (Family f : {Family::twistedE6, Family::tripleD4}) {
        const auto& t = builtin_table(f);
        std::set<int> marked_primes;
        for (const auto& s : t.one_element_subsets)
            if (s.excluded_prime) marked_primes.insert(*s.excluded_prime);
        if (marked_primes.empty()) o.fail("no marks in " + to_string(f));
        for (const auto& s : t.one_element_subsets) {
            ++o.checked;
            if (!admissible_subset(t.coefficients, 0, {s.index})) o.fail("p = 0 rejects a subset");
            for (int q : marked_primes) {
                const bool want = !(s.excluded_prime && *s.excluded_prime == q);
                if (admissible_subset(t.coefficients, q, {s.index}) != want)
                    o.fail(to_string(f) + " mark mismatch at index " + std::to_string(s.index));
            }
        }
    }
    return o;
}

Outcome b_additivity() {
    Outcome o;
    std::vector<Bipartition> pool;
    for (int n = 0; n <= 12; ++n)
        for (auto& b : enumerate(n, {12, 12})) pool.push_back(b);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 10000; ++i) {
        const auto& l = pool[pick(rng)];
        const auto& m = pool[pick(rng)];
        ++o.checked;
        if (b_invariant(add(l, m)) != b_invariant(l) + b_invariant(m))
            o.fail(to_string(l) + " + " + to_string(m));
    }
    return o;
}

Outcome zero_special_containment() {
    Outcome o;
    for (int n = 0; n <= 5; ++n)
        for (auto ctx : {FamilyContext::symplectic(n), FamilyContext::so_odd(n), FamilyContext::so_even(n)}) {
            const auto index = classical_index_set(ctx);
            for (const auto& l : zero_special_set(ctx)) {
                ++o.checked;
                if (!std::binary_search(index.begin(), index.end(), l))
                    o.fail(to_string(ctx) + ": " + to_string(l));
                if (ctx.family == Family::SOeven && !(size(l) == n && has_excess(l, {0, 4})))
                    o.fail("SOeven label outside BP_{0,4}");
            }
        }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"splitting sweep, u 3..13, N <= 6, A_u <= 24", split_sweep},
        {"six surjectivity maps, n <= 8", surjectivity},
        {"kappa round trip and additivity, |lambda| <= 8", kappa_suite},
        {"Springer dimension identity and bijections", springer_pinning},
        {"twistedA(3) strata and witnesses", twisted_A3},
        {"twisted classifier bijection at desk scale", twisted_bijection},
        {"exceptional tables and marks", exceptional_tables},
        {"b additivity on 10^4 random pairs", b_additivity},
        {"zero-special sets inside the index sets", zero_special_containment},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s [%ld checks, %.1fs]%s%s\n", o.pass ? "PASS" : "FAIL", static_cast<int>(i + 1),
                    criteria[i].first.c_str(), o.checked, secs, o.pass ? "" : " : ", o.note.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
