#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "strata/error.hpp"
#include "strata/splitting.hpp"

using namespace strata;

namespace {
std::vector<int> entries(const HatSequence& h) { return {h.entries().begin(), h.entries().end()}; }
std::vector<int> raw(const Bipartition& b) { return {b.entries().begin(), b.entries().end()}; }
} // namespace

TEST_CASE("ASequence validation") {
    CHECK_NOTHROW(ASequence({0, 1, 2}, 2, 1));
    CHECK_THROWS_AS(ASequence({0, 1, 2}, 1, 1), InvalidArgument);   // N < 2
    CHECK_THROWS_AS(ASequence({0, 3, 4}, 2, 3), InvalidArgument);   // c > N
    CHECK_THROWS_AS(ASequence({1, 1, 4}, 2, 1), InvalidArgument);   // A_1 != 0
    CHECK_THROWS_AS(ASequence({0, 1, 1}, 2, 1), InvalidArgument);   // gap
    CHECK_THROWS_AS(ASequence({0, 2, 1, 5}, 2, 2), InvalidArgument); // not increasing
}

TEST_CASE("split all-single sequence") {
    const ASequence a({0, 1, 2}, 2, 1);
    const Split s = split_sequence(a);
    CHECK(s.b == std::vector<int>{0, 1, 1});
    CHECK(s.c == std::vector<int>{0, 0, 1});
    CHECK(split_case_trace(a)[3] == 4);
}

TEST_CASE("split fully doubled sequence") {
    for (int n = 2; n <= 5; ++n) {
        const ASequence a({0, 0, n, n, 2 * n, 2 * n, 3 * n, 3 * n}, n, 0);
        const Split s = split_sequence(a);
        CHECK(s.b == std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3});
        CHECK(s.c == std::vector<int>{0, 0, n - 1, n - 1, 2 * n - 2, 2 * n - 2, 3 * n - 3, 3 * n - 3});
        const auto trace = split_case_trace(a);
        for (std::size_t i = 3; i < trace.size(); ++i) CHECK(trace[i] == (i % 2 == 1 ? 6 : 7));
    }
}

TEST_CASE("every rule fires somewhere") {
    std::set<int> seen;
    for (int u = 3; u <= 8; ++u)
        for (int c = 0; c <= 3; ++c)
            oracle::for_each_a_sequence(u, 3, c, 14, [&](const std::vector<int>& a) {
                for (int r : split_case_trace(ASequence(a, 3, c))) seen.insert(r);
            });
    for (int r = 1; r <= 7; ++r) CHECK(seen.count(r) == 1);
}

TEST_CASE("postconditions hold and agree with exhaustive split search") {
    int checked = 0;
    for (int gap = 2; gap <= 4; ++gap)
        for (int c = 0; c <= gap; ++c)
            for (int u = 2; u <= 8; ++u)
                oracle::for_each_a_sequence(u, gap, c, 12, [&](const std::vector<int>& v) {
                    const ASequence a(v, gap, c);
                    const Split s = split_sequence(a);
                    CHECK(check_split(a, s).empty());
                    CHECK(oracle::find_any_split(v, gap, c).has_value());
                    ++checked;
                });
    CHECK(checked > 1000);
}

TEST_CASE("random long sequences: postconditions and oracle existence") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        const int gap = 2 + static_cast<int>(rng() % 5);
        const int c = static_cast<int>(rng() % (gap + 1));
        const int u = 3 + static_cast<int>(rng() % 11);
        std::vector<int> a{0, c};
        bool fits = true;
        while (static_cast<int>(a.size()) < u) {
            const int lo = std::max(a.back(), a[a.size() - 2] + gap);
            a.push_back(lo + static_cast<int>(rng() % 3));
            if (a.back() > 20) fits = false;
        }
        if (!fits) continue;
        const ASequence seq(a, gap, c);
        const Split s = split_sequence(seq);
        CHECK_MESSAGE(check_split(seq, s).empty(), "A-sequence failed");
        CHECK(oracle::find_any_split(a, gap, c).has_value());
    }
}

TEST_CASE("peel") {
    const HatSequence hat = kappa({1, 1}, 2, {1, 1});
    const Peeled p = peel(hat);
    CHECK(p.piece.excess() == ExcessPair{0, 1});
    CHECK(p.rest.excess() == ExcessPair{1, 0});
    CHECK(entries(p.piece) == std::vector<int>{2, 2, 1, 1, 0});
    CHECK(entries(p.rest) == std::vector<int>{3, 2, 1, 0, 0});
    CHECK(hat_add(p.piece, p.rest) == hat);

    CHECK_THROWS_AS(peel(kappa({1}, 1, {0, 1})), InvalidArgument);
    CHECK_THROWS_AS(peel(kappa({}, 1, {1, 0})), InvalidArgument);
}

TEST_CASE("peel reassembles exhaustively") {
    for (int f = 0; f <= 4; ++f)
        for (int fp = 0; f + fp <= 4; ++fp) {
            if (f + fp < 2) continue;
            for (int n = 0; n <= 6; ++n)
                for (const auto& lambda : enumerate(n, {f, fp})) {
                    const HatSequence hat = kappa(lambda, minimal_m(lambda), {f, fp});
                    const Peeled p = peel(hat);
                    CHECK(hat_add(p.piece, p.rest) == hat);
                    CHECK(p.piece.excess() == (fp >= 1 ? ExcessPair{0, 1} : ExcessPair{1, 0}));
                }
        }
}

TEST_CASE("decompose_atoms") {
    const HatSequence h00 = kappa({3, 1}, 2, {0, 0});
    CHECK(decompose_atoms(h00) == std::vector<HatSequence>{h00});

    const HatSequence h10 = kappa({2, 1}, 2, {1, 0});
    const auto base = decompose_atoms(h10);
    REQUIRE(base.size() == 2);
    CHECK(base[0] == h10);
    CHECK(base[1] == HatSequence::zero(2));

    const HatSequence h = kappa({1, 1}, 2, {1, 1});
    const auto atoms = decompose_atoms(h);
    REQUIRE(atoms.size() == 3);
    CHECK(atoms[0].excess() == ExcessPair{0, 1});
    CHECK(atoms[1].excess() == ExcessPair{1, 0});
    CHECK(atoms[2].excess() == ExcessPair{0, 0});
    CHECK(hat_add(hat_add(atoms[0], atoms[1]), atoms[2]) == h);

    for (int f = 0; f <= 4; ++f)
        for (int fp = 0; f + fp <= 4; ++fp)
            for (int n = 0; n <= 6; ++n)
                for (const auto& lambda : enumerate(n, {f, fp})) {
                    const HatSequence hat = kappa(lambda, minimal_m(lambda), {f, fp});
                    const auto parts = decompose_atoms(hat);
                    REQUIRE(parts.size() == static_cast<std::size_t>(f + fp + 1));
                    HatSequence sum = HatSequence::zero(hat.m());
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        const ExcessPair want = i < static_cast<std::size_t>(fp)       ? ExcessPair{0, 1}
                                                : i < static_cast<std::size_t>(f + fp) ? ExcessPair{1, 0}
                                                                                       : ExcessPair{0, 0};
                        CHECK(parts[i].excess() == want);
                        sum = hat_add(sum, parts[i]);
                    }
                    CHECK(sum == hat);
                }
}

TEST_CASE("decompose") {
    const auto [a, b] = decompose({1, 1}, {1, 1}, {1, 1});
    const auto all = oracle::all_decompositions({1, 1}, 1, 1, 1, 1);
    CHECK(std::find(all.begin(), all.end(), std::make_pair(raw(a), raw(b))) != all.end());
    CHECK(all.size() == 4);

    const Bipartition lambda{4, 2, 1, 1};
    const auto [same, empty] = decompose(lambda, {2, 1}, {0, 0});
    CHECK(same == lambda);
    CHECK(empty.empty());

    const auto [p, q] = decompose({2, 1, 1}, {2, 0}, {0, 2});
    CHECK(has_excess(p, {2, 0}));
    CHECK(has_excess(q, {0, 2}));
    CHECK(add(p, q) == Bipartition{2, 1, 1});
    CHECK_FALSE(oracle::all_decompositions({2, 1, 1}, 2, 0, 0, 2).empty());

    CHECK_THROWS_AS(decompose({0, 3}, {1, 0}, {0, 1}), InvalidArgument);
}

TEST_CASE("decompose postconditions exhaustively") {
    for (int e = 0; e <= 4; ++e)
        for (int ep = 0; e + ep <= 4; ++ep)
            for (int e1 = 0; e1 <= e; ++e1)
                for (int ep1 = 0; ep1 <= ep; ++ep1) {
                    const ExcessPair x{e1, ep1}, y{e - e1, ep - ep1};
                    for (int n = 0; n <= 6; ++n)
                        for (const auto& lambda : enumerate(n, {e, ep})) {
                            const auto [a, b] = decompose(lambda, x, y);
                            CHECK(has_excess(a, x));
                            CHECK(has_excess(b, y));
                            CHECK(add(a, b) == lambda);
                        }
                }
}

TEST_CASE("verify_surjectivity") {
    const auto r = verify_surjectivity({1, 0}, {0, 1}, 6);
    CHECK(r.ok());
    CHECK(r.checked.size() == 7);
    CHECK(r.checked.at(0) == 1);
    CHECK(r.checked.at(2) == static_cast<int>(enumerate(2, {1, 1}).size()));
    CHECK(verify_surjectivity({2, 0}, {0, 2}, 6).ok());
    CHECK(verify_surjectivity({0, 2}, {0, 2}, 6).ok());
}
