#include "strata/splitting.hpp"

#include <algorithm>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

bool ASequence::is_valid(std::span<const int> a, int gap, int c) {
    if (gap < 2 || c < 0 || c > gap || a.size() < 2) return false;
    if (a[0] != 0 || a[1] != c) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) return false;
    for (std::size_t i = 0; i + 2 < a.size(); ++i)
        if (a[i + 2] - a[i] < gap) return false;
    return true;
}

ASequence::ASequence(std::vector<int> entries, int gap, int c) : entries_(std::move(entries)), gap_(gap), c_(c) {
    require(is_valid(entries_, gap_, c_), "invalid A-sequence");
}

namespace {

struct Induction {
    std::vector<int> b;
    std::vector<int> rule;
};

Induction run_induction(const ASequence& a) {
    const std::size_t u = a.length();
    auto entries = a.entries();
    // 1-indexed single flags.
    std::vector<bool> single(u + 1, false);
    for (std::size_t i = 1; i <= u; ++i)
        single[i] = std::count(entries.begin(), entries.end(), a[i]) == 1;

    Induction out{std::vector<int>(u + 1, 0), std::vector<int>(u + 1, 0)};
    auto& b = out.b;
    b[1] = 0;
    b[2] = a.epsilon();
    for (std::size_t s = 3; s <= u; ++s) {
        int rule;
        if (single[s]) {
            if (!single[s - 1]) {
                rule = 1;
                b[s] = b[s - 1] + 1;
            } else if (!single[s - 2]) {
                rule = 2;
                b[s] = b[s - 1];
            } else if (b[s - 1] == b[s - 2]) {
                rule = 3;
                b[s] = b[s - 1] + 1;
            } else {
                rule = 4;
                b[s] = b[s - 1];
            }
        } else if (single[s - 1]) {
            rule = 5;
            b[s] = b[s - 1] + 1;
        } else if (a[s - 1] < a[s]) {
            rule = 6;
            b[s] = b[s - 1] + 1;
        } else {
            rule = 7;
            b[s] = b[s - 1];
        }
        out.rule[s] = rule;
    }
    return out;
}

} // namespace

Split split_sequence(const ASequence& a) {
    auto ind = run_induction(a);
    Split out;
    out.b.assign(ind.b.begin() + 1, ind.b.end());
    out.c.resize(out.b.size());
    for (std::size_t i = 0; i < out.b.size(); ++i) out.c[i] = a[i + 1] - out.b[i];
    if (auto err = check_split(a, out); !err.empty()) throw InternalError("split_sequence: " + err);
    return out;
}

std::vector<int> split_case_trace(const ASequence& a) { return run_induction(a).rule; }

std::string check_split(const ASequence& a, const Split& s) {
    const std::size_t u = a.length();
    const int n = a.gap();
    std::ostringstream err;
    if (s.b.size() != u || s.c.size() != u) return "length mismatch";
    // 1-indexed views
    auto A = [&](std::size_t i) { return a[i]; };
    auto B = [&](std::size_t i) { return s.b[i - 1]; };
    auto C = [&](std::size_t i) { return s.c[i - 1]; };
    if (B(1) != 0) return "B_1 != 0";
    if (B(2) != a.epsilon()) return "B_2 != epsilon";
    for (std::size_t i = 1; i <= u; ++i) {
        if (A(i) != B(i) + C(i)) err << "A_" << i << " != B_" << i << " + C_" << i << "; ";
        if (B(i) < 0 || C(i) < 0) err << "negative entry at " << i << "; ";
        if (i >= 2 && B(i - 1) > B(i)) err << "B decreases at " << i << "; ";
        if (i >= 2 && C(i - 1) > C(i)) err << "C decreases at " << i << "; ";
        if (i >= 3) {
            if (B(i) - B(i - 2) < 1) err << "B gap < 1 at " << i << "; ";
            if (C(i) - C(i - 2) < n - 1) err << "C gap < N-1 at " << i << "; ";
            if (A(i) - A(i - 1) - B(i) + B(i - 1) < 0) err << "inequality (a) fails at " << i << "; ";
            if (A(i) - A(i - 2) - B(i) + B(i - 2) - (n - 1) < 0) err << "inequality (b) fails at " << i << "; ";
        }
    }
    return err.str();
}

namespace {

ASequence reversed_as_a(const HatSequence& hat, int gap, int c) {
    auto e = hat.entries();
    return ASequence(std::vector<int>(e.rbegin(), e.rend()), gap, c);
}

} // namespace

Peeled peel(const HatSequence& hat) {
    require(hat.kind() == HatKind::unprimed, "peel expects an unprimed hat sequence");
    const ExcessPair f = hat.excess();
    require(f.total() >= 2, "peel requires f + f' >= 2");
    const bool take_prime = f.e_prime >= 1;
    const int c = take_prime ? f.e_prime : 0;
    const Split s = split_sequence(reversed_as_a(hat, f.total(), c));
    const ExcessPair piece_x = take_prime ? ExcessPair{0, 1} : ExcessPair{1, 0};
    const ExcessPair rest_x = take_prime ? ExcessPair{f.e, f.e_prime - 1} : ExcessPair{f.e - 1, f.e_prime};
    HatSequence piece(HatKind::unprimed, hat.m(), piece_x, std::vector<int>(s.b.rbegin(), s.b.rend()));
    HatSequence rest(HatKind::unprimed, hat.m(), rest_x, std::vector<int>(s.c.rbegin(), s.c.rend()));
    return {std::move(piece), std::move(rest)};
}

std::vector<HatSequence> decompose_atoms(const HatSequence& hat) {
    require(hat.kind() == HatKind::unprimed, "decompose_atoms expects an unprimed hat sequence");
    std::vector<HatSequence> out;
    HatSequence cur = hat;
    while (cur.excess().total() >= 2) {
        Peeled p = peel(cur);
        out.push_back(std::move(p.piece));
        cur = std::move(p.rest);
    }
    if (cur.excess().total() == 1) {
        out.push_back(cur);
        cur = HatSequence::zero(hat.m());
    }
    out.push_back(std::move(cur));
    return out;
}

std::pair<Bipartition, Bipartition> decompose(const Bipartition& lambda, ExcessPair x, ExcessPair y) {
    const ExcessPair total = x + y;
    require(has_excess(lambda, total), "bipartition " + to_string(lambda) + " lacks excess " +
                                           std::to_string(total.e) + "," + std::to_string(total.e_prime));
    const int m = minimal_m(lambda);
    const HatSequence hat = kappa(lambda, m, total);
    const auto atoms = decompose_atoms(hat);

    HatSequence first = atoms.back();  // (0,0) remainder
    HatSequence second = HatSequence::zero(m);
    int want_e = x.e, want_e_prime = x.e_prime;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        const HatSequence& atom = atoms[i];
        int& budget = atom.excess().e_prime == 1 ? want_e_prime : want_e;
        if (budget > 0) {
            --budget;
            first = hat_add(first, atom);
        } else {
            second = hat_add(second, atom);
        }
    }
    if (first.excess() != x || second.excess() != y) throw InternalError("decompose: atom grouping mismatch");
    auto result = std::make_pair(kappa_inverse(first), kappa_inverse(second));
    if (add(result.first, result.second) != lambda) throw InternalError("decompose: parts do not sum back");
    return result;
}

SurjectivityReport verify_surjectivity(ExcessPair x, ExcessPair y, int n_max) {
    SurjectivityReport report{x, y, n_max, {}, {}};
    for (int n = 0; n <= n_max; ++n) {
        int count = 0;
        for (const auto& lambda : enumerate(n, x + y)) {
            try {
                auto [first, second] = decompose(lambda, x, y);
                if (!has_excess(first, x) || !has_excess(second, y) || add(first, second) != lambda)
                    report.failures.push_back("bad decomposition of " + to_string(lambda));
            } catch (const std::exception& ex) {
                report.failures.push_back("decompose failed on " + to_string(lambda) + ": " + ex.what());
            }
            ++count;
        }
        report.checked[n] = count;
    }
    return report;
}

} // namespace strata
