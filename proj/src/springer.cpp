#include "strata/springer.hpp"

#include <algorithm>
#include <optional>
#include <gmpxx.h>

#include "strata/error.hpp"

namespace strata {

std::string to_string(JordanKind kind) {
    switch (kind) {
    case JordanKind::symplectic: return "symplectic";
    case JordanKind::orthogonal_odd: return "orthogonal-odd";
    case JordanKind::orthogonal_even: return "orthogonal-even";
    }
    return "?";
}

JordanKind jordan_kind_from_string(const std::string& s) {
    if (s == "symplectic") return JordanKind::symplectic;
    if (s == "orthogonal-odd") return JordanKind::orthogonal_odd;
    if (s == "orthogonal-even") return JordanKind::orthogonal_even;
    throw InvalidArgument("unknown Jordan kind '" + s + "'");
}

bool JordanPartition::is_valid(const Partition& nu, JordanKind k) {
    const int total = nu.size();
    // parts of this parity must come in pairs
    const int paired_parity = k == JordanKind::symplectic ? 1 : 0;
    if (k == JordanKind::orthogonal_odd ? total % 2 != 1 : total % 2 != 0) return false;
    for (int part : nu.parts())
        if (part % 2 == paired_parity && nu.multiplicity(part) % 2 != 0) return false;
    return true;
}

JordanPartition::JordanPartition(Partition nu, JordanKind k) : partition(std::move(nu)), kind(k) {
    require(is_valid(partition, kind), "partition " + strata::to_string(partition) + " is not a valid " +
                                           strata::to_string(kind) + " Jordan type");
}

int rank_of(const JordanPartition& j) { return j.partition.size() / 2; }

ExcessPair label_excess(JordanKind kind) {
    switch (kind) {
    case JordanKind::symplectic: return {1, 1};
    case JordanKind::orthogonal_odd: return {2, 0};
    case JordanKind::orthogonal_even: return {0, 2};
    }
    return {};
}

std::vector<JordanPartition> jordan_partitions(JordanKind kind, int total) {
    std::vector<JordanPartition> out;
    for (auto& nu : partitions_of(total))
        if (JordanPartition::is_valid(nu, kind)) out.emplace_back(std::move(nu), kind);
    return out;
}

namespace {

// Ascending parts padded with leading zeros to exactly `len` entries.
std::vector<int> ascending_padded(const Partition& nu, std::size_t len) {
    std::vector<int> v(len - nu.length(), 0);
    auto p = nu.parts();
    v.insert(v.end(), p.rbegin(), p.rend());
    return v;
}

// Removes the staircase 0,1,2,... from an ascending sequence and returns it as a partition.
Partition unstaircase(const std::vector<int>& ascending) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < ascending.size(); ++i) parts.push_back(ascending[i] - static_cast<int>(i));
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

struct SymbolRows {
    Partition from_even;  // values 2x
    Partition from_odd;   // values 2x+1
};

SymbolRows symbol_rows(const Partition& nu, std::size_t len, std::size_t want_even, std::size_t want_odd) {
    auto asc = ascending_padded(nu, len);
    std::vector<int> evens, odds;
    for (std::size_t i = 0; i < asc.size(); ++i) {
        const int v = asc[i] + static_cast<int>(i);
        (v % 2 == 0 ? evens : odds).push_back(v / 2);
    }
    if (evens.size() != want_even || odds.size() != want_odd)
        throw InternalError("symbol of " + to_string(nu) + " has unexpected row lengths");
    return {unstaircase(evens), unstaircase(odds)};
}

std::size_t padded_length(const Partition& nu, bool odd_length) {
    std::size_t len = nu.length();
    if ((len % 2 == 1) != odd_length) ++len;
    return len;
}

// Inverse of symbol_rows: interleaves the two rows back into an ascending
// sequence and strips the staircase. Returns nothing when the result is not
// a partition.
std::optional<Partition> from_symbol_rows(const Partition& even_row, const Partition& odd_row, std::size_t n_even,
                                          std::size_t n_odd) {
    auto shift = [](const Partition& row, std::size_t n, int parity) {
        auto asc = ascending_padded(row, n);
        for (std::size_t i = 0; i < asc.size(); ++i) asc[i] = 2 * (asc[i] + static_cast<int>(i)) + parity;
        return asc;
    };
    auto merged = shift(even_row, n_even, 0);
    auto odd = shift(odd_row, n_odd, 1);
    merged.insert(merged.end(), odd.begin(), odd.end());
    std::sort(merged.begin(), merged.end());
    std::vector<int> parts;
    for (std::size_t i = 0; i < merged.size(); ++i) {
        parts.push_back(merged[i] - static_cast<int>(i));
        if (parts.back() < 0 || (i > 0 && parts[i] < parts[i - 1])) return std::nullopt;
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

} // namespace

Bipartition springer_label(const JordanPartition& j) {
    const Partition& nu = j.partition;
    switch (j.kind) {
    case JordanKind::symplectic: {
        const std::size_t len = padded_length(nu, true);
        auto rows = symbol_rows(nu, len, len / 2 + 1, len / 2);
        return from_partition_pair(rows.from_even, rows.from_odd);
    }
    case JordanKind::orthogonal_odd: {
        const std::size_t len = padded_length(nu, true);
        auto rows = symbol_rows(nu, len, len / 2, len / 2 + 1);
        return from_partition_pair(rows.from_odd, rows.from_even);
    }
    case JordanKind::orthogonal_even: {
        const std::size_t len = padded_length(nu, false);
        auto rows = symbol_rows(nu, len, len / 2, len / 2);
        // Type D symbols are unordered; pick the ordering lying in BP_{0,2}.
        Bipartition label = from_partition_pair(rows.from_even, rows.from_odd);
        if (!has_excess(label, {0, 2})) label = from_partition_pair(rows.from_odd, rows.from_even);
        return label;
    }
    }
    throw InternalError("unreachable");
}

JordanPartition springer_label_inverse(const Bipartition& lambda, JordanKind kind) {
    const ExcessPair x = label_excess(kind);
    if (!has_excess(lambda, x))
        throw NotInImage(to_string(lambda) + " is outside the Springer label set for " + to_string(kind));
    auto [odd_pos, even_pos] = to_partition_pair(lambda);
    const std::size_t k = std::max(odd_pos.length(), even_pos.length());

    std::vector<std::optional<Partition>> candidates;
    switch (kind) {
    case JordanKind::symplectic:
        candidates.push_back(from_symbol_rows(odd_pos, even_pos, k + 1, k));
        break;
    case JordanKind::orthogonal_odd:
        candidates.push_back(from_symbol_rows(even_pos, odd_pos, k, k + 1));
        break;
    case JordanKind::orthogonal_even:
        candidates.push_back(from_symbol_rows(odd_pos, even_pos, k, k));
        candidates.push_back(from_symbol_rows(even_pos, odd_pos, k, k));
        break;
    }
    for (auto& nu : candidates) {
        if (!nu || !JordanPartition::is_valid(*nu, kind)) continue;
        JordanPartition j(std::move(*nu), kind);
        if (springer_label(j) == lambda) return j;
    }
    throw NotInImage(to_string(lambda) + " is not the Springer label of any " + to_string(kind) + " Jordan type");
}

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const mpq_class factor = m[i][col] / m[r][col];
            for (std::size_t jj = col; jj < cols; ++jj)
                if (m[r][jj] != 0) m[i][jj] -= factor * m[r][jj];
        }
        ++r;
    }
    return r;
}

// Nilpotent e (e v_i = v_{i+1} inside each block) and an invariant form
// whose Gram matrix makes e skew. Single blocks carry (-1)^i on the
// antidiagonal; paired blocks pair a chain with its dual chain.
struct FormModel {
    std::vector<std::vector<int>> e;
    std::vector<std::vector<int>> gram;
};

FormModel build_model(const JordanPartition& j) {
    const int dim = j.partition.size();
    FormModel f{std::vector(dim, std::vector<int>(dim, 0)), std::vector(dim, std::vector<int>(dim, 0))};
    const int sign = j.kind == JordanKind::symplectic ? -1 : 1;  // B(y,x) = sign * B(x,y)
    const int paired_parity = j.kind == JordanKind::symplectic ? 1 : 0;
    auto chain = [&](int start, int d) {
        for (int i = 0; i + 1 < d; ++i) f.e[start + i + 1][start + i] = 1;
    };
    auto antidiag = [](int i) { return (i + 1) % 2 == 0 ? 1 : -1; };  // (-1)^i, 1-indexed i

    int pos = 0;
    auto parts = j.partition.parts();
    for (std::size_t idx = 0; idx < parts.size();) {
        const int d = parts[idx];
        if (d % 2 == paired_parity) {
            chain(pos, d);
            chain(pos + d, d);
            for (int i = 0; i < d; ++i) {
                f.gram[pos + i][pos + d + (d - 1 - i)] = antidiag(i);
                f.gram[pos + d + (d - 1 - i)][pos + i] = sign * antidiag(i);
            }
            pos += 2 * d;
            idx += 2;
        } else {
            chain(pos, d);
            for (int i = 0; i < d; ++i) f.gram[pos + i][pos + (d - 1 - i)] = antidiag(i);
            pos += d;
            idx += 1;
        }
    }
    return f;
}

} // namespace

int centralizer_dimension_oracle(const JordanPartition& j) {
    const int dim = j.partition.size();
    require(dim <= kOracleSizeLimit, "centralizer oracle is limited to |nu| <= 12");
    if (dim == 0) return 0;
    const FormModel f = build_model(j);
    const std::size_t nvars = static_cast<std::size_t>(dim * dim);
    auto var = [dim](int r, int c) { return static_cast<std::size_t>(r * dim + c); };

    Matrix eqs;
    // X e - e X = 0
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            std::vector<mpq_class> row(nvars, 0);
            for (int k = 0; k < dim; ++k) {
                if (f.e[k][c]) row[var(r, k)] += f.e[k][c];
                if (f.e[r][k]) row[var(k, c)] -= f.e[r][k];
            }
            eqs.push_back(std::move(row));
        }
    // X^T M + M X = 0
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            std::vector<mpq_class> row(nvars, 0);
            for (int k = 0; k < dim; ++k) {
                if (f.gram[k][c]) row[var(k, r)] += f.gram[k][c];
                if (f.gram[r][k]) row[var(k, c)] += f.gram[r][k];
            }
            eqs.push_back(std::move(row));
        }
    return static_cast<int>(nvars - rank(std::move(eqs)));
}

} // namespace strata
