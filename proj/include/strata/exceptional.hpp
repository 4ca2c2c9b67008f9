#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/family.hpp"

namespace strata {

/// An irreducible Weyl-group representation d_b: degree d, b-invariant b.
/// Two labels may share (d, b); `twin` (1 or 2) tells them apart when both
/// occur, and `disambiguator` records which twin is meant when only one does.
struct IrrLabel {
    Family family;
    int degree;
    int b;
    int twin = 0;
    std::optional<std::string> disambiguator;

    friend bool operator==(const IrrLabel&, const IrrLabel&) = default;
};

std::string to_string(const IrrLabel& label);

/// A one-element subset {index} of the extended Dynkin index set, with the
/// subsystem it leaves and, if any, the prime that excludes it.
struct SubsetRecord {
    int index;
    std::string subsystem;
    std::optional<int> excluded_prime;
};

struct ExceptionalTable {
    int schema_version;
    Family family;
    std::string weyl_group;
    int rk_D;
    int dim_G0;
    std::vector<int> coefficients;  // n_0 = 1, n_1, ...
    std::vector<SubsetRecord> one_element_subsets;
    std::vector<IrrLabel> labels;
};

inline constexpr int kTableSchemaVersion = 1;

/// Parses and validates a table document. Throws InvalidArgument on any
/// schema or consistency violation.
ExceptionalTable parse_table(const std::string& json_text);
ExceptionalTable load_table_file(const std::string& path);

/// The built-in table for twistedE6 or tripleD4. The characteristic is
/// accepted for symmetry with the other families and does not change the
/// result.
const ExceptionalTable& builtin_table(Family family);
std::vector<IrrLabel> table(Family family, int p = 0);

/// dim G0 - 2 b - rk_D for an exceptional label.
int exceptional_orbit_dimension(const IrrLabel& label);

} // namespace strata
