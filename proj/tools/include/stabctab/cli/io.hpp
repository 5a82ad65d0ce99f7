#pragma once

#include "stabctab/germ.hpp"
#include "stabctab/nslattice.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabctab::io {

struct ExpectedInvariants {
    int mu = 0;
    int tau = 0;
    std::optional<int> delta;
    std::optional<int> r;
};

/// One line of a germ corpus file (see docs/formats.md).
struct GermRecord {
    std::string name;
    std::string poly;
    std::optional<BranchSet> branches;
    std::optional<ExpectedInvariants> expected;
};

/// Throws ParseError with the offending field named.
GermRecord parse_germ_record(std::string_view json_line);
/// Blank lines and lines starting with '#' are skipped.
std::vector<GermRecord> load_germ_corpus(const std::filesystem::path& path);

/// {"truncation": T0?, "branches": [{"x": "...", "y": "..."}, ...]}
BranchSet parse_branch_set(std::string_view json_text);
BranchSet load_branch_file(const std::filesystem::path& path);

/// Lattice config; the result is validated before it is returned.
LatticeModel parse_lattice(std::string_view json_text);
LatticeModel load_lattice(const std::filesystem::path& path);
std::string lattice_to_json(const LatticeModel& lattice);

/// "1,-2,0" -> {1, -2, 0}; throws ParseError.
DivisorClass parse_divisor_class(std::string_view text);
std::string to_string(const DivisorClass& c);

std::string read_file(const std::filesystem::path& path);

}  // namespace stabctab::io
