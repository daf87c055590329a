#pragma once

#include "nla/catalog/catalog.hpp"
#include "nla/invariants/invariants.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nla::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum Exit : int { Ok = 0, Mismatch = 1, BadInput = 2, Jacobi = 3, Internal = 4 };

struct Table2Row {
    std::string name;
    std::vector<int> ascending;
    std::vector<int> descending;
    std::array<int, 4> betti{};
    int n_d = 0;
};

// The printed table of the eleven algebras.
const std::vector<Table2Row>& table2_golden();

// Overrides one cell, e.g. "f1.b1=6" or "f2.ascending=3,5,8" (harness self-test).
std::vector<Table2Row> inject(std::vector<Table2Row> rows, const std::string& cell);

struct CellDiff {
    std::string row;
    std::string column;  // ascending, descending, b1..b4, n_d
    std::string expected;
    std::string computed;
};

struct Table2Result {
    std::vector<Table2Row> computed;
    std::vector<bool> n_d_confirmed;
    std::vector<CellDiff> diffs;
    int rows_matching = 0;
};

Table2Result compare_table2(const std::vector<Table2Row>& golden, const NdOptions& opts = {});

// Tuples covering every admissible branch of the normal form: discrete axes in
// full, continuous ones at several exact points including the boundaries.
std::vector<WnNParams> wnn_samples();
std::vector<SnNParams> snn_samples();

// NLA_SEED overrides the flag value.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

std::string tuple_str(const std::vector<int>& v);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nla::cli
