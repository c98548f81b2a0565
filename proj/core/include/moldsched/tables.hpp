#pragma once

#include "moldsched/params.hpp"

#include <vector>

namespace moldsched {

/// Reference constants for representative delta values: mu is the target
/// utilization r, beta2 the group-mixing penalty. verify_tables() reports
/// where the exact search agrees with them and where it proves better
/// assignments feasible.
struct TableRow {
    int delta;
    Rat mu;
    Rat beta2;
};

struct TableCheck {
    int delta;
    Rat expected_mu;
    Rat got_mu;
    Rat expected_beta2;
    Rat got_beta2;
    bool ok;
};

const std::vector<TableRow>& reference_rows();

/// Re-derives the constants for every reference delta and compares exactly.
std::vector<TableCheck> verify_tables();

} // namespace moldsched
