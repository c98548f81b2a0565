#include "moldsched/tables.hpp"

namespace moldsched {

const std::vector<TableRow>& reference_rows() {
    // Reference constants at both endpoints of each feasibility band. Six of
    // them disagree with the exact search on purpose: the search proves
    // feasible three narrower groups whose boundary test holds with equality,
    // which these reference boundaries exclude (see test_params).
    static const std::vector<TableRow> rows = {
        {5, rat(3, 4), rat(13, 4)},     {9, rat(3, 4), rat(13, 4)},
        {10, rat(4, 5), rat(38, 5)},    {16, rat(4, 5), rat(38, 5)},
        {17, rat(5, 6), rat(83, 6)},    {21, rat(5, 6), rat(83, 6)},
        {22, rat(6, 7), rat(136, 7)},   {26, rat(6, 7), rat(136, 7)},
        {27, rat(7, 8), rat(103, 4)},   {37, rat(7, 8), rat(103, 4)},
        {38, rat(8, 9), rat(326, 9)},   {57, rat(8, 9), rat(326, 9)},
        {58, rat(9, 10), rat(266, 5)},
        {59, rat(10, 11), rat(644, 11)},{74, rat(10, 11), rat(644, 11)},
        {75, rat(11, 12), rat(74, 1)},  {101, rat(11, 12), rat(74, 1)},
    };
    return rows;
}

std::vector<TableCheck> verify_tables() {
    std::vector<TableCheck> checks;
    for (const TableRow& row : reference_rows()) {
        ParamSet p = search_params(row.delta);
        UtilizationBound b = theta_bound(p);
        TableCheck c;
        c.delta = row.delta;
        c.expected_mu = row.mu;
        c.got_mu = b.mu;
        c.expected_beta2 = row.beta2;
        c.got_beta2 = b.beta2;
        c.ok = params_feasible(p) && b.mu == row.mu && b.beta1 == row.mu &&
               b.beta2 == row.beta2;
        checks.push_back(c);
    }
    return checks;
}

} // namespace moldsched
