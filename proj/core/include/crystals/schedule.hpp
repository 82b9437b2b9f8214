#pragma once

#include <string>
#include <vector>

#include "crystals/cartan.hpp"

namespace crystals {

// A reflection-index table i_a^(j) (j >= 1, 1 <= a <= d), periodic in j.
// The flat index k = (j-1)d + a enumerates the Weyl word left to right.
struct Schedule {
    std::string name;
    int d = 0;
    int period_in_j = 1;
    std::vector<std::vector<int>> table;  // table[(j-1) % period_in_j][a-1]

    // i_a^(j); a = d+1 is read as i_1^(j+1).
    int index(int j, int a) const;
    int index_flat(int k) const;  // k >= 1

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// The table from the relevant section of each family, for lambda = l*Lambda_i
// on the supported orbit.  variant selects an alternate published ordering:
//   A1: "" or "formula" (the closed formula), "intro" (the introductory
//       period-8 ordering, n=3, k=2 only);
//   B1/D1 and the spin-end tables: "" (first displayed pair) or "alt" (the
//       swapped middle pair, e.g. (n,n-1) instead of (n-1,n)).
Schedule builtin_schedule(const AffineType& t, const Weight& lambda, int k = 1,
                          const std::string& variant = "");

// All (variant-inclusive) builtin schedules available for a family at level l,
// as (lambda, k, variant) triples.  Used by verification sweeps.
struct ScheduleKey {
    Weight lambda;
    int k;
    std::string variant;
};
std::vector<ScheduleKey> builtin_schedule_keys(const AffineType& t, int l);

// JSON form {name, d, period_in_j, table:[[i...]...]}.
Schedule schedule_from_json(const std::string& text);
std::string schedule_to_json(const Schedule& s);

}  // namespace crystals
