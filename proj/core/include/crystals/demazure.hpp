#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystals/crystal.hpp"
#include "crystals/path.hpp"
#include "crystals/schedule.hpp"

namespace crystals {

// Closure cap; overridable through the CRYSTAL_BUDGET environment variable.
std::size_t default_budget();

struct DemazureContext {
    const FiniteCrystal* B;
    Weight lambda;
    Schedule sched;
    std::size_t budget = 0;  // 0 means default_budget()

    PathSpace space() const { return PathSpace(*B, lambda); }
    std::size_t cap() const { return budget ? budget : default_budget(); }
};

// Thrown when a prerequisite condition report fails.
struct ConditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// B_a^(j): close {bbar_j} under f_{i_1^(j)}, ..., f_{i_a^(j)} in turn.
// Canonical order: sorted by element encoding.
std::vector<FiniteCrystal::Elem> fclosure_subset(const DemazureContext& ctx, int j, int a);

// The predicate form of B_a^(j) where a closed description is known (the
// coordinate families for lambda on the Lambda_0/Lambda_1 orbit, and type A
// at j = n+1).  Throws std::invalid_argument outside that scope.
std::vector<FiniteCrystal::Elem> closed_form_subset(const FiniteCrystal& B,
                                                    const Weight& lambda,
                                                    const std::string& variant, int j, int a);

// b_0^(j) = bbar_j, b_a^(j) = f^max_{i_a^(j)} b_{a-1}^(j); returns b_0..b_d.
std::vector<FiniteCrystal::Elem> extremal_chain(const DemazureContext& ctx, int j);

struct ConditionWitness {
    std::string condition;
    int j = 0;
    int a = 0;
    std::string detail;
};

struct ConditionReport {
    std::optional<bool> II, III, IVprime, IIprime;
    std::vector<ConditionWitness> witnesses;

    bool pass() const;
    std::string to_json() const;
};

// (II), (III), (IV') for j = 1..j_max.
ConditionReport check_conditions(const DemazureContext& ctx, int j_max);

// (II'), (III) for j = 1..j_max (the mixed two-slot variant).
ConditionReport check_conditions_kappa2(const DemazureContext& ctx, int j_max);

using TensorElem = std::pair<FiniteCrystal::Elem, FiniteCrystal::Elem>;

// B_a^(j+1,j) in B (x) B, seeded from {bbar_{j+1}} (x) B_d^(j); closure uses
// the row of j+1.  Canonical order: lex on (left, right) encodings.
std::vector<TensorElem> mixed_subset(const DemazureContext& ctx, int j, int a);

// The path set of B_{w^(k)}(lambda), windows drawn from
// u_{lambda_j} (x) B_a^(j) (x) B^((j-1)) (kappa=1) or the mixed two-slot form
// (kappa=2).  Verifies the prerequisite conditions through j and throws
// ConditionError on failure.
std::vector<Path> demazure_paths(const DemazureContext& ctx, int k, int kappa = 1);

// Direct recursion on paths: close {ground state} under f_{i(t)} for
// t = 1..k, i(t) the flat schedule index.
std::vector<Path> recursive_oracle(const DemazureContext& ctx, int k);

std::vector<std::pair<Weight, int>> character(const PathSpace& spec,
                                              const std::vector<Path>& paths);
std::string character_to_json(const std::vector<std::pair<Weight, int>>& chi);

struct InvarianceReport {
    bool ok = false;
    int i_L = 0;
    long long cardinality = 0;
    long long expected = 0;
    bool characters_equal = false;
    std::string detail;
};

// V_{w^(Ld)}(l Lambda_0) vs V^(x)L: cardinality |B|^L and equality of the
// weight multisets restricted to I \ {i_L}.
InvarianceReport classical_invariance_check(const DemazureContext& ctx, int L);

struct ScheduleSearchResult {
    bool found = false;
    Schedule sched;
    std::string detail;
};

// Bounded searches over j-independent index sequences of length d <= d_max
// for a sigma-fixed dominant lambda: kappa=1 looks for B_d^(j) = B, kappa=2
// for B_d^(j+1,j) = B_d^(j+1) (x) B.
ScheduleSearchResult search_schedule_kappa1(const FiniteCrystal& B, const Weight& lambda,
                                            int d_max, std::size_t budget = 0);
ScheduleSearchResult search_schedule_kappa2(const FiniteCrystal& B, const Weight& lambda,
                                            int d_max, std::size_t budget = 0);

}  // namespace crystals
