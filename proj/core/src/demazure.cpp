#include "crystals/demazure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crystals/coordinate.hpp"
#include "crystals/graph.hpp"
#include "crystals/signature.hpp"
#include "crystals/tableau.hpp"

namespace crystals {

using Elem = FiniteCrystal::Elem;

std::size_t default_budget() {
    if (const char* s = std::getenv("CRYSTAL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

namespace {

std::vector<Elem> sort_by_encoding(const FiniteCrystal& B, std::vector<Elem> v) {
    std::sort(v.begin(), v.end(), [&](const Elem& x, const Elem& y) {
        return B.encode(x) < B.encode(y);
    });
    return v;
}

// One closure step: everything reachable from `set` by f_i^n, n >= 0.
std::vector<Elem> close_under_f(const FiniteCrystal& B, std::vector<Elem> set, int i,
                                std::size_t cap) {
    std::set<Elem> seen(set.begin(), set.end());
    for (std::size_t t = 0; t < set.size(); ++t) {
        Elem cur = set[t];
        while (auto next = B.f(i, cur)) {
            cur = *next;
            if (seen.insert(cur).second) {
                set.push_back(cur);
                if (seen.size() > cap) throw BudgetError("Demazure closure exceeded budget");
            }
        }
    }
    return set;
}

}  // namespace

std::vector<Elem> fclosure_subset(const DemazureContext& ctx, int j, int a) {
    if (j < 1 || a < 0 || a > ctx.sched.d) throw std::invalid_argument("bad (j,a)");
    PathSpace spec = ctx.space();
    std::vector<Elem> set{spec.bbar(j)};
    for (int t = 1; t <= a; ++t)
        set = close_under_f(*ctx.B, std::move(set), ctx.sched.index(j, t), ctx.cap());
    return sort_by_encoding(*ctx.B, std::move(set));
}

namespace {

// Support-prefix description of the coordinate-family subsets: the first
// `prefix` slots of the canonical layout are free, the rest are zero.  On the
// branch whose ground state is (0,...,0,l) the roles of x_1 and xbar_1 are
// exchanged.
std::vector<Elem> prefix_subset(const CoordCrystal& C, int prefix, bool swap_ends,
                                std::optional<int> forced_zero_slot = std::nullopt) {
    std::vector<Elem> out;
    const int m = C.tuple_size();
    for (const auto& b : C.elements()) {
        bool ok = true;
        for (int s = 0; s < m && ok; ++s) {
            bool free_slot = s < prefix;
            if (swap_ends) {
                if (s == 0) free_slot = false;
                if (s == m - 1) free_slot = prefix >= 1;
            }
            if (forced_zero_slot && s == *forced_zero_slot) free_slot = false;
            if (!free_slot && b[s] != 0) ok = false;
        }
        if (ok) out.push_back(b);
    }
    return out;
}

}  // namespace

std::vector<Elem> closed_form_subset(const FiniteCrystal& B, const Weight& lambda,
                                     const std::string& variant, int j, int a) {
    const AffineType& t = B.type();
    const int n = t.n, l = B.level();
    auto unsupported = [&]() -> std::vector<Elem> {
        throw std::invalid_argument("no closed form for " + t.name() + ", lambda=" +
                                    weight_to_string(lambda) + ", j=" + std::to_string(j));
    };

    if (t.kind == Family::A1) {
        const auto* T = dynamic_cast<const TableauCrystal*>(&B);
        if (!T || lambda != multiple_of_fundamental(t, 0, l)) return unsupported();
        const int k = T->height(), kp = n + 1 - k, d = k * kp;
        if (j != n + 1 || a < 0 || a > d) return unsupported();
        if (a == 0) return {T->ground_state_tableau(n + 1)};
        const int g = (a - 1) / kp, r = a - 1 - kp * g;
        std::vector<Elem> out;
        for (const auto& b : T->elements()) {
            bool ok = true;
            for (int c = 0; c < T->width() && ok; ++c) {
                for (int row = 1; row < k - g && ok; ++row)
                    if (T->entry(b, row - 1, c) != row) ok = false;
                if (ok && T->entry(b, k - g - 1, c) > k - g + r + 1) ok = false;
            }
            if (ok) out.push_back(b);
        }
        return sort_by_encoding(B, std::move(out));
    }

    const auto* C = dynamic_cast<const CoordCrystal*>(&B);
    if (!C) return unsupported();
    const int d = [&] {
        switch (t.kind) {
            case Family::B1:
            case Family::A2odd: return 2 * n - 1;
            case Family::D1: return 2 * n - 2;
            default: return 2 * n;
        }
    }();
    if (a < 0 || a > d) throw std::invalid_argument("a out of range");

    // Which fundamental-weight orbit are we on?
    int shift = -1;
    if (lambda == multiple_of_fundamental(t, 0, l)) shift = 0;
    else if ((t.kind == Family::B1 || t.kind == Family::D1 || t.kind == Family::A2odd) &&
             lambda == multiple_of_fundamental(t, 1, l))
        shift = 1;
    if (shift < 0) return unsupported();
    const bool alt = (variant == "alt");
    if (alt && t.kind != Family::D1) return unsupported();

    if (a == 0) {
        Weight lam = lambda;
        for (int s = 1; s < j; ++s) lam = B.sigma(lam);
        return {C->minimal(lam)};
    }

    // Ground-state branch: "even" rows of the tables have x_1 free, "odd"
    // rows have xbar_1 free instead.  The d = 2n families have a single
    // ground state, so their subsets do not depend on j.
    const bool two_branch =
        (t.kind == Family::B1 || t.kind == Family::D1 || t.kind == Family::A2odd);
    const bool swap_ends = two_branch && ((j + shift) % 2 != 0);
    const int m = C->tuple_size();

    int prefix = -1;
    std::optional<int> forced_zero;
    switch (t.kind) {
        case Family::B1:
            if (a == d) { prefix = m; break; }
            if (a <= n - 1) prefix = a + 1;
            else prefix = a + 2;  // a = n+a'-1, prefix n+a'+1
            break;
        case Family::A2odd:
            if (a == d) { prefix = m; break; }
            if (a <= n - 1) prefix = a + 1;
            else prefix = a + 1;  // a = n+a'-1, prefix n+a'
            break;
        case Family::D1:
            if (a == d) { prefix = m; break; }
            if (a <= n - 2) prefix = a + 1;
            else if (a == n - 1) {
                if (alt) {
                    // with the (n, n-1) ordering f_n comes first: x_n stays 0
                    // and xbar_n opens up instead
                    prefix = n + 1;
                    forced_zero = C->slot_x(n);
                } else {
                    prefix = n;
                }
            } else {
                prefix = a + 2;  // a = n+a'-1, prefix n+a'+1
            }
            break;
        case Family::A2even:
        case Family::C1:
            if (shift != 0) return unsupported();
            if (a == d) prefix = m;
            else if (a <= n) prefix = a;
            else prefix = a;  // a = n+a', prefix n+a'
            break;
        case Family::D2:
            if (shift != 0) return unsupported();
            if (a == d) prefix = m;
            else if (a <= n) prefix = a;
            else prefix = a + 1;  // a = n+a', prefix n+a'+1 (x_0 included)
            break;
        default: return unsupported();
    }
    // At a = d every slot is free regardless of the branch.
    return sort_by_encoding(B, prefix_subset(*C, prefix, swap_ends && prefix < m, forced_zero));
}

std::vector<Elem> extremal_chain(const DemazureContext& ctx, int j) {
    PathSpace spec = ctx.space();
    std::vector<Elem> chain{spec.bbar(j)};
    for (int a = 1; a <= ctx.sched.d; ++a)
        chain.push_back(ctx.B->f_max(ctx.sched.index(j, a), chain.back()));
    return chain;
}

bool ConditionReport::pass() const {
    for (const auto& c : {II, III, IVprime, IIprime})
        if (c && !*c) return false;
    return true;
}

std::string ConditionReport::to_json() const {
    nlohmann::json j;
    auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) j["conditions"][key] = *v;
        else j["conditions"][key] = nullptr;
    };
    put("II", II);
    put("III", III);
    put("IVprime", IVprime);
    put("IIprime", IIprime);
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses)
        j["witnesses"].push_back(
            {{"condition", w.condition}, {"j", w.j}, {"a", w.a}, {"detail", w.detail}});
    return j.dump(2);
}

ConditionReport check_conditions(const DemazureContext& ctx, int j_max) {
    const FiniteCrystal& B = *ctx.B;
    const Schedule& s = ctx.sched;
    PathSpace spec = ctx.space();
    ConditionReport rep;
    rep.II = rep.III = rep.IVprime = true;

    auto all = sort_by_encoding(B, B.elements());
    for (int j = 1; j <= j_max; ++j) {
        Weight lam_j = spec.lambda_k(j);
        std::vector<Elem> set{spec.bbar(j)};
        for (int a = 1; a <= s.d; ++a) {
            const int i = s.index(j, a);
            // (III) examines B_{a-1}
            for (const auto& b : set) {
                if (lam_j[i] > B.eps(i, b)) {
                    rep.III = false;
                    rep.witnesses.push_back({"III", j, a,
                                             B.encode(b) + ": <lambda_j,h_i> = " +
                                                 std::to_string(lam_j[i]) + " > eps = " +
                                                 std::to_string(B.eps(i, b))});
                    break;
                }
            }
            set = close_under_f(B, std::move(set), i, ctx.cap());
        }
        // (II)
        if (sort_by_encoding(B, set) != all) {
            rep.II = false;
            rep.witnesses.push_back({"II", j, s.d,
                                     "B_d^(j) has " + std::to_string(set.size()) +
                                         " of " + std::to_string(all.size()) + " elements"});
        }
        // (IV')
        auto chain = extremal_chain(ctx, j);
        for (int a = 1; a <= s.d; ++a) {
            const int inext = s.index(j, a + 1);
            const Elem& ba = chain[a];
            if (B.eps(inext, ba) != 0 || B.phi(inext, ba) <= 0) {
                rep.IVprime = false;
                rep.witnesses.push_back({"IVprime", j, a,
                                         B.encode(ba) + ": eps = " +
                                             std::to_string(B.eps(inext, ba)) + ", phi = " +
                                             std::to_string(B.phi(inext, ba))});
            }
        }
        const int i1 = s.index(j + 1, 1);
        const int m_next = spec.lambda_k(j + 1)[i1];
        Elem stepped = B.f_string(i1, chain[s.d], m_next);
        if (stepped != spec.bbar(j + 1)) {
            rep.IVprime = false;
            rep.witnesses.push_back({"IVprime", j, s.d,
                                     "f^" + std::to_string(m_next) + " b_d = " +
                                         B.encode(stepped) + " != bbar_{j+1} = " +
                                         B.encode(spec.bbar(j + 1))});
        }
    }
    return rep;
}

namespace {

std::vector<TensorElem> sort_tensor(const FiniteCrystal& B, std::vector<TensorElem> v) {
    std::sort(v.begin(), v.end(), [&](const TensorElem& x, const TensorElem& y) {
        auto kx = std::pair(B.encode(x.first), B.encode(x.second));
        auto ky = std::pair(B.encode(y.first), B.encode(y.second));
        return kx < ky;
    });
    return v;
}

std::vector<TensorElem> close_tensor_under_f(const FiniteCrystal& B,
                                             std::vector<TensorElem> set, int i,
                                             std::size_t cap) {
    std::set<TensorElem> seen(set.begin(), set.end());
    for (std::size_t t = 0; t < set.size(); ++t) {
        std::vector<Elem> cur{set[t].first, set[t].second};
        for (;;) {
            auto next = tensor_apply(B, 'f', i, cur);
            if (!next) break;
            cur = *next;
            TensorElem te{cur[0], cur[1]};
            if (seen.insert(te).second) {
                set.push_back(te);
                if (seen.size() > cap) throw BudgetError("mixed closure exceeded budget");
            }
        }
    }
    return set;
}

}  // namespace

std::vector<TensorElem> mixed_subset(const DemazureContext& ctx, int j, int a) {
    if (j < 1 || a < 0 || a > ctx.sched.d) throw std::invalid_argument("bad (j,a)");
    PathSpace spec = ctx.space();
    std::vector<TensorElem> set;
    Elem top = spec.bbar(j + 1);
    for (const auto& b : fclosure_subset(ctx, j, ctx.sched.d)) set.push_back({top, b});
    for (int t = 1; t <= a; ++t)
        set = close_tensor_under_f(*ctx.B, std::move(set), ctx.sched.index(j + 1, t),
                                   ctx.cap());
    return sort_tensor(*ctx.B, std::move(set));
}

ConditionReport check_conditions_kappa2(const DemazureContext& ctx, int j_max) {
    ConditionReport rep;
    rep.IIprime = rep.III = true;
    const FiniteCrystal& B = *ctx.B;
    PathSpace spec = ctx.space();

    for (int j = 1; j <= j_max; ++j) {
        // (II'): B_d^(j+1,j) = B_d^(j+1) (x) B
        auto mixed = mixed_subset(ctx, j, ctx.sched.d);
        std::vector<TensorElem> want;
        auto all = B.elements();
        for (const auto& left : fclosure_subset(ctx, j + 1, ctx.sched.d))
            for (const auto& right : all) want.push_back({left, right});
        want = sort_tensor(B, std::move(want));
        if (mixed != want) {
            rep.IIprime = false;
            rep.witnesses.push_back({"IIprime", j, ctx.sched.d,
                                     "mixed set has " + std::to_string(mixed.size()) +
                                         " elements, expected " + std::to_string(want.size())});
        }
        // (III) on B, as in the single-slot case
        Weight lam_j = spec.lambda_k(j);
        std::vector<Elem> set{spec.bbar(j)};
        for (int a = 1; a <= ctx.sched.d; ++a) {
            const int i = ctx.sched.index(j, a);
            for (const auto& b : set) {
                if (lam_j[i] > B.eps(i, b)) {
                    rep.III = false;
                    rep.witnesses.push_back({"III", j, a,
                                             B.encode(b) + ": <lambda_j,h_i> = " +
                                                 std::to_string(lam_j[i]) + " > eps = " +
                                                 std::to_string(B.eps(i, b))});
                    break;
                }
            }
            set = close_under_f(B, std::move(set), i, ctx.cap());
        }
    }
    return rep;
}

namespace {

std::vector<Path> sort_paths(std::vector<Path> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<Path> demazure_paths(const DemazureContext& ctx, int k, int kappa) {
    PathSpace spec = ctx.space();
    if (k == 0) return {ground_state_path(spec)};
    const int d = ctx.sched.d;
    const int j = (k - 1) / d + 1, a = (k - 1) % d + 1;

    if (kappa == 1) {
        auto rep = check_conditions(ctx, j);
        if (!rep.pass()) throw ConditionError("conditions (II)/(III)/(IV') fail:\n" + rep.to_json());
    } else if (kappa == 2) {
        auto rep = check_conditions_kappa2(ctx, j);
        if (!rep.pass()) throw ConditionError("conditions (II')/(III) fail:\n" + rep.to_json());
    } else {
        throw std::invalid_argument("kappa must be 1 or 2");
    }

    auto all = ctx.B->elements();
    std::vector<Path> out;
    // Build the windows u_{lambda_j} (x) <front block> (x) B^(x)(tail copies).
    auto emit = [&](const std::vector<Elem>& front, int tail_copies) {
        std::vector<int> idx(tail_copies, 0);
        for (;;) {
            Path p;
            p.window = front;
            for (int t = 0; t < tail_copies; ++t) p.window.push_back(all[idx[t]]);
            out.push_back(normalize_path(spec, std::move(p)));
            int t = tail_copies - 1;
            while (t >= 0 && ++idx[t] == static_cast<int>(all.size())) idx[t--] = 0;
            if (t < 0) break;
        }
    };
    if (kappa == 1) {
        for (const auto& w : fclosure_subset(ctx, j, a)) emit({w}, j - 1);
    } else if (j == 1) {
        for (const auto& w : fclosure_subset(ctx, 1, a)) emit({w}, 0);
    } else {
        for (const auto& [w1, w2] : mixed_subset(ctx, j - 1, a)) emit({w1, w2}, j - 2);
    }
    return sort_paths(std::move(out));
}

std::vector<Path> recursive_oracle(const DemazureContext& ctx, int k) {
    PathSpace spec = ctx.space();
    std::vector<Path> set{ground_state_path(spec)};
    std::set<Path> seen(set.begin(), set.end());
    for (int t = 1; t <= k; ++t) {
        const int i = ctx.sched.index_flat(t);
        for (std::size_t s0 = 0; s0 < set.size(); ++s0) {
            Path cur = set[s0];
            while (auto next = path_apply(spec, 'f', i, cur, ctx.sched.d)) {
                cur = *next;
                if (seen.insert(cur).second) {
                    set.push_back(cur);
                    if (seen.size() > ctx.cap())
                        throw BudgetError("path closure exceeded budget");
                }
            }
        }
    }
    return sort_paths(std::move(set));
}

std::vector<std::pair<Weight, int>> character(const PathSpace& spec,
                                              const std::vector<Path>& paths) {
    std::map<Weight, int> chi;
    for (const auto& p : paths) ++chi[path_weight(spec, p)];
    return {chi.begin(), chi.end()};
}

std::string character_to_json(const std::vector<std::pair<Weight, int>>& chi) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, m] : chi) j.push_back({w, m});
    return j.dump();
}

InvarianceReport classical_invariance_check(const DemazureContext& ctx, int L) {
    const FiniteCrystal& B = *ctx.B;
    const AffineType& t = B.type();
    if (ctx.lambda != multiple_of_fundamental(t, 0, B.level()))
        throw std::invalid_argument("invariance check is stated for lambda = l*Lambda_0");

    InvarianceReport rep;
    // sigma^L(Lambda_0) = Lambda_{i_L}
    Weight w = multiple_of_fundamental(t, 0, 1);
    for (int s = 0; s < L; ++s) w = B.sigma(w);
    for (int i = 0; i <= t.n; ++i)
        if (w[i] != 0) rep.i_L = i;

    auto paths = demazure_paths(ctx, L * ctx.sched.d, 1);
    auto all = B.elements();
    rep.cardinality = static_cast<long long>(paths.size());
    rep.expected = 1;
    for (int s = 0; s < L; ++s) rep.expected *= static_cast<long long>(all.size());

    auto restrict = [&](Weight v) {
        v.erase(v.begin() + rep.i_L);
        return v;
    };
    PathSpace spec = ctx.space();
    std::vector<Weight> lhs;
    for (const auto& p : paths) lhs.push_back(restrict(path_weight(spec, p)));
    std::vector<Weight> rhs;
    std::vector<int> idx(L, 0);
    for (;;) {
        Weight sum(t.n + 1, 0);
        for (int s = 0; s < L; ++s) sum = add(sum, B.weight(all[idx[s]]));
        rhs.push_back(restrict(sum));
        int s = L - 1;
        while (s >= 0 && ++idx[s] == static_cast<int>(all.size())) idx[s--] = 0;
        if (s < 0) break;
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rep.characters_equal = (lhs == rhs);
    rep.ok = rep.characters_equal && rep.cardinality == rep.expected;
    std::ostringstream os;
    os << "i_L=" << rep.i_L << " cardinality=" << rep.cardinality << " expected="
       << rep.expected << " restricted characters " << (rep.characters_equal ? "equal" : "differ");
    rep.detail = os.str();
    return rep;
}

namespace {

Schedule constant_schedule(std::vector<int> row) {
    Schedule s;
    s.name = "search";
    s.d = static_cast<int>(row.size());
    s.period_in_j = 1;
    s.table = {std::move(row)};
    return s;
}

template <typename Check>
ScheduleSearchResult search_schedules(const FiniteCrystal& B, const Weight& lambda, int d_max,
                                      Check&& check) {
    if (B.sigma(lambda) != lambda)
        throw std::invalid_argument("schedule search handles sigma-fixed lambda only");
    const int n = B.type().n;
    long long tried = 0;
    for (int d = 1; d <= d_max; ++d) {
        std::vector<int> row(d, 0);
        for (;;) {
            bool redundant = false;
            for (int t = 1; t < d; ++t)
                if (row[t] == row[t - 1]) redundant = true;  // f-closure is idempotent
            if (!redundant) {
                ++tried;
                if (check(constant_schedule(row)))
                    return {true, constant_schedule(row),
                            "found at d=" + std::to_string(d) + " after " +
                                std::to_string(tried) + " candidates"};
            }
            int t = d - 1;
            while (t >= 0 && ++row[t] == n + 1) row[t--] = 0;
            if (t < 0) break;
        }
    }
    return {false, Schedule{}, "no sequence with d <= " + std::to_string(d_max) + " (" +
                                   std::to_string(tried) + " candidates tried)"};
}

}  // namespace

ScheduleSearchResult search_schedule_kappa1(const FiniteCrystal& B, const Weight& lambda,
                                            int d_max, std::size_t budget) {
    const std::size_t cap = budget ? budget : default_budget();
    auto all = sort_by_encoding(B, B.elements());
    return search_schedules(B, lambda, d_max, [&](const Schedule& s) {
        DemazureContext ctx{&B, lambda, s, cap};
        return fclosure_subset(ctx, 1, s.d) == all;
    });
}

ScheduleSearchResult search_schedule_kappa2(const FiniteCrystal& B, const Weight& lambda,
                                            int d_max, std::size_t budget) {
    const std::size_t cap = budget ? budget : default_budget();
    return search_schedules(B, lambda, d_max, [&](const Schedule& s) {
        DemazureContext ctx{&B, lambda, s, cap};
        auto bd = fclosure_subset(ctx, 1, s.d);
        std::vector<TensorElem> want;
        for (const auto& left : bd)
            for (const auto& right : sort_by_encoding(B, B.elements()))
                want.push_back({left, right});
        return mixed_subset(ctx, 1, s.d) == sort_tensor(B, std::move(want));
    });
}

}  // namespace crystals
