#include "crystals/schedule.hpp"

#include <array>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace crystals {

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

int Schedule::index(int j, int a) const {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    if (a == d + 1) return index(j + 1, 1);
    if (a < 1 || a > d) throw std::invalid_argument("a out of range");
    return table[(j - 1) % period_in_j][a - 1];
}

int Schedule::index_flat(int k) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return index((k - 1) / d + 1, (k - 1) % d + 1);
}

namespace {

Schedule a1_formula(int n, int k) {
    const int kp = n + 1 - k;
    Schedule s;
    s.name = "A1-formula";
    s.d = k * kp;
    s.period_in_j = n + 1;
    for (int j = 1; j <= n + 1; ++j) {
        std::vector<int> row(s.d);
        for (int a = 1; a <= s.d; ++a) {
            int g = (a - 1) / kp, r = a - 1 - kp * g;
            row[a - 1] = mod(k * (1 - j) - g + r, n + 1);
        }
        s.table.push_back(std::move(row));
    }
    return s;
}

Schedule a1_intro() {
    Schedule s;
    s.name = "A1-intro";
    s.d = 4;
    s.period_in_j = 2;
    s.table = {{0, 3, 1, 0}, {2, 1, 3, 2}};
    return s;
}

// The two-wave rows ending at the 0/1 (or n/n-1) pair of the diagram.  hd
// lists i_1 for the two j parities (hd[0]: j odd); the wave runs through the
// body indices and mirrors back.
Schedule odd_d_schedule(const std::string& name, int d, std::array<int, 2> hd) {
    Schedule s;
    s.name = name;
    s.d = d;
    s.period_in_j = 2;
    const int body = (d - 1) / 2;  // positions 2..body+1 ascend
    for (int p = 0; p < 2; ++p) {
        std::vector<int> row(d);
        row[0] = row[d - 1] = hd[p];
        for (int a = 2; a <= body + 1; ++a) {
            row[a - 1] = a;
            row[d - a] = a;
        }
        s.table.push_back(std::move(row));
    }
    return s;
}

Schedule hill_schedule(const std::string& name, int n, bool reversed) {
    // d = 2n: 0,1,...,n,n-1,...,1 (or its reflection i -> n-i).
    Schedule s;
    s.name = name;
    s.d = 2 * n;
    s.period_in_j = 1;
    std::vector<int> row(2 * n);
    for (int a = 1; a <= 2 * n; ++a) {
        int i = (a <= n + 1) ? a - 1 : 2 * n + 1 - a;
        row[a - 1] = reversed ? n - i : i;
    }
    s.table = {std::move(row)};
    return s;
}

// B1 lLambda_n / D1 lLambda_{n-1},lLambda_n style: descend n-1..1 (or spin
// indices), the (1,0)-type pair, then ascend.
Schedule spin_end_schedule(const std::string& name, int n, int d, bool variant_alt,
                           bool d1_style, std::array<int, 2> head) {
    Schedule s;
    s.name = name;
    s.d = d;
    s.period_in_j = 2;
    for (int p = 0; p < 2; ++p) {
        std::vector<int> row(d, -1);
        if (d1_style) {
            // D1: i_1 = i_{2n-2} = head[p]; i_a = i_{2n-a-1} = n-a (2<=a<=n-2);
            // (i_{n-1}, i_n) = (1,0) or (0,1).
            row[0] = row[d - 1] = head[p];
            for (int a = 2; a <= n - 2; ++a) {
                row[a - 1] = n - a;
                row[2 * n - a - 1 - 1] = n - a;
            }
            row[n - 2] = variant_alt ? 0 : 1;
            row[n - 1] = variant_alt ? 1 : 0;
        } else {
            // B1 lLambda_n: i_a = n-a+1 (1<=a<=n-1); (i_n,i_{n+1}) = (1,0) or
            // (0,1); i_{n+a} = a (2<=a<=n-1).  No j dependence.
            for (int a = 1; a <= n - 1; ++a) row[a - 1] = n - a + 1;
            row[n - 1] = variant_alt ? 0 : 1;
            row[n] = variant_alt ? 1 : 0;
            for (int a = 2; a <= n - 1; ++a) row[n + a - 1] = a;
        }
        s.table.push_back(std::move(row));
    }
    return s;
}

Schedule d1_middle(const std::string& name, int n, std::array<int, 2> head, bool alt) {
    // D1 lLambda_0/lLambda_1: i_1 = i_{2n-2} = head[p]; i_a = i_{2n-a-1} = a
    // (2<=a<=n-2); (i_{n-1},i_n) = (n-1,n) or (n,n-1).
    Schedule s;
    s.name = name;
    s.d = 2 * n - 2;
    s.period_in_j = 2;
    for (int p = 0; p < 2; ++p) {
        std::vector<int> row(s.d, -1);
        row[0] = row[s.d - 1] = head[p];
        for (int a = 2; a <= n - 2; ++a) {
            row[a - 1] = a;
            row[2 * n - a - 1 - 1] = a;
        }
        row[n - 2] = alt ? n : n - 1;
        row[n - 1] = alt ? n - 1 : n;
        s.table.push_back(std::move(row));
    }
    return s;
}

bool is_l_fund(const AffineType& t, const Weight& lambda, int i, int& l) {
    if (static_cast<int>(lambda.size()) != t.n + 1) return false;
    if (lambda[i] <= 0) return false;
    l = lambda[i];
    return lambda == multiple_of_fundamental(t, i, l);
}

}  // namespace

Schedule builtin_schedule(const AffineType& t, const Weight& lambda, int k,
                          const std::string& variant) {
    const int n = t.n;
    int l = 0;
    const bool alt = (variant == "alt");
    auto unsupported = [&]() -> Schedule {
        throw std::invalid_argument("no builtin schedule for " + t.name() + ", lambda=" +
                                    weight_to_string(lambda) +
                                    (variant.empty() ? "" : ", variant=" + variant));
    };

    switch (t.kind) {
        case Family::A1:
            if (!is_l_fund(t, lambda, 0, l)) return unsupported();
            if (variant == "intro") {
                if (n != 3 || k != 2)
                    throw std::invalid_argument("intro schedule is for n=3, k=2");
                return a1_intro();
            }
            if (variant.empty() || variant == "formula") return a1_formula(n, k);
            return unsupported();
        case Family::B1:
            if (is_l_fund(t, lambda, 0, l) && variant.empty())
                return odd_d_schedule("B1-L0", 2 * n - 1, {0, 1});
            if (is_l_fund(t, lambda, 1, l) && variant.empty())
                return odd_d_schedule("B1-L1", 2 * n - 1, {1, 0});
            if (is_l_fund(t, lambda, n, l) && (variant.empty() || alt))
                return spin_end_schedule(alt ? "B1-Ln-alt" : "B1-Ln", n, 2 * n - 1, alt,
                                         false, {0, 0});
            return unsupported();
        case Family::D1:
            if (is_l_fund(t, lambda, 0, l) && (variant.empty() || alt))
                return d1_middle(alt ? "D1-L0-alt" : "D1-L0", n, {0, 1}, alt);
            if (is_l_fund(t, lambda, 1, l) && (variant.empty() || alt))
                return d1_middle(alt ? "D1-L1-alt" : "D1-L1", n, {1, 0}, alt);
            if (is_l_fund(t, lambda, n - 1, l) && (variant.empty() || alt))
                return spin_end_schedule(alt ? "D1-Ln1-alt" : "D1-Ln1", n, 2 * n - 2, alt,
                                         true, {n - 1, n});
            if (is_l_fund(t, lambda, n, l) && (variant.empty() || alt))
                return spin_end_schedule(alt ? "D1-Ln-alt" : "D1-Ln", n, 2 * n - 2, alt,
                                         true, {n, n - 1});
            return unsupported();
        case Family::A2odd:
            if (is_l_fund(t, lambda, 0, l) && variant.empty())
                return odd_d_schedule("A2odd-L0", 2 * n - 1, {0, 1});
            if (is_l_fund(t, lambda, 1, l) && variant.empty())
                return odd_d_schedule("A2odd-L1", 2 * n - 1, {1, 0});
            return unsupported();
        case Family::A2even:
            if (is_l_fund(t, lambda, 0, l) && variant.empty())
                return hill_schedule("A2even-L0", n, false);
            return unsupported();
        case Family::D2:
            if (is_l_fund(t, lambda, 0, l) && variant.empty())
                return hill_schedule("D2-L0", n, false);
            if (is_l_fund(t, lambda, n, l) && variant.empty())
                return hill_schedule("D2-Ln", n, true);
            return unsupported();
        case Family::C1:
            if (is_l_fund(t, lambda, 0, l) && variant.empty())
                return hill_schedule("C1-L0", n, false);
            if (is_l_fund(t, lambda, n, l) && variant.empty())
                return hill_schedule("C1-Ln", n, true);
            return unsupported();
    }
    return unsupported();
}

std::vector<ScheduleKey> builtin_schedule_keys(const AffineType& t, int l) {
    const int n = t.n;
    auto lf = [&](int i) { return multiple_of_fundamental(t, i, l); };
    std::vector<ScheduleKey> keys;
    switch (t.kind) {
        case Family::A1:
            for (int k = 1; k <= n; ++k) keys.push_back({lf(0), k, "formula"});
            if (n == 3) keys.push_back({lf(0), 2, "intro"});
            break;
        case Family::B1:
            keys.push_back({lf(0), 1, ""});
            keys.push_back({lf(1), 1, ""});
            keys.push_back({lf(n), 1, ""});
            keys.push_back({lf(n), 1, "alt"});
            break;
        case Family::D1:
            for (int i : {0, 1, n - 1, n})
                for (const char* v : {"", "alt"}) keys.push_back({lf(i), 1, v});
            break;
        case Family::A2odd:
            keys.push_back({lf(0), 1, ""});
            keys.push_back({lf(1), 1, ""});
            break;
        case Family::A2even:
            keys.push_back({lf(0), 1, ""});
            break;
        case Family::D2:
        case Family::C1:
            keys.push_back({lf(0), 1, ""});
            keys.push_back({lf(n), 1, ""});
            break;
    }
    return keys;
}

Schedule schedule_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Schedule s;
    s.name = j.value("name", "user");
    s.d = j.at("d").get<int>();
    s.period_in_j = j.value("period_in_j", 1);
    s.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (s.d < 1 || s.period_in_j < 1 ||
        static_cast<int>(s.table.size()) != s.period_in_j)
        throw std::invalid_argument("malformed schedule: table rows must equal period_in_j");
    for (const auto& row : s.table)
        if (static_cast<int>(row.size()) != s.d)
            throw std::invalid_argument("malformed schedule: row length must equal d");
    return s;
}

std::string schedule_to_json(const Schedule& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["d"] = s.d;
    j["period_in_j"] = s.period_in_j;
    j["table"] = s.table;
    return j.dump(2);
}

}  // namespace crystals
