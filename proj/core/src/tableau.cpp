#include "crystals/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <span>
#include <sstream>

namespace crystals {

namespace {
constexpr int kHole = 0;
}

TableauCrystal::TableauCrystal(int n, int k, int l)
    : type_(Family::A1, n), k_(k), l_(l) {
    if (k < 1 || k > n) throw std::invalid_argument("column height k must satisfy 1 <= k <= n");
    if (l < 1) throw std::invalid_argument("level must be >= 1");
}

bool TableauCrystal::contains(const Elem& b) const {
    if (static_cast<int>(b.size()) != k_ * l_) return false;
    for (int c = 0; c < l_; ++c) {
        for (int r = 0; r < k_; ++r) {
            const int v = entry(b, r, c);
            if (v < 1 || v > type_.n + 1) return false;
            if (r + 1 < k_ && entry(b, r + 1, c) <= v) return false;  // columns strict
            if (c + 1 < l_ && entry(b, r, c + 1) < v) return false;   // rows weak
        }
    }
    return true;
}

namespace {

// eps_j, phi_j of one column (0/1 each).
std::pair<int, int> column_eps_phi(std::span<const int> col, int j) {
    bool has_j = std::find(col.begin(), col.end(), j) != col.end();
    bool has_j1 = std::find(col.begin(), col.end(), j + 1) != col.end();
    int eps = (has_j1 && !has_j) ? 1 : 0;
    int phi = (has_j && !has_j1) ? 1 : 0;
    return {eps, phi};
}

}  // namespace

std::optional<TableauCrystal::Elem> TableauCrystal::classical_apply(char op, int j,
                                                                    const Elem& b) const {
    // Columns as tensor factors: position a (1 = rightmost) is column a.
    // Signature over columns, reduced with a stack.
    std::vector<std::pair<bool, int>> reduced;  // (plus, column index 0-based)
    for (int c = l_ - 1; c >= 0; --c) {
        auto [eps, phi] = column_eps_phi(std::span(b.data() + c * k_, k_), j);
        for (int t = 0; t < eps; ++t) {
            if (!reduced.empty() && reduced.back().first)
                reduced.pop_back();
            else
                reduced.emplace_back(false, c);
        }
        for (int t = 0; t < phi; ++t) reduced.emplace_back(true, c);
    }
    int col = -1;
    if (op == 'f') {
        for (auto& [plus, c] : reduced)
            if (plus) { col = c; break; }  // leftmost +
    } else {
        for (auto& [plus, c] : reduced)
            if (!plus) col = c;  // rightmost -
    }
    if (col < 0) return std::nullopt;
    Elem r = b;
    const int from = (op == 'f') ? j : j + 1;
    const int to = (op == 'f') ? j + 1 : j;
    for (int row = 0; row < k_; ++row) {
        if (entry(r, row, col) == from) {
            r[col * k_ + row] = to;
            assert(contains(r));
            return r;
        }
    }
    throw std::logic_error("signature selected a column without the acting letter");
}

TableauCrystal::Elem TableauCrystal::slide_holes(Elem g, bool toward_nw) const {
    auto at = [&](int r, int c) -> int& { return g[c * k_ + r]; };
    // Collect holes; for NW slides process the leftmost hole first (it comes
    // to rest north-west-most, and the resting holes stop the later ones),
    // mirror order for SE slides.
    std::vector<std::pair<int, int>> holes;
    for (int c = 0; c < l_; ++c)
        for (int r = 0; r < k_; ++r)
            if (at(r, c) == kHole) holes.emplace_back(r, c);
    std::sort(holes.begin(), holes.end(), [&](auto& a, auto& b) {
        if (toward_nw) return std::pair(a.second, a.first) < std::pair(b.second, b.first);
        return std::pair(a.second, a.first) > std::pair(b.second, b.first);
    });
    for (auto [r, c] : holes) {
        for (;;) {
            int nr = -1, nc = -1, nv = 0;
            if (toward_nw) {
                const bool up = r > 0 && at(r - 1, c) != kHole;
                const bool left = c > 0 && at(r, c - 1) != kHole;
                if (up && (!left || at(r - 1, c) >= at(r, c - 1))) {
                    nr = r - 1; nc = c;
                } else if (left) {
                    nr = r; nc = c - 1;
                }
            } else {
                const bool down = r + 1 < k_ && at(r + 1, c) != kHole;
                const bool right = c + 1 < l_ && at(r, c + 1) != kHole;
                if (down && (!right || at(r + 1, c) <= at(r, c + 1))) {
                    nr = r + 1; nc = c;
                } else if (right) {
                    nr = r; nc = c + 1;
                }
            }
            if (nr < 0) break;
            nv = at(nr, nc);
            at(r, c) = nv;
            at(nr, nc) = kHole;
            r = nr;
            c = nc;
        }
    }
    return g;
}

TableauCrystal::Elem TableauCrystal::promotion(const Elem& b) const {
    check_member(b);
    Elem g = b;
    for (auto& v : g)
        if (v == type_.n + 1) v = kHole;
    g = slide_holes(std::move(g), /*toward_nw=*/true);
    for (auto& v : g) v = (v == kHole) ? 1 : v + 1;
    assert(contains(g));
    return g;
}

TableauCrystal::Elem TableauCrystal::promotion_inverse(const Elem& b) const {
    check_member(b);
    Elem g = b;
    for (auto& v : g)
        if (v == 1) v = kHole;
    g = slide_holes(std::move(g), /*toward_nw=*/false);
    for (auto& v : g) v = (v == kHole) ? type_.n + 1 : v - 1;
    assert(contains(g));
    return g;
}

std::optional<TableauCrystal::Elem> TableauCrystal::f(int i, const Elem& b) const {
    check_member(b);
    if (i < 0 || i > type_.n) throw std::invalid_argument("index out of range");
    if (i != 0) return classical_apply('f', i, b);
    auto r = classical_apply('f', 1, promotion(b));
    if (!r) return std::nullopt;
    return promotion_inverse(*r);
}

std::optional<TableauCrystal::Elem> TableauCrystal::e(int i, const Elem& b) const {
    check_member(b);
    if (i < 0 || i > type_.n) throw std::invalid_argument("index out of range");
    if (i != 0) return classical_apply('e', i, b);
    auto r = classical_apply('e', 1, promotion(b));
    if (!r) return std::nullopt;
    return promotion_inverse(*r);
}

int TableauCrystal::phi(int i, const Elem& b) const {
    check_member(b);
    // String length; for i != 0 this equals the reduced-signature count.
    int m = 0;
    Elem cur = b;
    while (auto next = f(i, cur)) {
        cur = *next;
        ++m;
    }
    return m;
}

int TableauCrystal::eps(int i, const Elem& b) const {
    check_member(b);
    int m = 0;
    Elem cur = b;
    while (auto next = e(i, cur)) {
        cur = *next;
        ++m;
    }
    return m;
}

std::vector<TableauCrystal::Elem> TableauCrystal::elements() const {
    // Columns in lex order, rebuilt left to right under the row constraint.
    std::vector<std::vector<int>> columns;
    std::vector<int> col(k_);
    auto gen_col = [&](auto&& self, int row, int lo) -> void {
        if (row == k_) {
            columns.push_back(col);
            return;
        }
        for (int v = lo; v <= type_.n + 1 - (k_ - 1 - row); ++v) {
            col[row] = v;
            self(self, row + 1, v + 1);
        }
    };
    gen_col(gen_col, 0, 1);

    std::vector<Elem> out;
    Elem cur(k_ * l_);
    auto ge_rows = [&](const std::vector<int>& a, int prev_col) {
        for (int r = 0; r < k_; ++r)
            if (a[r] < cur[prev_col * k_ + r]) return false;
        return true;
    };
    auto gen = [&](auto&& self, int c) -> void {
        if (c == l_) {
            out.push_back(cur);
            return;
        }
        for (const auto& candidate : columns) {
            if (c > 0 && !ge_rows(candidate, c - 1)) continue;
            std::copy(candidate.begin(), candidate.end(), cur.begin() + c * k_);
            self(self, c + 1);
        }
    };
    gen(gen, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string TableauCrystal::encode(const Elem& b) const {
    std::ostringstream os;
    os << "A1[n=" << type_.n << ",k=" << k_ << ",l=" << l_ << "]{";
    for (int c = 0; c < l_; ++c) {
        if (c) os << "|";
        for (int r = 0; r < k_; ++r) {
            if (r) os << ",";
            os << entry(b, r, c);
        }
    }
    os << "}";
    return os.str();
}

Weight TableauCrystal::sigma(const Weight& w) const { return sigma_apply(type_, w, k_); }

TableauCrystal::Elem TableauCrystal::ground_state_tableau(int j) const {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    const int n = type_.n, kprime = n + 1 - k_;
    // The integers n+2-jk, ..., n+1-(j-1)k; alpha is the 1-based position of
    // the one congruent to 0 mod n+1, if any.
    int alpha = 0;
    for (int p = 1; p <= k_; ++p) {
        int v = n + 1 - j * k_ + p;
        if (((v % (n + 1)) + (n + 1)) % (n + 1) == 0) {
            alpha = p;
            break;
        }
    }
    std::vector<int> col(k_);
    for (int i = 1; i <= k_; ++i) {
        if (alpha == 0) {
            int v = ((i + n + 1 - j * k_) % (n + 1) + (n + 1)) % (n + 1);
            col[i - 1] = (v == 0) ? n + 1 : v;
        } else {
            col[i - 1] = (i <= k_ - alpha) ? i : i + kprime;
        }
    }
    Elem b(k_ * l_);
    for (int c = 0; c < l_; ++c) std::copy(col.begin(), col.end(), b.begin() + c * k_);
    assert(contains(b));
    return b;
}

TableauCrystal::Elem TableauCrystal::minimal(const Weight& lambda) const {
    const int n = type_.n, kprime = n + 1 - k_;
    // sigma^{j-1}(l Lambda_0) = l Lambda_{(j-1)k' mod (n+1)}; on that orbit
    // use the ground-state formula, otherwise locate by search.
    for (int j = 1; j <= n + 1; ++j) {
        int idx = ((j - 1) * kprime) % (n + 1);
        if (lambda == multiple_of_fundamental(type_, idx, l_)) return ground_state_tableau(j);
    }
    return FiniteCrystal::minimal(lambda);
}

}  // namespace crystals
