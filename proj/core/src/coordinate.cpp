#include "crystals/coordinate.hpp"

#include <numeric>
#include <sstream>

namespace crystals {

namespace {

int pos_part(int x) { return x > 0 ? x : 0; }
int parity(int i) { return i & 1; }

}  // namespace

CoordCrystal::CoordCrystal(AffineType t, int l) : type_(t), l_(l) {
    if (t.kind == Family::A1)
        throw std::invalid_argument("type A uses the tableau realization");
    if (l < 1) throw std::invalid_argument("level must be >= 1");
    has_x0_ = (t.kind == Family::B1 || t.kind == Family::D2);
    tuple_size_ = 2 * t.n + (has_x0_ ? 1 : 0);
}

int CoordCrystal::x0(const Elem& b) const {
    if (!has_x0_) throw std::logic_error("family has no x_0 slot");
    return b[type_.n];
}

int CoordCrystal::slot_x0() const {
    if (!has_x0_) throw std::logic_error("family has no x_0 slot");
    return type_.n;
}

int CoordCrystal::coord_sum(const Elem& b) const {
    int s = std::accumulate(b.begin(), b.end(), 0);
    if (has_x0_) s -= b[type_.n];
    return s;
}

bool CoordCrystal::contains(const Elem& b) const {
    if (static_cast<int>(b.size()) != tuple_size_) return false;
    for (int v : b)
        if (v < 0) return false;
    if (has_x0_ && b[type_.n] > 1) return false;
    const int s = coord_sum(b);
    switch (type_.kind) {
        // The spin slot x_0 counts toward the level: b(lLambda_n) with odd l
        // has x_0 = 1 and coordinate sum l - 1.
        case Family::B1: return x0(b) + s == l_;
        case Family::D1: return (xi(b, type_.n) == 0 || xbar(b, type_.n) == 0) && s == l_;
        case Family::A2odd: return s == l_;
        case Family::A2even: return s <= l_;
        case Family::D2: return x0(b) + s <= l_;
        case Family::C1: return s % 2 == 0 && s <= 2 * l_;
        default: return false;
    }
}

std::optional<CoordCrystal::Elem> CoordCrystal::checked(Elem b) const {
    if (!contains(b)) return std::nullopt;
    return b;
}

std::optional<CoordCrystal::Elem> CoordCrystal::f(int i, const Elem& b) const {
    check_member(b);
    const int n = type_.n;
    if (i < 0 || i > n) throw std::invalid_argument("index out of range");
    Elem r = b;

    // Middle indices share one rule across all families.
    const int mid_top = (type_.kind == Family::D1) ? n - 2 : n - 1;
    if (i >= 1 && i <= mid_top) {
        if (xi(b, i + 1) >= xbar(b, i + 1)) {
            --r[slot_x(i)];
            ++r[slot_x(i + 1)];
        } else {
            --r[slot_xbar(i + 1)];
            ++r[slot_xbar(i)];
        }
        return checked(std::move(r));
    }

    if (i == 0) {
        switch (type_.kind) {
            case Family::B1:
            case Family::D1:
            case Family::A2odd:
                if (xi(b, 2) >= xbar(b, 2)) {
                    ++r[slot_x(2)];
                    --r[slot_xbar(1)];
                } else {
                    ++r[slot_x(1)];
                    --r[slot_xbar(2)];
                }
                break;
            case Family::A2even:
            case Family::D2:
                if (xi(b, 1) >= xbar(b, 1))
                    ++r[slot_x(1)];
                else
                    --r[slot_xbar(1)];
                break;
            case Family::C1:
                if (xi(b, 1) >= xbar(b, 1)) {
                    r[slot_x(1)] += 2;
                } else if (xi(b, 1) == xbar(b, 1) - 1) {
                    ++r[slot_x(1)];
                    --r[slot_xbar(1)];
                } else {
                    r[slot_xbar(1)] -= 2;
                }
                break;
            default:
                break;
        }
        return checked(std::move(r));
    }

    if (type_.kind == Family::D1 && i == n - 1) {
        if (xbar(b, n) == 0) {
            --r[slot_x(n - 1)];
            ++r[slot_x(n)];
        } else {
            --r[slot_xbar(n)];
            ++r[slot_xbar(n - 1)];
        }
        return checked(std::move(r));
    }

    // i == n
    switch (type_.kind) {
        case Family::B1:
        case Family::D2:
            if (x0(b) == 0) {
                --r[slot_x(n)];
                r[slot_x0()] = 1;
            } else {
                r[slot_x0()] = 0;
                ++r[slot_xbar(n)];
            }
            break;
        case Family::D1:
            if (xi(b, n) >= 1) {
                --r[slot_x(n)];
                ++r[slot_xbar(n - 1)];
            } else {
                --r[slot_x(n - 1)];
                ++r[slot_xbar(n)];
            }
            break;
        case Family::A2odd:
        case Family::A2even:
        case Family::C1:
            --r[slot_x(n)];
            ++r[slot_xbar(n)];
            break;
        default:
            break;
    }
    return checked(std::move(r));
}

std::optional<CoordCrystal::Elem> CoordCrystal::e(int i, const Elem& b) const {
    check_member(b);
    const int n = type_.n;
    if (i < 0 || i > n) throw std::invalid_argument("index out of range");
    Elem r = b;

    const int mid_top = (type_.kind == Family::D1) ? n - 2 : n - 1;
    if (i >= 1 && i <= mid_top) {
        if (xi(b, i + 1) > xbar(b, i + 1)) {
            ++r[slot_x(i)];
            --r[slot_x(i + 1)];
        } else {
            ++r[slot_xbar(i + 1)];
            --r[slot_xbar(i)];
        }
        return checked(std::move(r));
    }

    if (i == 0) {
        switch (type_.kind) {
            case Family::B1:
            case Family::D1:
            case Family::A2odd:
                if (xi(b, 2) > xbar(b, 2)) {
                    --r[slot_x(2)];
                    ++r[slot_xbar(1)];
                } else {
                    --r[slot_x(1)];
                    ++r[slot_xbar(2)];
                }
                break;
            case Family::A2even:
            case Family::D2:
                if (xi(b, 1) > xbar(b, 1))
                    --r[slot_x(1)];
                else
                    ++r[slot_xbar(1)];
                break;
            case Family::C1:
                if (xi(b, 1) >= xbar(b, 1) + 2) {
                    r[slot_x(1)] -= 2;
                } else if (xi(b, 1) == xbar(b, 1) + 1) {
                    --r[slot_x(1)];
                    ++r[slot_xbar(1)];
                } else {
                    r[slot_xbar(1)] += 2;
                }
                break;
            default:
                break;
        }
        return checked(std::move(r));
    }

    if (type_.kind == Family::D1 && i == n - 1) {
        if (xi(b, n) >= 1) {
            ++r[slot_x(n - 1)];
            --r[slot_x(n)];
        } else {
            ++r[slot_xbar(n)];
            --r[slot_xbar(n - 1)];
        }
        return checked(std::move(r));
    }

    // i == n
    switch (type_.kind) {
        case Family::B1:
        case Family::D2:
            if (x0(b) == 1) {
                ++r[slot_x(n)];
                r[slot_x0()] = 0;
            } else {
                r[slot_x0()] = 1;
                --r[slot_xbar(n)];
            }
            break;
        case Family::D1:
            if (xbar(b, n) == 0) {
                ++r[slot_x(n)];
                --r[slot_xbar(n - 1)];
            } else {
                ++r[slot_x(n - 1)];
                --r[slot_xbar(n)];
            }
            break;
        case Family::A2odd:
        case Family::A2even:
        case Family::C1:
            ++r[slot_x(n)];
            --r[slot_xbar(n)];
            break;
        default:
            break;
    }
    return checked(std::move(r));
}

int CoordCrystal::phi(int i, const Elem& b) const {
    check_member(b);
    const int n = type_.n;
    if (i < 0 || i > n) throw std::invalid_argument("index out of range");
    const int mid_top = (type_.kind == Family::D1) ? n - 2 : n - 1;
    if (i >= 1 && i <= mid_top)
        return xi(b, i) + pos_part(xbar(b, i + 1) - xi(b, i + 1));
    if (i == 0) {
        switch (type_.kind) {
            case Family::B1:
            case Family::D1:
            case Family::A2odd:
                return xbar(b, 1) + pos_part(xbar(b, 2) - xi(b, 2));
            case Family::A2even:
                return l_ - coord_sum(b) + 2 * pos_part(xbar(b, 1) - xi(b, 1));
            case Family::D2:
                return l_ - x0(b) - coord_sum(b) + 2 * pos_part(xbar(b, 1) - xi(b, 1));
            case Family::C1:
                return l_ - coord_sum(b) / 2 + pos_part(xbar(b, 1) - xi(b, 1));
            default:
                break;
        }
    }
    if (type_.kind == Family::D1 && i == n - 1) return xi(b, n - 1) + xbar(b, n);
    switch (type_.kind) {
        case Family::B1:
        case Family::D2:
            return 2 * xi(b, n) + x0(b);
        case Family::D1:
            return xi(b, n - 1) + xi(b, n);
        default:
            return xi(b, n);
    }
}

int CoordCrystal::eps(int i, const Elem& b) const {
    check_member(b);
    const int n = type_.n;
    if (i < 0 || i > n) throw std::invalid_argument("index out of range");
    const int mid_top = (type_.kind == Family::D1) ? n - 2 : n - 1;
    if (i >= 1 && i <= mid_top)
        return xbar(b, i) + pos_part(xi(b, i + 1) - xbar(b, i + 1));
    if (i == 0) {
        switch (type_.kind) {
            case Family::B1:
            case Family::D1:
            case Family::A2odd:
                return xi(b, 1) + pos_part(xi(b, 2) - xbar(b, 2));
            case Family::A2even:
                return l_ - coord_sum(b) + 2 * pos_part(xi(b, 1) - xbar(b, 1));
            case Family::D2:
                return l_ - x0(b) - coord_sum(b) + 2 * pos_part(xi(b, 1) - xbar(b, 1));
            case Family::C1:
                return l_ - coord_sum(b) / 2 + pos_part(xi(b, 1) - xbar(b, 1));
            default:
                break;
        }
    }
    if (type_.kind == Family::D1 && i == n - 1) return xbar(b, n - 1) + xi(b, n);
    switch (type_.kind) {
        case Family::B1:
        case Family::D2:
            return 2 * xbar(b, n) + x0(b);
        case Family::D1:
            return xbar(b, n - 1) + xbar(b, n);
        default:
            return xbar(b, n);
    }
}

std::vector<CoordCrystal::Elem> CoordCrystal::elements() const {
    const int cap = (type_.kind == Family::C1) ? 2 * l_ : l_;
    std::vector<Elem> out;
    Elem cur(tuple_size_, 0);
    // Lexicographic enumeration over the canonical layout.
    auto rec = [&](auto&& self, int slot, int used) -> void {
        if (slot == tuple_size_) {
            if (contains(cur)) out.push_back(cur);
            return;
        }
        const int hi = (has_x0_ && slot == type_.n) ? 1 : cap - used;
        for (int v = 0; v <= hi; ++v) {
            cur[slot] = v;
            const int spends = (has_x0_ && slot == type_.n) ? 0 : v;
            self(self, slot + 1, used + spends);
        }
        cur[slot] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

std::string CoordCrystal::encode(const Elem& b) const {
    std::ostringstream os;
    os << type_.name() << "l" << l_ << "(";
    for (int s = 0; s < tuple_size_; ++s) {
        if (s) os << ",";
        os << b[s];
    }
    os << ")";
    return os.str();
}

Weight CoordCrystal::sigma(const Weight& w) const { return sigma_apply(type_, w); }

CoordCrystal::Elem CoordCrystal::minimal(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != type_.n + 1)
        throw std::invalid_argument("weight has wrong dimension");
    const int n = type_.n;
    Elem b(tuple_size_, 0);
    // Index i with lambda == l*Lambda_i, or -1.  All closed-form ground
    // states live over level-one fundamental weights.
    int i = -1;
    for (int j = 0; j <= n; ++j) {
        if (lambda == multiple_of_fundamental(type_, j, l_)) {
            i = j;
            break;
        }
    }
    switch (type_.kind) {
        case Family::B1:
            if (i == 0) { b[slot_xbar(1)] = l_; return b; }
            if (i == 1) { b[slot_x(1)] = l_; return b; }
            if (i == n) {
                b[slot_x0()] = parity(l_);
                b[slot_x(n)] = b[slot_xbar(n)] = (l_ - parity(l_)) / 2;
                return b;
            }
            break;
        case Family::D1:
            if (i == 0) { b[slot_xbar(1)] = l_; return b; }
            if (i == 1) { b[slot_x(1)] = l_; return b; }
            if (i == n - 1) { b[slot_xbar(n)] = l_; return b; }
            if (i == n) { b[slot_x(n)] = l_; return b; }
            break;
        case Family::A2odd:
            if (i == 0) { b[slot_xbar(1)] = l_; return b; }
            if (i == 1) { b[slot_x(1)] = l_; return b; }
            break;
        case Family::A2even:
            if (i == 0) return b;
            break;
        case Family::D2:
            if (i == 0) return b;
            if (i == n) {
                b[slot_x0()] = parity(l_);
                b[slot_x(n)] = b[slot_xbar(n)] = (l_ - parity(l_)) / 2;
                return b;
            }
            break;
        case Family::C1:
            if (i == 0) return b;
            if (i == n) {
                b[slot_x(n)] = b[slot_xbar(n)] = l_;
                return b;
            }
            break;
        default:
            break;
    }
    // Other dominant weights exist by perfectness; locate by search.
    return FiniteCrystal::minimal(lambda);
}

}  // namespace crystals
