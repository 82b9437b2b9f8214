#include "crystals/cartan.hpp"

#include <algorithm>
#include <sstream>

namespace crystals {

std::string family_name(Family f) {
    switch (f) {
        case Family::A1: return "A1";
        case Family::B1: return "B1";
        case Family::C1: return "C1";
        case Family::D1: return "D1";
        case Family::A2odd: return "A2odd";
        case Family::A2even: return "A2even";
        case Family::D2: return "D2";
    }
    throw std::logic_error("bad family");
}

Family family_from_name(const std::string& name) {
    if (name == "A1") return Family::A1;
    if (name == "B1") return Family::B1;
    if (name == "C1") return Family::C1;
    if (name == "D1") return Family::D1;
    if (name == "A2odd") return Family::A2odd;
    if (name == "A2even") return Family::A2even;
    if (name == "D2") return Family::D2;
    throw std::invalid_argument("unknown family: " + name);
}

namespace {

int min_rank(Family f) {
    switch (f) {
        case Family::A1: return 1;
        case Family::B1: return 3;
        case Family::C1: return 2;
        case Family::D1: return 4;
        case Family::A2odd: return 3;
        case Family::A2even: return 2;
        case Family::D2: return 2;
    }
    return 1;
}

}  // namespace

AffineType::AffineType(Family kind, int n) : kind(kind), n(n) {
    if (n < min_rank(kind))
        throw std::invalid_argument("rank " + std::to_string(n) +
                                    " below minimum for family " + family_name(kind));
}

std::string AffineType::name() const {
    return family_name(kind) + "(" + std::to_string(n) + ")";
}

Weight add(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight dimension mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int m) { return m >= 0; });
}

std::vector<int> fundamental_levels(const AffineType& t) {
    const int n = t.n;
    std::vector<int> lv(n + 1, 2);
    switch (t.kind) {
        case Family::A1:
        case Family::C1:
            std::fill(lv.begin(), lv.end(), 1);
            break;
        case Family::B1:
            lv[0] = lv[1] = lv[n] = 1;
            break;
        case Family::D1:
            lv[0] = lv[1] = lv[n - 1] = lv[n] = 1;
            break;
        case Family::A2odd:
            lv[0] = lv[1] = 1;
            break;
        case Family::A2even:
            lv[0] = 1;
            break;
        case Family::D2:
            lv[0] = lv[n] = 1;
            break;
    }
    return lv;
}

long level(const AffineType& t, const Weight& w) {
    if (static_cast<int>(w.size()) != t.n + 1)
        throw std::invalid_argument("weight has wrong dimension for " + t.name());
    auto lv = fundamental_levels(t);
    long s = 0;
    for (int i = 0; i <= t.n; ++i) s += static_cast<long>(w[i]) * lv[i];
    return s;
}

Weight sigma_apply(const AffineType& t, const Weight& w, int k) {
    if (static_cast<int>(w.size()) != t.n + 1)
        throw std::invalid_argument("weight has wrong dimension for " + t.name());
    const int n = t.n;
    Weight r = w;
    switch (t.kind) {
        case Family::A1: {
            // rotation: (m_0,...,m_n) -> (m_k,...,m_n,m_0,...,m_{k-1})
            for (int i = 0; i <= n; ++i) r[i] = w[(i + k) % (n + 1)];
            break;
        }
        case Family::B1:
        case Family::A2odd:
            std::swap(r[0], r[1]);
            break;
        case Family::D1:
            std::swap(r[0], r[1]);
            std::swap(r[n - 1], r[n]);
            break;
        case Family::A2even:
        case Family::D2:
        case Family::C1:
            break;  // identity
    }
    return r;
}

namespace {

void enumerate_rec(const std::vector<int>& lv, size_t i, int remaining, Weight& cur,
                   std::vector<Weight>& out) {
    if (i == lv.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int m = 0; m * lv[i] <= remaining; ++m) {
        cur[i] = m;
        enumerate_rec(lv, i + 1, remaining - m * lv[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Weight> dominant_weights_of_level(const AffineType& t, int l) {
    if (l < 0) throw std::invalid_argument("negative level");
    auto lv = fundamental_levels(t);
    std::vector<Weight> out;
    Weight cur(lv.size(), 0);
    enumerate_rec(lv, 0, l, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Weight multiple_of_fundamental(const AffineType& t, int i, int l) {
    if (i < 0 || i > t.n) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(t.n + 1, 0);
    w[i] = l;
    return w;
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

}  // namespace crystals
