#include "crystals/signature.hpp"

#include <sstream>

namespace crystals {

Signature component_signature(int eps, int phi, int origin) {
    Signature s;
    s.reserve(eps + phi);
    for (int a = 0; a < eps; ++a) s.push_back({false, origin});
    for (int a = 0; a < phi; ++a) s.push_back({true, origin});
    return s;
}

Signature component_signature(const FiniteCrystal& B, int i, const FiniteCrystal::Elem& b,
                              int origin) {
    return component_signature(B.eps(i, b), B.phi(i, b), origin);
}

Signature reduce_signature(Signature s) {
    // Stack cancellation is equivalent to repeatedly deleting the leftmost
    // adjacent (+,-) pair.
    Signature out;
    out.reserve(s.size());
    for (const auto& entry : s) {
        if (!entry.plus && !out.empty() && out.back().plus)
            out.pop_back();
        else
            out.push_back(entry);
    }
    return out;
}

std::string signature_to_string(const Signature& s) {
    std::ostringstream os;
    for (size_t a = 0; a < s.size(); ++a) {
        if (a) os << ",";
        os << (s[a].plus ? "+" : "-") << "@" << s[a].origin;
    }
    return os.str();
}

Signature tensor_signature(const FiniteCrystal& B, int i,
                           std::span<const FiniteCrystal::Elem> factors, int leading_pluses) {
    const int m = static_cast<int>(factors.size());
    Signature s = component_signature(0, leading_pluses, m + 1);
    for (int idx = 0; idx < m; ++idx) {
        auto part = component_signature(B, i, factors[idx], m - idx);
        s.insert(s.end(), part.begin(), part.end());
    }
    return s;
}

std::pair<int, int> tensor_eps_phi(const FiniteCrystal& B, int i,
                                   std::span<const FiniteCrystal::Elem> factors) {
    auto r = reduce_signature(tensor_signature(B, i, factors));
    int minus = 0;
    while (minus < static_cast<int>(r.size()) && !r[minus].plus) ++minus;
    return {minus, static_cast<int>(r.size()) - minus};
}

std::optional<int> f_position(const FiniteCrystal& B, int i,
                              std::span<const FiniteCrystal::Elem> factors, int leading_pluses) {
    auto r = reduce_signature(tensor_signature(B, i, factors, leading_pluses));
    for (const auto& entry : r)
        if (entry.plus) return entry.origin;  // leftmost +
    return std::nullopt;
}

std::optional<int> e_position(const FiniteCrystal& B, int i,
                              std::span<const FiniteCrystal::Elem> factors, int leading_pluses) {
    auto r = reduce_signature(tensor_signature(B, i, factors, leading_pluses));
    std::optional<int> pos;
    for (const auto& entry : r)
        if (!entry.plus) pos = entry.origin;  // rightmost -
    return pos;
}

std::optional<std::vector<FiniteCrystal::Elem>> tensor_apply(
    const FiniteCrystal& B, char op, int i, std::vector<FiniteCrystal::Elem> factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_apply: empty factor list");
    const int m = static_cast<int>(factors.size());
    std::optional<int> pos = (op == 'f') ? f_position(B, i, factors)
                                         : e_position(B, i, factors);
    if (!pos) return std::nullopt;
    auto& slot = factors[m - *pos];
    auto next = (op == 'f') ? B.f(i, slot) : B.e(i, slot);
    if (!next) throw std::logic_error("signature rule selected an undefined action");
    slot = *next;
    return factors;
}

}  // namespace crystals
