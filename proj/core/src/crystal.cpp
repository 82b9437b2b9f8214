#include "crystals/crystal.hpp"

#include <algorithm>

#include "crystals/coordinate.hpp"
#include "crystals/tableau.hpp"

namespace crystals {

Weight FiniteCrystal::weight(const Elem& b) const {
    Weight w(index_count(), 0);
    for (int i = 0; i < index_count(); ++i) w[i] = phi(i, b) - eps(i, b);
    return w;
}

Weight FiniteCrystal::phi_weight(const Elem& b) const {
    Weight w(index_count(), 0);
    for (int i = 0; i < index_count(); ++i) w[i] = phi(i, b);
    return w;
}

Weight FiniteCrystal::eps_weight(const Elem& b) const {
    Weight w(index_count(), 0);
    for (int i = 0; i < index_count(); ++i) w[i] = eps(i, b);
    return w;
}

FiniteCrystal::Elem FiniteCrystal::f_max(int i, Elem b) const {
    while (auto next = f(i, b)) b = *next;
    return b;
}

FiniteCrystal::Elem FiniteCrystal::f_string(int i, Elem b, int m) const {
    for (int t = 0; t < m; ++t) {
        auto next = f(i, b);
        if (!next) throw std::runtime_error("f_string hit crystal zero");
        b = *next;
    }
    return b;
}

void FiniteCrystal::check_member(const Elem& b) const {
    if (!contains(b))
        throw std::invalid_argument("element not a member of crystal " + type().name());
}

FiniteCrystal::Elem FiniteCrystal::minimal(const Weight& lambda) const {
    // Fallback: perfectness makes b(lambda) the unique element with
    // phi(b) = lambda.  Concrete crystals override with closed forms for the
    // weights they know directly.
    if (crystals::level(type(), lambda) != level())
        throw std::invalid_argument("minimal: weight level does not match crystal level");
    std::optional<Elem> found;
    for (const auto& b : elements()) {
        if (phi_weight(b) == lambda) {
            if (found) throw std::runtime_error("minimal: phi fiber not a singleton");
            found = b;
        }
    }
    if (!found)
        throw std::invalid_argument("minimal: unsupported weight " + weight_to_string(lambda));
    return *found;
}

std::unique_ptr<FiniteCrystal> make_crystal(const AffineType& t, int l, int k) {
    if (t.kind == Family::A1) return std::make_unique<TableauCrystal>(t.n, k, l);
    return std::make_unique<CoordCrystal>(t, l);
}

PerfectReport check_perfectness(const FiniteCrystal& B) {
    const long l = B.level();
    auto targets = dominant_weights_of_level(B.type(), static_cast<int>(l));
    std::vector<Weight> eps_hits, phi_hits;
    for (const auto& b : B.elements()) {
        Weight e = B.eps_weight(b);
        if (level(B.type(), e) < l)
            return {false, "level(eps(" + B.encode(b) + ")) < " + std::to_string(l)};
        if (level(B.type(), e) == l) {
            eps_hits.push_back(e);
            phi_hits.push_back(B.phi_weight(b));
        }
    }
    std::sort(eps_hits.begin(), eps_hits.end());
    std::sort(phi_hits.begin(), phi_hits.end());
    if (eps_hits != targets)
        return {false, "eps is not a bijection from the minimal elements onto the level-" +
                           std::to_string(l) + " dominant weights"};
    if (phi_hits != targets)
        return {false, "phi is not a bijection from the minimal elements onto the level-" +
                           std::to_string(l) + " dominant weights"};
    return {true, std::to_string(eps_hits.size()) + " minimal elements matched both ways"};
}

}  // namespace crystals
