#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crystals/crystal.hpp"

namespace crystals {

// One sign of an i-signature, tagged with the tensor position it came from
// (position 1 = rightmost factor; the u_{lambda} block, when present, sits at
// position count+1).
struct SignEntry {
    bool plus;
    int origin;

    friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

using Signature = std::vector<SignEntry>;

// eps_i(b) minuses followed by phi_i(b) pluses, all at the given position.
Signature component_signature(int eps, int phi, int origin);
Signature component_signature(const FiniteCrystal& B, int i, const FiniteCrystal::Elem& b,
                              int origin);

// Delete adjacent (+,-) pairs until the shape is (-^{n_-}, +^{n_+}); origins
// are retained.  Idempotent.
Signature reduce_signature(Signature s);

std::string signature_to_string(const Signature& s);

// i-signature of b_m (x) ... (x) b_1 (factors[0] is b_m, the leftmost), with
// an optional block of leading_pluses pluses prepended at position m+1.
Signature tensor_signature(const FiniteCrystal& B, int i,
                           std::span<const FiniteCrystal::Elem> factors, int leading_pluses = 0);

// (n_-, n_+) of the reduced tensor signature; these are eps_i and phi_i of the
// tensor element.
std::pair<int, int> tensor_eps_phi(const FiniteCrystal& B, int i,
                                   std::span<const FiniteCrystal::Elem> factors);

// Position (1 = rightmost) acted on by f_i resp. e_i, or nullopt for crystal
// zero.  With leading_pluses > 0, f may select position m+1 (the u block).
std::optional<int> f_position(const FiniteCrystal& B, int i,
                              std::span<const FiniteCrystal::Elem> factors,
                              int leading_pluses = 0);
std::optional<int> e_position(const FiniteCrystal& B, int i,
                              std::span<const FiniteCrystal::Elem> factors,
                              int leading_pluses = 0);

// Apply f_i or e_i to a tensor element of B^{(x)m}; nullopt is crystal zero.
std::optional<std::vector<FiniteCrystal::Elem>> tensor_apply(
    const FiniteCrystal& B, char op, int i, std::vector<FiniteCrystal::Elem> factors);

}  // namespace crystals
