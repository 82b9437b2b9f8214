#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crystals/cartan.hpp"

namespace crystals {

// A finite classical crystal with Kashiwara operators f_i, e_i and statistics
// eps_i, phi_i, wt.  Elements are integer tuples whose meaning is fixed by the
// concrete crystal (coordinate tuples, tableau entries).  An undefined result
// of f or e (crystal zero) is an empty optional, never a sentinel element.
class FiniteCrystal {
  public:
    using Elem = std::vector<int>;

    virtual ~FiniteCrystal() = default;

    virtual const AffineType& type() const = 0;
    virtual int level() const = 0;
    int index_count() const { return type().index_count(); }

    virtual bool contains(const Elem& b) const = 0;
    virtual std::optional<Elem> f(int i, const Elem& b) const = 0;
    virtual std::optional<Elem> e(int i, const Elem& b) const = 0;
    virtual int eps(int i, const Elem& b) const = 0;
    virtual int phi(int i, const Elem& b) const = 0;

    // All elements, in canonical order.
    virtual std::vector<Elem> elements() const = 0;

    virtual std::string encode(const Elem& b) const = 0;

    // sigma on (P_cl^+)_l as induced by this crystal (for type A it is the
    // rotation by the crystal's column height).
    virtual Weight sigma(const Weight& w) const = 0;

    // The minimal element b(lambda) with phi(b(lambda)) = lambda.
    virtual Elem minimal(const Weight& lambda) const;

    Weight weight(const Elem& b) const;      // sum (phi_i - eps_i) Lambda_i
    Weight phi_weight(const Elem& b) const;  // sum phi_i Lambda_i
    Weight eps_weight(const Elem& b) const;  // sum eps_i Lambda_i

    Elem f_max(int i, Elem b) const;
    Elem f_string(int i, Elem b, int m) const;  // f_i^m, throws if it hits zero

    void check_member(const Elem& b) const;
};

// Construct the builtin perfect crystal of a family.  For type A the crystal
// is B^{k,l} (k = column height); the other families ignore k.
std::unique_ptr<FiniteCrystal> make_crystal(const AffineType& t, int l, int k = 1);

struct PerfectReport {
    bool ok = false;
    std::string detail;
};

// Level-l perfectness surrogate: level(eps(b)) >= l on all of B, and eps, phi
// restrict to bijections {b : level(eps(b)) = l} -> (P_cl^+)_l.
PerfectReport check_perfectness(const FiniteCrystal& B);

}  // namespace crystals
