#pragma once

#include "crystals/crystal.hpp"

namespace crystals {

// The coordinate-tuple perfect crystals of the six non-A families.  An
// element is stored as (x_1,...,x_n[,x_0],xbar_n,...,xbar_1); the x_0 slot is
// present only for the families with a spin coordinate (B1 and D2).
class CoordCrystal : public FiniteCrystal {
  public:
    CoordCrystal(AffineType t, int l);

    const AffineType& type() const override { return type_; }
    int level() const override { return l_; }
    bool has_x0() const { return has_x0_; }
    int tuple_size() const { return tuple_size_; }

    bool contains(const Elem& b) const override;
    std::optional<Elem> f(int i, const Elem& b) const override;
    std::optional<Elem> e(int i, const Elem& b) const override;
    int eps(int i, const Elem& b) const override;
    int phi(int i, const Elem& b) const override;

    std::vector<Elem> elements() const override;
    std::string encode(const Elem& b) const override;
    Weight sigma(const Weight& w) const override;
    Elem minimal(const Weight& lambda) const override;

    // Slot accessors into the canonical layout.
    int xi(const Elem& b, int i) const { return b[i - 1]; }               // x_i, 1<=i<=n
    int xbar(const Elem& b, int i) const { return b[tuple_size_ - i]; }   // xbar_i
    int x0(const Elem& b) const;                                          // spin slot
    int slot_x(int i) const { return i - 1; }
    int slot_xbar(int i) const { return tuple_size_ - i; }
    int slot_x0() const;

  private:
    AffineType type_;
    int l_;
    bool has_x0_;
    int tuple_size_;

    int coord_sum(const Elem& b) const;  // sum x_i + xbar_i (without x_0)
    std::optional<Elem> checked(Elem b) const;
};

}  // namespace crystals
