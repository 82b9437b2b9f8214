#pragma once

#include "crystals/crystal.hpp"

namespace crystals {

// The A_n^(1) perfect crystal B^{k,l} realized as k x l rectangular tables
// with rows weakly increasing and columns strictly increasing, entries in
// {1,...,n+1}.  Elements are stored column-major: b[c*k + r] = m_{r+1,c+1}.
// Classical operators act through the column injection and the signature
// rule; the affine operators come from rectangle promotion:
// f_0 = pr^{-1} o f_1 o pr.
class TableauCrystal : public FiniteCrystal {
  public:
    TableauCrystal(int n, int k, int l);

    const AffineType& type() const override { return type_; }
    int level() const override { return l_; }
    int height() const { return k_; }
    int width() const { return l_; }

    bool contains(const Elem& b) const override;
    std::optional<Elem> f(int i, const Elem& b) const override;
    std::optional<Elem> e(int i, const Elem& b) const override;
    int eps(int i, const Elem& b) const override;
    int phi(int i, const Elem& b) const override;

    std::vector<Elem> elements() const override;
    std::string encode(const Elem& b) const override;
    Weight sigma(const Weight& w) const override;
    Elem minimal(const Weight& lambda) const override;

    Elem promotion(const Elem& b) const;
    Elem promotion_inverse(const Elem& b) const;

    // The ground-state element bbar_j of the lLambda_0 path (j >= 1).
    Elem ground_state_tableau(int j) const;

    int entry(const Elem& b, int row, int col) const { return b[col * k_ + row]; }

  private:
    AffineType type_;
    int k_;
    int l_;

    std::optional<Elem> classical_apply(char op, int j, const Elem& b) const;
    Elem slide_holes(Elem grid, bool toward_nw) const;
};

}  // namespace crystals
