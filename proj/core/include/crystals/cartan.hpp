#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crystals {

// The classical affine families handled by this library.
enum class Family { A1, B1, C1, D1, A2odd, A2even, D2 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Affine type with rank n; the index set of simple roots is I = {0,...,n}.
struct AffineType {
    Family kind;
    int n;

    AffineType(Family kind, int n);

    int index_count() const { return n + 1; }
    std::string name() const;
};

// Element of P_cl as coefficient vector (m_0,...,m_n) over the fundamental
// weights.
using Weight = std::vector<int>;

Weight add(const Weight& a, const Weight& b);
bool is_dominant(const Weight& w);

// Levels of the fundamental weights, read off the Dynkin diagram labels.
std::vector<int> fundamental_levels(const AffineType& t);

long level(const AffineType& t, const Weight& w);

// The automorphism sigma of (P_cl^+)_l.  For type A it is the rotation by k
// determined by the perfect crystal B^{k,l}; for the other families k is
// ignored.
Weight sigma_apply(const AffineType& t, const Weight& w, int k = 1);

// All dominant weights of the given level, in lexicographic order of the
// coefficient vectors.
std::vector<Weight> dominant_weights_of_level(const AffineType& t, int l);

// lΛ_i as a coefficient vector.
Weight multiple_of_fundamental(const AffineType& t, int i, int l);

std::string weight_to_string(const Weight& w);

}  // namespace crystals
