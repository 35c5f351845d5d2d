#pragma once

#include "lsdeg/superalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lsdeg {

// Basis of homogeneous p-cochains: a sorted argument tuple (no repeated even entry) and an output index.
struct CochainSpace {
    SuperDim dim;
    int degree = 0;
    int parity = 0;
    std::vector<std::pair<std::vector<int>, int>> slots;
    size_t size() const { return slots.size(); }
    int index_of(const std::vector<int>& args, int out) const;
};

CochainSpace cochain_space(SuperDim d, int degree, int parity);

// Super-alternating cochain stored on canonical argument tuples.
struct Cochain {
    SuperDim dim;
    int degree = 0;
    int parity = 0;
    std::vector<GaussianRational> coeffs;  // indexed like cochain_space(dim, degree, parity).slots

    static Cochain zero(SuperDim d, int degree, int parity);
    // Value on arbitrary basis arguments, in full coordinates.
    std::vector<GaussianRational> evaluate(const std::vector<int>& args) const;
    bool is_zero() const;
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

using Cochain1 = Cochain;
using Cochain2 = Cochain;

// phi(o, x) is the coefficient of b_o in phi(b_x).
Cochain1 cochain1_from_matrix(SuperDim d, const Matrix<GaussianRational>& phi, int parity);

// Matrix of d on parity-p cochains of the given degree (columns: degree, rows: degree + 1).
Matrix<GaussianRational> differential_matrix(const Algebra& a, int degree, int parity);
Cochain differential(const Algebra& a, const Cochain& c);
Cochain d1(const Algebra& a, const Cochain1& phi);
Cochain d2(const Algebra& a, const Cochain2& c);

struct H2Result {
    int dim_even = 0;
    int dim_odd = 0;
    std::vector<Cochain2> basis_even;
    std::vector<Cochain2> basis_odd;
    // rank certificate per parity: dim C^2, rank d1, rank d2
    int cochains[2] = {0, 0};
    int rank_d1[2] = {0, 0};
    int rank_d2[2] = {0, 0};
};

H2Result h2_dims(const Algebra& a);
bool rigid_sufficient(const Algebra& a);
bool is_cocycle(const Algebra& a, const Cochain2& c);
bool is_coboundary(const Algebra& a, const Cochain2& c);

// Mixed monomials e^i^f^j (x) v stand for c(f_j, e_i) = v; pure ones are read left to right.
std::string wedge_str(const Cochain2& c);
Cochain2 parse_wedge(const std::string& text, SuperDim d);

}  // namespace lsdeg
