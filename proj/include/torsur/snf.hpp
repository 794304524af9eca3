#pragma once

#include <torsur/matrix.hpp>

namespace torsur {

// U*A*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1},
// zero entries last. v_inv is kept alongside because lattice saturation
// needs the rows of V^{-1}.
struct SnfResult {
    IntMatrix u;      // rows x rows
    IntMatrix d;      // rows x cols, diagonal
    IntMatrix v;      // cols x cols
    IntMatrix v_inv;  // cols x cols
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SnfResult smith_normal_form(const IntMatrix& a);

}  // namespace torsur
