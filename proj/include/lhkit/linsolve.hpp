#ifndef LHKIT_LINSOLVE_HPP
#define LHKIT_LINSOLVE_HPP

#include <vector>

#include "lhkit/rational.hpp"

namespace lhkit {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct LinearSolution {
    bool consistent = false;
    Vector particular;              // one solution of A x = b, when consistent
    std::vector<Vector> nullspace;  // basis of the homogeneous solutions
    int rank = 0;
};

/// Solves the rectangular system A x = b exactly. Rows are scaled to integers
/// and eliminated fraction-free (Bareiss) to keep intermediate entries from
/// exploding. Returns one particular solution together with a nullspace
/// basis, or consistent = false for an incompatible system.
LinearSolution solve_exact(const Matrix& A, const Vector& b);

}  // namespace lhkit

#endif
