#include "lhkit/linsolve.hpp"

#include <stdexcept>

namespace lhkit {

namespace {

// Row-scales the augmented system to integers so the elimination can run
// fraction-free.
std::vector<std::vector<mpz_class>> to_integer_rows(const Matrix& A, const Vector& b) {
    const size_t m = A.size();
    const size_t n = m == 0 ? 0 : A[0].size();
    std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("solve_exact: ragged matrix");
        mpz_class l = 1;
        for (const auto& a : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].den().get_mpz_t());
        for (size_t j = 0; j < n; ++j)
            M[i][j] = A[i][j].num() * (l / A[i][j].den());
        M[i][n] = b[i].num() * (l / b[i].den());
    }
    return M;
}

}  // namespace

LinearSolution solve_exact(const Matrix& A, const Vector& b) {
    if (A.size() != b.size())
        throw std::invalid_argument("solve_exact: row count mismatch between A and b");
    const int m = static_cast<int>(A.size());
    const int n = m == 0 ? 0 : static_cast<int>(A[0].size());

    auto M = to_integer_rows(A, b);

    // Fraction-free (Bareiss) forward elimination with column skipping for
    // rank-deficient systems.
    std::vector<int> pivot_col;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int r = row;
        while (r < m && M[r][col] == 0) ++r;
        if (r == m) continue;
        std::swap(M[row], M[r]);
        for (int i = row + 1; i < m; ++i) {
            for (int j = col + 1; j <= n; ++j) {
                mpz_class t = M[row][col] * M[i][j] - M[i][col] * M[row][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][col] = 0;
        }
        prev = M[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    const int rank = row;

    LinearSolution sol;
    sol.rank = rank;
    for (int i = rank; i < m; ++i)
        if (M[i][n] != 0) return sol;  // inconsistent
    sol.consistent = true;

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // Back-substitution in rational arithmetic on the echelon form. free_vals
    // assigns the free variables; aug toggles the right-hand side on or off.
    auto back_solve = [&](const std::vector<Rational>& free_vals, bool aug) {
        Vector x(n, Rational(0));
        for (size_t f = 0; f < free_cols.size(); ++f) x[free_cols[f]] = free_vals[f];
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = pivot_col[r];
            mpq_class acc = aug ? mpq_class(M[r][n]) : mpq_class(0);
            for (int j = pc + 1; j < n; ++j)
                if (M[r][j] != 0) acc -= mpq_class(M[r][j]) * x[j].raw();
            acc /= mpq_class(M[r][pc]);
            acc.canonicalize();
            x[pc] = Rational(acc);
        }
        return x;
    };

    sol.particular = back_solve(std::vector<Rational>(free_cols.size(), Rational(0)), true);
    for (size_t f = 0; f < free_cols.size(); ++f) {
        std::vector<Rational> e(free_cols.size(), Rational(0));
        e[f] = Rational(1);
        sol.nullspace.push_back(back_solve(e, false));
    }
    return sol;
}

}  // namespace lhkit
