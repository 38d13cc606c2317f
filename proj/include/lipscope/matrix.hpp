#pragma once

#include <cstddef>
#include <vector>

#include "lipscope/error.hpp"

namespace lipscope {

// Dense row-major matrix of doubles.  Dimensions are fixed at construction
// and always at least 1x1; every constructor rejects non-finite entries.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transposed() const;
    double frobenius_norm() const;
    double max_abs() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

std::string shape_string(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, double c);

// Largest singular value via power iteration on A^T A (applied as A then
// A^T; the Gram matrix is never formed).  Deterministic: starts from the
// normalized all-ones vector and stops once the Rayleigh estimate changes by
// less than 1e-13 (relatively) on two consecutive iterations.  Throws
// ConvergenceError after 100000 iterations without convergence.
double spectral_norm(const Matrix& m);

// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
// rotations.  Sweeps run until the off-diagonal Frobenius mass falls below
// 1e-12 * ||m||_F.  Throws std::invalid_argument if m is not symmetric
// within 1e-12 relative tolerance.
std::vector<double> sym_eigs(const Matrix& m);

// Solves a x = b (b may have several columns) by Gaussian elimination with
// partial pivoting.  Throws NumericError naming the pivot column if a is
// singular to working precision.
Matrix solve_linear(const Matrix& a, const Matrix& b);

// Solves p a + a^T p = -q for symmetric p by vectorizing to an n^2 x n^2
// linear system (Kronecker form) and calling solve_linear.  The result is
// explicitly symmetrized; its residual is checked against 1e-8 * ||q||_F.
Matrix lyapunov_solve(const Matrix& a, const Matrix& q);

// Symmetric positive definiteness, decided by attempting a Cholesky
// factorization and requiring every pivot to be strictly positive.
bool is_spd(const Matrix& m);

// True iff every eigenvalue of a has a negative real part, decided through
// the Lyapunov criterion: a is Hurwitz iff p a + a^T p = -I has a symmetric
// positive definite solution.  Propagates a NumericError when the Lyapunov
// equation has no unique solution (eigenvalues symmetric about the
// imaginary axis), since the test is indeterminate there.
bool is_hurwitz(const Matrix& a);

}  // namespace lipscope
