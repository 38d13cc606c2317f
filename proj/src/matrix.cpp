#include "lipscope/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

namespace lipscope {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
}

void check_finite(const std::vector<double>& entries) {
    for (double v : entries)
        if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows * cols, 0.0);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_shape(rows, cols);
    if (data_.size() != rows * cols)
        throw std::invalid_argument("entry count " + std::to_string(data_.size()) +
                                    " does not match shape " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    check_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::frobenius_norm() const {
    return norm2(data_);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

std::string shape_string(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("cannot multiply " + shape_string(a) + " by " +
                                    shape_string(b) + ": inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    check_finite(c.data());
    return c;
}

std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
    if (x.size() != a.cols())
        throw std::invalid_argument("cannot apply " + shape_string(a) + " to vector of length " +
                                    std::to_string(x.size()));
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("cannot add " + shape_string(a) + " and " + shape_string(b));
    Matrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    check_finite(c.data());
    return c;
}

Matrix mat_scale(const Matrix& a, double c) {
    Matrix r = a;
    for (double& v : r.data()) v *= c;
    check_finite(r.data());
    return r;
}

namespace {

// One multiply by A^T A expressed as two mat-vec passes, so the Gram matrix
// is never materialized.
void apply_gram(const Matrix& a, const std::vector<double>& v, std::vector<double>& av,
                std::vector<double>& out) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        av[i] = s;
    }
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double u = av[i];
        if (u == 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += a(i, j) * u;
    }
}

}  // namespace

double spectral_norm(const Matrix& m) {
    const std::size_t n = m.cols();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(m.rows(), 0.0), w(n, 0.0);

    // The all-ones start can (exactly) lie in the null space of m even when
    // m is nonzero; fall back to basis vectors deterministically so the
    // iteration always has a usable start.
    apply_gram(m, v, av, w);
    for (std::size_t k = 0; k < n && norm2(av) == 0.0; ++k) {
        std::fill(v.begin(), v.end(), 0.0);
        v[k] = 1.0;
        apply_gram(m, v, av, w);
    }
    if (norm2(av) == 0.0) return 0.0;  // zero matrix

    constexpr int kMaxIters = 100000;
    double estimate = norm2(av);  // ||m v|| with ||v|| = 1
    double last_change = std::numeric_limits<double>::infinity();
    int stable = 0;
    for (int iter = 0; iter < kMaxIters; ++iter) {
        const double wn = norm2(w);
        if (wn == 0.0) break;  // m v spans a singular direction exactly
        for (std::size_t j = 0; j < n; ++j) v[j] = w[j] / wn;
        apply_gram(m, v, av, w);
        const double next = norm2(av);
        last_change = std::fabs(next - estimate) / std::max(next, 1e-300);
        estimate = next;
        stable = last_change < 1e-13 ? stable + 1 : 0;
        if (stable >= 2) return estimate;
    }
    if (std::fabs(norm2(w)) == 0.0) return estimate;
    throw ConvergenceError("spectral norm power iteration did not converge within 100000 "
                           "iterations (last estimate " + std::to_string(estimate) + ")",
                           estimate, last_change);
}

namespace {

void check_symmetric(const Matrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + " requires a square matrix, got " +
                                    shape_string(m));
    const double scale = m.max_abs();
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            worst = std::max(worst, std::fabs(m(i, j) - m(j, i)));
    if (worst > 1e-12 * scale) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "%s requires a symmetric matrix (max asymmetry %.3e, scale %.3e)", who,
                      worst, scale);
        throw std::invalid_argument(buf);
    }
}

}  // namespace

std::vector<double> sym_eigs(const Matrix& m) {
    check_symmetric(m, "sym_eigs");
    const std::size_t n = m.rows();
    Matrix b = m;
    // Work on an exactly symmetric copy so rotations stay consistent.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b(j, i) = b(i, j);

    const double stop = 1e-12 * m.frobenius_norm();
    constexpr int kMaxSweeps = 100;
    double off_norm = 0.0;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * b(i, j) * b(i, j);
        off_norm = std::sqrt(off);
        if (off_norm <= stop) break;
        if (sweep == kMaxSweeps)
            throw ConvergenceError("sym_eigs: Jacobi sweeps did not reduce the off-diagonal "
                                   "mass below tolerance",
                                   b(0, 0), off_norm);

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = b(p, q);
                if (apq == 0.0) continue;
                const double theta = (b(q, q) - b(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double bkp = b(k, p), bkq = b(k, q);
                    b(k, p) = c * bkp - s * bkq;
                    b(k, q) = s * bkp + c * bkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double bpk = b(p, k), bqk = b(q, k);
                    b(p, k) = c * bpk - s * bqk;
                    b(q, k) = s * bpk + c * bqk;
                }
            }
        }
    }

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = b(i, i);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

Matrix solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("solve_linear requires a square system, got " +
                                    shape_string(a));
    if (b.rows() != a.rows())
        throw std::invalid_argument("right-hand side " + shape_string(b) +
                                    " does not match system " + shape_string(a));
    const std::size_t n = a.rows();
    const std::size_t nrhs = b.cols();
    Matrix u = a;
    Matrix x = b;
    const double tol =
        std::numeric_limits<double>::epsilon() * static_cast<double>(n) * a.max_abs();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::fabs(u(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double cand = std::fabs(u(r, col));
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best <= tol)
            throw NumericError("solve_linear: matrix is singular to working precision "
                               "(pivot column " + std::to_string(col) + ")");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(u(col, j), u(piv, j));
            for (std::size_t j = 0; j < nrhs; ++j) std::swap(x(col, j), x(piv, j));
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = u(r, col) / u(col, col);
            if (f == 0.0) continue;
            u(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) u(r, j) -= f * u(col, j);
            for (std::size_t j = 0; j < nrhs; ++j) x(r, j) -= f * x(col, j);
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        for (std::size_t j = 0; j < nrhs; ++j) {
            double s = x(col, j);
            for (std::size_t k = col + 1; k < n; ++k) s -= u(col, k) * x(k, j);
            x(col, j) = s / u(col, col);
        }
    }
    check_finite(x.data());
    return x;
}

Matrix lyapunov_solve(const Matrix& a, const Matrix& q) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("lyapunov_solve requires a square a, got " + shape_string(a));
    if (q.rows() != a.rows() || q.cols() != a.cols())
        throw std::invalid_argument("lyapunov_solve: q " + shape_string(q) +
                                    " does not match a " + shape_string(a));
    check_symmetric(q, "lyapunov_solve");

    // Row (i,j) of the vectorized system states (p a + a^T p)(i,j) = -q(i,j)
    // with unknowns p(i,j) laid out row-major.
    const std::size_t n = a.rows();
    Matrix k(n * n, n * n);
    Matrix rhs(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t l = 0; l < n; ++l) {
                k(row, i * n + l) += a(l, j);  // (p a)(i,j)   = sum_l p(i,l) a(l,j)
                k(row, l * n + j) += a(l, i);  // (a^T p)(i,j) = sum_l a(l,i) p(l,j)
            }
            rhs(row, 0) = -q(i, j);
        }
    }

    Matrix sol(n, n);
    try {
        const Matrix vec = solve_linear(k, rhs);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sol(i, j) = vec(i * n + j, 0);
    } catch (const NumericError&) {
        throw NumericError("lyapunov_solve: no unique solution (a has eigenvalue pairs "
                           "summing to zero, e.g. on the imaginary axis)");
    }

    // The algebraic solution of a well-posed system is symmetric up to
    // roundoff; symmetrize so downstream SPD checks see an exact one.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (sol(i, j) + sol(j, i));
            sol(i, j) = avg;
            sol(j, i) = avg;
        }

    const Matrix residual = mat_add(mat_add(mat_mul(sol, a), mat_mul(a.transposed(), sol)), q);
    if (residual.frobenius_norm() > 1e-8 * q.frobenius_norm())
        throw NumericError("lyapunov_solve: residual " +
                           std::to_string(residual.frobenius_norm()) +
                           " exceeds tolerance; system is too ill-conditioned");
    return sol;
}

bool is_spd(const Matrix& m) {
    check_symmetric(m, "is_spd");
    const std::size_t n = m.rows();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0) return false;
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return true;
}

bool is_hurwitz(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("is_hurwitz requires a square matrix, got " +
                                    shape_string(a));
    Matrix p(1, 1);
    try {
        p = lyapunov_solve(a, Matrix::identity(a.rows()));
    } catch (const NumericError&) {
        throw NumericError("is_hurwitz: indeterminate, the Lyapunov equation for a has no "
                           "unique solution");
    }
    return is_spd(p);
}

}  // namespace lipscope
