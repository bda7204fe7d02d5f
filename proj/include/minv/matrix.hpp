#ifndef MINV_MATRIX_HPP
#define MINV_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minv/field.hpp"

namespace minv {

/// Dense exact matrix over one FieldCtx.  Rectangular in general; the
/// spectral operations require square input.
class Matrix {
public:
    Matrix(FieldCtx ctx, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldCtx& ctx, std::size_t n);
    /// Elementary matrix unit e_{ij} (0-based indices).
    static Matrix unit(const FieldCtx& ctx, std::size_t n, std::size_t i, std::size_t j);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElem& at(std::size_t i, std::size_t j);
    const FieldElem& at(std::size_t i, std::size_t j) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElem& c, const Matrix& a);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    FieldElem trace() const;
    bool is_zero() const;
    bool is_identity() const;
    /// Nonzero scalar multiple of the identity, or zero matrix.
    bool is_scalar() const;

    std::string to_string() const;

private:
    FieldCtx ctx_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> e_; // row-major
};

/// Characteristic coefficients under the convention
///   chi_A(t) = t^n - c_1 t^{n-1} + c_2 t^{n-2} - ... + (-1)^n c_n,
/// so c_1 = trace, c_n = det, and c_s is the s-th elementary symmetric
/// function of the eigenvalues.  c[0] holds c_1.
struct CharCoeffs {
    std::vector<FieldElem> c;
};

/// Division-free characteristic polynomial (Berkowitz), valid over any
/// field including small positive characteristic.
CharCoeffs charpoly(const Matrix& A);

/// chi_A as a monic UniPoly in t.
UniPoly charpoly_poly(const Matrix& A);

/// c_s(A), 1 <= s <= n.
FieldElem cs(const Matrix& A, std::size_t s);

/// Canonical basis of {v : Mv = 0}: computed from the reduced row echelon
/// form, one basis vector per free column, entry 1 at its free column.
std::vector<std::vector<FieldElem>> nullspace(const Matrix& M);

std::size_t rank(const Matrix& M);

/// A solution of Ax = b with free variables set to zero, if consistent.
std::optional<std::vector<FieldElem>> solve(const Matrix& A, const std::vector<FieldElem>& b);

std::optional<Matrix> inverse(const Matrix& A);

bool is_invertible(const Matrix& A);

/// Canonical basis of {g : g*x_i = y_i*g for all i}, the linear
/// reformulation of simultaneous conjugacy.
std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& xs, const std::vector<Matrix>& ys);

} // namespace minv

#endif
