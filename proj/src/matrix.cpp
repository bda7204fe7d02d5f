#include "minv/matrix.hpp"

#include <algorithm>

namespace minv {

Matrix::Matrix(FieldCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, ctx_.zero()) {}

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
}

Matrix Matrix::unit(const FieldCtx& ctx, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(ctx, n, n);
    m.at(i, j) = ctx.one();
    return m;
}

FieldElem& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) fail(Err::IndexOutOfRange, "matrix entry access");
    return e_[i * cols_ + j];
}
const FieldElem& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) fail(Err::IndexOutOfRange, "matrix entry access");
    return e_[i * cols_ + j];
}

namespace {
void require_compatible(const Matrix& a, const Matrix& b, bool for_product) {
    if (!a.ctx().same(b.ctx())) fail(Err::FieldMismatch, "matrices over different fields");
    if (for_product ? a.cols() != b.rows() : (a.rows() != b.rows() || a.cols() != b.cols()))
        fail(Err::ShapeMismatch, "matrix shapes do not match");
}
} // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, false);
    Matrix r(a.ctx_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, false);
    Matrix r(a.ctx_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, true);
    Matrix r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElem& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const FieldElem& c, const Matrix& a) {
    if (!c.ctx().same(a.ctx())) fail(Err::FieldMismatch, "scalar from another field");
    Matrix r(a.ctx_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
}

Matrix Matrix::operator-() const { return ctx_.from_int(-1) * *this; }

bool operator==(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, false);
    return a.e_ == b.e_;
}

FieldElem Matrix::trace() const {
    if (!is_square()) fail(Err::ShapeMismatch, "trace of non-square matrix");
    FieldElem t = ctx_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
    return is_square() && *this == identity(ctx_, rows_);
}

bool Matrix::is_scalar() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != at(0, 0)) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string Matrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ' ';
            s += ctx_.to_string(at(i, j));
        }
        s += i + 1 == rows_ ? "]" : "\n";
    }
    return s;
}

CharCoeffs charpoly(const Matrix& A) {
    if (!A.is_square()) fail(Err::ShapeMismatch, "charpoly of non-square matrix");
    const FieldCtx& F = A.ctx();
    std::size_t n = A.rows();

    // Berkowitz: C accumulates the coefficients of det(tI - M_r) for the
    // leading r x r submatrices, highest degree first.
    std::vector<FieldElem> C{F.one()};
    for (std::size_t r = 1; r <= n; ++r) {
        std::size_t i = r - 1;
        // q = [1, -a, -(R S), -(R M S), ..., -(R M^{r-2} S)]
        std::vector<FieldElem> q;
        q.reserve(r + 1);
        q.push_back(F.one());
        q.push_back(-A.at(i, i));
        std::vector<FieldElem> v; // column A[0..i-1][i], iterated through M
        for (std::size_t k = 0; k < i; ++k) v.push_back(A.at(k, i));
        for (std::size_t j = 2; j <= r; ++j) {
            FieldElem dot = F.zero();
            for (std::size_t k = 0; k < i; ++k) dot += A.at(i, k) * v[k];
            q.push_back(-dot);
            if (j < r) {
                std::vector<FieldElem> w(i, F.zero());
                for (std::size_t a = 0; a < i; ++a)
                    for (std::size_t b = 0; b < i; ++b) w[a] += A.at(a, b) * v[b];
                v = std::move(w);
            }
        }
        // C <- T(q) * C where T is the (r+1) x r lower-triangular Toeplitz
        // matrix with first column q.
        std::vector<FieldElem> next(r + 1, F.zero());
        for (std::size_t row = 0; row <= r; ++row)
            for (std::size_t col = 0; col < r && col <= row; ++col)
                next[row] += q[row - col] * C[col];
        C = std::move(next);
    }

    // chi(t) = sum C[s] t^{n-s} with C[0] = 1; our convention c_s = (-1)^s C[s].
    CharCoeffs out;
    FieldElem sign = F.one();
    for (std::size_t s = 1; s <= n; ++s) {
        sign = -sign;
        out.c.push_back(sign * C[s]);
    }
    return out;
}

UniPoly charpoly_poly(const Matrix& A) {
    const FieldCtx& F = A.ctx();
    std::size_t n = A.rows();
    CharCoeffs cc = charpoly(A);
    std::vector<FieldElem> coeffs(n + 1, F.zero());
    coeffs[n] = F.one();
    FieldElem sign = F.one();
    for (std::size_t s = 1; s <= n; ++s) {
        sign = -sign;
        coeffs[n - s] = sign * cc.c[s - 1];
    }
    return UniPoly(F, std::move(coeffs));
}

FieldElem cs(const Matrix& A, std::size_t s) {
    if (!A.is_square()) fail(Err::ShapeMismatch, "cs of non-square matrix");
    if (s < 1 || s > A.rows()) fail(Err::IndexOutOfRange, "cs index s out of 1..n");
    return charpoly(A).c[s - 1];
}

namespace {

struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
};

Echelon reduce(Matrix M) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = M.rows();
        for (std::size_t i = r; i < M.rows(); ++i)
            if (!M.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == M.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(r, j));
        FieldElem inv = M.at(r, c).inverse();
        for (std::size_t j = c; j < M.cols(); ++j) M.at(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M.at(i, c).is_zero()) continue;
            FieldElem f = M.at(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M.at(i, j) -= f * M.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(M), std::move(pivots)};
}

} // namespace

std::vector<std::vector<FieldElem>> nullspace(const Matrix& M) {
    const FieldCtx& F = M.ctx();
    Echelon e = reduce(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElem> v(M.cols(), F.zero());
        v[f] = F.one();
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            v[e.pivot_cols[k]] = -e.rref.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& M) { return reduce(M).pivot_cols.size(); }

std::optional<std::vector<FieldElem>> solve(const Matrix& A, const std::vector<FieldElem>& b) {
    if (b.size() != A.rows()) fail(Err::ShapeMismatch, "rhs length != row count");
    const FieldCtx& F = A.ctx();
    Matrix aug(F, A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Echelon e = reduce(std::move(aug));
    for (std::size_t c : e.pivot_cols)
        if (c == A.cols()) return std::nullopt; // pivot in the rhs column: inconsistent
    std::vector<FieldElem> x(A.cols(), F.zero());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        x[e.pivot_cols[k]] = e.rref.at(k, A.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (!A.is_square()) fail(Err::ShapeMismatch, "inverse of non-square matrix");
    const FieldCtx& F = A.ctx();
    std::size_t n = A.rows();
    Matrix aug(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = F.one();
    }
    Echelon e = reduce(std::move(aug));
    if (e.pivot_cols.size() != n || e.pivot_cols.back() != n - 1) return std::nullopt;
    Matrix inv(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
    return inv;
}

bool is_invertible(const Matrix& A) {
    return A.is_square() && rank(A) == A.rows();
}

std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& xs, const std::vector<Matrix>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        fail(Err::ShapeMismatch, "intertwiner_space needs tuples of equal positive length");
    const FieldCtx& F = xs[0].ctx();
    std::size_t n = xs[0].rows();
    for (const Matrix& m : xs)
        if (!m.is_square() || m.rows() != n || !m.ctx().same(F))
            fail(Err::ShapeMismatch, "intertwiner_space tuple shape");
    for (const Matrix& m : ys)
        if (!m.is_square() || m.rows() != n || !m.ctx().same(F))
            fail(Err::ShapeMismatch, "intertwiner_space tuple shape");

    // Equations g x_i - y_i g = 0 in the n^2 unknowns g_{rc} (row-major).
    std::size_t m = xs.size();
    Matrix sys(F, m * n * n, n * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t row = (i * n + a) * n + b;
                for (std::size_t s = 0; s < n; ++s) {
                    // g_{a s} x_i[s][b]
                    sys.at(row, a * n + s) += xs[i].at(s, b);
                    // - y_i[a][s] g_{s b}
                    sys.at(row, s * n + b) -= ys[i].at(a, s);
                }
            }

    std::vector<Matrix> basis;
    for (const auto& v : nullspace(sys)) {
        Matrix g(F, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) g.at(r, c) = v[r * n + c];
        basis.push_back(std::move(g));
    }
    return basis;
}

} // namespace minv
