#include "minv/tuple.hpp"

namespace minv {

MatTuple::MatTuple(std::vector<Matrix> mats) : n_(0), mats_(std::move(mats)) {
    if (mats_.empty()) fail(Err::EmptyInput, "tuple needs at least one matrix");
    n_ = mats_[0].rows();
    for (const Matrix& m : mats_) {
        if (!m.is_square() || m.rows() != n_) fail(Err::ShapeMismatch, "tuple matrices must be square of one size");
        if (!m.ctx().same(mats_[0].ctx())) fail(Err::FieldMismatch, "tuple matrices over different fields");
    }
}

const Matrix& MatTuple::mat(std::size_t i) const {
    if (i >= mats_.size()) fail(Err::IndexOutOfRange, "tuple index");
    return mats_[i];
}

bool operator==(const MatTuple& a, const MatTuple& b) {
    if (!a.same_shape(b)) fail(Err::ShapeMismatch, "comparing tuples of different shape");
    return a.mats_ == b.mats_;
}

Matrix eval_word(const Word& w, const MatTuple& x) {
    Matrix acc = Matrix::identity(x.ctx(), x.n());
    for (std::uint32_t g : w) {
        if (g < 1 || g > x.m()) fail(Err::GeneratorOutOfRange, "word uses X" + std::to_string(g));
        acc = acc * x.mat(g - 1);
    }
    return acc;
}

MatTuple conjugate_tuple(const Matrix& g, const MatTuple& x) {
    if (!g.is_square() || g.rows() != x.n() || !g.ctx().same(x.ctx()))
        fail(Err::ShapeMismatch, "conjugating matrix has wrong shape or field");
    auto ginv = inverse(g);
    if (!ginv) fail(Err::SingularG, "conjugating matrix is singular");
    std::vector<Matrix> out;
    out.reserve(x.m());
    for (const Matrix& xi : x.mats()) out.push_back(g * xi * *ginv);
    return MatTuple(std::move(out));
}

namespace {

struct ClosureEntry {
    Word word;
    Matrix value;                // exact evaluation of word at x
    std::vector<FieldElem> red;  // reduced row, pivot normalized to 1
    std::size_t pivot;
};

std::vector<FieldElem> flatten(const Matrix& m) {
    std::vector<FieldElem> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

} // namespace

GenerationCertificate in_U(const MatTuple& x) {
    const FieldCtx& F = x.ctx();
    std::size_t n = x.n();
    std::size_t dim = n * n;

    std::vector<ClosureEntry> basis;
    auto try_add = [&](Word w, Matrix value) -> bool {
        std::vector<FieldElem> v = flatten(value);
        for (const ClosureEntry& e : basis)
            if (!v[e.pivot].is_zero()) {
                FieldElem f = v[e.pivot];
                for (std::size_t j = 0; j < dim; ++j) v[j] -= f * e.red[j];
            }
        std::size_t pivot = dim;
        for (std::size_t j = 0; j < dim; ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == dim) return false;
        FieldElem inv = v[pivot].inverse();
        for (std::size_t j = 0; j < dim; ++j) v[j] = inv * v[j];
        basis.push_back({std::move(w), std::move(value), std::move(v), pivot});
        return true;
    };

    try_add({}, Matrix::identity(F, n));
    std::size_t level_begin = 0, level_end = basis.size();
    std::size_t rounds = 0;
    while (level_begin < level_end && basis.size() < dim) {
        if (++rounds > dim) fail(Err::Internal, "span closure exceeded n^2 rounds");
        for (std::uint32_t g = 1; g <= x.m(); ++g)
            for (std::size_t k = level_begin; k < level_end; ++k) {
                Word w = basis[k].word;
                w.insert(w.begin(), g);
                try_add(std::move(w), x.mat(g - 1) * basis[k].value);
            }
        level_begin = level_end;
        level_end = basis.size();
    }

    GenerationCertificate cert;
    cert.defect_dim = basis.size();
    cert.verdict = basis.size() == dim;
    cert.spanning_words.reserve(basis.size());
    for (const ClosureEntry& e : basis) cert.spanning_words.push_back(e.word);
    return cert;
}

std::vector<Matrix> centralizer_basis(const MatTuple& x) {
    return intertwiner_space(x.mats(), x.mats());
}

bool stabilizer_is_trivial(const MatTuple& x) { return centralizer_basis(x).size() == 1; }

std::vector<Matrix> intertwiner_space(const MatTuple& x, const MatTuple& y) {
    if (!x.same_shape(y)) fail(Err::ShapeMismatch, "intertwiner_space tuples of different shape");
    return intertwiner_space(x.mats(), y.mats());
}

} // namespace minv
