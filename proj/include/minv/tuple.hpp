#ifndef MINV_TUPLE_HPP
#define MINV_TUPLE_HPP

#include <vector>

#include "minv/matrix.hpp"
#include "minv/word.hpp"

namespace minv {

/// A point of (M_n)^m: an m-sequence of n x n matrices over one FieldCtx.
class MatTuple {
public:
    explicit MatTuple(std::vector<Matrix> mats);

    std::size_t n() const { return n_; }
    std::size_t m() const { return mats_.size(); }
    const FieldCtx& ctx() const { return mats_[0].ctx(); }
    const Matrix& mat(std::size_t i) const; // 0-based
    const std::vector<Matrix>& mats() const { return mats_; }

    bool same_shape(const MatTuple& o) const {
        return n_ == o.n_ && m() == o.m() && ctx().same(o.ctx());
    }

    friend bool operator==(const MatTuple& a, const MatTuple& b);
    friend bool operator!=(const MatTuple& a, const MatTuple& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Matrix> mats_;
};

/// w(x_1,...,x_m); the empty word gives the identity.
Matrix eval_word(const Word& w, const MatTuple& x);

/// (g x_1 g^-1, ..., g x_m g^-1); throws SingularG.
MatTuple conjugate_tuple(const Matrix& g, const MatTuple& x);

/// Outcome of the span-closure test for membership in U_{m,n}.
/// When the verdict is true, `spanning_words` holds n^2 words whose
/// evaluations at x form a basis of M_n; `defect_dim` is the dimension
/// of the generated unital subalgebra either way.
struct GenerationCertificate {
    bool verdict;
    std::vector<Word> spanning_words;
    std::size_t defect_dim;
};

/// Span-closure membership test for U_{m,n}: closes span{I, x_1..x_m}
/// under left multiplication by the x_i (at most n^2 rounds).
GenerationCertificate in_U(const MatTuple& x);

/// Canonical basis of {A : A x_i = x_i A for all i} = intertwiner_space(x, x).
std::vector<Matrix> centralizer_basis(const MatTuple& x);

/// True iff the commutant is the scalars; then both the PGL_n-stabilizer
/// and its Lie algebra are trivial (the same kernel computation backs both).
bool stabilizer_is_trivial(const MatTuple& x);

std::vector<Matrix> intertwiner_space(const MatTuple& x, const MatTuple& y);

} // namespace minv

#endif
