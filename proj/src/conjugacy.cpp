#include "minv/conjugacy.hpp"

#include <random>

namespace minv {

namespace {

ConjugacyVerdict conjugate_verdict(Matrix g) {
    ConjugacyVerdict v{ConjugacyOutcome::Conjugate};
    v.g = std::move(g);
    return v;
}

ConjugacyVerdict not_conjugate_rank_defect() {
    ConjugacyVerdict v{ConjugacyOutcome::NotConjugate};
    v.rank_defect = true;
    v.detail = "intertwiner space contains no invertible element";
    return v;
}

void require_shapes(const MatTuple& x, const MatTuple& y) {
    if (!x.same_shape(y)) fail(Err::ShapeMismatch, "conjugacy needs tuples of one shape");
}

void check_witness(const Matrix& g, const MatTuple& x, const MatTuple& y) {
    if (conjugate_tuple(g, x) != y) fail(Err::Internal, "conjugacy witness failed exact verification");
}

} // namespace

ConjugacyVerdict conjugacy_linear(const MatTuple& x, const MatTuple& y) {
    require_shapes(x, y);
    if (!in_U(x).verdict) fail(Err::NotInU, "conjugacy_linear requires x in U_{m,n}");

    std::vector<Matrix> basis = intertwiner_space(x, y);
    if (basis.empty()) return not_conjugate_rank_defect();
    if (basis.size() > 1)
        fail(Err::Internal, "intertwiner space of a generating tuple has dimension > 1");
    if (!is_invertible(basis[0])) return not_conjugate_rank_defect();
    check_witness(basis[0], x, y);
    return conjugate_verdict(std::move(basis[0]));
}

namespace {

NcPoly word_combination(const FieldCtx& F, const std::vector<Word>& words,
                        const std::vector<FieldElem>& coeffs) {
    NcPoly p(F);
    for (std::size_t i = 0; i < words.size(); ++i) p.add_term(words[i], coeffs[i]);
    return p;
}

bool splits_at(const NcPoly& z, const MatTuple& x) {
    return is_squarefree_split(charpoly_poly(eval_nc(z, x)));
}

/// f(z) for a univariate f, expanded in the free algebra.
NcPoly substitute_into(const UniPoly& f, const NcPoly& z) {
    const FieldCtx& F = z.ctx();
    NcPoly acc(F);
    NcPoly zpow = NcPoly::from_word(F, {}); // z^0
    for (int i = 0; i <= f.degree(); ++i) {
        acc = acc + f.coeff(static_cast<std::size_t>(i)) * zpow;
        if (i < f.degree()) zpow = zpow * z;
    }
    return acc;
}

/// Columns are the vectorized evaluations of the given words at x.
Matrix word_span_matrix(const std::vector<Word>& words, const MatTuple& x) {
    const FieldCtx& F = x.ctx();
    std::size_t n = x.n();
    Matrix span(F, n * n, words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
        Matrix v = eval_word(words[k], x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) span.at(i * n + j, k) = v.at(i, j);
    }
    return span;
}

std::vector<FieldElem> vectorize_unit(const FieldCtx& F, std::size_t n, std::size_t i, std::size_t j) {
    std::vector<FieldElem> v(n * n, F.zero());
    v[i * n + j] = F.one();
    return v;
}

} // namespace

std::optional<NcPoly> find_splitting_element(const MatTuple& x, const SearchBudget& budget,
                                             std::uint64_t seed) {
    if (!in_U(x).verdict) fail(Err::NotInU, "find_splitting_element requires x in U_{m,n}");
    const FieldCtx& F = x.ctx();
    std::vector<Word> words = enumerate_words(x.m(), budget.word_cap);

    for (const Word& w : words) {
        NcPoly z = NcPoly::from_word(F, w);
        if (splits_at(z, x)) return z;
    }

    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < budget.tries; ++t) {
        std::vector<FieldElem> coeffs;
        coeffs.reserve(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) coeffs.push_back(random_element(F, rng));
        NcPoly z = word_combination(F, words, coeffs);
        if (z.is_zero()) continue;
        if (splits_at(z, x)) return z;
    }
    return std::nullopt;
}

ConjugacyVerdict conjugacy_reconstruct(const MatTuple& x, const MatTuple& y, std::size_t L,
                                       const SearchBudget& budget, std::uint64_t seed) {
    require_shapes(x, y);
    const FieldCtx& F = x.ctx();
    std::size_t n = x.n();
    if (!in_U(x).verdict) fail(Err::NotInU, "conjugacy_reconstruct requires x in U_{m,n}");
    if (!in_U(y).verdict) fail(Err::NotInU, "conjugacy_reconstruct requires y in U_{m,n}");
    if (L == 0) L = default_separation_bound(n);

    // standing hypothesis of the reconstruction: all checked invariants agree
    Separation sep = separate(x, y, L);
    if (!sep.same_fiber) {
        ConjugacyVerdict v{ConjugacyOutcome::NotConjugate};
        v.fingerprint_witness = sep;
        v.detail = "fingerprint entry (" + std::to_string(sep.s) + "," + word_to_string(sep.w) + ") differs";
        return v;
    }

    // (1) splitting element z with z(x) diagonalizable with distinct
    //     eigenvalues over the base field
    std::optional<NcPoly> z = find_splitting_element(x, budget, seed);
    if (!z) {
        ConjugacyVerdict v{ConjugacyOutcome::Inconclusive};
        v.detail = "NoSplitZ";
        return v;
    }

    Matrix zx = eval_nc(*z, x), zy = eval_nc(*z, y);
    CharCoeffs cx = charpoly(zx), cy = charpoly(zy);
    for (std::uint32_t s = 1; s <= n; ++s)
        if (cx.c[s - 1] != cy.c[s - 1]) {
            // c_s(z) is an invariant separating x from y beyond length L
            ConjugacyVerdict v{ConjugacyOutcome::NotConjugate};
            v.invariant_witness = {s, *z};
            v.detail = "c" + std::to_string(s) + " of the splitting element differs";
            return v;
        }

    // (2) first replacement: diagonalize both sides to the same diagonal
    //     matrix, with one fixed root order
    auto roots = roots_in_field(charpoly_poly(zx));
    if (roots.size() != n) fail(Err::Internal, "splitting element lost its roots");
    auto eigenbasis = [&](const Matrix& A) {
        Matrix P(F, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix shifted = A - roots[i].first * Matrix::identity(F, n);
            auto vecs = nullspace(shifted);
            if (vecs.size() != 1) fail(Err::Internal, "eigenspace of a simple eigenvalue is not a line");
            for (std::size_t r = 0; r < n; ++r) P.at(r, i) = vecs[0][r];
        }
        return P;
    };
    Matrix Px = eigenbasis(zx), Py = eigenbasis(zy);
    auto Pxi = inverse(Px), Pyi = inverse(Py);
    if (!Pxi || !Pyi) fail(Err::Internal, "eigenbasis is singular");
    MatTuple xt = conjugate_tuple(*Pxi, x);
    MatTuple yt = conjugate_tuple(*Pyi, y);

    // (3) matrix units e_{ii} as Lagrange interpolation polynomials in z
    std::vector<NcPoly> z_diag;
    for (std::size_t i = 0; i < n; ++i) {
        UniPoly li = UniPoly::constant(F, F.one());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            UniPoly factor(F, {-roots[j].first, F.one()});
            li = li * factor;
            li = UniPoly::constant(F, (roots[i].first - roots[j].first).inverse()) * li;
        }
        NcPoly zii = substitute_into(li, *z);
        if (eval_nc(zii, xt) != Matrix::unit(F, n, i, i) || eval_nc(zii, yt) != Matrix::unit(F, n, i, i))
            fail(Err::Internal, "Lagrange unit does not evaluate to e_{ii}");
        z_diag.push_back(std::move(zii));
    }

    // (4) off-diagonal units through the spanning certificate of x, and the
    //     scalars alpha_{1j} they pick up on the y side
    GenerationCertificate cert = in_U(xt);
    if (!cert.verdict) fail(Err::Internal, "conjugate of a generating tuple stopped generating");
    Matrix span = word_span_matrix(cert.spanning_words, xt);
    auto unit_preimage = [&](std::size_t i, std::size_t j) {
        auto coeffs = solve(span, vectorize_unit(F, n, i, j));
        if (!coeffs) fail(Err::Internal, "matrix unit not in the span of the certificate words");
        return word_combination(F, cert.spanning_words, *coeffs);
    };

    std::vector<FieldElem> alpha(n, F.one()); // alpha_{1,1} = 1
    for (std::size_t j = 1; j < n; ++j) {
        // z_{1j} = z_{11} ztilde_{1j} z_{jj}; since the z_{ii} evaluate to
        // e_{ii} on both sides, its y-evaluation is e_11 phi'(ztilde) e_jj,
        // so alpha_{1j} is just the (1,j) entry of phi'(ztilde).
        NcPoly ztilde_1j = unit_preimage(0, j);
        if (eval_nc(ztilde_1j, xt) != Matrix::unit(F, n, 0, j))
            fail(Err::Internal, "unit preimage evaluation drifted");
        alpha[j] = eval_nc(ztilde_1j, yt).at(0, j);
        if (alpha[j].is_zero()) {
            // trace of z_{1j} z_{j1} is 1 at x but 0 at y
            NcPoly z1j = z_diag[0] * ztilde_1j * z_diag[j];
            NcPoly zj1 = z_diag[j] * unit_preimage(j, 0) * z_diag[0];
            NcPoly product = z1j * zj1;
            FieldElem at_x = eval_nc(product, xt).trace();
            FieldElem at_y = eval_nc(product, yt).trace();
            if (at_x == at_y) fail(Err::Internal, "vanishing alpha without trace mismatch");
            ConjugacyVerdict v{ConjugacyOutcome::NotConjugate};
            v.invariant_witness = {1, product};
            v.detail = "trace of a matrix-unit product differs";
            return v;
        }
    }

    // second replacement: gamma = diag(1, alpha_{12}, ..., alpha_{1n})
    Matrix gamma(F, n, n);
    for (std::size_t i = 0; i < n; ++i) gamma.at(i, i) = alpha[i];
    MatTuple yt2 = conjugate_tuple(gamma, yt);

    // (5) the two representations must now coincide; check the certificate
    //     words first, then the generators themselves
    std::vector<Word> final_words = cert.spanning_words;
    for (std::uint32_t g = 1; g <= x.m(); ++g) final_words.push_back({g});
    for (const Word& w : final_words) {
        if (eval_word(w, xt) != eval_word(w, yt2)) {
            ConjugacyVerdict v{ConjugacyOutcome::NotConjugate};
            v.word_witness = w;
            v.detail = "evaluations of " + word_to_string(w) + " differ after reconstruction";
            return v;
        }
    }

    // xt == yt2, so y = (Py gamma^-1 Px^-1) x (Py gamma^-1 Px^-1)^-1
    Matrix g = Py * *inverse(gamma) * *Pxi;
    check_witness(g, x, y);
    return conjugate_verdict(std::move(g));
}

} // namespace minv
