#include "minv/invariants.hpp"

#include <algorithm>

namespace minv {

namespace {

bool is_minimal_rotation(const Word& w) {
    for (std::size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (rot < w) return false;
    }
    return true;
}

} // namespace

std::vector<std::pair<std::uint32_t, Word>> donkin_generators(std::size_t m, std::size_t n, std::size_t L,
                                                              std::size_t budget_cap) {
    if (L < 1) fail(Err::InvalidInput, "donkin_generators needs L >= 1");
    std::vector<std::pair<std::uint32_t, Word>> out;
    for (const Word& w : enumerate_words(m, L, budget_cap)) {
        if (w.empty()) continue;
        for (std::uint32_t s = 1; s <= n; ++s) out.emplace_back(s, w);
    }
    return out;
}

Fingerprint fingerprint(const MatTuple& x, std::size_t L, bool cyclic_dedup) {
    if (L < 1) fail(Err::InvalidInput, "fingerprint needs L >= 1");
    const FieldCtx& F = x.ctx();
    std::size_t n = x.n();
    Fingerprint fp(F, n, x.m(), L, cyclic_dedup);

    // evaluate words incrementally, level by level in canonical order
    std::vector<Word> words = enumerate_words(x.m(), L);
    std::vector<Matrix> evals;
    evals.reserve(words.size());
    std::vector<std::size_t> parent(words.size(), 0);
    {
        // word k > 0 arises from its parent by appending one generator;
        // recover the parent from the enumeration structure
        std::size_t level_begin = 0, level_end = 1, next = 1;
        for (std::size_t len = 1; len <= L && next < words.size(); ++len) {
            for (std::size_t k = level_begin; k < level_end; ++k)
                for (std::uint32_t g = 1; g <= x.m(); ++g) parent[next++] = k;
            level_begin = level_end;
            level_end = next;
        }
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k].empty())
            evals.push_back(Matrix::identity(F, n));
        else
            evals.push_back(evals[parent[k]] * x.mat(words[k].back() - 1));
    }

    for (std::size_t k = 0; k < words.size(); ++k) {
        const Word& w = words[k];
        if (w.empty()) continue;
        if (cyclic_dedup && !is_minimal_rotation(w)) continue;
        CharCoeffs cc = charpoly(evals[k]);
        for (std::uint32_t s = 1; s <= n; ++s) {
            fp.layout_.emplace_back(s, w);
            fp.entries_.push_back(cc.c[s - 1]);
        }
    }
    return fp;
}

std::optional<FieldElem> Fingerprint::entry(std::uint32_t s, const Word& w) const {
    for (std::size_t i = 0; i < layout_.size(); ++i)
        if (layout_[i].first == s && layout_[i].second == w) return entries_[i];
    return std::nullopt;
}

bool Fingerprint::comparable(const Fingerprint& o) const {
    return n_ == o.n_ && m_ == o.m_ && L_ == o.L_ && dedup_ == o.dedup_ && ctx_.same(o.ctx_);
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
    if (!a.comparable(b)) fail(Err::ShapeMismatch, "fingerprints over different layouts");
    return a.entries_ == b.entries_;
}

std::string Fingerprint::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < layout_.size(); ++i) {
        out += "(" + std::to_string(layout_[i].first) + "," + word_to_string(layout_[i].second) + ") " +
               ctx_.to_string(entries_[i]) + "\n";
    }
    return out;
}

Separation separate(const MatTuple& x, const MatTuple& y, std::size_t L, bool cyclic_dedup) {
    if (!x.same_shape(y)) fail(Err::ShapeMismatch, "separate needs tuples of one shape");
    Fingerprint fx = fingerprint(x, L, cyclic_dedup);
    Fingerprint fy = fingerprint(y, L, cyclic_dedup);
    Separation out{true};
    for (std::size_t i = 0; i < fx.layout().size(); ++i) {
        if (fx.entries()[i] != fy.entries()[i]) {
            out.same_fiber = false;
            out.s = fx.layout()[i].first;
            out.w = fx.layout()[i].second;
            out.value_x = fx.entries()[i];
            out.value_y = fy.entries()[i];
            return out;
        }
    }
    return out;
}

FieldElem u22_certificate(const Matrix& a, const Matrix& b) {
    if (!a.ctx().same(b.ctx())) fail(Err::FieldMismatch, "u22_certificate over different fields");
    if (!a.is_square() || !b.is_square() || a.rows() != 2 || b.rows() != 2)
        fail(Err::WrongDimension, "u22_certificate needs 2x2 matrices");
    if (a.ctx().characteristic() == 2) fail(Err::CharTwo, "the U_{2,2} certificate degenerates in characteristic 2");
    Matrix comm = a * b - b * a;
    return (comm * comm).trace();
}

} // namespace minv
