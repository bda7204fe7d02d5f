#include "minv/variety.hpp"

namespace minv {

PointVariety PointVariety::from_points(std::vector<MatTuple> points, std::string label) {
    if (points.empty()) fail(Err::EmptyInput, "a point variety needs at least one sample point");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!points[i].same_shape(points[0]))
            fail(Err::ShapeMismatch, "sample point " + std::to_string(i) + " has a different shape");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!in_U(points[i]).verdict)
            fail(Err::PointNotInU, "sample point " + std::to_string(i) + " does not generate M_n");
    return PointVariety(std::move(points), std::move(label));
}

std::vector<NcPoly> ideal_kernel_basis(const PointVariety& X, std::size_t d, std::size_t budget_cap) {
    if (d < 1) fail(Err::InvalidInput, "ideal_kernel_basis needs d >= 1");
    const FieldCtx& F = X.ctx();
    std::size_t n = X.n();
    std::vector<Word> words = enumerate_words(X.m(), d, budget_cap);

    Matrix eval(F, X.points().size() * n * n, words.size());
    for (std::size_t c = 0; c < words.size(); ++c)
        for (std::size_t p = 0; p < X.points().size(); ++p) {
            Matrix v = eval_word(words[c], X.points()[p]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) eval.at((p * n + i) * n + j, c) = v.at(i, j);
        }

    std::vector<NcPoly> basis;
    for (const auto& vec : nullspace(eval)) {
        NcPoly p(F);
        for (std::size_t c = 0; c < words.size(); ++c) p.add_term(words[c], vec[c]);
        basis.push_back(std::move(p));
    }
    return basis;
}

RegularMapSpec RegularMapSpec::make(std::size_t source_m, std::vector<TracePoly> images) {
    if (images.empty()) fail(Err::EmptyInput, "a map spec needs at least one image");
    RegularMapSpec F;
    F.source_m = source_m;
    F.target_l = images.size();
    for (const TracePoly& f : images)
        if (f.max_generator() > source_m)
            fail(Err::GeneratorOutOfRange, "image uses X" + std::to_string(f.max_generator()) +
                                               " but the source has m = " + std::to_string(source_m));
    F.images = std::move(images);
    return F;
}

RegularMapSpec RegularMapSpec::identity(const FieldCtx& F, std::size_t m) {
    std::vector<TracePoly> images;
    for (std::uint32_t i = 1; i <= m; ++i)
        images.push_back(TracePoly::from_nc(NcPoly::from_word(F, {i})));
    return make(m, std::move(images));
}

MatTuple apply_regular_map(const RegularMapSpec& F, const MatTuple& x) {
    if (x.m() != F.source_m) fail(Err::ShapeMismatch, "tuple does not match the map's source shape");
    std::vector<Matrix> out;
    out.reserve(F.target_l);
    for (const TracePoly& f : F.images) out.push_back(eval_trace(f, x));
    return MatTuple(std::move(out));
}

MorphismReport morphism_check(const RegularMapSpec& F, const PointVariety& X, const PointVariety& Y,
                              std::size_t d) {
    if (F.source_m != X.m() || F.target_l != Y.m() || X.n() != Y.n() || !X.ctx().same(Y.ctx()))
        fail(Err::ShapeMismatch, "map, source and target shapes are inconsistent");

    std::vector<NcPoly> kernel = ideal_kernel_basis(Y, d);
    MorphismReport report{{}, d, true};
    for (std::size_t i = 0; i < X.points().size(); ++i) {
        MatTuple image = apply_regular_map(F, X.points()[i]);
        bool in_u = in_U(image).verdict;
        bool annihilates = true;
        for (const NcPoly& q : kernel)
            if (!eval_nc(q, image).is_zero()) {
                annihilates = false;
                break;
            }
        report.verdict = report.verdict && in_u && annihilates;
        report.records.push_back({i, std::move(image), in_u, annihilates});
    }
    return report;
}

TraceIdealReport trace_ideal_check(const PointVariety& X, const NcPoly& p) {
    TraceIdealReport report{true, {}};
    for (const MatTuple& pt : X.points())
        if (!eval_nc(p, pt).is_zero()) {
            report.precondition_met = false;
            return report;
        }
    std::size_t n = X.n();
    for (std::uint32_t s = 1; s <= n; ++s) {
        TracePoly csp = TracePoly::central(s, TracePoly::from_nc(p));
        for (std::size_t i = 0; i < X.points().size(); ++i)
            if (!eval_trace(csp, X.points()[i]).is_zero()) report.violations.push_back({s, i});
    }
    return report;
}

} // namespace minv
