#ifndef MINV_VARIETY_HPP
#define MINV_VARIETY_HPP

#include <string>
#include <vector>

#include "minv/freealg.hpp"

namespace minv {

/// A finite sample of points of U_{m,n}, standing in for an irreducible
/// n-variety.  Every point is validated to generate M_n on construction.
class PointVariety {
public:
    static PointVariety from_points(std::vector<MatTuple> points, std::string label);

    std::size_t n() const { return points_[0].n(); }
    std::size_t m() const { return points_[0].m(); }
    const FieldCtx& ctx() const { return points_[0].ctx(); }
    const std::vector<MatTuple>& points() const { return points_; }
    const std::string& label() const { return label_; }

private:
    PointVariety(std::vector<MatTuple> points, std::string label)
        : points_(std::move(points)), label_(std::move(label)) {}
    std::vector<MatTuple> points_;
    std::string label_;
};

/// Canonical basis of the degree-<= d evaluation kernel
/// {p : deg p <= d, p(x) = 0 for all sample points x}, the computable
/// approximation of the defining ideal seen through the samples.
std::vector<NcPoly> ideal_kernel_basis(const PointVariety& X, std::size_t d,
                                       std::size_t budget_cap = default_word_budget);

/// Generator images f_i = alpha(X_i) defining the pointwise map
/// alpha_#(x) = (f_1(x), ..., f_l(x)) from source tuples (m generators)
/// to target-shaped tuples (l generators).
struct RegularMapSpec {
    std::size_t source_m = 0;
    std::size_t target_l = 0;
    std::vector<TracePoly> images;

    static RegularMapSpec make(std::size_t source_m, std::vector<TracePoly> images);
    /// The identity map on m generators.
    static RegularMapSpec identity(const FieldCtx& F, std::size_t m);
};

MatTuple apply_regular_map(const RegularMapSpec& F, const MatTuple& x);

struct MorphismPointRecord {
    std::size_t index;
    MatTuple image;
    bool in_u_target;
    bool annihilates_target_ideal;
    bool pass() const { return in_u_target && annihilates_target_ideal; }
};

/// Per-point outcome of the corrected morphism criterion: the image must
/// keep generating M_n (alpha preserves surjections onto M_n) and must
/// annihilate the target's evaluation kernel up to degree d.
struct MorphismReport {
    std::vector<MorphismPointRecord> records;
    std::size_t degree_bound;
    bool verdict;
};

MorphismReport morphism_check(const RegularMapSpec& F, const PointVariety& X, const PointVariety& Y,
                              std::size_t d);

struct TraceIdealViolation {
    std::uint32_t s;
    std::size_t point_index;
};

/// Checks the trace-ring ideal property at sample level: whenever p
/// vanishes on X, each central coefficient c_s(p) vanishes on X too.
/// A reported violation would contradict the preservation of
/// characteristic polynomials under evaluation, so none may occur.
struct TraceIdealReport {
    bool precondition_met; // p vanishes on every sample point
    std::vector<TraceIdealViolation> violations;
    bool ok() const { return precondition_met && violations.empty(); }
};

TraceIdealReport trace_ideal_check(const PointVariety& X, const NcPoly& p);

} // namespace minv

#endif
