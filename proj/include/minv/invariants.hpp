#ifndef MINV_INVARIANTS_HPP
#define MINV_INVARIANTS_HPP

#include <optional>
#include <utility>

#include "minv/tuple.hpp"

namespace minv {

/// Indices (s, w) of Donkin's generators c_s(w) of the invariant ring,
/// for 1 <= s <= n and 1 <= |w| <= L, in canonical order (word-major).
std::vector<std::pair<std::uint32_t, Word>> donkin_generators(std::size_t m, std::size_t n, std::size_t L,
                                                              std::size_t budget_cap = default_word_budget);

/// The invariant vector {c_s(w(x))} over the generator layout: a point of
/// the quotient Q_{m,n} as seen through Donkin's generators.  The layout is
/// a function of (n, m, L, cyclic_dedup) alone, so two fingerprints over the
/// same parameters and field compare entrywise.
///
/// With cyclic_dedup, only the lexicographically minimal rotation of each
/// cyclic word class is kept; c_s(AB) = c_s(BA) makes the dropped entries
/// redundant.
class Fingerprint {
public:
    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t length_bound() const { return L_; }
    bool cyclic_dedup() const { return dedup_; }
    const FieldCtx& ctx() const { return ctx_; }

    const std::vector<std::pair<std::uint32_t, Word>>& layout() const { return layout_; }
    const std::vector<FieldElem>& entries() const { return entries_; }
    /// Lookup by generator index; nullopt if (s,w) is not in the layout.
    std::optional<FieldElem> entry(std::uint32_t s, const Word& w) const;

    bool comparable(const Fingerprint& o) const;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b);
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }

    /// Canonical text table, one "(s,word) value" line per entry.
    std::string to_text() const;

private:
    Fingerprint(FieldCtx ctx, std::size_t n, std::size_t m, std::size_t L, bool dedup)
        : ctx_(std::move(ctx)), n_(n), m_(m), L_(L), dedup_(dedup) {}
    FieldCtx ctx_;
    std::size_t n_, m_, L_;
    bool dedup_;
    std::vector<std::pair<std::uint32_t, Word>> layout_;
    std::vector<FieldElem> entries_;
    friend Fingerprint fingerprint(const MatTuple& x, std::size_t L, bool cyclic_dedup);
};

Fingerprint fingerprint(const MatTuple& x, std::size_t L, bool cyclic_dedup = false);

/// Default word-length bound for separation: the classical char-0 bound,
/// cross-checked empirically against the conjugacy solver at desk scale.
inline std::size_t default_separation_bound(std::size_t n) { return n * n; }

struct Separation {
    bool same_fiber;
    // witness when separated:
    std::uint32_t s = 0;
    Word w;
    std::optional<FieldElem> value_x, value_y;
};

/// Entrywise fingerprint comparison; the first differing entry is returned
/// as a witness of non-conjugacy.  SameFiber means all generators up to L
/// agree; for tuples in U this is certified against the conjugacy solver by
/// the acceptance sweeps rather than assumed.
Separation separate(const MatTuple& x, const MatTuple& y, std::size_t L, bool cyclic_dedup = false);

/// The n=2 open-set certificate: trace([a,b]^2), nonzero iff (a,b)
/// generates M_2.  Requires characteristic != 2.
FieldElem u22_certificate(const Matrix& a, const Matrix& b);

} // namespace minv

#endif
