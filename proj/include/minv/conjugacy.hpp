#ifndef MINV_CONJUGACY_HPP
#define MINV_CONJUGACY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "minv/freealg.hpp"
#include "minv/invariants.hpp"

namespace minv {

/// Limits for the splitting-element search: all words up to `word_cap`
/// letters are tried in canonical order, then `tries` seeded random
/// field-coefficient combinations of those words.
struct SearchBudget {
    std::size_t word_cap = 3;
    std::size_t tries = 64;
};

enum class ConjugacyOutcome { Conjugate, NotConjugate, Inconclusive };

/// The decision with its evidence.  Exactly one of the witness fields is
/// populated for NotConjugate:
///  - fingerprint_witness: a Donkin generator value differs,
///  - rank_defect: no invertible intertwiner exists,
///  - word_witness: the reconstruction's final evaluation check failed at
///    this word (fingerprint equality at the chosen L did not force
///    conjugacy -- reported, never silently absorbed),
///  - invariant_witness: c_s of this combination element differs between
///    the tuples (the element reaches past the fingerprint length bound).
struct ConjugacyVerdict {
    ConjugacyOutcome outcome;
    std::optional<Matrix> g; // Conjugate: conjugate_tuple(g, x) == y exactly
    std::optional<Separation> fingerprint_witness;
    bool rank_defect = false;
    std::optional<Word> word_witness;
    std::optional<std::pair<std::uint32_t, NcPoly>> invariant_witness;
    std::string detail;

    bool is_conjugate() const { return outcome == ConjugacyOutcome::Conjugate; }
};

/// Decide conjugacy by solving the intertwiner equations g x_i = y_i g.
/// Requires x in U_{m,n} (throws NotInU); y is arbitrary.  Never
/// inconclusive: the intertwiner space is at most one-dimensional and any
/// nonzero intertwiner from a generating tuple is invertible.
ConjugacyVerdict conjugacy_linear(const MatTuple& x, const MatTuple& y);

/// First z (words in canonical order, then seeded random combinations)
/// with a squarefree charpoly split over the base field at x; nullopt when
/// the budget is exhausted.  Deterministic given the seed.
std::optional<NcPoly> find_splitting_element(const MatTuple& x, const SearchBudget& budget = {},
                                             std::uint64_t seed = 0);

/// The constructive procedure behind the orbit-separation property,
/// executed as an algorithm: find a splitting element, diagonalize it on
/// both sides, rebuild the matrix units as polynomial expressions, align
/// the residual torus factor, and compare the representations.  Both
/// tuples must be in U_{m,n}.  Fingerprints up to L (default n^2) are
/// checked first.  Over a field where no splitting element exists within
/// the budget the result is Inconclusive("NoSplitZ").
ConjugacyVerdict conjugacy_reconstruct(const MatTuple& x, const MatTuple& y, std::size_t L = 0,
                                       const SearchBudget& budget = {}, std::uint64_t seed = 0);

} // namespace minv

#endif
