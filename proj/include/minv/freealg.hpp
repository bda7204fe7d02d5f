#ifndef MINV_FREEALG_HPP
#define MINV_FREEALG_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "minv/tuple.hpp"

namespace minv {

/// Element of the generic matrix ring G_{m,n}: a finite sum of words with
/// nonzero coefficients, kept canonical (word order, no zero terms).
class NcPoly {
public:
    explicit NcPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    static NcPoly from_word(const FieldCtx& ctx, Word w);
    static NcPoly scalar(const FieldElem& c);

    const FieldCtx& ctx() const { return ctx_; }
    const std::map<Word, FieldElem, WordOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True for c * (empty word) or zero.
    bool is_scalar() const;

    NcPoly& add_term(const Word& w, const FieldElem& c);

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const FieldElem& c, const NcPoly& a);
    NcPoly operator-() const;
    friend bool operator==(const NcPoly& a, const NcPoly& b);
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    std::size_t degree() const; // longest word; 0 for zero
    std::uint32_t max_generator() const;

    std::string to_string() const;

private:
    FieldCtx ctx_;
    std::map<Word, FieldElem, WordOrder> terms_;
};

class TracePoly;

/// One central symbol c_s(arg); arg is itself a TracePoly (nesting allowed).
struct CentralSymbol {
    std::uint32_t s;
    std::shared_ptr<const TracePoly> arg;
};

int cmp(const CentralSymbol& a, const CentralSymbol& b);

/// Multiset of central symbols, kept sorted.
using CentralMonomial = std::vector<CentralSymbol>;

/// Element of the trace ring T_{m,n}: a finite sum of
/// (central monomial) * (matrix part) terms with distinct, sorted central
/// monomials and nonzero matrix parts.  Central symbols evaluate to scalars,
/// so they commute past everything.
class TracePoly {
public:
    explicit TracePoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    static TracePoly from_nc(NcPoly p);
    static TracePoly scalar(const FieldElem& c) { return from_nc(NcPoly::scalar(c)); }
    /// The central element c_s(arg), as a TracePoly (times the empty word).
    static TracePoly central(std::uint32_t s, TracePoly arg);

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<std::pair<CentralMonomial, NcPoly>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero only if the trace poly is a plain element of G_{m,n}.
    bool is_pure_nc() const;
    NcPoly nc_part() const; // requires is_pure_nc

    friend TracePoly operator+(const TracePoly& a, const TracePoly& b);
    friend TracePoly operator-(const TracePoly& a, const TracePoly& b);
    friend TracePoly operator*(const TracePoly& a, const TracePoly& b);
    TracePoly operator-() const;
    friend bool operator==(const TracePoly& a, const TracePoly& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const TracePoly& a, const TracePoly& b) { return cmp(a, b) != 0; }

    friend int cmp(const TracePoly& a, const TracePoly& b);

    std::size_t nesting_depth() const; // 0 for pure G_{m,n} elements
    std::uint32_t max_generator() const;

    std::string to_string() const;

private:
    FieldCtx ctx_;
    std::vector<std::pair<CentralMonomial, NcPoly>> terms_;
    void add_canonical(const CentralMonomial& mono, const NcPoly& part);
};

/// Evaluation homomorphism p |-> p(x_1,...,x_m); empty word |-> I_n.
Matrix eval_nc(const NcPoly& p, const MatTuple& x);

/// Central symbols c_s(q) evaluate to cs(eval_trace(q,x), s) * I_n.
Matrix eval_trace(const TracePoly& t, const MatTuple& x);

/// eval_trace(t, g x g^-1) == g eval_trace(t, x) g^-1, pointwise.
/// Trace-ring elements are equivariant maps, so this must return true;
/// it is exposed as a test hook.
bool equivariance_check(const TracePoly& t, const MatTuple& x, const Matrix& g);

/// Text syntax: generators X1..Xm, `*` or juxtaposition, `+`, `-`,
/// scalar literals per the field (`3`, `1/2`, `[c0,c1]`), `c<s>(...)`.
TracePoly parse_trace_poly(const FieldCtx& F, const std::string& text);
/// As parse_trace_poly but rejects central symbols.
NcPoly parse_nc_poly(const FieldCtx& F, const std::string& text);

} // namespace minv

#endif
