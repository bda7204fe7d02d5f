#ifndef MINV_FIELD_HPP
#define MINV_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "minv/error.hpp"

namespace minv {

enum class FieldKind { Rationals, Prime, Extension };

class FieldElem;

/// An exact field: the rationals, GF(p), or GF(p^k) given by a monic
/// irreducible modulus over GF(p).  Immutable and cheap to copy; element
/// operations go through free operators on FieldElem, which carry their
/// context with them.
class FieldCtx {
public:
    static FieldCtx rationals();
    static FieldCtx prime(std::uint64_t p);
    /// modulus is low-degree-first, monic, degree >= 1; verified irreducible.
    static FieldCtx extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
    /// Descriptor syntax: `Q`, `F<p>`, `F<p>^<k>:<c0>,<c1>,...,<ck>`.
    static FieldCtx parse(const std::string& descriptor);

    FieldKind kind() const { return impl_->kind; }
    std::uint64_t characteristic() const { return impl_->kind == FieldKind::Rationals ? 0 : impl_->p; }
    std::uint64_t prime_modulus() const { return impl_->p; }
    std::size_t ext_degree() const { return impl_->degree; }
    const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }
    /// Number of elements; nullopt for the rationals or if p^k overflows.
    std::optional<std::uint64_t> order() const;
    std::string descriptor() const;

    bool same(const FieldCtx& o) const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long v) const;
    FieldElem from_rational(const mpq_class& v) const;
    /// Element syntax: `a`/`a/b` over Q, residue over GF(p), `c0,c1,...` over GF(p^k).
    FieldElem parse_elem(const std::string& s) const;
    std::string to_string(const FieldElem& a) const;
    /// index-th element in the canonical enumeration 0..order-1 (finite fields).
    FieldElem element_at(std::uint64_t index) const;

private:
    struct Impl {
        FieldKind kind;
        std::uint64_t p;                     // 0 for rationals
        std::size_t degree;                  // k; 1 unless extension
        std::vector<std::uint64_t> modulus;  // extension only, size k+1
    };
    explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend class FieldElem;
};

/// A context-tagged exact field element in canonical form: reduced fraction,
/// residue in [0,p), or residue polynomial of degree < k (coefficient vector
/// of fixed length k, low degree first).
class FieldElem {
public:
    FieldElem() = delete;

    const FieldCtx& ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;
    const std::vector<std::uint64_t>& poly_residue() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
    FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem inverse() const;

private:
    using Rep = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>>;
    FieldElem(FieldCtx ctx, Rep v) : ctx_(std::move(ctx)), v_(std::move(v)) {}
    FieldCtx ctx_;
    Rep v_;
    friend class FieldCtx;
    friend FieldElem frobenius(const FieldElem& a);
    friend int cmp_repr(const FieldElem& a, const FieldElem& b);
};

/// a^p; requires positive characteristic (CharZero otherwise).
FieldElem frobenius(const FieldElem& a);
FieldElem pow(FieldElem base, std::uint64_t e);
/// Representation order used for canonical sorting; not a field order.
int cmp_repr(const FieldElem& a, const FieldElem& b);
/// Deterministic sampling: uniform over finite fields, small integers over Q.
FieldElem random_element(const FieldCtx& F, std::mt19937_64& rng);

/// Univariate polynomial over one FieldCtx; coefficients low degree first,
/// trailing zeros stripped, so the zero polynomial has no coefficients.
class UniPoly {
public:
    explicit UniPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    UniPoly(FieldCtx ctx, std::vector<FieldElem> coeffs);

    const FieldCtx& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElem coeff(std::size_t i) const;
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_monic() const;

    FieldElem eval(const FieldElem& x) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    static UniPoly constant(const FieldCtx& ctx, const FieldElem& c);
    /// x - r
    static UniPoly linear_root(const FieldElem& r);

    std::string to_string(const std::string& var = "t") const;

private:
    FieldCtx ctx_;
    std::vector<FieldElem> coeffs_;
    void strip();
};

/// All roots of f lying in the base field, with multiplicities.  Exhaustive
/// evaluation over finite fields; rational-root search on the primitive
/// integer form over Q.  Deterministic order (enumeration order resp. sorted).
std::vector<std::pair<FieldElem, int>> roots_in_field(const UniPoly& f);

/// True iff monic f has deg(f) distinct roots in the base field.
bool is_squarefree_split(const UniPoly& f);

} // namespace minv

#endif
