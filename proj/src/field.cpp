#include "minv/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace minv {

const char* err_name(Err code) {
    switch (code) {
        case Err::CompositeModulus: return "CompositeModulus";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::CharZero: return "CharZero";
        case Err::CharTwo: return "CharTwo";
        case Err::ShapeMismatch: return "ShapeMismatch";
        case Err::WrongDimension: return "WrongDimension";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::GeneratorOutOfRange: return "GeneratorOutOfRange";
        case Err::SingularG: return "SingularG";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::NotInU: return "NotInU";
        case Err::PointNotInU: return "PointNotInU";
        case Err::EmptyInput: return "EmptyInput";
        case Err::InvalidInput: return "InvalidInput";
        case Err::ParseError: return "ParseError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 mod_add(u64 a, u64 b, u64 p) {
    u64 t = p - b;
    return a >= t ? a - t : a + b;
}
u64 mod_sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mod_mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 mod_pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}
u64 mod_inv(u64 a, u64 p) {
    if (a == 0) fail(Err::DivisionByZero, "inverse of zero residue");
    return mod_pow(a, p - 2, p);
}

// ---- GF(p)[x] on raw coefficient vectors (low degree first) ----

using PVec = std::vector<u64>;

void ptrim(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int pdeg(const PVec& f) { return static_cast<int>(f.size()) - 1; }

PVec padd(const PVec& a, const PVec& b, u64 p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = mod_add(x, y, p);
    }
    ptrim(r);
    return r;
}
PVec psub(const PVec& a, const PVec& b, u64 p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = mod_sub(x, y, p);
    }
    ptrim(r);
    return r;
}
PVec pmul(const PVec& a, const PVec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_add(r[i + j], mod_mul(a[i], b[j], p), p);
    ptrim(r);
    return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
void pdivmod(const PVec& a, const PVec& b, u64 p, PVec& q, PVec& r) {
    if (b.empty()) fail(Err::DivisionByZero, "polynomial division by zero");
    r = a;
    ptrim(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, 0);
    u64 lead_inv = mod_inv(b.back(), p);
    while (pdeg(r) >= pdeg(b)) {
        std::size_t shift = r.size() - b.size();
        u64 c = mod_mul(r.back(), lead_inv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = mod_sub(r[shift + i], mod_mul(c, b[i], p), p);
        ptrim(r);
    }
    ptrim(q);
}

PVec pmod(const PVec& a, const PVec& b, u64 p) {
    PVec q, r;
    pdivmod(a, b, p, q, r);
    return r;
}

// inverse of a modulo m in GF(p)[x], m of degree >= 1
PVec pinv_mod(const PVec& a, const PVec& m, u64 p) {
    PVec r0 = m, r1 = pmod(a, m, p);
    if (r1.empty()) fail(Err::DivisionByZero, "inverse of zero in extension field");
    PVec t0 = {}, t1 = {1};
    while (!r1.empty()) {
        PVec q, r2;
        pdivmod(r0, r1, p, q, r2);
        PVec t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd, a constant since m is irreducible
    if (pdeg(r0) != 0) fail(Err::Internal, "modulus not irreducible in pinv_mod");
    u64 c = mod_inv(r0[0], p);
    PVec out(t0.size());
    for (std::size_t i = 0; i < t0.size(); ++i) out[i] = mod_mul(t0[i], c, p);
    ptrim(out);
    return pmod(out, m, p);
}

u64 peval(const PVec& f, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = mod_add(mod_mul(acc, x, p), f[i], p);
    return acc;
}

// Brute-force irreducibility over GF(p): no roots, then trial division by
// all monic polynomials of degree <= k/2.  Desk scale: k stays small.
bool is_irreducible(const PVec& f, u64 p) {
    int k = pdeg(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    for (u64 a = 0; a < p; ++a)
        if (peval(f, a, p) == 0) return false;
    for (int d = 2; d <= k / 2; ++d) {
        u128 count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
            if (count > 2'000'000) fail(Err::BudgetExceeded, "irreducibility trial division too large");
        }
        PVec g(static_cast<std::size_t>(d) + 1, 0);
        g[static_cast<std::size_t>(d)] = 1;
        for (u64 idx = 0; idx < static_cast<u64>(count); ++idx) {
            u64 t = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = t % p;
                t /= p;
            }
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// fixed-length (ext degree) canonical residue vector
PVec canon_ext(PVec f, const PVec& modulus, u64 p, std::size_t k) {
    f = pmod(f, modulus, p);
    f.resize(k, 0);
    return f;
}

} // namespace

// ---- FieldCtx ----

FieldCtx FieldCtx::rationals() {
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Rationals;
    impl->p = 0;
    impl->degree = 1;
    return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(Err::CompositeModulus, "p = " + std::to_string(p) + " is not prime");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Prime;
    impl->p = p;
    impl->degree = 1;
    return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime_u64(p)) fail(Err::CompositeModulus, "p = " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    ptrim(modulus);
    if (pdeg(modulus) < 1) fail(Err::ReducibleModulus, "modulus must have degree >= 1");
    if (modulus.back() != 1) fail(Err::ReducibleModulus, "modulus must be monic");
    if (!is_irreducible(modulus, p)) fail(Err::ReducibleModulus, "modulus factors over GF(p)");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Extension;
    impl->p = p;
    impl->degree = static_cast<std::size_t>(pdeg(modulus));
    impl->modulus = std::move(modulus);
    return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::parse(const std::string& descriptor) {
    if (descriptor == "Q") return rationals();
    if (descriptor.size() >= 2 && descriptor[0] == 'F') {
        auto caret = descriptor.find('^');
        if (caret == std::string::npos) {
            try {
                std::size_t pos = 0;
                u64 p = std::stoull(descriptor.substr(1), &pos);
                if (pos + 1 == descriptor.size()) return prime(p);
            } catch (const std::logic_error&) {
            }
        } else {
            auto colon = descriptor.find(':', caret);
            if (colon == std::string::npos) fail(Err::ParseError, "extension descriptor needs ':<coeffs>'");
            try {
                u64 p = std::stoull(descriptor.substr(1, caret - 1));
                u64 k = std::stoull(descriptor.substr(caret + 1, colon - caret - 1));
                std::vector<u64> coeffs;
                std::istringstream in(descriptor.substr(colon + 1));
                std::string item;
                while (std::getline(in, item, ',')) coeffs.push_back(std::stoull(item));
                if (coeffs.size() != k + 1)
                    fail(Err::ParseError, "modulus of degree " + std::to_string(k) + " needs " +
                                              std::to_string(k + 1) + " coefficients");
                return extension(p, std::move(coeffs));
            } catch (const std::logic_error&) {
                fail(Err::ParseError, "bad extension field descriptor: " + descriptor);
            }
        }
    }
    fail(Err::ParseError, "unknown field descriptor: " + descriptor);
}

std::optional<std::uint64_t> FieldCtx::order() const {
    if (impl_->kind == FieldKind::Rationals) return std::nullopt;
    u128 n = 1;
    for (std::size_t i = 0; i < impl_->degree; ++i) {
        n *= impl_->p;
        if (n > UINT64_MAX) return std::nullopt;
    }
    return static_cast<u64>(n);
}

std::string FieldCtx::descriptor() const {
    switch (impl_->kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "F" + std::to_string(impl_->p);
        case FieldKind::Extension: {
            std::string s = "F" + std::to_string(impl_->p) + "^" + std::to_string(impl_->degree) + ":";
            for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(impl_->modulus[i]);
            }
            return s;
        }
    }
    return "?";
}

bool FieldCtx::same(const FieldCtx& o) const {
    if (impl_ == o.impl_) return true;
    return impl_->kind == o.impl_->kind && impl_->p == o.impl_->p && impl_->modulus == o.impl_->modulus;
}

FieldElem FieldCtx::zero() const { return from_int(0); }
FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(long long v) const {
    switch (impl_->kind) {
        case FieldKind::Rationals: return FieldElem(*this, mpq_class(static_cast<long>(v)));
        case FieldKind::Prime: {
            long long r = v % static_cast<long long>(impl_->p);
            if (r < 0) r += static_cast<long long>(impl_->p);
            return FieldElem(*this, static_cast<u64>(r));
        }
        case FieldKind::Extension: {
            long long r = v % static_cast<long long>(impl_->p);
            if (r < 0) r += static_cast<long long>(impl_->p);
            PVec f(impl_->degree, 0);
            f[0] = static_cast<u64>(r);
            return FieldElem(*this, std::move(f));
        }
    }
    fail(Err::Internal, "bad field kind");
}

FieldElem FieldCtx::from_rational(const mpq_class& v) const {
    if (impl_->kind != FieldKind::Rationals) fail(Err::FieldMismatch, "rational literal in finite field");
    mpq_class c = v;
    c.canonicalize();
    return FieldElem(*this, std::move(c));
}

FieldElem FieldCtx::parse_elem(const std::string& raw) const {
    std::string s = raw;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) fail(Err::ParseError, "empty field element");
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    auto strict_ll = [](const std::string& t) -> long long {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    try {
        switch (impl_->kind) {
            case FieldKind::Rationals: {
                // set_str rejects malformed input; mpq_class(string) would abort
                mpq_class v;
                if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
                    fail(Err::ParseError, "bad rational: " + raw);
                if (v.get_den() == 0) fail(Err::ParseError, "zero denominator");
                v.canonicalize();
                return FieldElem(*this, std::move(v));
            }
            case FieldKind::Prime:
                return from_int(strict_ll(s));
            case FieldKind::Extension: {
                PVec coeffs;
                std::istringstream in(s);
                std::string item;
                while (std::getline(in, item, ',')) {
                    long long c = strict_ll(item);
                    long long r = c % static_cast<long long>(impl_->p);
                    if (r < 0) r += static_cast<long long>(impl_->p);
                    coeffs.push_back(static_cast<u64>(r));
                }
                if (coeffs.empty() || coeffs.size() > impl_->degree)
                    fail(Err::ParseError, "extension element needs 1.." + std::to_string(impl_->degree) +
                                              " coefficients");
                coeffs.resize(impl_->degree, 0);
                return FieldElem(*this, std::move(coeffs));
            }
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    fail(Err::ParseError, "bad field element: " + raw);
}

std::string FieldCtx::to_string(const FieldElem& a) const {
    if (!same(a.ctx())) fail(Err::FieldMismatch, "to_string across fields");
    switch (impl_->kind) {
        case FieldKind::Rationals: return a.rational().get_str();
        case FieldKind::Prime: return std::to_string(a.residue());
        case FieldKind::Extension: {
            std::string s;
            const auto& f = a.poly_residue();
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(f[i]);
            }
            return s;
        }
    }
    return "?";
}

FieldElem FieldCtx::element_at(std::uint64_t index) const {
    switch (impl_->kind) {
        case FieldKind::Rationals: fail(Err::InvalidInput, "element_at over the rationals");
        case FieldKind::Prime:
            if (index >= impl_->p) fail(Err::IndexOutOfRange, "element index past field order");
            return FieldElem(*this, index);
        case FieldKind::Extension: {
            PVec f(impl_->degree, 0);
            for (std::size_t i = 0; i < impl_->degree; ++i) {
                f[i] = index % impl_->p;
                index /= impl_->p;
            }
            if (index != 0) fail(Err::IndexOutOfRange, "element index past field order");
            return FieldElem(*this, std::move(f));
        }
    }
    fail(Err::Internal, "bad field kind");
}

// ---- FieldElem ----

bool FieldElem::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
    if (auto* r = std::get_if<u64>(&v_)) return *r == 0;
    const auto& f = std::get<PVec>(v_);
    return std::all_of(f.begin(), f.end(), [](u64 c) { return c == 0; });
}

bool FieldElem::is_one() const { return *this == ctx_.one(); }

const mpq_class& FieldElem::rational() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
    fail(Err::FieldMismatch, "not a rational element");
}
std::uint64_t FieldElem::residue() const {
    if (auto* r = std::get_if<u64>(&v_)) return *r;
    fail(Err::FieldMismatch, "not a prime field element");
}
const std::vector<std::uint64_t>& FieldElem::poly_residue() const {
    if (auto* f = std::get_if<PVec>(&v_)) return *f;
    fail(Err::FieldMismatch, "not an extension field element");
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx().same(b.ctx()))
        fail(Err::FieldMismatch, a.ctx().descriptor() + " vs " + b.ctx().descriptor());
}
} // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    const FieldCtx& F = a.ctx();
    switch (F.kind()) {
        case FieldKind::Rationals: return F.from_rational(a.rational() + b.rational());
        case FieldKind::Prime: return FieldElem(F, mod_add(a.residue(), b.residue(), F.prime_modulus()));
        case FieldKind::Extension:
            return FieldElem(F, canon_ext(padd(a.poly_residue(), b.poly_residue(), F.prime_modulus()),
                                          F.modulus(), F.prime_modulus(), F.ext_degree()));
    }
    fail(Err::Internal, "bad field kind");
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    const FieldCtx& F = a.ctx();
    switch (F.kind()) {
        case FieldKind::Rationals: return F.from_rational(a.rational() - b.rational());
        case FieldKind::Prime: return FieldElem(F, mod_sub(a.residue(), b.residue(), F.prime_modulus()));
        case FieldKind::Extension:
            return FieldElem(F, canon_ext(psub(a.poly_residue(), b.poly_residue(), F.prime_modulus()),
                                          F.modulus(), F.prime_modulus(), F.ext_degree()));
    }
    fail(Err::Internal, "bad field kind");
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    const FieldCtx& F = a.ctx();
    switch (F.kind()) {
        case FieldKind::Rationals: return F.from_rational(a.rational() * b.rational());
        case FieldKind::Prime: return FieldElem(F, mod_mul(a.residue(), b.residue(), F.prime_modulus()));
        case FieldKind::Extension:
            return FieldElem(F, canon_ext(pmul(a.poly_residue(), b.poly_residue(), F.prime_modulus()),
                                          F.modulus(), F.prime_modulus(), F.ext_degree()));
    }
    fail(Err::Internal, "bad field kind");
}

FieldElem FieldElem::inverse() const {
    const FieldCtx& F = ctx_;
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    switch (F.kind()) {
        case FieldKind::Rationals: return F.from_rational(1 / rational());
        case FieldKind::Prime: return FieldElem(F, mod_inv(residue(), F.prime_modulus()));
        case FieldKind::Extension:
            return FieldElem(F, canon_ext(pinv_mod(poly_residue(), F.modulus(), F.prime_modulus()),
                                          F.modulus(), F.prime_modulus(), F.ext_degree()));
    }
    fail(Err::Internal, "bad field kind");
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    if (b.is_zero()) fail(Err::DivisionByZero, "division by zero");
    return a * b.inverse();
}

FieldElem FieldElem::operator-() const { return ctx_.zero() - *this; }

bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return a.v_ == b.v_;
}

FieldElem frobenius(const FieldElem& a) {
    u64 p = a.ctx().characteristic();
    if (p == 0) fail(Err::CharZero, "frobenius needs positive characteristic");
    return pow(a, p);
}

FieldElem pow(FieldElem base, std::uint64_t e) {
    FieldElem r = base.ctx().one();
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

int cmp_repr(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    switch (a.ctx().kind()) {
        case FieldKind::Rationals: return mpq_cmp(a.rational().get_mpq_t(), b.rational().get_mpq_t());
        case FieldKind::Prime: {
            u64 x = a.residue(), y = b.residue();
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case FieldKind::Extension: {
            const auto& x = a.poly_residue();
            const auto& y = b.poly_residue();
            if (x < y) return -1;
            if (y < x) return 1;
            return 0;
        }
    }
    fail(Err::Internal, "bad field kind");
}

FieldElem random_element(const FieldCtx& F, std::mt19937_64& rng) {
    if (auto q = F.order()) return F.element_at(rng() % *q);
    // small integers keep rational growth tame in randomized sweeps
    return F.from_int(static_cast<long long>(rng() % 9) - 4);
}

// ---- UniPoly ----

UniPoly::UniPoly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!c.ctx().same(ctx_)) fail(Err::FieldMismatch, "UniPoly coefficient from another field");
    strip();
}

void UniPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ctx_.zero();
}

bool UniPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

FieldElem UniPoly::eval(const FieldElem& x) const {
    FieldElem acc = ctx_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "UniPoly + across fields");
    std::vector<FieldElem> c;
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return UniPoly(a.ctx_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "UniPoly - across fields");
    std::vector<FieldElem> c;
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return UniPoly(a.ctx_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "UniPoly * across fields");
    if (a.is_zero() || b.is_zero()) return UniPoly(a.ctx_);
    std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.ctx_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(a.ctx_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "UniPoly == across fields");
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "UniPoly divmod across fields");
    if (b.is_zero()) fail(Err::DivisionByZero, "UniPoly division by zero");
    UniPoly q(a.ctx_), r = a;
    std::vector<FieldElem> qc(a.coeffs_.size(), a.ctx_.zero());
    FieldElem lead_inv = b.coeffs_.back().inverse();
    while (r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        FieldElem c = r.coeffs_.back() * lead_inv;
        qc[shift] = c;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[shift + i] = r.coeffs_[shift + i] - c * b.coeffs_[i];
        r.strip();
    }
    return {UniPoly(a.ctx_, std::move(qc)), std::move(r)};
}

UniPoly UniPoly::constant(const FieldCtx& ctx, const FieldElem& c) { return UniPoly(ctx, {c}); }

UniPoly UniPoly::linear_root(const FieldElem& r) {
    return UniPoly(r.ctx(), {-r, r.ctx().one()});
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += ctx_.to_string(coeffs_[i]);
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

namespace {

// multiplicity of a known root, by repeated synthetic division
int root_multiplicity(UniPoly f, const FieldElem& r) {
    int mult = 0;
    UniPoly lin = UniPoly::linear_root(r);
    while (!f.is_zero() && f.eval(r).is_zero()) {
        auto [q, rem] = UniPoly::divmod(f, lin);
        if (!rem.is_zero()) fail(Err::Internal, "nonzero remainder at a root");
        f = std::move(q);
        ++mult;
    }
    return mult;
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<FieldElem, int>> rational_roots(const UniPoly& f) {
    const FieldCtx& F = f.ctx();
    std::vector<std::pair<FieldElem, int>> out;

    // primitive integer form
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.rational().get_den());
    std::vector<mpz_class> ic(f.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        mpq_class scaled = f.coeffs()[i].rational() * mpq_class(den_lcm);
        ic[i] = scaled.get_num(); // denominator is 1 by construction
    }
    mpz_class content = 0;
    for (const auto& c : ic) content = gcd(content, c);
    for (auto& c : ic) c /= content;

    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) out.emplace_back(F.zero(), static_cast<int>(low));

    const mpz_class& a0 = ic[low];
    const mpz_class& alead = ic.back();
    std::vector<std::pair<FieldElem, int>> found;
    for (const auto& u : divisors_of(a0)) {
        for (const auto& v : divisors_of(alead)) {
            if (gcd(u, v) != 1) continue;
            for (int sign : {1, -1}) {
                mpq_class cand(sign * u, v);
                cand.canonicalize();
                FieldElem r = F.from_rational(cand);
                if (f.eval(r).is_zero()) found.emplace_back(r, root_multiplicity(f, r));
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return cmp_repr(a.first, b.first) < 0; });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                found.end());
    out.insert(out.end(), found.begin(), found.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return cmp_repr(a.first, b.first) < 0; });
    return out;
}

} // namespace

std::vector<std::pair<FieldElem, int>> roots_in_field(const UniPoly& f) {
    if (f.is_zero()) fail(Err::InvalidInput, "roots_in_field: zero polynomial");
    const FieldCtx& F = f.ctx();
    if (F.kind() == FieldKind::Rationals) return rational_roots(f);
    auto q = F.order();
    if (!q) fail(Err::BudgetExceeded, "field too large for exhaustive root search");
    std::vector<std::pair<FieldElem, int>> out;
    for (u64 i = 0; i < *q; ++i) {
        FieldElem x = F.element_at(i);
        if (f.eval(x).is_zero()) out.emplace_back(x, root_multiplicity(f, x));
    }
    return out;
}

bool is_squarefree_split(const UniPoly& f) {
    if (f.is_zero() || !f.is_monic()) fail(Err::InvalidInput, "is_squarefree_split needs a monic polynomial");
    auto roots = roots_in_field(f);
    if (roots.size() != static_cast<std::size_t>(f.degree())) return false;
    return std::all_of(roots.begin(), roots.end(), [](const auto& r) { return r.second == 1; });
}

} // namespace minv
