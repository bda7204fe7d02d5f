#include "minv/freealg.hpp"

#include <algorithm>
#include <cctype>

namespace minv {

// ---- NcPoly ----

NcPoly NcPoly::from_word(const FieldCtx& ctx, Word w) {
    NcPoly p(ctx);
    p.add_term(w, ctx.one());
    return p;
}

NcPoly NcPoly::scalar(const FieldElem& c) {
    NcPoly p(c.ctx());
    p.add_term({}, c);
    return p;
}

bool NcPoly::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

NcPoly& NcPoly::add_term(const Word& w, const FieldElem& c) {
    if (!c.ctx().same(ctx_)) fail(Err::FieldMismatch, "NcPoly coefficient from another field");
    if (c.is_zero()) return *this;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "NcPoly + across fields");
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "NcPoly - across fields");
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "NcPoly * across fields");
    NcPoly r(a.ctx_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NcPoly operator*(const FieldElem& c, const NcPoly& a) {
    NcPoly r(a.ctx_);
    for (const auto& [w, coeff] : a.terms_) r.add_term(w, c * coeff);
    return r;
}

NcPoly NcPoly::operator-() const { return ctx_.from_int(-1) * *this; }

bool operator==(const NcPoly& a, const NcPoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "NcPoly == across fields");
    return a.terms_ == b.terms_;
}

std::size_t NcPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
}

std::uint32_t NcPoly::max_generator() const {
    std::uint32_t g = 0;
    for (const auto& [w, c] : terms_)
        for (std::uint32_t letter : w) g = std::max(g, letter);
    return g;
}

namespace {

int cmp_nc(const NcPoly& a, const NcPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    WordOrder less;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (int c = cmp_repr(ia->second, ib->second)) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

int cmp_mono(const CentralMonomial& a, const CentralMonomial& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = cmp(a[i], b[i])) return c;
    return 0;
}

bool is_negative_rational(const FieldElem& c) {
    return c.ctx().kind() == FieldKind::Rationals && sgn(c.rational()) < 0;
}

} // namespace

int cmp(const CentralSymbol& a, const CentralSymbol& b) {
    if (a.s != b.s) return a.s < b.s ? -1 : 1;
    return cmp(*a.arg, *b.arg);
}

// ---- TracePoly ----

TracePoly TracePoly::from_nc(NcPoly p) {
    TracePoly t(p.ctx());
    if (!p.is_zero()) t.terms_.emplace_back(CentralMonomial{}, std::move(p));
    return t;
}

TracePoly TracePoly::central(std::uint32_t s, TracePoly arg) {
    if (s < 1) fail(Err::IndexOutOfRange, "central symbol index must be >= 1");
    TracePoly t(arg.ctx());
    CentralMonomial mono{CentralSymbol{s, std::make_shared<const TracePoly>(std::move(arg))}};
    t.add_canonical(mono, NcPoly::from_word(t.ctx_, {}));
    return t;
}

bool TracePoly::is_pure_nc() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

NcPoly TracePoly::nc_part() const {
    if (!is_pure_nc()) fail(Err::InvalidInput, "trace polynomial has central symbols");
    return terms_.empty() ? NcPoly(ctx_) : terms_[0].second;
}

void TracePoly::add_canonical(const CentralMonomial& mono, const NcPoly& part) {
    if (part.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const auto& term, const CentralMonomial& m) { return cmp_mono(term.first, m) < 0; });
    if (it != terms_.end() && cmp_mono(it->first, mono) == 0) {
        NcPoly sum = it->second + part;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    } else {
        terms_.insert(it, {mono, part});
    }
}

TracePoly operator+(const TracePoly& a, const TracePoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "TracePoly + across fields");
    TracePoly r = a;
    for (const auto& [mono, part] : b.terms_) r.add_canonical(mono, part);
    return r;
}

TracePoly operator-(const TracePoly& a, const TracePoly& b) { return a + (-b); }

TracePoly TracePoly::operator-() const {
    TracePoly r(ctx_);
    for (const auto& [mono, part] : terms_) r.add_canonical(mono, -part);
    return r;
}

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "TracePoly * across fields");
    TracePoly r(a.ctx_);
    for (const auto& [ma, pa] : a.terms_)
        for (const auto& [mb, pb] : b.terms_) {
            CentralMonomial mono;
            mono.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono),
                       [](const CentralSymbol& x, const CentralSymbol& y) { return cmp(x, y) < 0; });
            r.add_canonical(mono, pa * pb);
        }
    return r;
}

int cmp(const TracePoly& a, const TracePoly& b) {
    if (!a.ctx_.same(b.ctx_)) fail(Err::FieldMismatch, "TracePoly comparison across fields");
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp_mono(a.terms_[i].first, b.terms_[i].first)) return c;
        if (int c = cmp_nc(a.terms_[i].second, b.terms_[i].second)) return c;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::size_t TracePoly::nesting_depth() const {
    std::size_t d = 0;
    for (const auto& [mono, part] : terms_)
        for (const CentralSymbol& sym : mono) d = std::max(d, 1 + sym.arg->nesting_depth());
    return d;
}

std::uint32_t TracePoly::max_generator() const {
    std::uint32_t g = 0;
    for (const auto& [mono, part] : terms_) {
        g = std::max(g, part.max_generator());
        for (const CentralSymbol& sym : mono) g = std::max(g, sym.arg->max_generator());
    }
    return g;
}

// ---- evaluation ----

Matrix eval_nc(const NcPoly& p, const MatTuple& x) {
    if (!p.ctx().same(x.ctx())) fail(Err::FieldMismatch, "polynomial and tuple over different fields");
    if (p.max_generator() > x.m())
        fail(Err::GeneratorOutOfRange, "polynomial uses X" + std::to_string(p.max_generator()) +
                                           " but tuple has m = " + std::to_string(x.m()));
    Matrix acc(x.ctx(), x.n(), x.n());
    for (const auto& [w, c] : p.terms()) acc = acc + c * eval_word(w, x);
    return acc;
}

Matrix eval_trace(const TracePoly& t, const MatTuple& x) {
    if (!t.ctx().same(x.ctx())) fail(Err::FieldMismatch, "polynomial and tuple over different fields");
    Matrix acc(x.ctx(), x.n(), x.n());
    for (const auto& [mono, part] : t.terms()) {
        FieldElem scale = x.ctx().one();
        for (const CentralSymbol& sym : mono) scale *= cs(eval_trace(*sym.arg, x), sym.s);
        acc = acc + scale * eval_nc(part, x);
    }
    return acc;
}

bool equivariance_check(const TracePoly& t, const MatTuple& x, const Matrix& g) {
    auto ginv = inverse(g);
    if (!ginv) fail(Err::SingularG, "equivariance_check needs invertible g");
    Matrix lhs = eval_trace(t, conjugate_tuple(g, x));
    Matrix rhs = g * eval_trace(t, x) * *ginv;
    return lhs == rhs;
}

// ---- text syntax ----

namespace {

struct Parser {
    const FieldCtx& F;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool starts_factor(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'c' || c == '(' || c == '[';
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(Err::ParseError, "expected digits at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    void expect(char c) {
        if (peek() != c) fail(Err::ParseError, std::string("expected '") + c + "' at position " + std::to_string(pos));
        ++pos;
    }

    std::uint64_t small_index(const std::string& d) {
        if (d.size() > 6) fail(Err::ParseError, "index too large: " + d);
        return std::stoull(d);
    }

    FieldElem elem_from_digits(const std::string& d) {
        if (F.kind() == FieldKind::Rationals) return F.from_rational(mpq_class(mpz_class(d)));
        std::uint64_t p = F.prime_modulus();
        std::uint64_t r = 0;
        for (char c : d) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        return F.kind() == FieldKind::Prime ? F.element_at(r) : F.from_int(static_cast<long long>(r));
    }

    TracePoly expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos;
            negate = true;
        }
        TracePoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + term();
            } else if (c == '-') {
                ++pos;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    TracePoly term() {
        TracePoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * factor();
            } else if (starts_factor(c)) {
                acc = acc * factor(); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    TracePoly factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            TracePoly inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'X') {
            ++pos;
            std::uint64_t idx = small_index(digits());
            if (idx < 1) fail(Err::ParseError, "generator index must be >= 1");
            return TracePoly::from_nc(NcPoly::from_word(F, {static_cast<std::uint32_t>(idx)}));
        }
        if (c == 'c') {
            ++pos;
            std::uint64_t sidx = small_index(digits());
            expect('(');
            TracePoly arg = expr();
            expect(')');
            return TracePoly::central(static_cast<std::uint32_t>(sidx), std::move(arg));
        }
        if (c == '[') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && s[pos] != ']') ++pos;
            if (pos == s.size()) fail(Err::ParseError, "unterminated '['");
            std::string inner = s.substr(start, pos - start);
            ++pos;
            return TracePoly::scalar(F.parse_elem(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            FieldElem num = elem_from_digits(digits());
            if (peek() == '/') {
                ++pos;
                FieldElem den = elem_from_digits(digits());
                return TracePoly::scalar(num / den);
            }
            return TracePoly::scalar(num);
        }
        fail(Err::ParseError, "unexpected character at position " + std::to_string(pos));
    }
};

std::string piece_to_string(const FieldCtx& F, const CentralMonomial& mono, const Word& w, const FieldElem& coef) {
    std::vector<std::string> factors;
    bool coef_is_one = coef.is_one();
    if (!coef_is_one || (mono.empty() && w.empty())) {
        std::string cstr = F.to_string(coef);
        if (F.kind() == FieldKind::Extension) cstr = "[" + cstr + "]";
        factors.push_back(cstr);
    }
    for (const CentralSymbol& sym : mono)
        factors.push_back("c" + std::to_string(sym.s) + "(" + sym.arg->to_string() + ")");
    if (!w.empty()) factors.push_back(word_to_string(w));
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += '*';
        out += factors[i];
    }
    return out;
}

std::string flatten_to_string(const FieldCtx& F, const std::vector<std::pair<CentralMonomial, NcPoly>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [mono, part] : terms) {
        for (const auto& [w, coef] : part.terms()) {
            FieldElem c = coef;
            bool neg = is_negative_rational(c);
            if (out.empty()) {
                if (neg) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += neg ? " - " : " + ";
                if (neg) c = -c;
            }
            out += piece_to_string(F, mono, w, c);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string NcPoly::to_string() const {
    return flatten_to_string(ctx_, {{CentralMonomial{}, *this}});
}

std::string TracePoly::to_string() const { return flatten_to_string(ctx_, terms_); }

TracePoly parse_trace_poly(const FieldCtx& F, const std::string& text) {
    Parser p{F, text};
    TracePoly t = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) fail(Err::ParseError, "trailing input at position " + std::to_string(p.pos));
    return t;
}

NcPoly parse_nc_poly(const FieldCtx& F, const std::string& text) {
    TracePoly t = parse_trace_poly(F, text);
    if (!t.is_pure_nc()) fail(Err::ParseError, "central symbols not allowed here");
    return t.nc_part();
}

} // namespace minv
