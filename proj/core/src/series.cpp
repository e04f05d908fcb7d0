#include "vfc/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace vfc {

namespace {
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }
}  // namespace

void LaurentSeries::normalize() {
    if (ram_ < 1) throw InvalidInput("series: ramification index must be >= 1");
    if (!exact_) {
        // drop anything at or beyond the precision boundary
        while (!coeffs_.empty() && lead_ + (long long)coeffs_.size() > prec_) coeffs_.pop_back();
    }
    size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip].is_zero()) ++skip;
    if (skip) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
        lead_ += (long long)skip;
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) {
        lead_ = exact_ ? 0 : prec_;
    } else if (!exact_ && prec_ <= lead_) {
        throw Error("series: internal precision invariant violated");
    }
    if (exact_) prec_ = 0;
}

LaurentSeries LaurentSeries::exact_zero(const GF& F, int ram) {
    LaurentSeries s;
    s.field_ = F;
    s.ram_ = ram;
    s.exact_ = true;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::zero_to_precision(const GF& F, long long prec, int ram) {
    LaurentSeries s;
    s.field_ = F;
    s.ram_ = ram;
    s.exact_ = false;
    s.prec_ = prec;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::monomial(const GF& F, const GFElem& c, long long idx, int ram) {
    LaurentSeries s;
    s.field_ = F;
    s.ram_ = ram;
    s.lead_ = idx;
    s.coeffs_ = {c};
    s.exact_ = true;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::constant(const GF& F, const GFElem& c, int ram) {
    return monomial(F, c, 0, ram);
}

LaurentSeries LaurentSeries::make(const GF& F, int ram, long long lead, std::vector<GFElem> coeffs,
                                  std::optional<long long> prec) {
    LaurentSeries s;
    s.field_ = F;
    s.ram_ = ram;
    s.lead_ = lead;
    s.coeffs_ = std::move(coeffs);
    s.exact_ = !prec.has_value();
    s.prec_ = prec.value_or(0);
    for (const auto& c : s.coeffs_) F.check(c);
    s.normalize();
    return s;
}

SeriesClass LaurentSeries::cls() const {
    if (exact_) return SeriesClass::ExactPolynomial;
    return coeffs_.empty() ? SeriesClass::ZeroToPrecision : SeriesClass::TruncatedUnknownTail;
}

GFElem LaurentSeries::coeff_at(long long idx) const {
    if (!exact_ && idx >= prec_)
        throw NeedsPrecision("coefficient at index " + std::to_string(idx) +
                             " beyond precision " + std::to_string(prec_));
    if (idx < lead_ || idx >= lead_ + (long long)coeffs_.size()) return field_.zero();
    return coeffs_[idx - lead_];
}

ValuationResult LaurentSeries::valuation() const {
    switch (cls()) {
        case SeriesClass::ExactPolynomial:
            if (coeffs_.empty()) return ValuationResult::exactly(ValueQ::infinity());
            return ValuationResult::exactly(ValueQ(Rat(lead_, ram_)));
        case SeriesClass::TruncatedUnknownTail:
            return ValuationResult::exactly(ValueQ(Rat(lead_, ram_)));
        case SeriesClass::ZeroToPrecision:
        default:
            return ValuationResult::at_least(Rat(prec_, ram_));
    }
}

GFElem LaurentSeries::residue() const {
    if (cls() == SeriesClass::ZeroToPrecision) {
        if (prec_ > 0) return field_.zero();
        throw NeedsPrecision("residue of a zero-to-precision series with prec <= 0");
    }
    if (is_exact_zero()) return field_.zero();
    if (lead_ < 0) return field_.zero();  // outside the valuation ring: constant 0
    return coeff_at(0);
}

void LaurentSeries::align(LaurentSeries& a, LaurentSeries& b) {
    if (!(a.field_ == b.field_)) throw InvalidInput("series: mismatched base fields");
    if (a.ram_ != b.ram_) {
        long long r = lcm_ll(a.ram_, b.ram_);
        a = a.reramify((int)r);
        b = b.reramify((int)r);
    }
}

LaurentSeries ls_add(const LaurentSeries& x0, const LaurentSeries& y0) {
    LaurentSeries x = x0, y = y0;
    LaurentSeries::align(x, y);
    LaurentSeries r;
    r.field_ = x.field_;
    r.ram_ = x.ram_;
    r.exact_ = x.exact_ && y.exact_;
    if (!r.exact_) {
        long long p = std::numeric_limits<long long>::max();
        if (!x.exact_) p = std::min(p, x.prec_);
        if (!y.exact_) p = std::min(p, y.prec_);
        r.prec_ = p;
    }
    long long lo = std::numeric_limits<long long>::max(), hi = std::numeric_limits<long long>::min();
    for (const LaurentSeries* s : {&x, &y}) {
        if (!s->coeffs_.empty()) {
            lo = std::min(lo, s->lead_);
            hi = std::max(hi, s->lead_ + (long long)s->coeffs_.size());
        }
    }
    if (lo > hi) {  // both windows empty
        r.lead_ = 0;
        r.normalize();
        return r;
    }
    if (!r.exact_) hi = std::min(hi, r.prec_);
    r.lead_ = lo;
    for (long long i = lo; i < hi; ++i) {
        GFElem cx = (i >= x.lead_ && i < x.lead_ + (long long)x.coeffs_.size()) ? x.coeffs_[i - x.lead_]
                                                                                : x.field_.zero();
        GFElem cy = (i >= y.lead_ && i < y.lead_ + (long long)y.coeffs_.size()) ? y.coeffs_[i - y.lead_]
                                                                                : y.field_.zero();
        r.coeffs_.push_back(x.field_.add(cx, cy));
    }
    r.normalize();
    return r;
}

LaurentSeries ls_neg(const LaurentSeries& x) {
    LaurentSeries r = x;
    for (auto& c : r.coeffs_) c = x.field_.neg(c);
    return r;
}

LaurentSeries ls_sub(const LaurentSeries& x, const LaurentSeries& y) { return ls_add(x, ls_neg(y)); }

LaurentSeries ls_mul(const LaurentSeries& x0, const LaurentSeries& y0) {
    LaurentSeries x = x0, y = y0;
    LaurentSeries::align(x, y);
    const GF& F = x.field_;
    if (x.is_exact_zero() || y.is_exact_zero()) return LaurentSeries::exact_zero(F, x.ram_);

    LaurentSeries r;
    r.field_ = F;
    r.ram_ = x.ram_;
    r.exact_ = x.exact_ && y.exact_;

    // valuation lower bounds of the operands
    auto lb = [](const LaurentSeries& s) { return s.coeffs_.empty() ? s.prec_ : s.lead_; };
    if (!r.exact_) {
        long long p = std::numeric_limits<long long>::max();
        if (!x.exact_) p = std::min(p, lb(y) + x.prec_);
        if (!y.exact_) p = std::min(p, lb(x) + y.prec_);
        r.prec_ = p;
    }
    if (x.coeffs_.empty() || y.coeffs_.empty()) {
        r.lead_ = 0;
        r.normalize();
        return r;
    }
    long long lo = x.lead_ + y.lead_;
    long long hi = x.lead_ + (long long)x.coeffs_.size() + y.lead_ + (long long)y.coeffs_.size() - 1;
    if (!r.exact_) hi = std::min(hi, r.prec_ - 1);
    if (hi < lo) {
        r.lead_ = 0;
        r.coeffs_.clear();
        r.normalize();
        return r;
    }
    r.lead_ = lo;
    r.coeffs_.assign((size_t)(hi - lo + 1), F.zero());
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j) {
            long long idx = x.lead_ + (long long)i + y.lead_ + (long long)j;
            if (idx > hi) break;
            size_t k = (size_t)(idx - lo);
            r.coeffs_[k] = F.add(r.coeffs_[k], F.mul(x.coeffs_[i], y.coeffs_[j]));
        }
    }
    r.normalize();
    return r;
}

LaurentSeries ls_inv(const LaurentSeries& x, long long window) {
    const GF& F = x.field_;
    if (x.is_exact_zero()) throw DivisionByZero("inverse of the exact zero series");
    if (x.cls() == SeriesClass::ZeroToPrecision)
        throw NeedsPrecision("inverse requires an exactly known valuation");
    long long w;
    if (x.exact_) {
        w = window > 0 ? window : kDefaultPrecision;
    } else {
        w = x.prec_ - x.lead_;
        if (window > 0) w = std::min(w, window);
    }
    GFElem c0i = F.inv(x.coeffs_[0]);
    std::vector<GFElem> b((size_t)w, F.zero());
    b[0] = c0i;
    for (long long k = 1; k < w; ++k) {
        GFElem acc = F.zero();
        long long jmax = std::min<long long>(k, (long long)x.coeffs_.size() - 1);
        for (long long j = 1; j <= jmax; ++j)
            acc = F.add(acc, F.mul(x.coeffs_[(size_t)j], b[(size_t)(k - j)]));
        b[(size_t)k] = F.neg(F.mul(c0i, acc));
    }
    bool exact_result = x.exact_ && x.coeffs_.size() == 1;  // only monomials invert exactly
    LaurentSeries r;
    r.field_ = F;
    r.ram_ = x.ram_;
    r.lead_ = -x.lead_;
    r.coeffs_ = std::move(b);
    r.exact_ = exact_result;
    if (!exact_result) r.prec_ = -x.lead_ + w;
    if (exact_result) r.coeffs_.resize(1);
    r.normalize();
    return r;
}

LaurentSeries ls_div(const LaurentSeries& x, const LaurentSeries& y, long long window) {
    return ls_mul(x, ls_inv(y, window));
}

LaurentSeries LaurentSeries::pow(long long k, long long window) const {
    if (k < 0) return ls_inv(*this, window).pow(-k, window);
    LaurentSeries r = LaurentSeries::one(field_, ram_);
    LaurentSeries b = *this;
    unsigned long long e = (unsigned long long)k;
    while (e) {
        if (e & 1) r = ls_mul(r, b);
        b = e > 1 ? ls_mul(b, b) : b;
        e >>= 1;
    }
    return r;
}

LaurentSeries LaurentSeries::truncate(long long prec) const {
    LaurentSeries r = *this;
    if (!r.exact_ && r.prec_ <= prec) return r;  // cannot gain knowledge
    r.exact_ = false;
    r.prec_ = prec;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::reramify(int new_ram) const {
    if (new_ram == ram_) return *this;
    LaurentSeries r;
    r.field_ = field_;
    r.ram_ = new_ram;
    r.exact_ = exact_;
    if (new_ram % ram_ == 0) {
        long long k = new_ram / ram_;
        r.lead_ = lead_ * k;
        if (!exact_) r.prec_ = prec_ * k;
        if (!coeffs_.empty()) {
            r.coeffs_.assign((size_t)((coeffs_.size() - 1) * k + 1), field_.zero());
            for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * (size_t)k] = coeffs_[i];
        }
    } else if (ram_ % new_ram == 0) {
        long long k = ram_ / new_ram;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero() && (lead_ + (long long)i) % k != 0)
                throw InvalidInput("reramify: exponent not representable at ram " +
                                   std::to_string(new_ram));
        if (!coeffs_.empty() && lead_ % k != 0)
            throw InvalidInput("reramify: exponent not representable at ram " + std::to_string(new_ram));
        r.lead_ = coeffs_.empty() ? 0 : lead_ / k;
        if (!exact_) r.prec_ = (prec_ + k - 1) / k;  // first unknown coarse index
        if (!coeffs_.empty()) {
            r.coeffs_.assign((size_t)((long long)(coeffs_.size() - 1) / k + 1), field_.zero());
            for (size_t i = 0; i < coeffs_.size(); i += (size_t)k) r.coeffs_[i / (size_t)k] = coeffs_[i];
        }
    } else {
        throw InvalidInput("reramify: target must be a multiple or divisor of the current index");
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::reinterpret_base() const {
    LaurentSeries r = *this;
    r.ram_ = 1;
    return r;
}

LaurentSeries LaurentSeries::frobenius() const {
    const long long p = field_.p();
    LaurentSeries r;
    r.field_ = field_;
    r.ram_ = ram_;
    r.exact_ = exact_;
    r.lead_ = lead_ * p;
    if (!exact_) r.prec_ = prec_ * p;
    if (!coeffs_.empty()) {
        r.coeffs_.assign((size_t)((coeffs_.size() - 1) * p + 1), field_.zero());
        for (size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i * (size_t)p] = field_.pow(coeffs_[i], (uint64_t)p);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::substitute(const LaurentSeries& s, long long window) const {
    if (!exact_) throw InvalidInput("substitute: input series must be exact");
    if (ram_ != 1) throw InvalidInput("substitute: input must live on the integer grid");
    if (!s.exact()) throw InvalidInput("substitute: substituted value must be exact");
    auto vs = s.valuation();
    if (s.is_exact_zero() || !(ValueQ(Rat(0)) < vs.value))
        throw InvalidInput("substitute: value must satisfy v(s) > 0 and s != 0");
    const GF& F = field_;
    if (coeffs_.empty()) return exact_zero(F, s.ram());
    long long w = window > 0 ? window : kDefaultPrecision;
    LaurentSeries acc = exact_zero(F, s.ram());
    // Horner over nonnegative part; negative part via one inversion.
    LaurentSeries spos = s;
    LaurentSeries result_neg = exact_zero(F, s.ram());
    long long neg_terms = 0;
    if (lead_ < 0) {
        LaurentSeries sinv = ls_inv(s, w);
        for (long long i = lead_; i < 0 && i < lead_ + (long long)coeffs_.size(); ++i) {
            GFElem c = coeffs_[(size_t)(i - lead_)];
            if (c.is_zero()) continue;
            result_neg = ls_add(result_neg, ls_mul(constant(F, c, s.ram()), sinv.pow(-i)));
            ++neg_terms;
        }
    }
    // nonnegative exponents, highest first (Horner)
    long long top = lead_ + (long long)coeffs_.size() - 1;
    if (top >= 0) {
        for (long long i = top; i >= std::max<long long>(0, lead_); --i) {
            acc = ls_mul(acc, spos);
            GFElem c = coeff_at(i);
            if (!c.is_zero()) acc = ls_add(acc, constant(F, c, s.ram()));
        }
        for (long long i = std::max<long long>(0, lead_); i > 0; --i) acc = ls_mul(acc, spos);
    }
    return ls_add(acc, result_neg);
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return field_ == o.field_ && ram_ == o.ram_ && lead_ == o.lead_ && coeffs_ == o.coeffs_ &&
           exact_ == o.exact_ && (exact_ || prec_ == o.prec_);
}

LaurentSeries canonical_section(const GF& F, const GFElem& a, int ram) {
    return LaurentSeries::constant(F, a, ram);
}

// -------- text form --------

namespace {

std::string exponent_text(long long idx, int ram) {
    Rat e(idx, ram);
    if (e.is_integer()) {
        if (e.num == 1) return "t";
        return "t^" + std::to_string(e.num);
    }
    return "t^(" + e.str() + ")";
}

std::string coef_text(const GF& F, const GFElem& c) {
    std::string s = F.to_string(c);
    bool simple = s.find('+') == std::string::npos && s.find('*') == std::string::npos;
    return simple ? s : "(" + s + ")";
}

}  // namespace

std::string print_series(const LaurentSeries& x) {
    const GF& F = x.field();
    std::string body;
    if (x.coeffs().empty()) {
        body = "0";
    } else {
        bool first = true;
        for (size_t i = 0; i < x.coeffs().size(); ++i) {
            const GFElem& c = x.coeffs()[i];
            if (c.is_zero()) continue;
            long long idx = x.lead_index() + (long long)i;
            if (!first) body += " + ";
            first = false;
            if (idx == 0) {
                body += coef_text(F, c);
            } else if (c == F.one()) {
                body += exponent_text(idx, x.ram());
            } else {
                body += coef_text(F, c) + "*" + exponent_text(idx, x.ram());
            }
        }
    }
    if (!x.exact()) {
        Rat p(x.prec_index(), x.ram());
        body += " (mod t^";
        body += p.is_integer() ? std::to_string(p.num) : "(" + p.str() + ")";
        body += ")";
    }
    body += " @ " + F.tag() + ", ram " + std::to_string(x.ram());
    return body;
}

namespace {

struct SCursor {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        ws();
        return i < s.size() && s[i] == c;
    }
    bool eat_word(const char* w) {
        ws();
        size_t j = i, k = 0;
        while (w[k] && j < s.size() && s[j] == w[k]) ++j, ++k;
        if (w[k]) return false;
        i = j;
        return true;
    }
    long long integer() {
        ws();
        bool negate = eat('-');
        size_t st = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == st) throw InvalidInput("series parse: expected integer in '" + s + "'");
        long long v = std::stoll(s.substr(st, i - st));
        return negate ? -v : v;
    }
    Rat rational() {
        // n, -n, (n/d), (-n/d)
        ws();
        if (eat('(')) {
            long long n = integer();
            long long d = 1;
            if (eat('/')) d = integer();
            if (!eat(')')) throw InvalidInput("series parse: missing ')' in exponent");
            return Rat(n, d);
        }
        return Rat(integer());
    }
};

GFElem parse_coef(const GF& F, SCursor& c) {
    c.ws();
    if (c.eat('(')) {
        size_t depth = 1, st = c.i;
        while (c.i < c.s.size() && depth) {
            if (c.s[c.i] == '(') ++depth;
            if (c.s[c.i] == ')') --depth;
            ++c.i;
        }
        if (depth) throw InvalidInput("series parse: unbalanced parentheses");
        extern GFElem parse_gf_poly_part_fwd(const GF&, const std::string&);
        std::string inner = c.s.substr(st, c.i - 1 - st);
        // forward to the gf module's polynomial-part parser
        GFElem parse_gf_poly_part_call(const GF& F, const std::string& text);
        return parse_gf_poly_part_call(F, inner);
    }
    // plain integer or bare g-power
    size_t st = c.i;
    while (c.i < c.s.size() &&
           (std::isalnum((unsigned char)c.s[c.i]) || c.s[c.i] == '^'))
        ++c.i;
    GFElem parse_gf_poly_part_call(const GF& F, const std::string& text);
    return parse_gf_poly_part_call(F, c.s.substr(st, c.i - st));
}

}  // namespace

// thin bridge to the parser in gf.cpp
GFElem parse_gf_poly_part(const GF& F, const std::string& text);
GFElem parse_gf_poly_part_call(const GF& F, const std::string& text) {
    return parse_gf_poly_part(F, text);
}

LaurentSeries parse_series(const std::string& text) {
    // split at '@'; field tag first so term coefficients can be interpreted
    auto at = text.rfind('@');
    if (at == std::string::npos) throw InvalidInput("series parse: missing '@ GF(...)' tag");
    SCursor tagc{text};
    tagc.i = at + 1;
    if (!tagc.eat_word("GF") || !tagc.eat('(')) throw InvalidInput("series parse: bad field tag");
    long long p = tagc.integer();
    long long n = 1;
    if (tagc.eat('^')) n = tagc.integer();
    if (!tagc.eat(')')) throw InvalidInput("series parse: bad field tag");
    int ram = 1;
    if (tagc.eat(',')) {
        if (!tagc.eat_word("ram")) throw InvalidInput("series parse: expected 'ram'");
        ram = (int)tagc.integer();
    }
    GF F((uint32_t)p, (uint32_t)n);

    std::string body = text.substr(0, at);
    // optional "(mod t^P)" tail
    std::optional<long long> prec_idx;
    auto mod_pos = body.rfind("(mod");
    if (mod_pos != std::string::npos) {
        SCursor mc{body};
        mc.i = mod_pos + 4;
        if (!mc.eat_word("t")) throw InvalidInput("series parse: bad (mod t^P) tail");
        if (!mc.eat('^')) throw InvalidInput("series parse: bad (mod t^P) tail");
        Rat pr = mc.rational();
        if (!mc.eat(')')) throw InvalidInput("series parse: bad (mod t^P) tail");
        if ((long long)ram % pr.den != 0)
            throw InvalidInput("series parse: precision exponent not on the ram grid");
        prec_idx = pr.num * (ram / pr.den);
        body = body.substr(0, mod_pos);
    }

    SCursor c{body};
    struct RawTerm {
        GFElem coef;
        long long idx;
    };
    std::vector<RawTerm> terms;
    bool first = true;
    for (;;) {
        c.ws();
        if (c.i >= body.size()) break;
        bool negate = false;
        if (!first) {
            if (c.eat('+')) {
            } else if (c.eat('-')) {
                negate = true;
            } else {
                throw InvalidInput("series parse: expected '+' between terms in '" + body + "'");
            }
        } else if (c.eat('-')) {
            negate = true;
        }
        first = false;
        c.ws();
        GFElem coef = F.one();
        bool have_coef = false;
        if (!c.peek('t')) {
            coef = parse_coef(F, c);
            have_coef = true;
        }
        long long idx = 0;
        c.ws();
        bool have_t = false;
        if (have_coef && c.eat('*')) {
            c.ws();
        }
        if (c.peek('t')) {
            // avoid eating 't' of a following token: only bare t / t^...
            ++c.i;
            have_t = true;
            Rat e(1);
            if (c.eat('^')) e = c.rational();
            if ((long long)ram % e.den != 0)
                throw InvalidInput("series parse: exponent " + e.str() + " not on the ram grid");
            idx = e.num * (ram / e.den);
        }
        if (!have_coef && !have_t) throw InvalidInput("series parse: malformed term");
        if (negate) coef = F.neg(coef);
        terms.push_back({coef, idx});
    }
    if (terms.size() == 1 && terms[0].idx == 0 && terms[0].coef.is_zero() && !prec_idx) {
        return LaurentSeries::exact_zero(F, ram);
    }
    long long lo = 0, hi = 0;
    bool any = false;
    for (auto& t : terms) {
        if (t.coef.is_zero()) continue;
        if (!any) {
            lo = hi = t.idx;
            any = true;
        } else {
            lo = std::min(lo, t.idx);
            hi = std::max(hi, t.idx);
        }
    }
    if (!any) {
        if (prec_idx) return LaurentSeries::zero_to_precision(F, *prec_idx, ram);
        return LaurentSeries::exact_zero(F, ram);
    }
    std::vector<GFElem> coeffs((size_t)(hi - lo + 1), F.zero());
    for (auto& t : terms) {
        if (t.coef.is_zero()) continue;
        coeffs[(size_t)(t.idx - lo)] = F.add(coeffs[(size_t)(t.idx - lo)], t.coef);
    }
    return LaurentSeries::make(F, ram, lo, std::move(coeffs), prec_idx);
}

std::string LaurentSeries::to_string() const { return print_series(*this); }

}  // namespace vfc
