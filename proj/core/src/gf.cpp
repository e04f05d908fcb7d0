#include "vfc/gf.hpp"

#include <algorithm>
#include <cctype>

namespace vfc {

namespace {

constexpr uint64_t kMaxQ = 1ull << 20;  // desk-scale bound: exhaustion must stay feasible

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// F_p[x] helpers on raw coefficient vectors (used before a GF object exists).
using PPoly = std::vector<uint32_t>;

PPoly ppoly_trim(PPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PPoly ppoly_mod(PPoly a, const PPoly& b, uint32_t p) {
    // b monic
    a = ppoly_trim(std::move(a));
    int db = (int)b.size() - 1;
    while ((int)a.size() - 1 >= db) {
        uint32_t c = a.back();
        int shift = (int)a.size() - 1 - db;
        for (int i = 0; i <= db; ++i) {
            uint64_t t = (uint64_t)c * b[i] % p;
            uint32_t& ai = a[i + shift];
            ai = (uint32_t)((ai + p - t) % p);
        }
        a = ppoly_trim(std::move(a));
    }
    return a;
}

PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    return ppoly_mod(std::move(r), m, p);
}

bool ppoly_irreducible(const PPoly& f, uint32_t p) {
    // Exhaustive trial division by monic polynomials of degree <= deg(f)/2.
    int d = (int)f.size() - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            PPoly g(dd + 1, 0);
            g[dd] = 1;
            uint64_t v = idx;
            for (int i = 0; i < dd; ++i) {
                g[i] = (uint32_t)(v % p);
                v /= p;
            }
            if (ppoly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

GF::GF(uint32_t p, uint32_t n) : p_(p), n_(n) {
    if (!is_prime(p)) throw InvalidInput("GF: characteristic must be prime, got " + std::to_string(p));
    if (n < 1) throw InvalidInput("GF: extension degree must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > kMaxQ) throw InvalidInput("GF: q exceeds the desk-scale bound 2^20");
    }
    // Lexicographically least irreducible monic modulus, counting the
    // non-leading coefficient tuple as a base-p integer.
    uint64_t count = 1;
    for (uint32_t i = 0; i < n; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        PPoly f(n + 1, 0);
        f[n] = 1;
        uint64_t v = idx;
        for (uint32_t i = 0; i < n; ++i) {
            f[i] = (uint32_t)(v % p);
            v /= p;
        }
        if (n == 1 || ppoly_irreducible(f, p)) {
            modulus_ = std::move(f);
            return;
        }
    }
    throw Error("GF: no irreducible modulus found");  // unreachable
}

GF::GF(uint32_t p, uint32_t n, std::vector<uint32_t> modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw InvalidInput("GF: characteristic must be prime");
    if (n < 1) throw InvalidInput("GF: extension degree must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > kMaxQ) throw InvalidInput("GF: q exceeds the desk-scale bound 2^20");
    }
    if (modulus_.size() != n + 1 || modulus_[n] != 1)
        throw InvalidInput("GF: modulus must be monic of degree n");
    for (uint32_t c : modulus_)
        if (c >= p) throw InvalidInput("GF: modulus coefficients must be reduced mod p");
    if (n > 1 && !ppoly_irreducible(modulus_, p))
        throw InvalidInput("GF: modulus is reducible");
}

void GF::init_checks() const {
    if (p_ == 0) throw InvalidInput("GF: uninitialized field");
}

void GF::check(const GFElem& a) const {
    if (a.coeffs.size() != n_) throw InvalidInput("GFElem: wrong coefficient count for this field");
    for (uint32_t c : a.coeffs)
        if (c >= p_) throw InvalidInput("GFElem: coefficient out of range");
}

GFElem GF::generator() const {
    if (n_ < 2) throw InvalidInput("GF: prime field has no power-basis generator");
    GFElem g = zero();
    g.coeffs[1] = 1;
    return g;
}

GFElem GF::from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    GFElem e = zero();
    e.coeffs[0] = (uint32_t)r;
    return e;
}

GFElem GF::add(const GFElem& a, const GFElem& b) const {
    GFElem r = zero();
    for (uint32_t i = 0; i < n_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return r;
}

GFElem GF::sub(const GFElem& a, const GFElem& b) const {
    GFElem r = zero();
    for (uint32_t i = 0; i < n_; ++i) r.coeffs[i] = (a.coeffs[i] + p_ - b.coeffs[i]) % p_;
    return r;
}

GFElem GF::neg(const GFElem& a) const { return sub(zero(), a); }

GFElem GF::mul(const GFElem& a, const GFElem& b) const {
    PPoly r(2 * n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        if (!a.coeffs[i]) continue;
        for (uint32_t j = 0; j < n_; ++j)
            r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a.coeffs[i] * b.coeffs[j]) % p_);
    }
    PPoly m = ppoly_mod(std::move(r), modulus_, p_);
    GFElem out = zero();
    for (size_t i = 0; i < m.size(); ++i) out.coeffs[i] = m[i];
    return out;
}

GFElem GF::inv(const GFElem& a) const {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in " + tag());
    // Extended Euclid in F_p[x] against the modulus.
    auto pinv = [&](uint32_t v) {
        // Fermat: v^(p-2)
        uint64_t r = 1, b = v, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return (uint32_t)r;
    };
    PPoly r0 = modulus_, r1(a.coeffs.begin(), a.coeffs.end());
    r1 = ppoly_trim(std::move(r1));
    PPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        PPoly q;
        PPoly rem = r0;
        int d1 = (int)r1.size() - 1;
        uint32_t lc_inv = pinv(r1.back());
        rem = ppoly_trim(std::move(rem));
        while ((int)rem.size() - 1 >= d1 && !rem.empty()) {
            int shift = (int)rem.size() - 1 - d1;
            uint32_t c = (uint32_t)((uint64_t)rem.back() * lc_inv % p_);
            if ((int)q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (int i = 0; i <= d1; ++i) {
                uint64_t t = (uint64_t)c * r1[i] % p_;
                rem[i + shift] = (uint32_t)((rem[i + shift] + p_ - t) % p_);
            }
            rem = ppoly_trim(std::move(rem));
        }
        // s such that s*a = r (mod modulus): s_next = s0 - q*s1
        PPoly qs1(q.size() + s1.size(), 0);
        if (!q.empty() && !s1.empty()) {
            qs1.assign(q.size() + s1.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j)
                    qs1[i + j] = (uint32_t)((qs1[i + j] + (uint64_t)q[i] * s1[j]) % p_);
        } else {
            qs1.clear();
        }
        PPoly s2(std::max(s0.size(), qs1.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            uint32_t x = i < s0.size() ? s0[i] : 0;
            uint32_t y = i < qs1.size() ? qs1[i] : 0;
            s2[i] = (x + p_ - y) % p_;
        }
        s0 = std::move(s1);
        s1 = ppoly_trim(std::move(s2));
        r0 = r1;
        r1 = ppoly_trim(std::move(rem));
    }
    // r0 is a unit (degree 0) since the modulus is irreducible.
    if (r0.size() != 1) throw Error("GF::inv: gcd not a unit (modulus not irreducible?)");
    uint32_t scale = pinv(r0[0]);
    GFElem out = zero();
    PPoly s = ppoly_mod(std::move(s0), modulus_, p_);
    for (size_t i = 0; i < s.size(); ++i) out.coeffs[i] = (uint32_t)((uint64_t)s[i] * scale % p_);
    return out;
}

GFElem GF::pow(const GFElem& a, uint64_t k) const {
    GFElem r = one(), b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

GFElem GF::frobenius(const GFElem& a, uint32_t k) const {
    GFElem r = a;
    for (uint32_t i = 0; i < k % n_; ++i) r = pow(r, p_);
    return r;
}

uint64_t GF::index_of(const GFElem& a) const {
    uint64_t idx = 0;
    for (uint32_t i = n_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
    return idx;
}

GFElem GF::elem_at(uint64_t idx) const {
    GFElem e = zero();
    for (uint32_t i = 0; i < n_; ++i) {
        e.coeffs[i] = (uint32_t)(idx % p_);
        idx /= p_;
    }
    if (idx != 0) throw InvalidInput("GF::elem_at: index out of range");
    return e;
}

std::string GF::tag() const {
    if (n_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(n_) + ")";
}

std::string GF::to_string(const GFElem& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (uint32_t i = n_; i-- > 0;) {
        uint32_t c = a.coeffs[i];
        if (!c) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (i == 1) ? "g" : "g^" + std::to_string(i);
        }
    }
    return out;
}

std::string GF::to_string_tagged(const GFElem& a) const { return to_string(a) + " @ " + tag(); }

namespace {

struct GfTextCursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_str(const char* t) {
        skip_ws();
        size_t j = i, k = 0;
        while (t[k] && j < s.size() && s[j] == t[k]) ++j, ++k;
        if (t[k]) return false;
        i = j;
        return true;
    }
    long long number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) throw InvalidInput("GF parse: expected number in '" + s + "'");
        return std::stoll(s.substr(start, i - start));
    }
};

}  // namespace

// Used both standalone and by the series parser (which parses the poly part
// against a field it already knows).
GFElem parse_gf_poly_part(const GF& F, const std::string& text) {
    GfTextCursor c{text};
    GFElem acc = F.zero();
    bool first = true;
    for (;;) {
        c.skip_ws();
        if (c.i >= text.size()) break;
        bool negate = false;
        if (!first || text[c.i] == '+' || text[c.i] == '-') {
            if (c.eat('+')) {
            } else if (c.eat('-')) {
                negate = true;
            } else if (!first) {
                throw InvalidInput("GF parse: expected '+' in '" + text + "'");
            }
        }
        first = false;
        c.skip_ws();
        long long coef = 1;
        bool have_coef = false;
        if (c.i < text.size() && std::isdigit((unsigned char)text[c.i])) {
            coef = c.number();
            have_coef = true;
            c.eat('*');
        }
        uint32_t power = 0;
        c.skip_ws();
        if (c.i < text.size() && text[c.i] == 'g') {
            ++c.i;
            power = 1;
            if (c.eat('^')) power = (uint32_t)c.number();
        } else if (!have_coef) {
            throw InvalidInput("GF parse: expected term in '" + text + "'");
        }
        if (power >= F.n())
            throw InvalidInput("GF parse: exponent " + std::to_string(power) + " >= degree " +
                               std::to_string(F.n()));
        GFElem term = F.zero();
        long long r = coef % (long long)F.p();
        if (r < 0) r += F.p();
        term.coeffs[power] = (uint32_t)r;
        if (negate) term = F.neg(term);
        acc = F.add(acc, term);
    }
    return acc;
}

std::pair<GF, GFElem> parse_gf_elem(const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos) throw InvalidInput("GF parse: missing '@ GF(...)' tag");
    std::string poly = text.substr(0, at);
    GfTextCursor c{text};
    c.i = at + 1;
    if (!c.eat_str("GF") || !c.eat('(')) throw InvalidInput("GF parse: bad field tag");
    uint32_t p = (uint32_t)c.number();
    uint32_t n = 1;
    if (c.eat('^')) n = (uint32_t)c.number();
    if (!c.eat(')')) throw InvalidInput("GF parse: bad field tag");
    GF F(p, n);
    return {F, parse_gf_poly_part(F, poly)};
}

// -------- polynomials --------

GFPoly gfpoly_trim(const GF& F, GFPoly f) {
    (void)F;
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int gfpoly_deg(const GFPoly& f) { return (int)f.size() - 1; }

bool gfpoly_is_zero(const GFPoly& f) { return f.empty(); }

GFPoly gfpoly_add(const GF& F, const GFPoly& a, const GFPoly& b) {
    GFPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        GFElem x = i < a.size() ? a[i] : F.zero();
        GFElem y = i < b.size() ? b[i] : F.zero();
        r[i] = F.add(x, y);
    }
    return gfpoly_trim(F, std::move(r));
}

GFPoly gfpoly_sub(const GF& F, const GFPoly& a, const GFPoly& b) {
    GFPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        GFElem x = i < a.size() ? a[i] : F.zero();
        GFElem y = i < b.size() ? b[i] : F.zero();
        r[i] = F.sub(x, y);
    }
    return gfpoly_trim(F, std::move(r));
}

GFPoly gfpoly_mul(const GF& F, const GFPoly& a, const GFPoly& b) {
    if (a.empty() || b.empty()) return {};
    GFPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return gfpoly_trim(F, std::move(r));
}

GFPoly gfpoly_scale(const GF& F, const GFElem& c, const GFPoly& a) {
    GFPoly r = a;
    for (auto& x : r) x = F.mul(c, x);
    return gfpoly_trim(F, std::move(r));
}

std::pair<GFPoly, GFPoly> gfpoly_divmod(const GF& F, const GFPoly& a, const GFPoly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    GFPoly rem = a, q;
    GFElem lci = F.inv(b.back());
    int db = gfpoly_deg(b);
    while (gfpoly_deg(rem) >= db) {
        int shift = gfpoly_deg(rem) - db;
        GFElem c = F.mul(rem.back(), lci);
        if ((int)q.size() < shift + 1) q.resize(shift + 1, F.zero());
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem[i + shift] = F.sub(rem[i + shift], F.mul(c, b[i]));
        rem = gfpoly_trim(F, std::move(rem));
    }
    return {gfpoly_trim(F, std::move(q)), rem};
}

GFPoly gfpoly_gcd(const GF& F, GFPoly a, GFPoly b) {
    a = gfpoly_trim(F, std::move(a));
    b = gfpoly_trim(F, std::move(b));
    while (!b.empty()) {
        auto [q, r] = gfpoly_divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = gfpoly_scale(F, F.inv(a.back()), a);
    return a;
}

GFPoly gfpoly_deriv(const GF& F, const GFPoly& f) {
    if (f.size() <= 1) return {};
    GFPoly r(f.size() - 1, F.zero());
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(F.from_int((long long)i), f[i]);
    return gfpoly_trim(F, std::move(r));
}

GFElem gfpoly_eval(const GF& F, const GFPoly& f, const GFElem& x) {
    GFElem acc = F.zero();
    for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

std::vector<GFElem> poly_roots_gf(const GF& F, const GFPoly& f) {
    if (gfpoly_is_zero(f)) throw InvalidInput("poly_roots_gf: zero polynomial");
    std::vector<GFElem> roots;
    for (uint64_t i = 0; i < F.q(); ++i) {
        GFElem a = F.elem_at(i);
        if (gfpoly_eval(F, f, a).is_zero()) roots.push_back(a);
    }
    return roots;
}

bool gfpoly_irreducible(const GF& F, const GFPoly& f) {
    int d = gfpoly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by all monic polynomials of degree <= d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= F.q();
        for (uint64_t idx = 0; idx < count; ++idx) {
            GFPoly g(dd + 1, F.zero());
            g[dd] = F.one();
            uint64_t v = idx;
            for (int i = 0; i < dd; ++i) {
                g[i] = F.elem_at(v % F.q());
                v /= F.q();
            }
            if (gfpoly_divmod(F, f, g).second.empty()) return false;
        }
    }
    return true;
}

}  // namespace vfc
