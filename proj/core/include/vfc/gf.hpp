#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vfc/errors.hpp"

namespace vfc {

// An element of GF(p^n) in the power basis of the modulus: coeffs[i] is the
// coefficient of g^i, each in [0, p). The field it belongs to is carried by
// the GF object, not the element.
struct GFElem {
    std::vector<uint32_t> coeffs;

    bool operator==(const GFElem&) const = default;
    bool is_zero() const {
        for (uint32_t c : coeffs)
            if (c) return false;
        return true;
    }
};

// The finite field GF(p^n), q = p^n <= 2^20. Elements are vectors in the
// power basis of a monic irreducible modulus of degree n over F_p. If no
// modulus is supplied, the lexicographically least irreducible one is chosen
// (coefficient tuples compared as base-p integers, constant term least
// significant), so serialized elements are reproducible across runs.
class GF {
  public:
    GF() = default;
    GF(uint32_t p, uint32_t n);
    GF(uint32_t p, uint32_t n, std::vector<uint32_t> modulus);

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    bool operator==(const GF& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
    }

    GFElem zero() const { return GFElem{std::vector<uint32_t>(n_, 0)}; }
    GFElem one() const { return from_int(1); }
    GFElem generator() const;           // g, the power-basis generator (n >= 2)
    GFElem from_int(long long v) const; // v mod p embedded in the prime field

    GFElem add(const GFElem& a, const GFElem& b) const;
    GFElem sub(const GFElem& a, const GFElem& b) const;
    GFElem neg(const GFElem& a) const;
    GFElem mul(const GFElem& a, const GFElem& b) const;
    GFElem inv(const GFElem& a) const;  // throws DivisionByZero on 0
    GFElem pow(const GFElem& a, uint64_t k) const;

    // a^(p^k); frobenius(a, n) == a.
    GFElem frobenius(const GFElem& a, uint32_t k = 1) const;
    // The inverse of a |-> a^p (exists since GF(q) is perfect).
    GFElem frobenius_inv(const GFElem& a) const { return frobenius(a, n_ == 0 ? 0 : n_ - 1); }

    // Lexicographic enumeration of the whole field: index 0 is 0, then
    // counting up with coeffs[0] least significant.
    uint64_t index_of(const GFElem& a) const;
    GFElem elem_at(uint64_t idx) const;

    // "g^3+2*g+1" (no field tag) and "g^3+2*g+1 @ GF(2^4)" forms.
    std::string to_string(const GFElem& a) const;
    std::string to_string_tagged(const GFElem& a) const;
    std::string tag() const;  // "GF(5)" or "GF(2^4)"

    void check(const GFElem& a) const;

  private:
    uint32_t p_ = 0;
    uint32_t n_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;  // degree n monic: modulus_[n] == 1

    void init_checks() const;
};

// Parses "g^3+2*g+1 @ GF(2^4)"; round-trips to_string_tagged bit-exactly.
std::pair<GF, GFElem> parse_gf_elem(const std::string& text);

// -------- dense univariate polynomials over GF(q) --------
// coeffs[i] is the coefficient of X^i; normalized form has a nonzero lead
// (or is empty, representing the zero polynomial).

using GFPoly = std::vector<GFElem>;

GFPoly gfpoly_trim(const GF& F, GFPoly f);
int gfpoly_deg(const GFPoly& f);  // -1 for zero
bool gfpoly_is_zero(const GFPoly& f);
GFPoly gfpoly_add(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gfpoly_sub(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gfpoly_mul(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gfpoly_scale(const GF& F, const GFElem& c, const GFPoly& a);
// Division with remainder; divisor must be nonzero.
std::pair<GFPoly, GFPoly> gfpoly_divmod(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gfpoly_gcd(const GF& F, GFPoly a, GFPoly b);  // monic gcd
GFPoly gfpoly_deriv(const GF& F, const GFPoly& f);
GFElem gfpoly_eval(const GF& F, const GFPoly& f, const GFElem& x);

// All roots in GF(q), by full enumeration, in enumeration order.
// Throws InvalidInput on the zero polynomial.
std::vector<GFElem> poly_roots_gf(const GF& F, const GFPoly& f);

bool gfpoly_irreducible(const GF& F, const GFPoly& f);

}  // namespace vfc
