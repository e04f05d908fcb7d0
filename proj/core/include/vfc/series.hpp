#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfc/gf.hpp"
#include "vfc/rational.hpp"

namespace vfc {

// Precision class of a series value.
//   ExactPolynomial    - finitely many terms, tail known to be zero forever;
//                        the only class supporting exact equality tests.
//   TruncatedUnknownTail - known modulo t^(prec/ram), tail unknown.
//   ZeroToPrecision    - no nonzero coefficient known; the valuation of such
//                        an element is unknowable, only bounded below.
enum class SeriesClass { ExactPolynomial, TruncatedUnknownTail, ZeroToPrecision };

// What valuation() can report. Exact carries the value (infinity for the
// exact zero). AtLeast is the three-valued answer for a truncated zero:
// the true valuation is >= bound, and callers must never promote it to
// infinity.
struct ValuationResult {
    enum class Kind { Exact, AtLeast } kind;
    ValueQ value;  // Exact: the valuation; AtLeast: the lower bound (finite)

    bool exact() const { return kind == Kind::Exact; }
    static ValuationResult exactly(ValueQ v) { return {Kind::Exact, v}; }
    static ValuationResult at_least(Rat b) { return {Kind::AtLeast, ValueQ(b)}; }
};

// A precision-tracked Laurent series over GF(q) with exponents in (1/ram)Z.
// coeffs[i] is the coefficient of t^((lead+i)/ram). Invariants: the first and
// last stored coefficients are nonzero (normal form), stored indices stay
// below prec, and prec > lead whenever coeffs is nonempty. Values are
// immutable; every operation builds a new series.
class LaurentSeries {
  public:
    LaurentSeries() = default;

    // -- constructors --
    static LaurentSeries exact_zero(const GF& F, int ram = 1);
    static LaurentSeries zero_to_precision(const GF& F, long long prec, int ram = 1);
    // Exact c * t^(idx/ram).
    static LaurentSeries monomial(const GF& F, const GFElem& c, long long idx, int ram = 1);
    static LaurentSeries constant(const GF& F, const GFElem& c, int ram = 1);
    static LaurentSeries one(const GF& F, int ram = 1) { return constant(F, F.one(), ram); }
    // t as an element of the ram-e model: exponent 1 = index ram.
    static LaurentSeries t_param(const GF& F, int ram = 1) { return monomial(F, F.one(), ram, ram); }
    // The uniformizer t^(1/ram) of the ram-e model: index 1.
    static LaurentSeries uniformizer(const GF& F, int ram = 1) { return monomial(F, F.one(), 1, ram); }
    // General window: coeffs[i] at index lead+i; exact = infinitely known tail.
    static LaurentSeries make(const GF& F, int ram, long long lead, std::vector<GFElem> coeffs,
                              std::optional<long long> prec);

    // -- observers --
    const GF& field() const { return field_; }
    int ram() const { return ram_; }
    long long lead_index() const { return lead_; }
    const std::vector<GFElem>& coeffs() const { return coeffs_; }
    bool exact() const { return exact_; }
    long long prec_index() const { return prec_; }  // meaningless when exact()
    SeriesClass cls() const;
    bool is_exact_zero() const { return exact_ && coeffs_.empty(); }
    // Coefficient at absolute index (known region only; throws NeedsPrecision
    // outside the known window of a truncated series).
    GFElem coeff_at(long long idx) const;

    ValuationResult valuation() const;

    // Residue map: coefficient at exponent 0 when v >= 0, and the constant 0
    // outside the valuation ring (total-map convention). Throws
    // NeedsPrecision for a truncated zero whose window does not reach past
    // exponent 0.
    GFElem residue() const;

    // -- arithmetic (operands re-ramified to the lcm grid first) --
    friend LaurentSeries ls_add(const LaurentSeries& x, const LaurentSeries& y);
    friend LaurentSeries ls_sub(const LaurentSeries& x, const LaurentSeries& y);
    friend LaurentSeries ls_neg(const LaurentSeries& x);
    friend LaurentSeries ls_mul(const LaurentSeries& x, const LaurentSeries& y);
    // Multiplicative inverse. window = number of coefficient slots of the
    // result when x is exact (0 picks the default working precision); for a
    // truncated x the available window is used, capped by `window` if given.
    friend LaurentSeries ls_inv(const LaurentSeries& x, long long window);
    friend LaurentSeries ls_div(const LaurentSeries& x, const LaurentSeries& y, long long window);

    LaurentSeries pow(long long k, long long window = 0) const;

    // Forget exactness / reduce knowledge to index < prec.
    LaurentSeries truncate(long long prec) const;

    // Same abstract element on the (1/new_ram)Z grid. Refining (new_ram a
    // multiple of ram) always works; coarsening requires every stored
    // exponent to be representable.
    LaurentSeries reramify(int new_ram) const;

    // The uniformizer-reinterpretation isomorphism F((t^(1/e))) -> F((s)):
    // keeps the coefficient data, sets ram to 1, so valuations scale by e.
    LaurentSeries reinterpret_base() const;

    // x^p computed coefficient-wise: exponents *p, coefficients^p.
    LaurentSeries frobenius() const;

    // Substitute t -> s (s exact, v(s) > 0, s != 0) into an exact series.
    // Negative exponents invert s at `window` slots (result truncated);
    // nonnegative-support inputs yield exact results.
    LaurentSeries substitute(const LaurentSeries& s, long long window = 0) const;

    // Exact-polynomial equality (both exact) or three-valued compare via
    // subtraction elsewhere; operator== is exact structural equality.
    bool operator==(const LaurentSeries& o) const;

    std::string to_string() const;

  private:
    GF field_;
    int ram_ = 1;
    long long lead_ = 0;
    std::vector<GFElem> coeffs_;
    long long prec_ = 0;
    bool exact_ = true;

    void normalize();
    static void align(LaurentSeries& a, LaurentSeries& b);
};

LaurentSeries ls_inv(const LaurentSeries& x, long long window = 0);
LaurentSeries ls_div(const LaurentSeries& x, const LaurentSeries& y, long long window = 0);

// The constant-series partial section GF(q) -> GF(q)[[t]] (a ring embedding
// splitting the residue map).
LaurentSeries canonical_section(const GF& F, const GFElem& a, int ram = 1);

// Default working precision (coefficient slots) and the refinement cap used
// by precision-doubling loops.
inline constexpr long long kDefaultPrecision = 32;
inline constexpr long long kMaxPrecision = 4096;

// Text form: "2*t^-1 + 1 + t^3 (mod t^8) @ GF(3), ram 1", rational exponents
// as t^(1/2). parse(print(x)) == x bit-exactly.
std::string print_series(const LaurentSeries& x);
LaurentSeries parse_series(const std::string& text);

}  // namespace vfc
