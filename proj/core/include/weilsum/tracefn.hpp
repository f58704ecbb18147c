#pragma once

// Exact evaluation of the trace-function forms: the one-parameter polynomial
// family -sum_x psi_E(f(x) + sum_i t_i x^{B_i}) rho(x), the indexed-variety
// sums over x^A = u y^B, their one-variable z-forms through a Bezout pair
// alpha A - beta B = 1, Kummer pullbacks, and the Sp/SU total-trace
// specializations.  Sums are accumulated as integer histograms over
// zeta_M-exponents and converted to CycInt once per value.

#include "weilsum/charsum.hpp"
#include "weilsum/cyclo.hpp"
#include "weilsum/gf.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace weilsum {

// Normalization metadata attached to a raw sum.  Never divided out; the
// membership predicates are reformulated multiplicatively instead.
struct ClearingFactor {
    enum class Kind { None, MinusGauss, RationalPower };
    Kind kind = Kind::None;
    // MinusGauss: -Gauss(psi_scale over field, chi_2)
    const Field* field = nullptr;
    int64_t psi_scale = 1;
    // RationalPower: base^exponent (with sign, so e.g. -p per degree fits)
    BigRat base = 1;
    int64_t exponent = 1;

    static ClearingFactor none() { return {}; }
    static ClearingFactor minus_gauss(const Field& F, int64_t scale);
    static ClearingFactor rational_power(const BigRat& base, int64_t exponent);

    // exact value where it exists as a cyclotomic integer (MinusGauss and
    // integral RationalPower); throws for non-integral rationals
    CycInt exact_value() const;
    // |clearing|^2 as an exact rational
    BigRat magnitude_squared() const;
    std::string str() const;
};

struct RawTrace {
    CycInt value;               // the exact unnormalized sum
    const Field* field;         // summation field E
    ClearingFactor clearing;
    bool minus_applied;         // leading -1 included in value
};

// ---- general polynomial family -------------------------------------------

struct Monomial {
    std::variant<int64_t, FieldElem> coeff;   // integer coefficients reduce mod p
    int64_t degree;
};

struct SumSpec {
    AddChar psi;                          // base additive character on GF(p)
    std::vector<Monomial> monomials;      // f(x); degrees prime to p
    std::optional<MultChar> decoration;   // rho; trivial means none
    std::vector<int64_t> param_exponents; // B_1 > ... > B_r, prime to p

    SumSpec(const AddChar& psi_, std::vector<Monomial> mono,
            std::optional<MultChar> rho = std::nullopt,
            std::vector<int64_t> params = {});
};

// value = -sum_{x in E} psi_E(f(x) + sum_i t_i x^{B_i}) rho(x)
RawTrace eval_family(const SumSpec& spec, const Field& E,
                     const std::vector<FieldElem>& params);

// ---- indexed variety x^A = u y^B and its z-form ---------------------------

enum class DecorRole { None, OnY, OnX };

// -sum_{x,y in E, x^A = u y^B} psi_E(Ax - By) * {1, chi(y), chi(x)}
// Brute force over pairs for #E <= 2^12, dlog parametrization above;
// `strategy` forces one path (0 auto, 1 brute, 2 dlog).
RawTrace eval_indexed(int64_t A, int64_t B, DecorRole role,
                      const std::optional<MultChar>& chi, const FieldElem& u,
                      const Field& E, int strategy = 0);

struct BezoutPair {
    int64_t A, B;
    int64_t alpha, beta;    // alpha*A - beta*B = 1
};

enum class BezoutConstraint { None, BetaEven, BetaDivisibleBy, AlphaDivisibleBy };

// deterministic representative: minimal |beta| among pairs meeting the
// constraint (ties broken toward nonnegative beta)
BezoutPair make_bezout(int64_t A, int64_t B, BezoutConstraint c = BezoutConstraint::None,
                       int64_t modulus = 0);

// -sum_{z in E} psi_E(A u^alpha z^B - B u^beta z^A) * decoration, where the
// decoration at role OnY is chi(u^beta z^A) and at role OnX is chi(u^alpha z^B)
RawTrace eval_zform(const BezoutPair& pair, DecorRole role,
                    const std::optional<MultChar>& chi, const FieldElem& u,
                    const Field& E);

struct CheckResult {
    bool pass = true;
    std::string witness;
};

// Kummer pullback [A]*: for all u in E^x,
//   eval_zform(pair, role, chi, u^A, E)
//     == -sum_z psi_E(A u z^B - B z^A) * {1, chi^A(z), chi(u z^B)}
CheckResult kummer_pullback_check(int64_t A, int64_t B, DecorRole role,
                                  const std::optional<MultChar>& chi, const Field& E);

// ---- Sp / SU total traces --------------------------------------------------

// -sum_z psi_{-scale/2, E}(z^{q^n+1} - u z^{q^m+1});  one of n,m even,
// gcd(n,m)=1, gcd(q^n+1, q^m+1) = 2
RawTrace sp_total_trace(int64_t q, int64_t n, int64_t m, const FieldElem& u,
                        const Field& E, int64_t psi_scale = 1);

enum class SuVariant {
    W,      // -sum_z psi_E(u z^{q^m+1} - z^{q^n+1}), clearing -chi2(-1) p per deg
    Wbis,   // -sum_z psi_E(z^{q^m+1} - u^{-1} z^{q^n+1}), Gauss clearing
    Hbis,   // -sum_z psi_E(u^alpha z^{q^m+1} - u^beta z^{q^n+1}), alpha = (q+1)delta
};

// n > m > 0 both odd, gcd(n,m)=1 (so gcd(q^n+1, q^m+1) = q+1); E must
// contain GF(q^2); the Hbis/Wbis variants additionally need gcd(m, q+1)=1
RawTrace su_total_trace(int64_t q, int64_t n, int64_t m, const FieldElem& u,
                        SuVariant variant, const Field& E, int64_t psi_scale = 1);

// ---- field-of-traces membership -------------------------------------------

enum class MembershipTarget {
    Q,          // fixed by the full Galois action on the zeta_p part
    K,          // fixed by the square subgroup acting on the zeta_p part
    QChi,       // fixed whenever the action also fixes the chi-values part
    PmPowerOfQ, // a rational integer, |value / clearing| a power of q
};

bool trace_membership(const RawTrace& raw, MembershipTarget target, int64_t q = 0);

// ---- remark-level identity matrix ------------------------------------------

struct IdentityCheck {
    std::string name;
    bool applicable;
    bool pass;
    std::string witness;
};

// the displayed equalities of trace functions around the coprime /
// coprimebis remarks, checked exactly for all u in E^x:
//   su-coprime-sum   (requires gcd(n, q+1) = 1)
//   su-coprime-pullback
//   su-coprimebis-sum (requires gcd(m, q+1) = 1)
//   su-coprimebis-pullback
std::vector<IdentityCheck> remark_identity_checks(int64_t q, int64_t n, int64_t m,
                                                  const Field& E);

}  // namespace weilsum
