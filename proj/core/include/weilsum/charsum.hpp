#pragma once

// Additive and multiplicative characters of finite fields, valued exactly in
// Z[zeta], plus Gauss sums and the Stickelberger evaluation for characters
// whose order divides q+1 over GF(q^2).
//
// Conventions: psi_a(x) = zeta_p^{a * AbsTrace(x)}, so an additive character
// born on GF(p) extends to every overfield through the absolute trace.
// Multiplicative characters are pinned to the canonical generator g of the
// field via discrete log: chi_k(g^m) = zeta_{q-1}^{k m}, chi(0) = 0.

#include "weilsum/cyclo.hpp"
#include "weilsum/gf.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace weilsum {

struct AddChar {
    const Field* field;   // field the character was declared on
    int64_t scale;        // a mod p; nontrivial iff a != 0 mod p

    AddChar(const Field& f, int64_t a) : field(&f), scale(((a % f.p()) + f.p()) % f.p()) {}
    bool trivial() const { return scale == 0; }
};

struct MultChar {
    const Field* field;
    int64_t exponent;     // k mod (#field - 1)

    MultChar(const Field& f, int64_t k)
        : field(&f), exponent(((k % (f.size() - 1)) + (f.size() - 1)) % (f.size() - 1)) {}
    int64_t order() const {
        int64_t n = field->size() - 1;
        return n / std::gcd(exponent, n);
    }
    bool trivial() const { return exponent == 0; }
};

// quadratic character (odd p), exponent (#field - 1)/2
MultChar quadratic_char(const Field& f);
MultChar trivial_char(const Field& f);
// all characters of order dividing d (d | #field - 1)
std::vector<MultChar> chars_of_order_dividing(const Field& f, int64_t d);
// all characters of exact order d
std::vector<MultChar> chars_of_exact_order(const Field& f, int64_t d);

// psi(x) as an element of Z[zeta_p]; x may live in any overfield of psi's
// field (evaluation through the absolute trace).
CycInt psi_eval(const AddChar& psi, const FieldElem& x);
// chi(x); x must live in chi's field.  chi(0) = 0.
CycInt chi_eval(const MultChar& chi, const FieldElem& x);

// sum_{x != 0} psi(x) chi(x), exact, in Z[zeta_{lcm(p, ord chi)}]
CycInt gauss_sum(const AddChar& psi, const MultChar& chi);

// (-1)^{(q+1)/r} * q  (eq. (stick): the Gauss sum over GF(q^2) of any
// multiplicative character of exact order r | q+1, any additive scale)
int64_t stickelberger_value(int64_t q, int64_t r);

struct StickelbergerCheck {
    bool pass;
    int64_t q, r;
    int64_t predicted;
    std::vector<std::string> failures;   // witnesses on failure
    int checked;                          // number of (chi, scale) pairs
};
// quantifies over every character of exact order r over GF(q^2) and every
// nontrivial additive scale
StickelbergerCheck stickelberger_check(int64_t q, int64_t r);

}  // namespace weilsum
