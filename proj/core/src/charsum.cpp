#include "weilsum/charsum.hpp"

#include <numeric>
#include <sstream>

namespace weilsum {

MultChar quadratic_char(const Field& f) {
    if (f.p() == 2) throw std::invalid_argument("quadratic_char: p must be odd");
    return MultChar(f, (f.size() - 1) / 2);
}

MultChar trivial_char(const Field& f) { return MultChar(f, 0); }

std::vector<MultChar> chars_of_order_dividing(const Field& f, int64_t d) {
    int64_t n = f.size() - 1;
    if (d <= 0 || n % d != 0)
        throw std::invalid_argument("chars_of_order_dividing: d must divide #field - 1");
    std::vector<MultChar> out;
    int64_t step = n / d;
    for (int64_t j = 0; j < d; ++j) out.push_back(MultChar(f, j * step));
    return out;
}

std::vector<MultChar> chars_of_exact_order(const Field& f, int64_t d) {
    std::vector<MultChar> out;
    for (const auto& chi : chars_of_order_dividing(f, d))
        if (chi.order() == d) out.push_back(chi);
    return out;
}

CycInt psi_eval(const AddChar& psi, const FieldElem& x) {
    const Field& fx = x.field();
    if (!psi.field->is_subfield_of(fx))
        throw std::invalid_argument("psi_eval: x's field does not contain psi's field");
    int64_t p = fx.p();
    int64_t s = (psi.scale * fx.abstrace_enc(x.encoding())) % p;
    return CycInt::root(p, s);
}

CycInt chi_eval(const MultChar& chi, const FieldElem& x) {
    if (chi.field != x.field_ptr())
        throw std::invalid_argument("chi_eval: field mismatch");
    int64_t d = chi.order();
    if (x.is_zero()) return CycInt::zero(d);
    int64_t n = chi.field->size() - 1;
    int64_t K = (__int128(chi.exponent) * dlog(x)) % n;
    // zeta_{n}^{K} has order dividing d, rewrite as a power of zeta_d
    return CycInt::root(d, K / (n / d));
}

CycInt gauss_sum(const AddChar& psi, const MultChar& chi) {
    if (psi.field != chi.field)
        throw std::invalid_argument("gauss_sum: characters live on different fields");
    const Field& F = *psi.field;
    int64_t p = F.p();
    int64_t d = chi.order();
    int64_t M = std::lcm(p, d);
    int64_t n = F.size() - 1;
    std::vector<int64_t> counts(size_t(M), 0);
    // x = g^m runs over the nonzero elements
    for (int64_t m = 0; m < n; ++m) {
        uint64_t enc = F.antilog(m);
        int64_t s = (psi.scale * F.abstrace_enc(enc)) % p;
        int64_t K = (__int128(chi.exponent) * m) % n;
        int64_t t = K / (n / d);
        counts[size_t((s * (M / p) + t * (M / d)) % M)] += 1;
    }
    return CycInt::from_counts(M, counts);
}

int64_t stickelberger_value(int64_t q, int64_t r) {
    if (r <= 1 || (q + 1) % r != 0)
        throw std::invalid_argument("stickelberger: need r | q+1, r > 1");
    return (((q + 1) / r) % 2 == 0) ? q : -q;
}

StickelbergerCheck stickelberger_check(int64_t q, int64_t r) {
    int64_t predicted = stickelberger_value(q, r);
    // q = p^f
    int64_t p = q, f0 = 1;
    for (int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            f0 = 0;
            int64_t t = q;
            while (t > 1) { t /= d; ++f0; }
            break;
        }
    const Field& E = Field::make(p, int(2 * f0));
    StickelbergerCheck out{true, q, r, predicted, {}, 0};
    CycInt want = CycInt::integer(predicted, std::lcm(p, r));
    for (const auto& chi : chars_of_exact_order(E, r)) {
        for (int64_t a = 1; a < p; ++a) {
            AddChar psi(E, a);
            CycInt g = gauss_sum(psi, chi);
            ++out.checked;
            if (g != want) {
                out.pass = false;
                std::ostringstream os;
                os << "q=" << q << " r=" << r << " chi_exp=" << chi.exponent
                   << " scale=" << a << " got " << g.str();
                out.failures.push_back(os.str());
            }
        }
    }
    return out;
}

}  // namespace weilsum
