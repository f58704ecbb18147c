#pragma once

// Exact arithmetic in Z[zeta_M]: integer coefficient vectors reduced to the
// canonical remainder modulo the cyclotomic polynomial Phi_M.  Everything a
// character sum can produce stays exact; the only floating-point output is
// the diagnostic approx() printer, which no predicate ever consults.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Phi_M as an ascending integer coefficient vector, via the standard
// recursive exact division Phi_M = (x^M - 1) / prod_{d|M, d<M} Phi_d.
// Results are cached per M.
std::vector<BigInt> cyclotomic_poly(int64_t M);

int64_t euler_phi(int64_t M);

class CycInt {
public:
    CycInt() : M_(1), c_(1, BigInt(0)) {}

    static CycInt zero(int64_t M) { return CycInt(M); }
    static CycInt integer(const BigInt& n, int64_t M = 1);
    // zeta_M^j
    static CycInt root(int64_t M, int64_t j);
    // from a full exponent histogram: sum_j counts[j] * zeta_M^j
    static CycInt from_counts(int64_t M, const std::vector<BigInt>& counts);
    static CycInt from_counts(int64_t M, const std::vector<int64_t>& counts);

    int64_t order() const { return M_; }
    const std::vector<BigInt>& coeffs() const { return c_; }   // length M, reduced
    bool is_zero() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const BigInt& n) const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    // ring automorphism zeta^j -> zeta^{cj}, gcd(c, M) = 1
    CycInt galois(int64_t c) const;
    // complex conjugation, = galois(-1)
    CycInt conj() const;
    // a * conj(a)
    CycInt abs_square() const;

    // succeeds iff all reduced coefficients at indices >= 1 vanish
    std::optional<BigInt> as_integer() const;

    // promote to the cyclotomic ring of order M2 (M must divide M2)
    CycInt promoted(int64_t M2) const;

    std::complex<double> approx() const;
    std::string str() const;
    std::string json() const;   // {"M":..,"coeffs":[..]}

private:
    explicit CycInt(int64_t M) : M_(M), c_(size_t(M), BigInt(0)) {}
    void reduce();
    static std::pair<CycInt, CycInt> promote_pair(const CycInt& a, const CycInt& b);

    int64_t M_;
    std::vector<BigInt> c_;
};

}  // namespace weilsum
