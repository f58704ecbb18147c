#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilsum/cyclo.hpp"

#include <numeric>
#include <random>

using namespace weilsum;

namespace {

// Independent oracle for Phi_M via the Moebius product
//   Phi_M(x) = prod_{d | M} (x^d - 1)^{mu(M/d)},
// computed as exact polynomial multiplication and division.
int moebius(int64_t n) {
    int m = 1;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    if (n > 1) m = -m;
    return m;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<BigInt> poly_div(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num, quot(num.size() - den.size() + 1, BigInt(0));
    for (int d = int(rem.size()) - 1; d >= int(den.size()) - 1; --d) {
        if (rem[d] == 0) continue;
        BigInt q = rem[d] / den.back();
        int s = d - int(den.size()) + 1;
        quot[s] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[s + j] -= q * den[j];
    }
    for (auto& r : rem) REQUIRE(r == 0);
    return quot;
}

std::vector<BigInt> oracle_phi(int64_t M) {
    std::vector<BigInt> num{BigInt(1)}, den{BigInt(1)};
    for (int64_t d = 1; d <= M; ++d) {
        if (M % d != 0) continue;
        int mu = moebius(M / d);
        if (mu == 0) continue;
        std::vector<BigInt> f(size_t(d) + 1, BigInt(0));
        f[0] = -1;
        f[size_t(d)] = 1;
        if (mu == 1)
            num = poly_mul(num, f);
        else
            den = poly_mul(den, f);
    }
    return poly_div(num, den);
}

CycInt zeta(int64_t M, int64_t j) { return CycInt::root(M, j); }

}  // namespace

TEST_CASE("cyclotomic polynomials against the Moebius oracle") {
    CHECK(cyclotomic_poly(1) == std::vector<BigInt>{BigInt(-1), BigInt(1)});
    CHECK(cyclotomic_poly(3) == std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(1)});
    CHECK(cyclotomic_poly(12) ==
          std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1), BigInt(0), BigInt(1)});
    for (int64_t M = 1; M <= 64; ++M) CHECK(cyclotomic_poly(M) == oracle_phi(M));
    CHECK(cyclotomic_poly(105)[7] == -2);   // first coefficient outside {0,+-1}
}

TEST_CASE("basic relations") {
    CHECK(zeta(3, 1) + zeta(3, 2) == CycInt::integer(-1, 3));
    CHECK(zeta(4, 1) * zeta(4, 1) == CycInt::integer(-1, 4));
    // (1+2z)(1+2z^2) = 3 in Z[zeta_3]
    CycInt a = CycInt::integer(1, 3) + zeta(3, 1) * 2;
    CycInt b = CycInt::integer(1, 3) + zeta(3, 2) * 2;
    CHECK(a * b == CycInt::integer(3, 3));
    CHECK(zeta(3, 1).conj() == -CycInt::integer(1, 3) - zeta(3, 1));
}

TEST_CASE("galois action") {
    CHECK(zeta(5, 1).galois(2) + zeta(5, 4).galois(2) == zeta(5, 2) + zeta(5, 3));
    for (int64_t c : {1, 2, 4, 5, 7, 8})
        CHECK(CycInt::integer(7, 9).galois(c) == CycInt::integer(7, 9));
    CHECK_THROWS(zeta(6, 1).galois(2));
    CHECK(zeta(12, 1).conj() == zeta(12, 11));
}

TEST_CASE("abs_square and as_integer") {
    CHECK((zeta(3, 1) - zeta(3, 2)).abs_square() == CycInt::integer(3, 3));
    CHECK(CycInt::zero(5).abs_square() == CycInt::zero(5));
    CycInt v = CycInt::integer(1, 3) + zeta(3, 1) * 2;
    CHECK(!v.as_integer().has_value());
    CHECK(v.abs_square().as_integer().value() == 3);
    CHECK(CycInt::integer(-7, 12).as_integer().value() == -7);
}

TEST_CASE("order promotion") {
    CHECK(zeta(3, 1).promoted(12) == zeta(12, 4));
    // orders must be nested; promote explicitly otherwise
    CHECK_THROWS(zeta(3, 1) * zeta(4, 1));
    CHECK(zeta(3, 1).promoted(12) * zeta(4, 1).promoted(12) == zeta(12, 7));
    CHECK_THROWS(zeta(4, 1) + zeta(6, 1));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int64_t> coeff(-9, 9);
    std::vector<int64_t> orders{3, 4, 5, 8, 12, 45, 90, 360};
    for (int64_t M : orders) {
        std::uniform_int_distribution<int64_t> idx(0, M - 1);
        for (int rep = 0; rep < 8; ++rep) {
            auto rnd = [&] {
                CycInt v = CycInt::zero(M);
                for (int t = 0; t < 4; ++t) v = v + zeta(M, idx(rng)) * coeff(rng);
                return v;
            };
            CycInt a = rnd(), b = rnd(), c = rnd();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a * b).abs_square() == a.abs_square() * b.abs_square());
            // reduced degree < phi(M)
            for (size_t j = size_t(euler_phi(M)); j < size_t(M); ++j)
                CHECK(a.coeffs()[j] == 0);
        }
    }
}

TEST_CASE("galois composition law") {
    std::mt19937_64 rng(7);
    int64_t M = 36;
    std::uniform_int_distribution<int64_t> idx(0, M - 1), coeff(-5, 5);
    std::vector<int64_t> units;
    for (int64_t c = 1; c < M; ++c)
        if (std::gcd(c, M) == 1) units.push_back(c);
    for (int rep = 0; rep < 16; ++rep) {
        CycInt a = CycInt::zero(M);
        for (int t = 0; t < 5; ++t) a = a + zeta(M, idx(rng)) * coeff(rng);
        CHECK(a.galois(1) == a);
        for (int64_t c1 : units)
            for (int64_t c2 : units)
                CHECK(a.galois(c1).galois(c2) == a.galois((c1 * c2) % M));
    }
}

TEST_CASE("json form") {
    CHECK(zeta(3, 2).json() == "{\"M\":3,\"coeffs\":[-1,-1,0]}");
}
