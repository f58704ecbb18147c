#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilsum/gf.hpp"

#include <algorithm>
#include <set>

using namespace weilsum;

namespace {

// Independent oracle: brute-force irreducibility of a monic polynomial over
// GF(p) by testing divisibility against every monic polynomial of smaller
// positive degree (fine for the tiny degrees used here).
bool oracle_irreducible(const std::vector<int64_t>& m, int64_t p) {
    int f = int(m.size()) - 1;
    if (f == 1) return true;
    for (int d = 1; d <= f / 2; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t idx = 0; idx < count; ++idx) {
            // candidate divisor: x^d + ... with digits of idx
            std::vector<int64_t> g(d + 1);
            g[d] = 1;
            int64_t t = idx;
            for (int i = 0; i < d; ++i) { g[i] = t % p; t /= p; }
            // long-divide m by g, check remainder
            std::vector<int64_t> r = m;
            for (int k = f; k >= d; --k) {
                int64_t c = r[k] % p;
                if (!c) continue;
                for (int j = 0; j <= d; ++j)
                    r[k - d + j] = ((r[k - d + j] - c * g[j]) % p + p) % p;
            }
            bool zero = true;
            for (int j = 0; j < d; ++j)
                if (r[j] % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

// first monic irreducible of degree f in the canonical scan order
// (constant coefficient varies fastest)
std::vector<int64_t> oracle_lex_first_modulus(int64_t p, int f) {
    for (int64_t idx = 0;; ++idx) {
        std::vector<int64_t> m(f + 1);
        int64_t t = idx;
        for (int i = 0; i < f; ++i) { m[i] = t % p; t /= p; }
        m[f] = 1;
        if (m[0] != 0 && oracle_irreducible(m, p)) return m;
    }
}

}  // namespace

TEST_CASE("canonical moduli match the exhaustive scan") {
    CHECK(Field::make(3, 1).modulus() == std::vector<int64_t>{0, 1});
    // x^2+1 is irreducible over GF(3) since -1 is a non-square mod 3
    CHECK(Field::make(3, 2).modulus() == std::vector<int64_t>{1, 0, 1});
    CHECK(Field::make(3, 2).modulus() == oracle_lex_first_modulus(3, 2));
    CHECK(Field::make(2, 3).modulus() == std::vector<int64_t>{1, 1, 0, 1});
    CHECK(Field::make(2, 3).modulus() == oracle_lex_first_modulus(2, 3));
    CHECK(Field::make(5, 2).modulus() == oracle_lex_first_modulus(5, 2));
    CHECK(Field::make(3, 4).modulus() == oracle_lex_first_modulus(3, 4));
}

TEST_CASE("make_field rejects bad input") {
    CHECK_THROWS(Field::make(4, 1));
    CHECK_THROWS(Field::make(1, 1));
    CHECK_THROWS(Field::make(2, 40));   // 2^40 > 2^31
}

TEST_CASE("x^(p^f) = x exhaustively on small fields") {
    for (auto [p, f] : {std::pair<int64_t, int>{2, 3}, {3, 2}, {3, 4}, {5, 2}, {7, 2}, {2, 8}}) {
        const Field& F = Field::make(p, f);
        for (const auto& x : F.enumerate()) CHECK(x.pow(F.size()) == x);
    }
}

TEST_CASE("dlog round trip and generator order") {
    for (auto [p, f] : {std::pair<int64_t, int>{3, 2}, {5, 2}, {3, 4}, {7, 2}}) {
        const Field& F = Field::make(p, f);
        FieldElem g = F.generator();
        CHECK(dlog(g) == 1);
        CHECK(dlog(F.one()) == 0);
        std::set<uint64_t> seen;
        for (const auto& x : F.enumerate()) {
            if (x.is_zero()) {
                CHECK_THROWS(dlog(x));
                continue;
            }
            CHECK(g.pow(dlog(x)) == x);
            seen.insert(x.encoding());
        }
        CHECK(int64_t(seen.size()) == F.size() - 1);
    }
}

TEST_CASE("GF(9) basics from the construction") {
    const Field& F9 = Field::make(3, 2);
    const Field& F3 = Field::make(3, 1);
    FieldElem two = embed(F3.from_int(2), F9);
    // embed(2)^4 = embed(2)^2 = embed(1) since 2^2 = 1 in GF(3)
    CHECK(two.pow(4) == two.pow(2));
    CHECK(two.pow(2) == F9.one());
    CHECK(embed(F3.zero(), F9) == F9.zero());
    CHECK(embed(F3.one(), F9) == F9.one());
}

TEST_CASE("embedding is a ring homomorphism") {
    const Field& F3 = Field::make(3, 1);
    const Field& F9 = Field::make(3, 2);
    const Field& F81 = Field::make(3, 4);
    for (const auto& a : F9.enumerate())
        for (const auto& b : F9.enumerate()) {
            CHECK(embed(a + b, F81) == embed(a, F81) + embed(b, F81));
            CHECK(embed(a * b, F81) == embed(a, F81) * embed(b, F81));
        }
    // injectivity and the fixed-point property embed(x)^{p^{f'}} = embed(x)
    std::set<uint64_t> imgs;
    for (const auto& a : F9.enumerate()) {
        FieldElem i = embed(a, F81);
        CHECK(i.pow(9) == i);
        imgs.insert(i.encoding());
    }
    CHECK(imgs.size() == 9);
    CHECK_THROWS(embed(F9.generator(), F3));
    CHECK_THROWS(embed(Field::make(3, 2).one(), Field::make(3, 3)));
}

TEST_CASE("relative trace and norm") {
    const Field& F3 = Field::make(3, 1);
    const Field& F9 = Field::make(3, 2);
    // Tr_{GF(9)/GF(3)}(x) = 2x for x in the subfield
    for (int64_t v = 0; v < 3; ++v) {
        FieldElem x = embed(F3.from_int(v), F9);
        CHECK(rel_trace(x, F3) == F3.from_int(2 * v));
    }
    // Tr of the canonical generator, computed concretely as g + g^3
    FieldElem g = F9.generator();
    FieldElem tr = g + g.pow(3);
    CHECK(embed(rel_trace(g, F3), F9) == tr);
    // norm is multiplicative and onto the subfield's multiplicative group
    std::set<uint64_t> norm_img;
    for (const auto& x : F9.enumerate()) {
        if (x.is_zero()) continue;
        for (const auto& y : F9.enumerate()) {
            if (y.is_zero()) continue;
            CHECK(rel_norm(x * y, F3) == rel_norm(x, F3) * rel_norm(y, F3));
        }
        norm_img.insert(rel_norm(x, F3).encoding());
    }
    CHECK(norm_img.size() == 2);   // all of GF(3)^x
    CHECK_THROWS(rel_trace(F9.one(), Field::make(3, 3)));
}

TEST_CASE("trace commutes with Frobenius") {
    const Field& F3 = Field::make(3, 1);
    const Field& F81 = Field::make(3, 4);
    const Field& F9 = Field::make(3, 2);
    for (const auto& x : F81.enumerate()) {
        CHECK(rel_trace(x, F3).pow(3) == rel_trace(x.pow(3), F3));
        CHECK(rel_trace(x, F9).pow(3) == rel_trace(x.pow(3), F9));
    }
}

TEST_CASE("frobenius fixed points") {
    const Field& F9 = Field::make(3, 2);
    int fixed = 0;
    for (const auto& x : F9.enumerate())
        if (frobenius(x, 3) == x) ++fixed;
    CHECK(fixed == 3);
    const Field& F27 = Field::make(3, 3);
    fixed = 0;
    for (const auto& x : F27.enumerate())
        if (frobenius(x, 3) == x) ++fixed;
    CHECK(fixed == 3);
    CHECK_THROWS(frobenius(F9.one(), 2));
}

TEST_CASE("enumeration order is the base-p value of the coefficient tuple") {
    const Field& F9 = Field::make(3, 2);
    auto elems = F9.enumerate();
    REQUIRE(elems.size() == 9);
    for (size_t i = 0; i < elems.size(); ++i) {
        auto c = elems[i].coeffs();
        CHECK(uint64_t(c[0] + 3 * c[1]) == uint64_t(i));
    }
}

TEST_CASE("field json descriptor") {
    CHECK(Field::make(3, 2).json() == "{\"p\":3,\"f\":2,\"modulus\":[1,0,1]}");
}

TEST_CASE("custom modulus field") {
    // x^2 + x + 2 is also irreducible over GF(3)
    const Field& F = Field::make(3, 2, {2, 1, 1});
    CHECK(F.size() == 9);
    for (const auto& x : F.enumerate()) CHECK(x.pow(9) == x);
    CHECK_THROWS(Field::make(3, 2, {0, 0, 1}));   // x^2 is reducible
}
