#include "weilsum/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weilsum {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<BigInt> poly_divide_exact(const std::vector<BigInt>& num,
                                      const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (int d = int(rem.size()) - 1; d >= int(den.size()) - 1; --d) {
        if (rem[d] == 0) continue;
        BigInt lead = den.back();
        if (rem[d] % lead != 0) throw std::logic_error("cyclotomic division not exact");
        BigInt q = rem[d] / lead;
        int shift = d - int(den.size()) + 1;
        quot[shift] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= q * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

struct PhiCache {
    std::mutex mu;
    std::map<int64_t, std::vector<BigInt>> map;
    static PhiCache& instance() {
        static PhiCache* c = new PhiCache;
        return *c;
    }
};

}  // namespace

int64_t euler_phi(int64_t M) {
    int64_t r = M, n = M;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<BigInt> cyclotomic_poly(int64_t M) {
    if (M < 1) throw std::invalid_argument("cyclotomic_poly: M >= 1");
    auto& cache = PhiCache::instance();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.map.find(M);
        if (it != cache.map.end()) return it->second;
    }
    std::vector<BigInt> result;
    if (M == 1) {
        result = {BigInt(-1), BigInt(1)};   // x - 1
    } else {
        std::vector<BigInt> num(size_t(M) + 1, BigInt(0));
        num[0] = -1;
        num[size_t(M)] = 1;                 // x^M - 1
        std::vector<BigInt> den{BigInt(1)};
        for (int64_t d = 1; d < M; ++d) {
            if (M % d != 0) continue;
            auto phi_d = cyclotomic_poly(d);
            std::vector<BigInt> nd(den.size() + phi_d.size() - 1, BigInt(0));
            for (size_t i = 0; i < den.size(); ++i)
                for (size_t j = 0; j < phi_d.size(); ++j)
                    nd[i + j] += den[i] * phi_d[j];
            den = std::move(nd);
        }
        result = poly_divide_exact(num, den);
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.map.emplace(M, result);
    return result;
}

void CycInt::reduce() {
    auto phi = cyclotomic_poly(M_);
    int deg_phi = int(phi.size()) - 1;       // = euler_phi(M)
    for (int d = int(c_.size()) - 1; d >= deg_phi; --d) {
        if (c_[d] == 0) continue;
        BigInt q = c_[d];                    // phi is monic
        for (int j = 0; j <= deg_phi; ++j) c_[d - deg_phi + j] -= q * phi[j];
    }
    c_.resize(size_t(M_), BigInt(0));        // keep length M with zero tail
}

CycInt CycInt::integer(const BigInt& n, int64_t M) {
    CycInt r(M);
    r.c_[0] = n;
    r.reduce();
    return r;
}

CycInt CycInt::root(int64_t M, int64_t j) {
    CycInt r(M);
    int64_t jj = ((j % M) + M) % M;
    r.c_[size_t(jj)] = 1;
    r.reduce();
    return r;
}

CycInt CycInt::from_counts(int64_t M, const std::vector<BigInt>& counts) {
    if (int64_t(counts.size()) != M) throw std::invalid_argument("from_counts: length != M");
    CycInt r(M);
    r.c_ = counts;
    r.c_.resize(size_t(M), BigInt(0));
    r.reduce();
    return r;
}

CycInt CycInt::from_counts(int64_t M, const std::vector<int64_t>& counts) {
    std::vector<BigInt> b(counts.begin(), counts.end());
    return from_counts(M, b);
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

std::pair<CycInt, CycInt> CycInt::promote_pair(const CycInt& a, const CycInt& b) {
    if (a.M_ == b.M_) return {a, b};
    if (b.M_ % a.M_ == 0) return {a.promoted(b.M_), b};
    if (a.M_ % b.M_ == 0) return {a, b.promoted(a.M_)};
    throw std::invalid_argument("CycInt: incompatible root orders (neither divides the other)");
}

CycInt CycInt::promoted(int64_t M2) const {
    if (M2 == M_) return *this;
    if (M2 % M_ != 0) throw std::invalid_argument("CycInt::promoted: M must divide M2");
    int64_t k = M2 / M_;
    CycInt r(M2);
    for (int64_t j = 0; j < M_; ++j)
        if (c_[size_t(j)] != 0) r.c_[size_t(j * k)] = c_[size_t(j)];
    r.reduce();
    return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
    auto [a, b] = promote_pair(*this, o);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.reduce();
    return a;
}

CycInt CycInt::operator-(const CycInt& o) const {
    auto [a, b] = promote_pair(*this, o);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    a.reduce();
    return a;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycInt CycInt::operator*(const BigInt& n) const {
    CycInt r = *this;
    for (auto& x : r.c_) x *= n;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    auto [a, b] = promote_pair(*this, o);
    int64_t M = a.M_;
    // multiply in the group ring Z[Z/M] (indices wrap mod M), then reduce
    std::vector<BigInt> prod(size_t(M), BigInt(0));
    for (int64_t i = 0; i < M; ++i) {
        if (a.c_[size_t(i)] == 0) continue;
        for (int64_t j = 0; j < M; ++j) {
            if (b.c_[size_t(j)] == 0) continue;
            prod[size_t((i + j) % M)] += a.c_[size_t(i)] * b.c_[size_t(j)];
        }
    }
    CycInt r(M);
    r.c_ = std::move(prod);
    r.reduce();
    return r;
}

bool CycInt::operator==(const CycInt& o) const {
    auto [a, b] = promote_pair(*this, o);
    return a.c_ == b.c_;
}

CycInt CycInt::galois(int64_t c) const {
    int64_t cc = ((c % M_) + M_) % M_;
    if (std::gcd(cc == 0 ? M_ : cc, M_) != 1)
        throw std::invalid_argument("galois: gcd(c, M) != 1");
    CycInt r(M_);
    for (int64_t j = 0; j < M_; ++j)
        if (c_[size_t(j)] != 0) r.c_[size_t((j * cc) % M_)] += c_[size_t(j)];
    r.reduce();
    return r;
}

CycInt CycInt::conj() const { return galois(M_ - 1); }

CycInt CycInt::abs_square() const { return (*this) * conj(); }

std::optional<BigInt> CycInt::as_integer() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return std::nullopt;
    return c_[0];
}

std::complex<double> CycInt::approx() const {
    std::complex<double> acc(0, 0);
    const double tau = 6.283185307179586476925;
    for (int64_t j = 0; j < M_; ++j) {
        if (c_[size_t(j)] == 0) continue;
        double cj = c_[size_t(j)].convert_to<double>();
        acc += cj * std::complex<double>(std::cos(tau * double(j) / double(M_)),
                                         std::sin(tau * double(j) / double(M_)));
    }
    return acc;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (int64_t j = 0; j < M_; ++j) {
        if (c_[size_t(j)] == 0) continue;
        if (!first) os << " + ";
        os << c_[size_t(j)];
        if (j > 0) os << "*z" << M_ << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string CycInt::json() const {
    std::ostringstream os;
    os << "{\"M\":" << M_ << ",\"coeffs\":[";
    for (int64_t j = 0; j < M_; ++j) {
        if (j) os << ",";
        os << c_[size_t(j)];
    }
    os << "]}";
    return os.str();
}

}  // namespace weilsum
