#include "weilsum/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace weilsum {

namespace {

constexpr int64_t kSizeCap = int64_t(1) << 31;
constexpr int64_t kDlogCap = int64_t(1) << 24;
constexpr int64_t kMulTableCap = 1024;   // full op tables for size <= this

// ---- small polynomial arithmetic over GF(p), coefficient vectors with
// constant term first, used only for modulus selection and reduction -------

using Poly = std::vector<int64_t>;

Poly poly_trim(Poly a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int64_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic m
    int deg_m = int(m.size()) - 1;
    for (int d = int(r.size()) - 1; d >= deg_m; --d) {
        int64_t c = r[d];
        if (!c) continue;
        r[d] = 0;
        for (int j = 0; j < deg_m; ++j)
            r[d - deg_m + j] = ((r[d - deg_m + j] - c * m[j]) % p + p) % p;
    }
    r.resize(deg_m, 0);
    return r;
}

Poly poly_pow_mod(Poly base, int64_t e, const Poly& m, int64_t p) {
    Poly r{1};
    r.resize(m.size() - 1, 0);
    base.resize(m.size() - 1, 0);
    while (e > 0) {
        if (e & 1) r = poly_mul_mod(r, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!(b.size() == 1 && b[0] == 0)) {
        // a mod b
        int64_t lead_inv = 1;
        {   // inverse of leading coeff of b mod p
            int64_t lb = b.back(), t = 1, n = p - 2;
            int64_t base = lb;
            while (n > 0) {
                if (n & 1) t = t * base % p;
                base = base * base % p;
                n >>= 1;
            }
            lead_inv = t;
        }
        while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
            int64_t c = a.back() * lead_inv % p;
            int shift = int(a.size() - b.size());
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
            a = poly_trim(std::move(a));
            if (a.size() == 1 && a[0] == 0) break;
        }
        std::swap(a, b);
        b = poly_trim(std::move(b));
    }
    return a;
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e--) r *= b;
    return r;
}

// x^{p^i} - x gcd test: monic m of degree f is irreducible iff
// x^{p^f} == x (mod m) and gcd(x^{p^{f/l}} - x, m) = 1 for prime l | f.
bool is_irreducible(const Poly& m, int64_t p) {
    int f = int(m.size()) - 1;
    if (f == 1) return true;
    Poly x{0, 1};
    Poly xq = poly_pow_mod(x, ipow(p, f), m, p);   // fine: p^f bounded by caller
    Poly diff(std::max(xq.size(), size_t(2)), 0);
    for (size_t i = 0; i < xq.size(); ++i) diff[i] = xq[i];
    diff[1] = ((diff[1] - 1) % p + p) % p;
    if (!(poly_trim(diff).size() == 1 && poly_trim(diff)[0] == 0)) return false;
    std::vector<int> prime_divs;
    int ff = f;
    for (int l = 2; l * l <= ff; ++l)
        if (ff % l == 0) {
            prime_divs.push_back(l);
            while (ff % l == 0) ff /= l;
        }
    if (ff > 1) prime_divs.push_back(ff);
    for (int l : prime_divs) {
        Poly xe = poly_pow_mod(x, ipow(p, f / l), m, p);
        Poly d(std::max(xe.size(), size_t(2)), 0);
        for (size_t i = 0; i < xe.size(); ++i) d[i] = xe[i];
        d[1] = ((d[1] - 1) % p + p) % p;
        Poly g = poly_gcd(d, m, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<int64_t> factorize(int64_t n) {
    std::vector<int64_t> fs;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- field registry ------------------------------------------------------

struct FieldRegistry {
    std::mutex mu;
    std::map<std::pair<int64_t, int>, std::unique_ptr<Field>> canonical;
    std::map<std::tuple<int64_t, int, std::vector<int64_t>>, std::unique_ptr<Field>> custom;

    static FieldRegistry& instance() {
        static FieldRegistry* r = new FieldRegistry;
        return *r;
    }
};

const Field& Field::make(int64_t p, int f) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (f < 1) throw std::invalid_argument("Field: f must be >= 1");
    // overflow-safe size check
    int64_t size = 1;
    for (int i = 0; i < f; ++i) {
        if (size > kSizeCap / p) throw std::invalid_argument("Field: p^f exceeds 2^31");
        size *= p;
    }
    auto& reg = FieldRegistry::instance();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, f);
    auto it = reg.canonical.find(key);
    if (it != reg.canonical.end()) return *it->second;

    // scan for the smallest monic irreducible modulus; candidates are
    // ordered with the constant term varying fastest, i.e. by the base-p
    // value of the lower-coefficient tuple
    std::vector<int64_t> mod(f + 1, 0);
    mod[f] = 1;
    if (f == 1) {
        // degree-1 convention: modulus x
    } else {
        bool found = false;
        for (int64_t idx = 0; idx < size; ++idx) {
            int64_t t = idx;
            for (int i = 0; i < f; ++i) { mod[i] = t % p; t /= p; }
            if (mod[0] != 0 && is_irreducible(mod, p)) { found = true; break; }
        }
        if (!found) throw std::logic_error("Field: no irreducible modulus found");
    }
    auto fld = std::unique_ptr<Field>(new Field(p, f, mod));
    const Field& ref = *fld;
    reg.canonical.emplace(key, std::move(fld));
    return ref;
}

const Field& Field::make(int64_t p, int f, const std::vector<int64_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (int(modulus.size()) != f + 1 || modulus[f] != 1)
        throw std::invalid_argument("Field: modulus must be monic of degree f");
    for (int64_t c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("Field: modulus coefficients out of range");
    if (!is_irreducible(modulus, p))
        throw std::invalid_argument("Field: modulus is reducible");
    auto& reg = FieldRegistry::instance();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_tuple(p, f, modulus);
    auto it = reg.custom.find(key);
    if (it != reg.custom.end()) return *it->second;
    auto fld = std::unique_ptr<Field>(new Field(p, f, modulus));
    const Field& ref = *fld;
    reg.custom.emplace(key, std::move(fld));
    return ref;
}

Field::Field(int64_t p, int f, std::vector<int64_t> modulus)
    : p_(p), f_(f), modulus_(std::move(modulus)) {
    size_ = 1;
    for (int i = 0; i < f_; ++i) size_ *= p_;
    build_tables();
}

Field::~Field() = default;

uint64_t Field::mul_generic(uint64_t a, uint64_t b) const {
    // decode digits, schoolbook multiply, reduce by modulus
    int64_t da[64], db[64];
    int64_t prod[128] = {0};
    uint64_t t = a;
    for (int i = 0; i < f_; ++i) { da[i] = int64_t(t % p_); t /= p_; }
    t = b;
    for (int i = 0; i < f_; ++i) { db[i] = int64_t(t % p_); t /= p_; }
    for (int i = 0; i < f_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < f_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int d = 2 * f_ - 2; d >= f_; --d) {
        int64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int j = 0; j < f_; ++j)
            prod[d - f_ + j] = ((prod[d - f_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
    uint64_t enc = 0;
    for (int i = f_ - 1; i >= 0; --i) enc = enc * p_ + prod[i];
    return enc;
}

uint64_t Field::add_enc(uint64_t a, uint64_t b) const {
    if (!add_tab_.empty()) return uint64_t(add_tab_[a * size_ + b]);
    uint64_t enc = 0, m = 1;
    for (int i = 0; i < f_; ++i) {
        int64_t d = (int64_t(a % p_) + int64_t(b % p_)) % p_;
        enc += uint64_t(d) * m;
        m *= p_;
        a /= p_;
        b /= p_;
    }
    return enc;
}

uint64_t Field::neg_enc(uint64_t a) const {
    uint64_t enc = 0, m = 1;
    for (int i = 0; i < f_; ++i) {
        int64_t d = (p_ - int64_t(a % p_)) % p_;
        enc += uint64_t(d) * m;
        m *= p_;
        a /= p_;
    }
    return enc;
}

uint64_t Field::sub_enc(uint64_t a, uint64_t b) const { return add_enc(a, neg_enc(b)); }

uint64_t Field::mul_enc(uint64_t a, uint64_t b) const {
    if (!mul_tab_.empty()) return uint64_t(mul_tab_[a * size_ + b]);
    if (a == 0 || b == 0) return 0;
    if (!log_tab_.empty())
        return exp_tab_[(log_tab_[a] + log_tab_[b]) % (size_ - 1)];
    return mul_generic(a, b);
}

uint64_t Field::inv_enc(uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!log_tab_.empty())
        return exp_tab_[(size_ - 1 - log_tab_[a]) % (size_ - 1)];
    return pow_enc(a, size_ - 2);
}

uint64_t Field::pow_enc(uint64_t a, int64_t e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    int64_t ord = size_ - 1;
    int64_t r = e % ord;
    if (r < 0) r += ord;
    if (!log_tab_.empty()) {
        // 128-bit not needed: log < 2^24, r < 2^31
        return exp_tab_[(__int128(log_tab_[a]) * r) % ord];
    }
    uint64_t acc = 1, base = a;
    while (r > 0) {
        if (r & 1) acc = mul_enc(acc, base);
        base = mul_enc(base, base);
        r >>= 1;
    }
    return acc;
}

int64_t Field::dlog_enc(uint64_t a) const {
    if (a == 0) throw std::domain_error("dlog of zero");
    if (log_tab_.empty()) throw std::runtime_error("dlog table not materialized (p^f > 2^24)");
    return log_tab_[a];
}

uint64_t Field::antilog(int64_t e) const {
    if (exp_tab_.empty()) throw std::runtime_error("dlog table not materialized (p^f > 2^24)");
    int64_t ord = size_ - 1;
    int64_t r = e % ord;
    if (r < 0) r += ord;
    return exp_tab_[r];
}

int64_t Field::abstrace_enc(uint64_t a) const {
    if (!abstrace_tab_.empty()) return abstrace_tab_[a];
    // Tr(a) = sum of a^{p^i}
    uint64_t acc = 0, x = a;
    for (int i = 0; i < f_; ++i) {
        acc = add_enc(acc, x);
        x = pow_enc(x, p_);
    }
    return int64_t(acc % p_);   // element of the prime field: encoding == value
}

void Field::build_tables() {
    if (size_ <= kDlogCap) {
        // canonical generator: first full-order element in enumeration
        // order (= encoding order, constant digit fastest)
        int64_t grp = size_ - 1;
        auto primes = factorize(grp);
        for (uint64_t enc = 1; enc < uint64_t(size_); ++enc) {
            bool full = true;
            for (int64_t l : primes)
                if (pow_enc(enc, grp / l) == 1) { full = false; break; }
            if (full) { gen_enc_ = enc; break; }
        }
        exp_tab_.resize(grp);
        log_tab_.assign(size_, -1);
        uint64_t x = 1;
        for (int64_t e = 0; e < grp; ++e) {
            exp_tab_[e] = uint32_t(x);
            log_tab_[x] = e;
            x = mul_generic(x, gen_enc_);
        }
        abstrace_tab_.resize(size_);
        for (int64_t a = 0; a < size_; ++a) {
            uint64_t acc = 0, y = uint64_t(a);
            for (int i = 0; i < f_; ++i) {
                acc = add_enc(acc, y);
                y = (y == 0) ? 0 : exp_tab_[(__int128(log_tab_[y]) * p_) % grp];
            }
            // the trace lies in GF(p), whose encoding equals its value
            abstrace_tab_[a] = int32_t(acc % p_);
        }
    }
    if (size_ <= kMulTableCap) {
        add_tab_.resize(size_t(size_) * size_);
        mul_tab_.resize(size_t(size_) * size_);
        for (int64_t a = 0; a < size_; ++a)
            for (int64_t b = 0; b < size_; ++b) {
                // compute without the tables (they are being built)
                uint64_t s = 0, m = 1, x = a, y = b;
                for (int i = 0; i < f_; ++i) {
                    s += uint64_t((x % p_ + y % p_) % p_) * m;
                    m *= p_;
                    x /= p_;
                    y /= p_;
                }
                add_tab_[a * size_ + b] = int32_t(s);
                mul_tab_[a * size_ + b] = int32_t(mul_generic(a, b));
            }
    }
}

std::vector<FieldElem> Field::enumerate() const {
    std::vector<FieldElem> out;
    out.reserve(size_);
    for (int64_t enc = 0; enc < size_; ++enc) out.push_back(FieldElem(this, uint64_t(enc)));
    return out;
}

FieldElem Field::from_coeffs(const std::vector<int64_t>& c) const {
    if (int(c.size()) != f_) throw std::invalid_argument("from_coeffs: wrong length");
    uint64_t enc = 0;
    for (int i = f_ - 1; i >= 0; --i) {
        int64_t d = ((c[i] % p_) + p_) % p_;
        enc = enc * p_ + d;
    }
    return FieldElem(this, enc);
}

FieldElem Field::from_int(int64_t n) const {
    int64_t d = ((n % p_) + p_) % p_;
    return FieldElem(this, uint64_t(d));
}

FieldElem Field::from_encoding(uint64_t e) const {
    if (int64_t(e) >= size_) throw std::invalid_argument("encoding out of range");
    return FieldElem(this, e);
}

std::string Field::json() const {
    std::ostringstream os;
    os << "{\"p\":" << p_ << ",\"f\":" << f_ << ",\"modulus\":[";
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
    }
    os << "]}";
    return os.str();
}

// ---- FieldElem -----------------------------------------------------------

std::vector<int64_t> FieldElem::coeffs() const {
    std::vector<int64_t> c(fld_->f());
    uint64_t t = enc_;
    for (int i = 0; i < fld_->f(); ++i) {
        c[i] = int64_t(t % fld_->p());
        t /= fld_->p();
    }
    return c;
}

static void check_same_field(const FieldElem& a, const FieldElem& b) {
    if (a.field_ptr() != b.field_ptr())
        throw std::invalid_argument("field mismatch: embed explicitly first");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(fld_, fld_->add_enc(enc_, o.enc_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(fld_, fld_->sub_enc(enc_, o.enc_));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(fld_, fld_->mul_enc(enc_, o.enc_));
}
FieldElem FieldElem::operator-() const { return FieldElem(fld_, fld_->neg_enc(enc_)); }
FieldElem FieldElem::inverse() const { return FieldElem(fld_, fld_->inv_enc(enc_)); }
FieldElem FieldElem::pow(int64_t e) const { return FieldElem(fld_, fld_->pow_enc(enc_, e)); }

std::string FieldElem::str() const {
    auto c = coeffs();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

int64_t dlog(const FieldElem& x) {
    if (x.is_zero()) throw std::domain_error("dlog(0)");
    return x.field().dlog_enc(x.encoding());
}

FieldElem frobenius(const FieldElem& x, int64_t r) {
    int64_t p = x.field().p();
    int64_t t = r;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("frobenius: r must be a power of p");
        t /= p;
    }
    if (t != 1) throw std::invalid_argument("frobenius: r must be a power of p");
    return x.pow(r);
}

// ---- embeddings ----------------------------------------------------------

namespace {

struct Embedding {
    const Field* sub;
    const Field* super;
    std::vector<uint64_t> basis_img;              // images of theta^j, j < f'
    std::map<uint64_t, uint64_t> reverse;         // super encoding -> sub encoding
};

struct EmbeddingCache {
    std::mutex mu;
    std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> map;
    static EmbeddingCache& instance() {
        static EmbeddingCache* c = new EmbeddingCache;
        return *c;
    }
};

const Embedding& get_embedding(const Field& sub, const Field& super) {
    auto& cache = EmbeddingCache::instance();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto key = std::make_pair(&sub, &super);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return *it->second;

    auto emb = std::make_unique<Embedding>();
    emb->sub = &sub;
    emb->super = &super;
    // first root (in enumeration order) of the subfield modulus in super
    uint64_t root = 0;
    bool found = false;
    for (const auto& cand : super.enumerate()) {
        FieldElem v = super.zero();
        FieldElem xp = super.one();
        for (int j = 0; j <= sub.f(); ++j) {
            v = v + super.from_int(sub.modulus()[j]) * xp;
            xp = xp * cand;
        }
        if (v.is_zero()) { root = cand.encoding(); found = true; break; }
    }
    if (!found) throw std::logic_error("embed: no root of subfield modulus in target");
    emb->basis_img.resize(sub.f());
    uint64_t acc = 1;
    for (int j = 0; j < sub.f(); ++j) {
        emb->basis_img[j] = acc;
        acc = super.mul_enc(acc, root);
    }
    // forward-image map for trace/norm inversion
    for (int64_t e = 0; e < sub.size(); ++e) {
        uint64_t img = 0, t = uint64_t(e);
        for (int j = 0; j < sub.f(); ++j) {
            int64_t d = int64_t(t % sub.p());
            t /= sub.p();
            if (d) {
                uint64_t term = super.mul_enc(emb->basis_img[j], uint64_t(super.from_int(d).encoding()));
                img = super.add_enc(img, term);
            }
        }
        emb->reverse[img] = uint64_t(e);
    }
    const Embedding& ref = *emb;
    cache.map.emplace(key, std::move(emb));
    return ref;
}

}  // namespace

FieldElem embed(const FieldElem& x, const Field& target) {
    const Field& sub = x.field();
    if (&sub == &target) return x;
    if (!sub.is_subfield_of(target))
        throw std::invalid_argument("embed: degree does not divide");
    const Embedding& emb = get_embedding(sub, target);
    uint64_t img = 0, t = x.encoding();
    for (int j = 0; j < sub.f(); ++j) {
        int64_t d = int64_t(t % sub.p());
        t /= sub.p();
        if (d) {
            uint64_t term = target.mul_enc(emb.basis_img[j], uint64_t(target.from_int(d).encoding()));
            img = target.add_enc(img, term);
        }
    }
    return FieldElem(&target, img);
}

FieldElem rel_trace(const FieldElem& x, const Field& sub) {
    const Field& sup = x.field();
    if (!sub.is_subfield_of(sup)) throw std::invalid_argument("rel_trace: not a subfield");
    int d = sup.f() / sub.f();
    int64_t s = sub.size();
    FieldElem acc = sup.zero();
    FieldElem xi = x;
    for (int i = 0; i < d; ++i) {
        acc = acc + xi;
        xi = xi.pow(s);
    }
    const Embedding& emb = get_embedding(sub, sup);
    auto it = emb.reverse.find(acc.encoding());
    if (it == emb.reverse.end()) throw std::logic_error("rel_trace: value not in subfield");
    return FieldElem(&sub, it->second);
}

FieldElem rel_norm(const FieldElem& x, const Field& sub) {
    const Field& sup = x.field();
    if (!sub.is_subfield_of(sup)) throw std::invalid_argument("rel_norm: not a subfield");
    int d = sup.f() / sub.f();
    int64_t s = sub.size();
    FieldElem acc = sup.one();
    FieldElem xi = x;
    for (int i = 0; i < d; ++i) {
        acc = acc * xi;
        xi = xi.pow(s);
    }
    const Embedding& emb = get_embedding(sub, sup);
    auto it = emb.reverse.find(acc.encoding());
    if (it == emb.reverse.end()) throw std::logic_error("rel_norm: value not in subfield");
    return FieldElem(&sub, it->second);
}

}  // namespace weilsum
