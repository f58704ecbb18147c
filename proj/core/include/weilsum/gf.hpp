#pragma once

// Exact arithmetic in GF(p^f): deterministic field models (lexicographically
// smallest irreducible modulus), subfield embeddings, Frobenius, relative
// trace/norm, and materialized discrete-log tables for the multiplicative
// group.  Field objects are interned, immutable after construction, and
// safe to share across threads; element operations are pure.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilsum {

class Field;

// Element of GF(p^f), represented by its owner field and the base-p encoding
// of its coefficient vector (constant term = least significant digit).
// Elements of different field objects never compare equal and never mix in
// arithmetic; cross-field movement is always an explicit embed().
class FieldElem {
public:
    FieldElem() : fld_(nullptr), enc_(0) {}
    FieldElem(const Field* f, uint64_t enc) : fld_(f), enc_(enc) {}

    const Field& field() const { return *fld_; }
    const Field* field_ptr() const { return fld_; }
    uint64_t encoding() const { return enc_; }
    std::vector<int64_t> coeffs() const;
    bool is_zero() const { return enc_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(int64_t e) const;     // e may be negative for nonzero elements

    bool operator==(const FieldElem& o) const {
        return fld_ == o.fld_ && enc_ == o.enc_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    const Field* fld_;
    uint64_t enc_;
};

class Field {
public:
    // Interned field with the canonical (lex-smallest) irreducible modulus.
    static const Field& make(int64_t p, int f);
    // Interned field with an explicitly given monic irreducible modulus,
    // constant term first, length f+1.
    static const Field& make(int64_t p, int f, const std::vector<int64_t>& modulus);

    int64_t p() const { return p_; }
    int f() const { return f_; }
    int64_t size() const { return size_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return FieldElem(this, 0); }
    FieldElem one() const { return FieldElem(this, 1); }
    FieldElem from_coeffs(const std::vector<int64_t>& c) const;
    FieldElem from_int(int64_t n) const;     // n mod p, in the prime subfield
    FieldElem from_encoding(uint64_t e) const;
    // Canonical multiplicative generator: first element, in enumeration
    // order, of full order p^f - 1.
    FieldElem generator() const { return FieldElem(this, gen_enc_); }

    // Canonical enumeration: by base-p value of the coefficient tuple with
    // the constant term as the fastest-varying digit (= encoding order).
    std::vector<FieldElem> enumerate() const;

    bool is_subfield_of(const Field& other) const {
        return p_ == other.p_ && other.f_ % f_ == 0;
    }

    std::string json() const;    // {"p":..,"f":..,"modulus":[..]}

    // -- internal arithmetic on encodings ---------------------------------
    uint64_t add_enc(uint64_t a, uint64_t b) const;
    uint64_t sub_enc(uint64_t a, uint64_t b) const;
    uint64_t neg_enc(uint64_t a) const;
    uint64_t mul_enc(uint64_t a, uint64_t b) const;
    uint64_t inv_enc(uint64_t a) const;
    uint64_t pow_enc(uint64_t a, int64_t e) const;

    // dlog of a nonzero element w.r.t. the canonical generator, in
    // [0, p^f - 1).  Tables exist for p^f <= 2^24.
    int64_t dlog_enc(uint64_t a) const;
    uint64_t antilog(int64_t e) const;   // generator^e, e reduced mod p^f-1

    int64_t abstrace_enc(uint64_t a) const;   // trace down to GF(p), as 0..p-1

    ~Field();
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int64_t p, int f, std::vector<int64_t> modulus);
    void build_tables();

    int64_t p_;
    int f_;
    int64_t size_;
    std::vector<int64_t> modulus_;
    uint64_t gen_enc_ = 0;

    // small-field fast paths
    std::vector<int32_t> add_tab_, mul_tab_;   // size^2 when size <= table cap
    std::vector<int64_t> log_tab_;             // size p^f, index 0 unused
    std::vector<uint32_t> exp_tab_;            // size p^f - 1
    std::vector<int32_t> abstrace_tab_;        // size p^f

    uint64_t mul_generic(uint64_t a, uint64_t b) const;

    friend struct FieldRegistry;
};

// Discrete log of a nonzero element w.r.t. the canonical generator.
int64_t dlog(const FieldElem& x);

// x^r for r a power of the characteristic.
FieldElem frobenius(const FieldElem& x, int64_t r);

// Ring-homomorphic embedding GF(p^{f'}) -> GF(p^f), f' | f.  The image of
// the subfield's defining root is the first root (in enumeration order) of
// the subfield modulus in the target; deterministic across runs.
FieldElem embed(const FieldElem& x, const Field& target);

// Relative trace and norm down to a subfield; the result is returned as an
// element of the subfield.
FieldElem rel_trace(const FieldElem& x, const Field& sub);
FieldElem rel_norm(const FieldElem& x, const Field& sub);

bool is_prime(int64_t n);

}  // namespace weilsum
