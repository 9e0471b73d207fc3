#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellinv/error.hpp"

namespace ellinv {

bool is_prime_u64(uint64_t n);

// Context for F_{p^k}.  The modulus is the lexicographically smallest monic
// irreducible of degree k over F_p (coefficients compared high to low), so a
// (p, k) pair always names the same field representation.
struct FieldCtx {
    uint64_t p = 0;
    uint32_t k = 1;
    std::vector<uint64_t> modulus; // low-to-high, length k+1, monic
    uint64_t q = 0;                // p^k

    bool operator==(const FieldCtx& o) const { return p == o.p && k == o.k; }
};

FieldCtx make_field(uint64_t p, uint32_t k);

// Element of F_{p^k}: coefficient list in the power basis, low degree first,
// each in [0, p).  Plain value type; the context is passed alongside.
using Fel = std::vector<uint64_t>;

class Fq {
  public:
    Fq() : ctx_(nullptr) {}
    Fq(const FieldCtx* ctx, Fel coeffs) : ctx_(ctx), c_(std::move(coeffs)) {}

    static Fq zero(const FieldCtx& F);
    static Fq one(const FieldCtx& F);
    static Fq from_int(const FieldCtx& F, int64_t v);
    static Fq from_coeffs(const FieldCtx& F, const std::vector<uint64_t>& coeffs);
    // Canonical enumeration of elements: base-p digits of idx, low coeff first.
    static Fq from_index(const FieldCtx& F, uint64_t idx);

    const FieldCtx& ctx() const { return *ctx_; }
    const Fel& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    uint64_t residue() const { return c_.empty() ? 0 : c_[0]; } // k == 1 convenience

    friend Fq operator+(const Fq& a, const Fq& b);
    friend Fq operator-(const Fq& a, const Fq& b);
    friend Fq operator*(const Fq& a, const Fq& b);
    friend Fq operator/(const Fq& a, const Fq& b);
    Fq operator-() const;
    Fq& operator+=(const Fq& b) { *this = *this + b; return *this; }
    Fq& operator-=(const Fq& b) { *this = *this - b; return *this; }
    Fq& operator*=(const Fq& b) { *this = *this * b; return *this; }
    bool operator==(const Fq& b) const { return c_ == b.c_; }
    bool operator!=(const Fq& b) const { return c_ != b.c_; }
    // Lex order on the stored coefficient list; the global tie-breaking rule.
    bool lex_less(const Fq& b) const { return c_ < b.c_; }

    Fq inv() const;
    Fq pow(uint64_t e) const;
    std::string str() const;

  private:
    const FieldCtx* ctx_;
    Fel c_;
};

// Uniform random element.
Fq random_element(const FieldCtx& F, class Rng& rng);

// Square root with deterministic tie-break (lex-smaller root); nullopt for
// non-squares.  sqrt(0) = 0.
std::optional<Fq> field_sqrt(const FieldCtx& F, const Fq& a);

bool is_square(const FieldCtx& F, const Fq& a);

// Smallest-encoding primitive d-th root of unity; requires d | q - 1.
Fq root_of_unity(const FieldCtx& F, uint64_t d);

} // namespace ellinv
