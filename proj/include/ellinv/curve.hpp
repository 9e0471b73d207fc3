#pragma once

#include <optional>
#include <vector>

#include "ellinv/field.hpp"
#include "ellinv/rng.hpp"

namespace ellinv {

// Point on a Weierstrass curve: identity or affine pair.
struct CurvePoint {
    bool infinity = true;
    Fq x, y;

    static CurvePoint identity() { return CurvePoint{}; }
    static CurvePoint affine(Fq px, Fq py) { return CurvePoint{false, std::move(px), std::move(py)}; }

    bool operator==(const CurvePoint& o) const {
        if (infinity != o.infinity) return false;
        if (infinity) return true;
        return x == o.x && y == o.y;
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_{p^k}.
class Curve {
  public:
    Curve(const FieldCtx& F, Fq a1, Fq a2, Fq a3, Fq a4, Fq a6);

    const FieldCtx& ctx() const { return *F_; }
    const Fq& a1() const { return a1_; }
    const Fq& a2() const { return a2_; }
    const Fq& a3() const { return a3_; }
    const Fq& a4() const { return a4_; }
    const Fq& a6() const { return a6_; }
    const Fq& discriminant() const { return disc_; }
    const Fq& j_invariant() const { return j_; }

    bool is_on_curve(const CurvePoint& P) const;
    void require_on_curve(const CurvePoint& P) const;

    CurvePoint neg(const CurvePoint& P) const;
    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint sub(const CurvePoint& P, const CurvePoint& Q) const { return add(P, neg(Q)); }
    CurvePoint mul(uint64_t m, const CurvePoint& P) const;
    CurvePoint mul_signed(int64_t m, const CurvePoint& P) const;

    // Exact group order, cached.  Exhaustive count for q < 1e4, otherwise
    // BSGS over the Hasse interval with a retry budget.
    uint64_t group_order() const;

    // Uniform affine point: x uniform among x-coordinates with a root, y
    // uniform between the roots.  Never the identity.
    CurvePoint random_point(Rng& rng) const;

    // All F_q-rational points killed by N (gcd(N, p) = 1).  With full = true,
    // errors unless the whole N^2-sized group is rational.
    std::vector<CurvePoint> torsion_points(uint64_t N, bool full = false) const;

  private:
    const FieldCtx* F_;
    Fq a1_, a2_, a3_, a4_, a6_;
    Fq disc_, j_;
    mutable std::optional<uint64_t> cached_order_;
};

Curve curve_new(const FieldCtx& F, int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6);

// Automorphism tags for the cyclic part of Aut_0(E).  MuSixPower(e) is the
// canonical order-6 generator raised to e; the others are fixed shorthands.
enum class AutoTag { Neg, Zeta3, ZetaBar3, I, NegI, MuSixPower };

struct AutoKind {
    AutoTag tag = AutoTag::Neg;
    uint32_t e = 1; // exponent for MuSixPower

    static AutoKind neg() { return {AutoTag::Neg, 1}; }
    static AutoKind zeta3() { return {AutoTag::Zeta3, 1}; }
    static AutoKind zeta3_bar() { return {AutoTag::ZetaBar3, 1}; }
    static AutoKind i() { return {AutoTag::I, 1}; }
    static AutoKind neg_i() { return {AutoTag::NegI, 1}; }
    static AutoKind mu6_power(uint32_t e) { return {AutoTag::MuSixPower, e}; }
};

// Order of the full automorphism group Aut_0 = mu_m for this curve's j;
// only the reduced (prime-to-p) groups in scope: m in {2, 4, 6}.
uint32_t aut0_order(const Curve& E);

// Image of P under the automorphism.  Scaling roots of unity are the
// smallest-encoding primitive roots of the curve's field.
CurvePoint auto_apply(const AutoKind& kind, const Curve& E, const CurvePoint& P);

// The same action described as (x, y) -> (u * x, v * y) on a short-form
// curve; exposed for building monomial symmetries.
struct AutoScaling {
    Fq u, v;
};
AutoScaling auto_scaling(const AutoKind& kind, const Curve& E);

// auto_apply for the canonical generator of mu_m raised to exponent e.
CurvePoint aut0_apply_power(const Curve& E, uint32_t e, const CurvePoint& P);
AutoScaling aut0_scaling_power(const Curve& E, uint32_t e);

} // namespace ellinv
