#include "ellinv/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ellinv {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = uint64_t(std::sqrt(double(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

uint64_t pollard_rho(uint64_t n, uint64_t c) {
    auto f = [&](uint64_t x) { return uint64_t(((__uint128_t)x * x + c) % n); };
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
        x = f(x);
        y = f(f(y));
        uint64_t diff = x > y ? x - y : y - x;
        d = std::gcd(diff, n);
    }
    return d == n ? 0 : d;
}

void factorize(uint64_t n, std::map<uint64_t, uint32_t>& out) {
    for (uint64_t p = 2; p * p <= n && p < (1u << 20); p++) {
        while (n % p == 0) { out[p]++; n /= p; }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) { out[n]++; return; }
    for (uint64_t c = 1;; c++) {
        uint64_t d = pollard_rho(n, c);
        if (d && d != n) {
            factorize(d, out);
            factorize(n / d, out);
            return;
        }
    }
}

std::vector<uint64_t> encode_point(const CurvePoint& P) {
    if (P.infinity) return {1};
    std::vector<uint64_t> v = {0};
    for (uint64_t c : P.x.coeffs()) v.push_back(c);
    for (uint64_t c : P.y.coeffs()) v.push_back(c);
    return v;
}

} // namespace

Curve::Curve(const FieldCtx& F, Fq a1, Fq a2, Fq a3, Fq a4, Fq a6)
    : F_(&F), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6),
      disc_(Fq::zero(F)), j_(Fq::zero(F)) {
    Fq b2 = a1 * a1 + Fq::from_int(F, 4) * a2;
    Fq b4 = Fq::from_int(F, 2) * a4 + a1 * a3;
    Fq b6 = a3 * a3 + Fq::from_int(F, 4) * a6;
    Fq b8 = a1 * a1 * a6 + Fq::from_int(F, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    disc_ = -(b2 * b2 * b8) - Fq::from_int(F, 8) * b4 * b4 * b4 - Fq::from_int(F, 27) * b6 * b6 +
            Fq::from_int(F, 9) * b2 * b4 * b6;
    if (disc_.is_zero()) fail(errc::singular_curve, "discriminant vanishes");
    Fq c4 = b2 * b2 - Fq::from_int(F, 24) * b4;
    j_ = c4 * c4 * c4 / disc_;
}

Curve curve_new(const FieldCtx& F, int64_t a1, int64_t a2, int64_t a3, int64_t a4, int64_t a6) {
    return Curve(F, Fq::from_int(F, a1), Fq::from_int(F, a2), Fq::from_int(F, a3),
                 Fq::from_int(F, a4), Fq::from_int(F, a6));
}

bool Curve::is_on_curve(const CurvePoint& P) const {
    if (P.infinity) return true;
    Fq lhs = P.y * P.y + a1_ * P.x * P.y + a3_ * P.y;
    Fq rhs = ((P.x + a2_) * P.x + a4_) * P.x + a6_;
    return lhs == rhs;
}

void Curve::require_on_curve(const CurvePoint& P) const {
    if (!is_on_curve(P)) fail(errc::point_not_on_curve, "point fails curve equation");
}

CurvePoint Curve::neg(const CurvePoint& P) const {
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, -P.y - a1_ * P.x - a3_);
}

CurvePoint Curve::add(const CurvePoint& P, const CurvePoint& Q) const {
    const FieldCtx& F = *F_;
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Fq lambda = Fq::zero(F);
    if (P.x == Q.x) {
        if (P.y != Q.y) return CurvePoint::identity();
        Fq den = Fq::from_int(F, 2) * P.y + a1_ * P.x + a3_;
        if (den.is_zero()) return CurvePoint::identity();
        lambda = (Fq::from_int(F, 3) * P.x * P.x + Fq::from_int(F, 2) * a2_ * P.x + a4_ - a1_ * P.y) / den;
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Fq x3 = lambda * lambda + a1_ * lambda - a2_ - P.x - Q.x;
    Fq y3 = lambda * (P.x - x3) - P.y - a1_ * x3 - a3_;
    return CurvePoint::affine(x3, y3);
}

CurvePoint Curve::mul(uint64_t m, const CurvePoint& P) const {
    CurvePoint r = CurvePoint::identity();
    CurvePoint b = P;
    while (m) {
        if (m & 1) r = add(r, b);
        b = add(b, b);
        m >>= 1;
    }
    return r;
}

CurvePoint Curve::mul_signed(int64_t m, const CurvePoint& P) const {
    if (m < 0) return neg(mul(uint64_t(-m), P));
    return mul(uint64_t(m), P);
}

CurvePoint Curve::random_point(Rng& rng) const {
    const FieldCtx& F = *F_;
    if (F.p == 2) {
        for (;;) {
            Fq x = random_element(F, rng);
            Fq y = random_element(F, rng);
            CurvePoint P = CurvePoint::affine(x, y);
            if (is_on_curve(P)) return P;
        }
    }
    Fq half = Fq::from_int(F, 2).inv();
    for (;;) {
        Fq x = random_element(F, rng);
        Fq fx = ((x + a2_) * x + a4_) * x + a6_;
        Fq b = a1_ * x + a3_;
        Fq disc = b * b + Fq::from_int(F, 4) * fx;
        auto r = field_sqrt(F, disc);
        if (!r) continue;
        Fq root = rng.coin() ? *r : -*r;
        return CurvePoint::affine(x, (root - b) * half);
    }
}

namespace {

// Order of P given some annihilating multiple M.
uint64_t point_order(const Curve& E, const CurvePoint& P, uint64_t M) {
    std::map<uint64_t, uint32_t> fac;
    factorize(M, fac);
    uint64_t o = M;
    for (auto& [p, e] : fac) {
        for (uint32_t i = 0; i < e; i++) {
            if (E.mul(o / p, P).infinity)
                o /= p;
            else
                break;
        }
    }
    return o;
}

// Any multiple of ord(P) in the Hasse interval, by baby-step/giant-step.
uint64_t bsgs_annihilator(const Curve& E, const CurvePoint& P) {
    uint64_t q = E.ctx().q;
    uint64_t B = isqrt_u64(4 * q);
    uint64_t m = isqrt_u64(2 * B) + 1;
    std::map<std::vector<uint64_t>, uint64_t> baby;
    CurvePoint jP = CurvePoint::identity();
    for (uint64_t j = 0; j < m; j++) {
        baby.emplace(encode_point(E.neg(jP)), j);
        jP = E.add(jP, P);
    }
    CurvePoint Q = E.mul(q + 1, P);
    CurvePoint mP = E.mul(m, P);
    int64_t imax = int64_t(B / m) + 1;
    CurvePoint R = E.mul_signed(-imax * int64_t(m), P);
    R = E.add(Q, R);
    for (int64_t i = -imax; i <= imax; i++) {
        auto it = baby.find(encode_point(R));
        if (it != baby.end()) {
            int64_t t = i * int64_t(m) + int64_t(it->second);
            int64_t M = int64_t(q) + 1 + t;
            if (M > 0) return uint64_t(M);
        }
        R = E.add(R, mP);
    }
    fail(errc::internal, "BSGS found no annihilator in the Hasse interval");
}

} // namespace

uint64_t Curve::group_order() const {
    if (cached_order_) return *cached_order_;
    const FieldCtx& F = *F_;
    uint64_t q = F.q;
    uint64_t order = 0;
    if (q < 10000) {
        if (F.p == 2) {
            uint64_t count = 1;
            for (uint64_t xi = 0; xi < q; xi++)
                for (uint64_t yi = 0; yi < q; yi++) {
                    CurvePoint P = CurvePoint::affine(Fq::from_index(F, xi), Fq::from_index(F, yi));
                    if (is_on_curve(P)) count++;
                }
            order = count;
        } else {
            uint64_t count = 1;
            for (uint64_t xi = 0; xi < q; xi++) {
                Fq x = Fq::from_index(F, xi);
                Fq fx = ((x + a2_) * x + a4_) * x + a6_;
                Fq b = a1_ * x + a3_;
                Fq disc = b * b + Fq::from_int(F, 4) * fx;
                if (disc.is_zero())
                    count += 1;
                else if (is_square(F, disc))
                    count += 2;
            }
            order = count;
        }
    } else {
        uint64_t B = isqrt_u64(4 * q);
        uint64_t lo = q + 1 - B, hi = q + 1 + B;
        Rng rng(0xe11c04dull);
        uint64_t L = 1;
        bool found = false;
        for (int tries = 0; tries < 40; tries++) {
            CurvePoint P = random_point(rng);
            uint64_t M = bsgs_annihilator(*this, P);
            uint64_t o = point_order(*this, P, M);
            L = std::lcm(L, o);
            uint64_t first = (lo + L - 1) / L * L;
            if (first > hi) fail(errc::internal, "no multiple of point order lattice in Hasse interval");
            if (first + L > hi) {
                order = first;
                found = true;
                break;
            }
        }
        if (!found) fail(errc::ambiguous_order, "point orders did not pin the group order");
    }
    cached_order_ = order;
    return order;
}

std::vector<CurvePoint> Curve::torsion_points(uint64_t N, bool full) const {
    const FieldCtx& F = *F_;
    if (N == 0) fail(errc::invalid_input, "N = 0");
    if (N % F.p == 0) fail(errc::invalid_input, "only etale torsion supported (gcd(N, p) = 1)");
    std::vector<CurvePoint> id = {CurvePoint::identity()};
    if (N == 1) return id;
    uint64_t c = group_order();
    if (full) {
        if ((F.q - 1) % N != 0 || c % (N * N) != 0)
            fail(errc::torsion_not_rational, "full E[N] is not rational over this field");
    }
    // Strip the prime-to-N part of the group order.
    uint64_t coprime = c;
    for (;;) {
        uint64_t g = std::gcd(coprime, N);
        if (g == 1) break;
        coprime /= g;
    }
    Rng rng(0x7045ull ^ (N << 8));
    std::set<std::vector<uint64_t>> seen;
    std::vector<CurvePoint> pts = id;
    seen.insert(encode_point(id[0]));
    auto insert_closure = [&](const CurvePoint& Q) {
        if (seen.count(encode_point(Q))) return;
        // close under addition with everything present
        std::vector<CurvePoint> frontier = {Q};
        while (!frontier.empty()) {
            CurvePoint cur = frontier.back();
            frontier.pop_back();
            if (seen.count(encode_point(cur))) continue;
            seen.insert(encode_point(cur));
            std::vector<CurvePoint> snapshot = pts;
            pts.push_back(cur);
            for (const CurvePoint& other : snapshot) frontier.push_back(add(cur, other));
        }
    };
    uint64_t budget = 64 * N * N;
    for (uint64_t it = 0; it < budget; it++) {
        if (pts.size() == N * N) break;
        CurvePoint R = random_point(rng);
        CurvePoint Q = mul(coprime, R); // order divides the N-primary part of c
        // Push into E[N]: reduce by the order's excess over N.
        uint64_t o = point_order(*this, Q, c / coprime);
        uint64_t g = std::gcd(o, N);
        CurvePoint T = mul(o / g, Q); // order divides gcd(o, N) | N
        if (!mul(N, T).infinity) continue;
        insert_closure(T);
    }
    if (full && pts.size() != N * N)
        fail(errc::torsion_not_rational, "full E[N] not found within the retry budget");
    std::sort(pts.begin(), pts.end(), [](const CurvePoint& a, const CurvePoint& b) {
        return encode_point(a) < encode_point(b);
    });
    return pts;
}

uint32_t aut0_order(const Curve& E) {
    const FieldCtx& F = E.ctx();
    if (F.p <= 3) return 2; // supersingular char 2/3 automorphisms out of scope
    if (E.j_invariant().is_zero()) return 6;
    if (E.j_invariant() == Fq::from_int(F, 1728)) return 4;
    return 2;
}

namespace {

void require_short_form(const Curve& E) {
    if (!E.a1().is_zero() || !E.a2().is_zero() || !E.a3().is_zero())
        fail(errc::incompatible_j, "automorphism scalings require a short Weierstrass model");
}

} // namespace

AutoScaling auto_scaling(const AutoKind& kind, const Curve& E) {
    const FieldCtx& F = E.ctx();
    Fq one = Fq::one(F);
    switch (kind.tag) {
        case AutoTag::Neg:
            require_short_form(E);
            return {one, -one};
        case AutoTag::Zeta3:
        case AutoTag::ZetaBar3: {
            require_short_form(E);
            if (!E.j_invariant().is_zero() || !E.a4().is_zero())
                fail(errc::incompatible_j, "zeta_3 action needs j = 0, model y^2 = x^3 + b");
            Fq z = root_of_unity(F, 3);
            if (kind.tag == AutoTag::ZetaBar3) z = z * z;
            return {z, one};
        }
        case AutoTag::I:
        case AutoTag::NegI: {
            require_short_form(E);
            if (E.j_invariant() != Fq::from_int(F, 1728) || !E.a6().is_zero())
                fail(errc::incompatible_j, "i action needs j = 1728, model y^2 = x^3 + a x");
            Fq i = root_of_unity(F, 4);
            return {-one, kind.tag == AutoTag::I ? i : -i};
        }
        case AutoTag::MuSixPower: {
            require_short_form(E);
            if (!E.j_invariant().is_zero() || !E.a4().is_zero())
                fail(errc::incompatible_j, "mu_6 action needs j = 0, model y^2 = x^3 + b");
            Fq z = root_of_unity(F, 3);
            uint32_t e = kind.e % 6;
            Fq u = z.pow(e % 3);
            Fq v = (e % 2) ? -one : one;
            return {u, v};
        }
    }
    fail(errc::internal, "unknown automorphism tag");
}

CurvePoint auto_apply(const AutoKind& kind, const Curve& E, const CurvePoint& P) {
    if (kind.tag == AutoTag::Neg) return E.neg(P); // valid on any model
    AutoScaling s = auto_scaling(kind, E);
    if (P.infinity) return P;
    E.require_on_curve(P);
    CurvePoint Q = CurvePoint::affine(s.u * P.x, s.v * P.y);
    E.require_on_curve(Q);
    return Q;
}

AutoScaling aut0_scaling_power(const Curve& E, uint32_t e) {
    const FieldCtx& F = E.ctx();
    uint32_t m = aut0_order(E);
    e %= m;
    Fq one = Fq::one(F);
    if (m == 2) return {one, e ? -one : one};
    if (m == 4) {
        AutoScaling g = auto_scaling(AutoKind::i(), E);
        return {g.u.pow(e), g.v.pow(e)};
    }
    AutoScaling g = auto_scaling(AutoKind::mu6_power(1), E);
    return {g.u.pow(e), g.v.pow(e)};
}

CurvePoint aut0_apply_power(const Curve& E, uint32_t e, const CurvePoint& P) {
    uint32_t m = aut0_order(E);
    e %= m;
    if (e == 0 || P.infinity) return P;
    if (m == 2 || (m == 6 && e == 3)) return E.neg(P);
    AutoScaling s = aut0_scaling_power(E, e);
    return CurvePoint::affine(s.u * P.x, s.v * P.y);
}

} // namespace ellinv
