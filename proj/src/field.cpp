#include "ellinv/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ellinv/rng.hpp"

namespace ellinv {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::degree_zero: return "DegreeZero";
        case errc::singular_curve: return "SingularCurve";
        case errc::point_not_on_curve: return "PointNotOnCurve";
        case errc::ambiguous_order: return "AmbiguousOrder";
        case errc::torsion_not_rational: return "TorsionNotRational";
        case errc::incompatible_j: return "IncompatibleJ";
        case errc::root_of_unity_missing: return "RootOfUnityMissing";
        case errc::invalid_input: return "InvalidInput";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::not_additive_subgroup: return "NotAdditiveSubgroup";
        case errc::pole_at_identity: return "PoleAtIdentity";
        case errc::not_sum_zero: return "NotSumZero";
        case errc::degenerate_points: return "DegeneratePoints";
        case errc::not_normal: return "NotNormal";
        case errc::no_split_embedding: return "NoSplitEmbedding";
        case errc::order_divides_l: return "OrderDividesL";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::bad_characteristic: return "BadCharacteristic";
        case errc::enumeration_missing: return "EnumerationMissing";
        case errc::too_many_pole_retries: return "TooManyPoleRetries";
        case errc::rank_deficient_sampling: return "RankDeficientSampling";
        case errc::rank_unstable: return "RankUnstable";
        case errc::non_integral_endomorphism: return "NonIntegralEndomorphism";
        case errc::non_integral_result: return "NonIntegralResult";
        case errc::missing_orbit_data: return "MissingOrbitData";
        case errc::wrong_model: return "WrongModel";
        case errc::config_error: return "ConfigError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((__uint128_t)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, s++;
    // Deterministic witness set for n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// F_p[t] helpers on low-to-high coefficient vectors, used only for modulus
// construction.
using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = (r[i + j] + (__uint128_t)a[i] * b[j]) % p;
    }
    // reduce by monic f
    size_t k = f.size() - 1;
    for (size_t i = r.size(); i-- > k;) {
        uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (size_t j = 0; j < k; j++) {
            uint64_t sub = mulmod(c, f[j], p);
            r[i - k + j] = (r[i - k + j] + p - sub) % p;
        }
    }
    r.resize(k);
    trim(r);
    return r;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// t^(p^n) mod f by repeated exponentiation.
Poly frobenius_power(const Poly& f, uint64_t p, uint32_t n) {
    Poly t = {0, 1};
    Poly r = t;
    for (uint32_t i = 0; i < n; i++) r = poly_powmod(r, p, f, p);
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t lead_inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t c = mulmod(a.back(), lead_inv, p);
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); i++)
                a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& f, uint64_t p) {
    uint32_t k = uint32_t(f.size() - 1);
    Poly t = {0, 1};
    // Rabin: t^{p^k} == t mod f, and gcd(t^{p^{k/r}} - t, f) == 1 for primes r | k.
    Poly xk = frobenius_power(f, p, k);
    Poly diff = xk;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (uint32_t r = 2; r <= k; r++) {
        if (k % r != 0) continue;
        bool rp = true;
        for (uint32_t d = 2; d * d <= r; d++)
            if (r % d == 0) { rp = false; break; }
        if (!rp) continue;
        Poly xr = frobenius_power(f, p, k / r);
        Poly g = xr;
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        Poly gc = poly_gcd(g, f, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

} // namespace

FieldCtx make_field(uint64_t p, uint32_t k) {
    if (!is_prime_u64(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (k == 0) fail(errc::degree_zero, "extension degree must be >= 1");
    __uint128_t q = 1;
    for (uint32_t i = 0; i < k; i++) {
        q *= p;
        if (q > ((__uint128_t)1 << 62)) fail(errc::invalid_input, "field size exceeds 2^62");
    }
    FieldCtx F;
    F.p = p;
    F.k = k;
    F.q = uint64_t(q);
    if (k == 1) {
        F.modulus = {0, 1}; // t
        return F;
    }
    // Enumerate monic degree-k polynomials in lex order on the coefficient
    // tuple (c_{k-1}, ..., c_0); low index varies fastest.
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; i++) count *= p;
    for (uint64_t m = 0; m < count; m++) {
        Poly f(k + 1, 0);
        uint64_t v = m;
        for (uint32_t i = 0; i < k; i++) {
            f[i] = v % p;
            v /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) {
            F.modulus = f;
            return F;
        }
    }
    fail(errc::internal, "no irreducible polynomial found");
}

Fq Fq::zero(const FieldCtx& F) { return Fq(&F, Fel(F.k, 0)); }

Fq Fq::one(const FieldCtx& F) {
    Fel c(F.k, 0);
    c[0] = 1 % F.p;
    return Fq(&F, c);
}

Fq Fq::from_int(const FieldCtx& F, int64_t v) {
    Fel c(F.k, 0);
    int64_t r = v % int64_t(F.p);
    if (r < 0) r += int64_t(F.p);
    c[0] = uint64_t(r);
    return Fq(&F, c);
}

Fq Fq::from_coeffs(const FieldCtx& F, const std::vector<uint64_t>& coeffs) {
    if (coeffs.size() > F.k) fail(errc::invalid_input, "coefficient list longer than degree");
    Fel c(F.k, 0);
    for (size_t i = 0; i < coeffs.size(); i++) c[i] = coeffs[i] % F.p;
    return Fq(&F, c);
}

Fq Fq::from_index(const FieldCtx& F, uint64_t idx) {
    Fel c(F.k, 0);
    for (uint32_t i = 0; i < F.k && idx; i++) {
        c[i] = idx % F.p;
        idx /= F.p;
    }
    return Fq(&F, c);
}

bool Fq::is_zero() const {
    for (uint64_t v : c_)
        if (v) return false;
    return true;
}

bool Fq::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i]) return false;
    return true;
}

Fq operator+(const Fq& a, const Fq& b) {
    const FieldCtx& F = a.ctx();
    Fel c(F.k);
    for (uint32_t i = 0; i < F.k; i++) {
        uint64_t s = a.c_[i] + b.c_[i];
        c[i] = s >= F.p ? s - F.p : s;
    }
    return Fq(&F, c);
}

Fq operator-(const Fq& a, const Fq& b) {
    const FieldCtx& F = a.ctx();
    Fel c(F.k);
    for (uint32_t i = 0; i < F.k; i++)
        c[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + F.p - b.c_[i];
    return Fq(&F, c);
}

Fq Fq::operator-() const {
    const FieldCtx& F = ctx();
    Fel c(F.k);
    for (uint32_t i = 0; i < F.k; i++) c[i] = c_[i] ? F.p - c_[i] : 0;
    return Fq(&F, c);
}

Fq operator*(const Fq& a, const Fq& b) {
    const FieldCtx& F = a.ctx();
    uint64_t p = F.p;
    if (F.k == 1) {
        Fel c(1);
        c[0] = mulmod(a.c_[0], b.c_[0], p);
        return Fq(&F, c);
    }
    std::vector<uint64_t> r(2 * F.k - 1, 0);
    for (uint32_t i = 0; i < F.k; i++) {
        if (!a.c_[i]) continue;
        for (uint32_t j = 0; j < F.k; j++)
            r[i + j] = (r[i + j] + (__uint128_t)a.c_[i] * b.c_[j]) % p;
    }
    for (size_t i = r.size(); i-- > F.k;) {
        uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (uint32_t j = 0; j < F.k; j++) {
            uint64_t sub = mulmod(c, F.modulus[j], p);
            r[i - F.k + j] = (r[i - F.k + j] + p - sub) % p;
        }
    }
    r.resize(F.k);
    return Fq(&F, r);
}

Fq Fq::pow(uint64_t e) const {
    Fq r = Fq::one(ctx());
    Fq b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Fq Fq::inv() const {
    if (is_zero()) fail(errc::invalid_input, "inverse of zero");
    return pow(ctx().q - 2);
}

Fq operator/(const Fq& a, const Fq& b) { return a * b.inv(); }

std::string Fq::str() const {
    std::ostringstream os;
    if (ctx_->k == 1) {
        os << c_[0];
        return os.str();
    }
    os << "[";
    for (size_t i = 0; i < c_.size(); i++) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

Fq random_element(const FieldCtx& F, Rng& rng) {
    Fel c(F.k);
    for (uint32_t i = 0; i < F.k; i++) c[i] = rng.below(F.p);
    return Fq(&F, c);
}

bool is_square(const FieldCtx& F, const Fq& a) {
    if (a.is_zero()) return true;
    if (F.p == 2) return true; // squaring is a bijection in characteristic 2
    return a.pow((F.q - 1) / 2).is_one();
}

std::optional<Fq> field_sqrt(const FieldCtx& F, const Fq& a) {
    if (a.is_zero()) return Fq::zero(F);
    if (F.p == 2) {
        // x -> x^2 is bijective; the root is a^(q/2) = a^(2^(k-1) ... ) i.e. a^(q/2).
        return a.pow(F.q / 2);
    }
    if (!is_square(F, a)) return std::nullopt;
    uint64_t m = F.q - 1;
    uint32_t s = 0;
    while ((m & 1) == 0) m >>= 1, s++;
    Fq r = Fq::zero(F);
    if (s == 1) {
        r = a.pow((F.q + 1) / 4);
    } else {
        // Deterministic non-residue search over the canonical enumeration.
        Fq z = Fq::zero(F);
        for (uint64_t idx = 2;; idx++) {
            Fq c = Fq::from_index(F, idx);
            if (c.is_zero()) continue;
            if (!is_square(F, c)) { z = c; break; }
        }
        Fq cpow = z.pow(m);
        Fq t = a.pow(m);
        r = a.pow((m + 1) / 2);
        uint32_t e = s;
        while (!t.is_one()) {
            Fq t2 = t;
            uint32_t i = 0;
            while (!t2.is_one()) { t2 = t2 * t2; i++; }
            Fq b = cpow;
            for (uint32_t j = 0; j + i + 1 < e; j++) b = b * b;
            r = r * b;
            cpow = b * b;
            t = t * cpow;
            e = i;
        }
    }
    Fq other = -r;
    return other.lex_less(r) ? other : r;
}

Fq root_of_unity(const FieldCtx& F, uint64_t d) {
    if (d == 0) fail(errc::invalid_input, "d = 0");
    if ((F.q - 1) % d != 0)
        fail(errc::root_of_unity_missing, "no primitive " + std::to_string(d) + "-th root in F_" + std::to_string(F.q));
    if (d == 1) return Fq::one(F);
    // z = c^((q-1)/d) over the canonical enumeration until z has exact order d.
    auto order_is_d = [&](const Fq& z) {
        if (z.is_zero() || !z.pow(d).is_one()) return false;
        for (uint64_t r = 2; r <= d; r++) {
            if (d % r) continue;
            bool rp = true;
            for (uint64_t dd = 2; dd * dd <= r; dd++)
                if (r % dd == 0) { rp = false; break; }
            if (rp && z.pow(d / r).is_one()) return false;
        }
        return true;
    };
    Fq z = Fq::zero(F);
    for (uint64_t idx = 1;; idx++) {
        Fq c = Fq::from_index(F, idx);
        if (c.is_zero()) continue;
        Fq cand = c.pow((F.q - 1) / d);
        if (order_is_d(cand)) { z = cand; break; }
    }
    // Smallest encoding among all primitive d-th roots z^j, gcd(j, d) = 1.
    Fq best = z;
    Fq cur = z;
    for (uint64_t j = 2; j < d; j++) {
        cur = cur * z;
        if (std::gcd(j, d) != 1) continue;
        if (cur.lex_less(best)) best = cur;
    }
    return best;
}

} // namespace ellinv
