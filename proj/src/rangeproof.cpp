#include "sl/rangeproof.hpp"

#include <mutex>
#include <stdexcept>

#include "sl/hashing.hpp"

namespace sl::rp {

namespace {

constexpr std::string_view kTag = "SL/FS/range";
constexpr std::string_view kGenTag = "SL/GEN/bp";
constexpr size_t kMaxVectorLen = 128; // two 63-bit values, padded

Bytes point_bytes(const G1Point& p) {
    auto b = p.to_bytes();
    return Bytes(b.begin(), b.end());
}

// per-bit generator vectors and the inner-product base, derived by
// hash-to-group and shared process-wide
struct Gens {
    std::vector<G1Affine> G, H;
    G1Point U;
};

const Gens& gens() {
    static Gens g;
    static std::once_flag once;
    std::call_once(once, [] {
        g.G.resize(kMaxVectorLen);
        g.H.resize(kMaxVectorLen);
        for (std::uint32_t i = 0; i < kMaxVectorLen; i++) {
            Bytes gi = {'G'};
            Bytes hi = {'H'};
            for (int k = 3; k >= 0; k--) {
                gi.push_back(static_cast<std::uint8_t>(i >> (8 * k)));
                hi.push_back(static_cast<std::uint8_t>(i >> (8 * k)));
            }
            g.G[i] = hash_to_g1(kGenTag, {gi}).to_affine();
            g.H[i] = hash_to_g1(kGenTag, {hi}).to_affine();
        }
        g.U = hash_to_g1(kGenTag, {{'u'}});
    });
    return g;
}

size_t next_pow2(size_t v) {
    size_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

using ScalarVec = std::vector<Scalar>;

Scalar inner(const ScalarVec& a, const ScalarVec& b) {
    Scalar acc = Scalar::zero();
    for (size_t i = 0; i < a.size(); i++) acc += a[i] * b[i];
    return acc;
}

ScalarVec powers(const Scalar& x, size_t n) {
    ScalarVec out(n);
    Scalar cur = Scalar::one();
    for (size_t i = 0; i < n; i++) {
        out[i] = cur;
        cur *= x;
    }
    return out;
}

void check_statement(const RangeStatement& x) {
    if (x.n < 2 || x.n > 64) throw std::invalid_argument("range bit parameter n must be in [2, 64]");
    if (x.commitments.empty() || x.commitments.size() > 2)
        throw std::invalid_argument("range statement carries one or two commitments");
}

struct Layout {
    size_t m;       // commitments
    size_t nbits;   // bits per value = n - 1
    size_t N;       // padded vector length
};

Layout layout_of(const RangeStatement& x) {
    Layout l;
    l.m = x.commitments.size();
    l.nbits = x.n - 1;
    l.N = next_pow2(l.m * l.nbits);
    return l;
}

// constraint weights: zeta[j*nbits + i] = z^(2+j) 2^i, zero on padding
ScalarVec zeta_vector(const Layout& l, const Scalar& z) {
    ScalarVec zeta(l.N, Scalar::zero());
    Scalar zj = z * z;
    for (size_t j = 0; j < l.m; j++) {
        Scalar p2 = Scalar::one();
        Scalar two = Scalar::from_u64(2);
        for (size_t i = 0; i < l.nbits; i++) {
            zeta[j * l.nbits + i] = zj * p2;
            p2 *= two;
        }
        zj *= z;
    }
    return zeta;
}

Scalar delta(const Layout& l, const Scalar& y, const Scalar& z) {
    ScalarVec yp = powers(y, l.N);
    Scalar sum_y = Scalar::zero();
    for (const auto& v : yp) sum_y += v;
    Scalar d = (z - z * z) * sum_y;
    // sum over values of z^(3+j) (2^nbits - 1)
    Scalar full = Scalar::zero();
    {
        Scalar p2 = Scalar::one();
        Scalar two = Scalar::from_u64(2);
        for (size_t i = 0; i < l.nbits; i++) {
            full += p2;
            p2 *= two;
        }
    }
    Scalar zj = z * z * z;
    for (size_t j = 0; j < l.m; j++) {
        d -= zj * full;
        zj *= z;
    }
    return d;
}

struct TranscriptState {
    HashParts parts;

    void push(Bytes b) { parts.push_back(std::move(b)); }
    void push_point(const G1Point& p) { parts.push_back(point_bytes(p)); }
    void push_scalar(const Scalar& s) {
        auto b = s.to_bytes();
        parts.emplace_back(b.begin(), b.end());
    }
    Scalar challenge(const char* label) {
        HashParts p = parts;
        p.emplace_back(label, label + std::char_traits<char>::length(label));
        return hash_to_scalar(kTag, p);
    }
};

RangeProof prove_impl(const RangeStatement& x, const RangeWitness& w, RandomSource& rng,
                      bool enforce_range) {
    check_statement(x);
    Layout l = layout_of(x);
    if (w.values.size() != l.m || w.blinders.size() != l.m)
        throw std::invalid_argument("witness arity mismatch");
    for (size_t j = 0; j < l.m; j++) {
        if (enforce_range && l.nbits < 64 && w.values[j] >> l.nbits)
            throw std::invalid_argument("witness value out of range");
        G1Point expect = Scalar::from_u64(w.values[j]) * x.base_g + w.blinders[j] * x.base_t;
        if (expect != x.commitments[j])
            throw std::invalid_argument("witness does not open commitment");
    }

    const Gens& gen = gens();
    std::span<const G1Affine> Gv(gen.G.data(), l.N);
    std::span<const G1Affine> Hv(gen.H.data(), l.N);

    // bit decomposition (truncated at nbits; padding slots carry zero)
    ScalarVec aL(l.N, Scalar::zero()), aR(l.N);
    for (size_t j = 0; j < l.m; j++)
        for (size_t i = 0; i < l.nbits; i++)
            aL[j * l.nbits + i] = Scalar::from_u64((w.values[j] >> i) & 1);
    for (size_t i = 0; i < l.N; i++) aR[i] = aL[i] - Scalar::one();

    Scalar alpha = Scalar::random(rng);
    Scalar rho = Scalar::random(rng);
    ScalarVec sL(l.N), sR(l.N);
    for (size_t i = 0; i < l.N; i++) {
        sL[i] = Scalar::random(rng);
        sR[i] = Scalar::random(rng);
    }

    // A = alpha h + <aL, G> + <aR, H>;  S likewise with sL, sR
    auto vector_commit = [&](const Scalar& blind, const ScalarVec& left, const ScalarVec& right) {
        std::vector<G1Affine> pts;
        ScalarVec ks;
        pts.reserve(2 * l.N + 1);
        ks.reserve(2 * l.N + 1);
        for (size_t i = 0; i < l.N; i++) {
            pts.push_back(Gv[i]);
            ks.push_back(left[i]);
        }
        for (size_t i = 0; i < l.N; i++) {
            pts.push_back(Hv[i]);
            ks.push_back(right[i]);
        }
        pts.push_back(x.base_t.to_affine());
        ks.push_back(blind);
        return G1Point::msm(std::span<const G1Affine>(pts), std::span<const Scalar>(ks));
    };

    RangeProof proof;
    proof.A = vector_commit(alpha, aL, aR);
    proof.S = vector_commit(rho, sL, sR);

    TranscriptState ts;
    ts.push(x.serialize_header());
    ts.push_point(proof.A);
    ts.push_point(proof.S);
    Scalar y = ts.challenge("y");
    Scalar z = ts.challenge("z");

    ScalarVec yp = powers(y, l.N);
    ScalarVec zeta = zeta_vector(l, z);

    ScalarVec l0(l.N), r0(l.N), r1(l.N);
    for (size_t i = 0; i < l.N; i++) {
        l0[i] = aL[i] - z;
        r0[i] = yp[i] * (aR[i] + z) + zeta[i];
        r1[i] = yp[i] * sR[i];
    }
    const ScalarVec& l1 = sL;

    Scalar t1 = inner(l0, r1) + inner(l1, r0);
    Scalar t2 = inner(l1, r1);
    Scalar tau1 = Scalar::random(rng);
    Scalar tau2 = Scalar::random(rng);
    proof.T1 = t1 * x.base_g + tau1 * x.base_t;
    proof.T2 = t2 * x.base_g + tau2 * x.base_t;

    ts.push_point(proof.T1);
    ts.push_point(proof.T2);
    Scalar xc = ts.challenge("x");

    ScalarVec lv(l.N), rv(l.N);
    for (size_t i = 0; i < l.N; i++) {
        lv[i] = l0[i] + xc * l1[i];
        rv[i] = r0[i] + xc * r1[i];
    }
    proof.t_hat = inner(lv, rv);
    proof.tau_x = tau2 * xc.square() + tau1 * xc;
    {
        Scalar zj = z * z;
        for (size_t j = 0; j < l.m; j++) {
            proof.tau_x += zj * w.blinders[j];
            zj *= z;
        }
    }
    proof.mu = alpha + rho * xc;

    ts.push_scalar(proof.tau_x);
    ts.push_scalar(proof.mu);
    ts.push_scalar(proof.t_hat);
    Scalar wc = ts.challenge("w");
    G1Point Q = wc * gen.U;

    // inner-product argument over (G, H' = y^-i H) with P = <l,G> + <r,H'> + <l,r> Q
    Scalar yinv = y.inverse();
    ScalarVec yinv_p = powers(yinv, l.N);
    std::vector<G1Point> gvec(l.N), hvec(l.N);
    for (size_t i = 0; i < l.N; i++) {
        gvec[i] = G1Point::from_affine(Gv[i]);
        hvec[i] = yinv_p[i] * G1Point::from_affine(Hv[i]);
    }

    ScalarVec a = lv, b = rv;
    size_t sz = l.N;
    while (sz > 1) {
        size_t half = sz / 2;
        Scalar cL = Scalar::zero(), cR = Scalar::zero();
        for (size_t i = 0; i < half; i++) {
            cL += a[i] * b[half + i];
            cR += a[half + i] * b[i];
        }
        std::vector<G1Point> lp, rp;
        ScalarVec lk, rk;
        for (size_t i = 0; i < half; i++) {
            lp.push_back(gvec[half + i]);
            lk.push_back(a[i]);
            lp.push_back(hvec[i]);
            lk.push_back(b[half + i]);
            rp.push_back(gvec[i]);
            rk.push_back(a[half + i]);
            rp.push_back(hvec[half + i]);
            rk.push_back(b[i]);
        }
        lp.push_back(Q);
        lk.push_back(cL);
        rp.push_back(Q);
        rk.push_back(cR);
        G1Point Lk = G1Point::msm(std::span<const G1Point>(lp), std::span<const Scalar>(lk));
        G1Point Rk = G1Point::msm(std::span<const G1Point>(rp), std::span<const Scalar>(rk));
        proof.L.push_back(Lk);
        proof.R.push_back(Rk);

        ts.push_point(Lk);
        ts.push_point(Rk);
        Scalar u = ts.challenge("u");
        if (u.is_zero()) throw std::runtime_error("zero IPA challenge");
        Scalar uinv = u.inverse();
        for (size_t i = 0; i < half; i++) {
            a[i] = a[i] * u + a[half + i] * uinv;
            b[i] = b[i] * uinv + b[half + i] * u;
            gvec[i] = uinv * gvec[i] + u * gvec[half + i];
            hvec[i] = u * hvec[i] + uinv * hvec[half + i];
        }
        a.resize(half);
        b.resize(half);
        gvec.resize(half);
        hvec.resize(half);
        sz = half;
    }
    proof.a = a[0];
    proof.b = b[0];
    return proof;
}

} // namespace

Bytes RangeStatement::serialize_header() const {
    Writer w;
    w.u32(n);
    w.u32(static_cast<std::uint32_t>(commitments.size()));
    for (const auto& c : commitments) w.bytes(c.to_bytes());
    w.bytes(base_g.to_bytes());
    w.bytes(base_t.to_bytes());
    return std::move(w.buf());
}

Bytes RangeProof::serialize() const {
    Writer w;
    w.bytes(A.to_bytes());
    w.bytes(S.to_bytes());
    w.bytes(T1.to_bytes());
    w.bytes(T2.to_bytes());
    w.bytes(tau_x.to_bytes());
    w.bytes(mu.to_bytes());
    w.bytes(t_hat.to_bytes());
    w.byte(static_cast<std::uint8_t>(L.size()));
    for (size_t i = 0; i < L.size(); i++) {
        w.bytes(L[i].to_bytes());
        w.bytes(R[i].to_bytes());
    }
    w.bytes(a.to_bytes());
    w.bytes(b.to_bytes());
    return std::move(w.buf());
}

RangeProof RangeProof::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    RangeProof p;
    p.A = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.S = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.T1 = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.T2 = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.tau_x = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    p.mu = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    p.t_hat = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    std::uint8_t rounds = r.byte();
    if (rounds > 7) throw DecodeError(DecodeErrc::Malformed, "range proof too many rounds");
    for (unsigned i = 0; i < rounds; i++) {
        p.L.push_back(G1Point::from_bytes(r.bytes(G1Point::kBytes)));
        p.R.push_back(G1Point::from_bytes(r.bytes(G1Point::kBytes)));
    }
    p.a = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    p.b = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    r.expect_done();
    return p;
}

RangeProof prove_range(const PublicParams& pp, const RangeStatement& x, const RangeWitness& w,
                       RandomSource& rng) {
    (void)pp;
    return prove_impl(x, w, rng, true);
}

bool verify_range(const PublicParams& pp, const RangeStatement& x, const RangeProof& proof) {
    (void)pp;
    try {
        check_statement(x);
    } catch (const std::invalid_argument&) {
        return false;
    }
    Layout l = layout_of(x);
    size_t rounds = 0;
    for (size_t s = l.N; s > 1; s >>= 1) rounds++;
    if (proof.L.size() != rounds || proof.R.size() != rounds) return false;

    TranscriptState ts;
    ts.push(x.serialize_header());
    ts.push_point(proof.A);
    ts.push_point(proof.S);
    Scalar y = ts.challenge("y");
    Scalar z = ts.challenge("z");
    ts.push_point(proof.T1);
    ts.push_point(proof.T2);
    Scalar xc = ts.challenge("x");
    ts.push_scalar(proof.tau_x);
    ts.push_scalar(proof.mu);
    ts.push_scalar(proof.t_hat);
    Scalar wc = ts.challenge("w");

    // polynomial identity: t_hat g + tau_x h == sum z^(2+j) V_j + delta g + x T1 + x^2 T2
    {
        std::vector<G1Point> pts;
        ScalarVec ks;
        pts.push_back(x.base_g);
        ks.push_back(proof.t_hat - delta(l, y, z));
        pts.push_back(x.base_t);
        ks.push_back(proof.tau_x);
        Scalar zj = z * z;
        for (size_t j = 0; j < l.m; j++) {
            pts.push_back(x.commitments[j]);
            ks.push_back(-zj);
            zj *= z;
        }
        pts.push_back(proof.T1);
        ks.push_back(-xc);
        pts.push_back(proof.T2);
        ks.push_back(-xc.square());
        if (!G1Point::msm(std::span<const G1Point>(pts), std::span<const Scalar>(ks)).is_identity())
            return false;
    }

    // IPA challenges
    ScalarVec us(rounds), us_inv(rounds);
    for (size_t k = 0; k < rounds; k++) {
        ts.push_point(proof.L[k]);
        ts.push_point(proof.R[k]);
        us[k] = ts.challenge("u");
        if (us[k].is_zero()) return false;
        us_inv[k] = us[k].inverse();
    }

    // s coefficients: round 0 split by the top index bit, so fold in reverse
    ScalarVec s{Scalar::one()};
    for (size_t k = rounds; k-- > 0;) {
        ScalarVec nxt(s.size() * 2);
        for (size_t i = 0; i < s.size(); i++) {
            nxt[i] = s[i] * us_inv[k];
            nxt[s.size() + i] = s[i] * us[k];
        }
        s = std::move(nxt);
    }

    const Gens& gen = gens();
    Scalar yinv = y.inverse();
    ScalarVec yinv_p = powers(yinv, l.N);
    ScalarVec yp = powers(y, l.N);
    ScalarVec zeta = zeta_vector(l, z);

    // single MSM: a s_i G_i + (b s_i^-1 - z y^i - zeta_i) y^-i H_i + w(ab - t_hat) U
    //             - A - x S + mu h + z <1, G> - sum(u_k^2 L_k + u_k^-2 R_k) == O
    std::vector<G1Affine> pts;
    ScalarVec ks;
    pts.reserve(2 * l.N + 2 * rounds + 6);
    ks.reserve(2 * l.N + 2 * rounds + 6);
    for (size_t i = 0; i < l.N; i++) {
        pts.push_back(gen.G[i]);
        ks.push_back(proof.a * s[i] + z);
    }
    for (size_t i = 0; i < l.N; i++) {
        pts.push_back(gen.H[i]);
        ks.push_back((proof.b * s[i].inverse() - z * yp[i] - zeta[i]) * yinv_p[i]);
    }
    pts.push_back(gen.U.to_affine());
    ks.push_back(wc * (proof.a * proof.b - proof.t_hat));
    pts.push_back(proof.A.to_affine());
    ks.push_back(-Scalar::one());
    pts.push_back(proof.S.to_affine());
    ks.push_back(-xc);
    pts.push_back(x.base_t.to_affine());
    ks.push_back(proof.mu);
    for (size_t k = 0; k < rounds; k++) {
        pts.push_back(proof.L[k].to_affine());
        ks.push_back(-us[k].square());
        pts.push_back(proof.R[k].to_affine());
        ks.push_back(-us_inv[k].square());
    }
    return G1Point::msm(std::span<const G1Affine>(pts), std::span<const Scalar>(ks)).is_identity();
}

RangeProof aggregate_prove(const PublicParams& pp, const RangeStatement& x, const RangeWitness& w,
                           RandomSource& rng) {
    if (x.commitments.size() != 2)
        throw std::invalid_argument("aggregate proof expects two commitments");
    return prove_range(pp, x, w, rng);
}

bool aggregate_verify(const PublicParams& pp, const RangeStatement& x, const RangeProof& proof) {
    if (x.commitments.size() != 2) return false;
    return verify_range(pp, x, proof);
}

size_t expected_group_elements(std::uint32_t n, size_t commitments) {
    size_t N = next_pow2(commitments * (n - 1));
    size_t rounds = 0;
    for (size_t s = N; s > 1; s >>= 1) rounds++;
    return 4 + 2 * rounds;
}

#ifdef SL_TEST_HOOKS
namespace testing {
RangeProof prove_range_unchecked(const PublicParams& pp, const RangeStatement& x,
                                 const RangeWitness& w, RandomSource& rng) {
    (void)pp;
    return prove_impl(x, w, rng, false);
}
} // namespace testing
#endif

} // namespace sl::rp
