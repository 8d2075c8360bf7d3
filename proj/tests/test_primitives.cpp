#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sl/primitives.hpp>

using namespace sl;
using namespace sl::prim;

namespace {

SeededRandom& rng() {
    static SeededRandom r(std::uint64_t{0x9121});
    return r;
}

const PublicParams& pp() {
    static PublicParams p = setup(128);
    return p;
}

} // namespace

TEST_CASE("pke keygen shape and round-trip") {
    KeyPair kp = pke_keygen(pp(), rng());
    KeyPair kp2 = pke_keygen(pp(), rng());
    CHECK(kp.pk == kp.sk * pp().g1);
    CHECK(kp.pk != kp2.pk);

    G1Point msg = Scalar::random(rng()) * pp().g1;
    auto [ct, gamma] = pke_encrypt_fresh(pp(), msg, kp.pk, rng());
    CHECK_FALSE(gamma.is_zero());
    CHECK(pke_decrypt(ct, kp.sk) == msg);
}

TEST_CASE("pke round-trip on 100 random messages; wrong key garbles") {
    KeyPair kp = pke_keygen(pp(), rng());
    KeyPair other = pke_keygen(pp(), rng());
    for (int i = 0; i < 100; i++) {
        G1Point msg = Scalar::random(rng()) * pp().g1;
        auto [ct, gamma] = pke_encrypt_fresh(pp(), msg, kp.pk, rng());
        CHECK(pke_decrypt(ct, kp.sk) == msg);
        CHECK(pke_decrypt(ct, other.sk) != msg);
    }
}

TEST_CASE("pke degenerate cases") {
    KeyPair kp = pke_keygen(pp(), rng());
    // identity message round-trips
    auto [ct, gamma] = pke_encrypt_fresh(pp(), G1Point::identity(), kp.pk, rng());
    CHECK(pke_decrypt(ct, kp.sk) == G1Point::identity());
    // zero randomness is allowed at this level: C = O, D = M
    G1Point msg = Scalar::random(rng()) * pp().g1;
    Ciphertext c0 = pke_encrypt(pp(), msg, kp.pk, Scalar::zero());
    CHECK(c0.C == G1Point::identity());
    CHECK(c0.D == msg);
}

TEST_CASE("ske additive encryption") {
    G1Point m5 = Scalar::from_u64(5) * pp().g1;
    G1Point k7 = Scalar::from_u64(7) * pp().g1;
    CHECK(ske_encrypt(m5, k7) == Scalar::from_u64(12) * pp().g1);
    for (int i = 0; i < 20; i++) {
        G1Point m = Scalar::random(rng()) * pp().g1;
        G1Point k = Scalar::random(rng()) * pp().g1;
        CHECK(ske_decrypt(ske_encrypt(m, k), k) == m);
    }
}

TEST_CASE("ske homomorphism") {
    for (int i = 0; i < 20; i++) {
        G1Point m1 = Scalar::random(rng()) * pp().g1;
        G1Point m2 = Scalar::random(rng()) * pp().g1;
        G1Point k1 = Scalar::random(rng()) * pp().g1;
        G1Point k2 = Scalar::random(rng()) * pp().g1;
        CHECK(ske_encrypt(m1, k1) + ske_encrypt(m2, k2) == ske_encrypt(m1 + m2, k1 + k2));
    }
}

TEST_CASE("ake symmetry and derived scalar agreement") {
    for (int i = 0; i < 20; i++) {
        Scalar a = Scalar::random_nonzero(rng());
        Scalar b = Scalar::random_nonzero(rng());
        G1Point A = a * pp().g1;
        G1Point B = b * pp().g1;
        SharedKey k1 = ake_shared(a, B);
        SharedKey k2 = ake_shared(b, A);
        CHECK(k1.point == k2.point);
        CHECK(k1.scalar == k2.scalar);
    }
    CHECK(ake_shared(Scalar::zero(), Scalar::random(rng()) * pp().g1).point ==
          G1Point::identity());
}

TEST_CASE("of_map is the scalar-multiplication map") {
    CHECK(of_map(Scalar::zero()) == G1Point::identity());
    CHECK(of_map(Scalar::one()) == pp().g1);
    for (int i = 0; i < 20; i++) {
        Scalar c = Scalar::random(rng());
        CHECK(of_map(c) == c * pp().g1);
    }
}

TEST_CASE("rf encode/decode round-trips") {
    CHECK(rf_decode(rf_encode(0), 1ULL << 32) == 0);
    CHECK(rf_decode(rf_encode(1000000), 1ULL << 32) == 1000000);
    for (int i = 0; i < 100; i++) {
        std::array<std::uint8_t, 4> b;
        rng().fill(b);
        std::uint64_t v = (std::uint64_t(b[0]) << 24) | (b[1] << 16) | (b[2] << 8) | b[3];
        CHECK(rf_decode(rf_encode(v), 1ULL << 32) == v);
    }
}

TEST_CASE("trace algebra: mk * K recovers the amount mask") {
    for (int i = 0; i < 20; i++) {
        Scalar c = Scalar::random(rng());
        Scalar mk = Scalar::random_nonzero(rng());
        G1Point T = mk * pp().g1;
        G1Point K = of_map(c);
        G1Point tc = c * T;
        CHECK(mk * K == tc);
    }
}

TEST_CASE("elgamal round-trip at volume") {
    KeyPair kp = pke_keygen(pp(), rng());
    for (int i = 0; i < 1000; i++) {
        G1Point msg = G1Point::mul_generator(Scalar::random(rng()));
        Scalar gamma = Scalar::random_nonzero(rng());
        CHECK(pke_decrypt(pke_encrypt(pp(), msg, kp.pk, gamma), kp.sk) == msg);
    }
}
