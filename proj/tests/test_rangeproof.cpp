#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sl/rangeproof.hpp>

using namespace sl;
using namespace sl::rp;

namespace {

SeededRandom& rng() {
    static SeededRandom r(std::uint64_t{0x4a11});
    return r;
}

const PublicParams& pp() {
    static PublicParams p = setup(128);
    return p;
}

G1Point base_t() {
    static G1Point t = Scalar::from_u64(0xbead) * pp().g1;
    return t;
}

RangeStatement stmt(std::vector<std::uint64_t> values, std::vector<Scalar>& blinders,
                    std::uint32_t n) {
    RangeStatement x;
    x.n = n;
    x.base_g = pp().g1;
    x.base_t = base_t();
    blinders.clear();
    for (auto v : values) {
        Scalar c = Scalar::random(rng());
        blinders.push_back(c);
        x.commitments.push_back(Scalar::from_u64(v) * x.base_g + c * x.base_t);
    }
    return x;
}

} // namespace

TEST_CASE("boundary values at the default width") {
    for (std::uint64_t v : {std::uint64_t(0), std::uint64_t((1ULL << 32) - 1)}) {
        std::vector<Scalar> blinders;
        RangeStatement x = stmt({v}, blinders, 33);
        RangeProof proof = prove_range(pp(), x, {{v}, blinders}, rng());
        CHECK(verify_range(pp(), x, proof));
    }
    // 2^(n-1) is refused by the prover
    std::vector<Scalar> blinders;
    std::uint64_t v = 1ULL << 32;
    RangeStatement x = stmt({v}, blinders, 33);
    CHECK_THROWS_AS(prove_range(pp(), x, {{v}, blinders}, rng()), std::invalid_argument);
}

TEST_CASE("the evaluation amount proves at the protocol width") {
    std::vector<Scalar> blinders;
    RangeStatement x = stmt({1000000}, blinders, 33);
    RangeProof proof = prove_range(pp(), x, {{1000000}, blinders}, rng());
    CHECK(verify_range(pp(), x, proof));
}

TEST_CASE("proof does not transfer to a shifted commitment") {
    std::vector<Scalar> blinders;
    RangeStatement x = stmt({42}, blinders, 33);
    RangeProof proof = prove_range(pp(), x, {{42}, blinders}, rng());
    REQUIRE(verify_range(pp(), x, proof));
    RangeStatement moved = x;
    moved.commitments[0] = moved.commitments[0] + pp().g1;
    CHECK_FALSE(verify_range(pp(), moved, proof));
}

TEST_CASE("truncated transcript is a framing error") {
    std::vector<Scalar> blinders;
    RangeStatement x = stmt({7}, blinders, 33);
    RangeProof proof = prove_range(pp(), x, {{7}, blinders}, rng());
    Bytes b = proof.serialize();
    RangeProof rt = RangeProof::deserialize(b);
    CHECK(verify_range(pp(), x, rt));
    b.resize(b.size() - 10);
    CHECK_THROWS_AS(RangeProof::deserialize(b), DecodeError);
}

TEST_CASE("proof element mutations are rejected") {
    std::vector<Scalar> blinders;
    RangeStatement x = stmt({77}, blinders, 33);
    RangeProof proof = prove_range(pp(), x, {{77}, blinders}, rng());
    RangeProof bad = proof;
    bad.t_hat += Scalar::one();
    CHECK_FALSE(verify_range(pp(), x, bad));
    bad = proof;
    bad.L[0] = bad.L[0] + pp().g1;
    CHECK_FALSE(verify_range(pp(), x, bad));
    bad = proof;
    bad.mu += Scalar::one();
    CHECK_FALSE(verify_range(pp(), x, bad));
    bad = proof;
    bad.A = bad.A + pp().g1;
    CHECK_FALSE(verify_range(pp(), x, bad));
}

TEST_CASE("aggregate proofs over two commitments") {
    std::vector<Scalar> blinders;
    RangeStatement x = stmt({123456, 654321}, blinders, 33);
    RangeProof proof = aggregate_prove(pp(), x, {{123456, 654321}, blinders}, rng());
    CHECK(aggregate_verify(pp(), x, proof));

    // one out-of-range value: prover refuses
    std::vector<Scalar> blinders2;
    RangeStatement bad = stmt({5, 1ULL << 32}, blinders2, 33);
    CHECK_THROWS_AS(aggregate_prove(pp(), bad, {{5, 1ULL << 32}, blinders2}, rng()),
                    std::invalid_argument);
}

TEST_CASE("aggregate and independent proofs agree on 50 random pairs") {
    for (int i = 0; i < 50; i++) {
        std::array<std::uint8_t, 8> b;
        rng().fill(b);
        std::uint64_t v1 = (std::uint64_t(b[0]) << 24) | (b[1] << 16) | (b[2] << 8) | b[3];
        std::uint64_t v2 = (std::uint64_t(b[4]) << 24) | (b[5] << 16) | (b[6] << 8) | b[7];
        std::vector<Scalar> agg_blinders;
        RangeStatement agg = stmt({v1, v2}, agg_blinders, 33);
        CHECK(aggregate_verify(pp(), agg,
                               aggregate_prove(pp(), agg, {{v1, v2}, agg_blinders}, rng())));
        for (std::uint64_t v : {v1, v2}) {
            std::vector<Scalar> single_blinders;
            RangeStatement single = stmt({v}, single_blinders, 33);
            CHECK(verify_range(pp(), single,
                               prove_range(pp(), single, {{v}, single_blinders}, rng())));
        }
    }
}

TEST_CASE("n=4 exhaustive: prover succeeds exactly below 2^3") {
    for (std::uint64_t v = 0; v < 16; v++) {
        std::vector<Scalar> blinders;
        RangeStatement x = stmt({v}, blinders, 4);
        bool in_range = v < 8;
        if (in_range) {
            RangeProof proof = prove_range(pp(), x, {{v}, blinders}, rng());
            CHECK(verify_range(pp(), x, proof));
        } else {
            CHECK_THROWS_AS(prove_range(pp(), x, {{v}, blinders}, rng()),
                            std::invalid_argument);
#ifdef SL_TEST_HOOKS
            // forged transcript built on the truncated bits is rejected
            RangeProof forged = testing::prove_range_unchecked(pp(), x, {{v}, blinders}, rng());
            CHECK_FALSE(verify_range(pp(), x, forged));
#endif
        }
    }
}

TEST_CASE("proof size follows the structural formula") {
    for (std::uint32_t n : {4u, 8u, 16u, 32u, 64u}) {
        std::vector<Scalar> blinders;
        RangeStatement x = stmt({1}, blinders, n);
        RangeProof proof = prove_range(pp(), x, {{1}, blinders}, rng());
        CHECK(verify_range(pp(), x, proof));
        size_t expected = expected_group_elements(n, 1);
        CHECK(proof.group_element_count() == expected);
        // a + b ceil(log2 n) with a = 4, b = 2 for these widths
        unsigned lg = 0;
        while ((1u << lg) < n) lg++;
        CHECK(expected == 4 + 2 * lg);
    }
}

TEST_CASE("completeness for 200 random 32-bit-width values") {
    for (int i = 0; i < 200; i++) {
        std::array<std::uint8_t, 4> b;
        rng().fill(b);
        std::uint64_t v =
            ((std::uint64_t(b[0]) << 24) | (b[1] << 16) | (b[2] << 8) | b[3]) & 0x7fffffffULL;
        std::vector<Scalar> blinders;
        RangeStatement x = stmt({v}, blinders, 32);
        RangeProof proof = prove_range(pp(), x, {{v}, blinders}, rng());
        CHECK(verify_range(pp(), x, proof));
    }
}
