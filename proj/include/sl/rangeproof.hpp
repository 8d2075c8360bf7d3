#pragma once

#include <vector>

#include "sl/params.hpp"
#include "sl/rng.hpp"

// Logarithmic range proof for Pedersen-form commitments cm = v*G + c*T,
// proving each committed v lies in [0, 2^(n-1)). One or two commitments
// share a single transcript.

namespace sl::rp {

struct RangeStatement {
    std::vector<G1Point> commitments; // 1 or 2
    std::uint32_t n = 33;             // range is [0, 2^(n-1)); n in [2, 64]
    G1Point base_g;
    G1Point base_t;

    Bytes serialize_header() const; // transcript binding
};

struct RangeWitness {
    std::vector<std::uint64_t> values;
    std::vector<Scalar> blinders;
};

struct RangeProof {
    G1Point A, S, T1, T2;
    Scalar tau_x, mu, t_hat;
    std::vector<G1Point> L, R;
    Scalar a, b;

    Bytes serialize() const;
    static RangeProof deserialize(std::span<const std::uint8_t> in);
    size_t group_element_count() const { return 4 + L.size() + R.size(); }
};

// throws std::invalid_argument on malformed statements or out-of-range witnesses
RangeProof prove_range(const PublicParams& pp, const RangeStatement& x, const RangeWitness& w,
                       RandomSource& rng);
bool verify_range(const PublicParams& pp, const RangeStatement& x, const RangeProof& proof);

// two-commitment conveniences
RangeProof aggregate_prove(const PublicParams& pp, const RangeStatement& x, const RangeWitness& w,
                           RandomSource& rng);
bool aggregate_verify(const PublicParams& pp, const RangeStatement& x, const RangeProof& proof);

// number of group elements a proof for this statement shape carries
size_t expected_group_elements(std::uint32_t n, size_t commitments);

#ifdef SL_TEST_HOOKS
namespace testing {
// runs the honest prover algebra with the range precheck skipped (bits are
// truncated); used to exercise verifier rejection of out-of-range witnesses
RangeProof prove_range_unchecked(const PublicParams& pp, const RangeStatement& x,
                                 const RangeWitness& w, RandomSource& rng);
} // namespace testing
#endif

} // namespace sl::rp
