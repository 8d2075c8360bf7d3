#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sl/g1.hpp"

namespace sl {

// Baby-step giant-step recovery of v from v*base with v < bound.
// The baby table is immutable after construction and shareable across threads.
class BsgsTable {
public:
    BsgsTable(const G1Point& base, std::uint64_t bound);

    std::optional<std::uint64_t> solve(const G1Point& target) const;

    const G1Point& base() const { return base_; }
    std::uint64_t bound() const { return bound_; }

private:
    static std::uint64_t key_of(const Fp& x);

    G1Point base_;
    std::uint64_t bound_;
    std::uint64_t baby_count_;
    G1Point giant_step_; // -(baby_count * base)
    std::unordered_multimap<std::uint64_t, std::uint32_t> table_;
};

// Convenience wrapper with a process-wide table cache keyed by (base, bound).
std::optional<std::uint64_t> bsgs_dlog(const G1Point& base, const G1Point& target,
                                       std::uint64_t bound);
std::shared_ptr<const BsgsTable> bsgs_table_for(const G1Point& base, std::uint64_t bound);

} // namespace sl
