#include "sl/bsgs.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace sl {

using detail::Jac;

std::uint64_t BsgsTable::key_of(const Fp& x) {
    const std::uint64_t* l = x.limbs();
    std::uint64_t k = 0x9e3779b97f4a7c15ULL;
    for (size_t i = 0; i < Fp::kLimbs; i++) k = (k ^ l[i]) * 0xff51afd7ed558ccdULL;
    return k;
}

BsgsTable::BsgsTable(const G1Point& base, std::uint64_t bound) : base_(base), bound_(bound) {
    if (bound == 0) throw std::invalid_argument("bsgs bound must be >= 1");
    // skew toward a larger baby table: construction is a one-time cost per
    // (base, bound) while solves pay the giant walk every call
    baby_count_ = 4 * static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(bound))));
    if (baby_count_ > bound) baby_count_ = bound;
    if (baby_count_ == 0) baby_count_ = 1;

    std::vector<Jac<Fp>> babies;
    babies.reserve(baby_count_);
    Jac<Fp> cur = base.jac();
    for (std::uint64_t j = 1; j <= baby_count_; j++) {
        babies.push_back(cur);
        cur = detail::jac_add(cur, base.jac());
    }
    std::vector<Fp> xs(babies.size()), ys(babies.size());
    detail::jac_batch_normalize<Fp>(babies.data(), babies.size(), xs.data(), ys.data());
    table_.reserve(babies.size());
    for (std::uint64_t j = 0; j < babies.size(); j++)
        table_.emplace(key_of(xs[j]), static_cast<std::uint32_t>(j + 1));

    // giant step: -(baby_count * base); babies.back() == baby_count*base
    giant_step_ = -G1Point(babies.back());
}

std::optional<std::uint64_t> BsgsTable::solve(const G1Point& target) const {
    const std::uint64_t giants = (bound_ + baby_count_ - 1) / baby_count_;
    constexpr size_t kBlock = 256;

    auto check = [&](std::uint64_t v) -> bool {
        if (v >= bound_) return false;
        return base_.mul(Scalar::from_u64(v)) == target;
    };

    Jac<Fp> cur = target.jac();
    std::vector<Jac<Fp>> block;
    std::vector<Fp> xs, ys;
    std::uint64_t g = 0;
    while (g < giants + 1) {
        size_t n = static_cast<size_t>(std::min<std::uint64_t>(kBlock, giants + 1 - g));
        block.clear();
        for (size_t i = 0; i < n; i++) {
            block.push_back(cur);
            cur = detail::jac_add(cur, giant_step_.jac());
        }
        xs.resize(n);
        ys.resize(n);
        detail::jac_batch_normalize<Fp>(block.data(), n, xs.data(), ys.data());
        for (size_t i = 0; i < n; i++) {
            std::uint64_t gm = (g + i) * baby_count_;
            if (block[i].is_identity()) {
                if (gm < bound_) return gm;
                continue;
            }
            auto [lo, hi] = table_.equal_range(key_of(xs[i]));
            for (auto it = lo; it != hi; ++it) {
                std::uint64_t j = it->second;
                if (check(gm + j)) return gm + j;
                if (gm >= j && check(gm - j)) return gm - j;
            }
        }
        g += n;
    }
    return std::nullopt;
}

namespace {

struct CacheKey {
    std::array<std::uint8_t, G1Point::kBytes> base;
    std::uint64_t bound;
    bool operator<(const CacheKey& o) const {
        if (base != o.base) return base < o.base;
        return bound < o.bound;
    }
};

std::map<CacheKey, std::shared_ptr<const BsgsTable>>& cache() {
    static std::map<CacheKey, std::shared_ptr<const BsgsTable>> c;
    return c;
}
std::mutex cache_mu;

} // namespace

std::shared_ptr<const BsgsTable> bsgs_table_for(const G1Point& base, std::uint64_t bound) {
    CacheKey key{base.to_bytes(), bound};
    std::lock_guard<std::mutex> lock(cache_mu);
    auto& c = cache();
    auto it = c.find(key);
    if (it != c.end()) return it->second;
    auto tbl = std::make_shared<const BsgsTable>(base, bound);
    c.emplace(key, tbl);
    return tbl;
}

std::optional<std::uint64_t> bsgs_dlog(const G1Point& base, const G1Point& target,
                                       std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bsgs bound must be >= 1");
    if (target.is_identity()) return 0;
    return bsgs_table_for(base, bound)->solve(target);
}

} // namespace sl
