#pragma once

#include <string>
#include <vector>

#include "sl/ledger.hpp"

// Benchmark harness: wall-times the seven protocol algorithms in the 2-2
// model, sweeps payee counts through a repeated account-generation proxy,
// and audits the wire format's group-element census.

namespace sl::bench {

struct Config {
    int iterations = 1000;
    int sweep_iterations = 25; // payee-scaling proxy rows
    std::vector<int> payee_counts = {2, 4, 8};
    std::uint64_t amount = 1000000;
    int threads = 1;
    std::uint64_t seed = 0;     // 0 = OS randomness
    bool sweep = true;
};

struct Row {
    std::string op;
    int payees = 2;
    int iterations = 0;
    double mean_ms = 0;
    double median_ms = 0;
    double stddev_ms = 0;
    std::size_t bytes = 0;
};

struct Report {
    std::vector<Row> rows;
    std::size_t tx_g1 = 0;
    std::size_t tx_g2 = 0;
    std::size_t tx_scalars = 0;
    std::size_t tx_bytes = 0;
    std::size_t theory_g1 = 0; // theoretical reference count
    std::size_t theory_g2 = 0;

    const Row* find(const std::string& op, int payees) const;
};

Report run(const Config& cfg);

std::string to_csv(const Report& r);
std::string to_table(const Report& r);

} // namespace sl::bench
