#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sl/bench.hpp>

#include <sstream>

using namespace sl;
using namespace sl::bench;

TEST_CASE("single-iteration run yields zero stddev and the full row set") {
    Config cfg;
    cfg.iterations = 1;
    cfg.sweep_iterations = 1;
    cfg.seed = 42;
    Report rep = run(cfg);

    for (const char* op : {"Setup", "MKGen", "UKGen", "AAGen", "Trans", "VerfTX", "Trace"}) {
        const Row* row = rep.find(op, 2);
        REQUIRE(row != nullptr);
        CHECK(row->iterations == 1);
        CHECK(row->stddev_ms == 0.0);
        CHECK(row->mean_ms >= 0.0);
        CHECK(row->mean_ms == row->median_ms);
    }
    // sweep rows exist for every requested payee count
    for (int k : {2, 4, 8}) {
        CHECK(rep.find("AAGen_sweep", k) != nullptr);
        CHECK(rep.find("Trans_proxy", k) != nullptr);
        CHECK(rep.find("VerfTX_proxy", k) != nullptr);
    }
    CHECK(rep.tx_g1 > 0);
    CHECK(rep.tx_g2 == 2);
}

TEST_CASE("csv schema is stable") {
    Config cfg;
    cfg.iterations = 1;
    cfg.sweep_iterations = 1;
    cfg.payee_counts = {2};
    cfg.seed = 7;
    Report rep = run(cfg);
    std::string csv = to_csv(rep);
    std::istringstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header == "op,payees,iterations,mean_ms,median_ms,stddev_ms,bytes");
    size_t lines = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) lines++;
    CHECK(lines == rep.rows.size());
    // every row has exactly 6 commas
    std::istringstream is2(csv);
    std::getline(is2, line);
    while (std::getline(is2, line)) {
        if (line.empty()) continue;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
}

TEST_CASE("worker pool merges samples deterministically") {
    Config cfg;
    cfg.iterations = 4;
    cfg.sweep = false;
    cfg.threads = 2;
    cfg.seed = 99;
    Report rep = run(cfg);
    const Row* row = rep.find("AAGen", 2);
    REQUIRE(row != nullptr);
    CHECK(row->iterations == 4);
}
