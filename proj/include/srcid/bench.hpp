#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace srcid {

struct BenchConfig {
    std::uint64_t seed = 0;
    std::vector<int> sizes = {8, 10, 12};
    std::optional<std::string> regime;  // elliptic | trig | rational; all when unset
    double min_batch_ms = 20.0;
    int batches = 3;
};

// Per-call times in microseconds (best batch) for the subset sum of F and one
// determinant family at n = m.
struct BenchRow {
    std::string regime;
    std::string family;
    int n = 0;
    double subset_us = 0.0;
    double det_us = 0.0;
    double ratio = 0.0;  // subset_us / det_us
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

// True when every (regime, family) series has strictly increasing ratio in n.
bool ratios_increasing(const std::vector<BenchRow>& rows);

std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace srcid
