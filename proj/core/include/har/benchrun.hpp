#ifndef HAR_BENCHRUN_HPP
#define HAR_BENCHRUN_HPP

#include "har/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace har {

// One measured size step of a benchmark family.  Per protocol: one warm-up
// repetition is discarded, then `reps` timed repetitions of the top-level
// combine only (no build, no I/O); a step where any repetition exceeds the
// timeout is marked omitted and ends the run.
struct BenchRecord {
    int k = 0;
    NodeId result_nodes = 0;
    int reps = 0;
    std::vector<std::int64_t> times_ns;
    std::int64_t mean_ns = 0;
    std::int64_t min_ns = 0;
    std::int64_t max_ns = 0;
    bool omitted = false;
};

struct BenchOptions {
    std::string family;
    int max_k = 18;
    int reps = 10;
    double timeout_s = 60.0;
    std::uint64_t seed = 0;  // recorded for reproducibility; families are deterministic
};

std::vector<BenchRecord> run_benchmark(const BenchOptions& opts);

// CSV layout: version token, then "k,K,reps,mean_ns,min_ns,max_ns,omitted".
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

void write_gnuplot_script(std::ostream& out, const std::string& csv_path,
                          const std::string& family);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    int points = 0;
};

// Least-squares slope of log2(mean_ns) against log2(result node count) over
// the non-omitted records with k in [k_min, k_max].
SlopeFit slope_fit(const std::vector<BenchRecord>& records, int k_min, int k_max);

}  // namespace har

#endif  // HAR_BENCHRUN_HPP
