#include "har/benchrun.hpp"

#include "doctest.h"

#include <cmath>
#include <sstream>

using namespace har;

namespace {

std::vector<BenchRecord> synthetic(double exponent, double scale) {
    std::vector<BenchRecord> records;
    for (int k = 1; k <= 10; ++k) {
        BenchRecord r;
        r.k = k;
        r.result_nodes = NodeId{1} << (k + 3);
        r.reps = 10;
        r.mean_ns = static_cast<std::int64_t>(
            scale * std::pow(static_cast<double>(r.result_nodes), exponent));
        r.min_ns = r.mean_ns;
        r.max_ns = r.mean_ns;
        records.push_back(r);
    }
    return records;
}

}  // namespace

TEST_CASE("slope_fit recovers exact exponents") {
    auto linear = slope_fit(synthetic(1.0, 3.0), 1, 10);
    CHECK(linear.slope == doctest::Approx(1.0).epsilon(0.01));
    CHECK(linear.points == 10);
    CHECK(linear.rms_residual < 0.01);

    auto quadratic = slope_fit(synthetic(2.0, 0.5), 1, 10);
    CHECK(quadratic.slope == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("slope_fit respects the k window and omitted rows") {
    auto records = synthetic(1.0, 3.0);
    records[0].mean_ns = 999999999;  // would wreck the fit if included
    auto fit = slope_fit(records, 2, 10);
    CHECK(fit.points == 9);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.01));

    records[5].omitted = true;
    CHECK(slope_fit(records, 2, 10).points == 8);

    CHECK_THROWS_AS(slope_fit(records, 4, 4), std::invalid_argument);
}

TEST_CASE("CSV round-trip") {
    auto records = synthetic(1.0, 2.0);
    records[3].omitted = true;
    std::ostringstream out;
    write_bench_csv(out, records);
    CHECK(out.str().starts_with("har-v1\nk,K,reps,mean_ns,min_ns,max_ns,omitted\n"));

    std::istringstream in(out.str());
    auto back = read_bench_csv(in);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].k == records[i].k);
        CHECK(back[i].result_nodes == records[i].result_nodes);
        CHECK(back[i].mean_ns == records[i].mean_ns);
        CHECK(back[i].omitted == records[i].omitted);
    }

    std::istringstream bad("k,K\n1,2\n");
    CHECK_THROWS_AS(read_bench_csv(bad), std::runtime_error);
}

TEST_CASE("run_benchmark produces one row per size") {
    BenchOptions opts;
    opts.family = "tensor";
    opts.max_k = 3;
    opts.reps = 2;
    auto records = run_benchmark(opts);
    REQUIRE(records.size() == 3);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].k == static_cast<int>(i) + 1);
        CHECK(records[i].reps == 2);
        CHECK_FALSE(records[i].omitted);
        CHECK(records[i].min_ns <= records[i].mean_ns);
        CHECK(records[i].mean_ns <= records[i].max_ns);
        if (i > 0) {
            CHECK(records[i].result_nodes == 2 * records[i - 1].result_nodes);
        }
    }

    BenchOptions bad = opts;
    bad.family = "mystery";
    CHECK_THROWS_AS(run_benchmark(bad), std::invalid_argument);
}

TEST_CASE("timeout marks rows omitted and stops the run") {
    BenchOptions opts;
    opts.family = "compose-small";
    opts.max_k = 12;
    opts.reps = 2;
    opts.timeout_s = 0.0;  // everything exceeds a zero budget
    auto records = run_benchmark(opts);
    REQUIRE(records.size() == 1);
    CHECK(records[0].omitted);
}
