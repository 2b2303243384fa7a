#include "har/benchrun.hpp"

#include "har/circuits.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace har {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
        .count();
}

void finish_stats(BenchRecord& rec) {
    if (rec.times_ns.empty()) {
        return;
    }
    rec.reps = static_cast<int>(rec.times_ns.size());
    rec.mean_ns = std::accumulate(rec.times_ns.begin(), rec.times_ns.end(), std::int64_t{0}) /
                  rec.reps;
    auto [mn, mx] = std::minmax_element(rec.times_ns.begin(), rec.times_ns.end());
    rec.min_ns = *mn;
    rec.max_ns = *mx;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const BenchOptions& opts) {
    const BenchFamily* family = find_bench_family(opts.family);
    if (!family) {
        throw std::invalid_argument("unknown benchmark family '" + opts.family + "'");
    }
    const auto timeout =
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::duration<double>(opts.timeout_s))
            .count();

    std::vector<BenchRecord> records;
    for (int k = 1; k <= opts.max_k; ++k) {
        BenchRecord rec;
        rec.k = k;

        auto build_start = Clock::now();
        auto [lhs, rhs] = family->build(k);
        if (elapsed_ns(build_start) > timeout) {
            rec.omitted = true;
            records.push_back(std::move(rec));
            break;
        }

        // Warm-up repetition, discarded.
        auto warm_start = Clock::now();
        Har result = family->combine(lhs, rhs);
        std::int64_t warm = elapsed_ns(warm_start);
        rec.result_nodes = result.node_count();
        if (warm > timeout) {
            rec.omitted = true;
            records.push_back(std::move(rec));
            break;
        }

        for (int r = 0; r < opts.reps; ++r) {
            auto start = Clock::now();
            result = family->combine(lhs, rhs);
            std::int64_t t = elapsed_ns(start);
            rec.times_ns.push_back(t);
            if (t > timeout) {
                rec.omitted = true;
                break;
            }
        }
        finish_stats(rec);
        bool stop = rec.omitted;
        records.push_back(std::move(rec));
        if (stop) {
            break;
        }
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "har-v1\n";
    out << "k,K,reps,mean_ns,min_ns,max_ns,omitted\n";
    for (const BenchRecord& r : records) {
        out << r.k << "," << r.result_nodes << "," << r.reps << "," << r.mean_ns << ","
            << r.min_ns << "," << r.max_ns << "," << (r.omitted ? 1 : 0) << "\n";
    }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "har-v1") {
        throw std::runtime_error("malformed CSV: missing version token");
    }
    if (!std::getline(in, line) || line != "k,K,reps,mean_ns,min_ns,max_ns,omitted") {
        throw std::runtime_error("malformed CSV: missing header");
    }
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        BenchRecord r;
        char c = 0;
        std::int64_t omitted = 0;
        if (!(row >> r.k >> c >> r.result_nodes >> c >> r.reps >> c >> r.mean_ns >> c >>
              r.min_ns >> c >> r.max_ns >> c >> omitted)) {
            throw std::runtime_error("malformed CSV row: " + line);
        }
        r.omitted = omitted != 0;
        records.push_back(std::move(r));
    }
    return records;
}

void write_gnuplot_script(std::ostream& out, const std::string& csv_path,
                          const std::string& family) {
    out << "set datafile separator ','\n"
        << "set logscale xy 2\n"
        << "set xlabel 'nodes'\n"
        << "set ylabel 'time (ns)'\n"
        << "set title '" << family << "'\n"
        << "plot '" << csv_path
        << "' skip 2 using 2:4:5:6 with yerrorlines title 'mean (min/max)'\n";
}

SlopeFit slope_fit(const std::vector<BenchRecord>& records, int k_min, int k_max) {
    std::vector<double> xs, ys;
    for (const BenchRecord& r : records) {
        if (r.omitted || r.k < k_min || r.k > k_max || r.mean_ns <= 0 ||
            r.result_nodes == 0) {
            continue;
        }
        xs.push_back(std::log2(static_cast<double>(r.result_nodes)));
        ys.push_back(std::log2(static_cast<double>(r.mean_ns)));
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("slope_fit: need at least two usable records");
    }
    double n = static_cast<double>(xs.size());
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("slope_fit: degenerate abscissa");
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double resid = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += resid * resid;
    }
    fit.rms_residual = std::sqrt(ss / n);
    fit.points = static_cast<int>(xs.size());
    return fit;
}

}  // namespace har
