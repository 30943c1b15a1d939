#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <string>

#include "pushline/diagonal.hpp"
#include "pushline/doubling.hpp"
#include "pushline/extending.hpp"
#include "pushline/folding.hpp"
#include "pushline/random_shape.hpp"
#include "pushline/recursion.hpp"
#include "pushline/universal.hpp"

namespace pushline {

/// One measured run. `steps` is always the replay-verified trace length,
/// never the generator's own claim.
struct BenchRecord {
    std::string strategy;
    int n = 0;
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    std::vector<std::pair<std::string, std::size_t>> phases;
    double wall_ms = 0.0;
};

using StrategyFn = std::function<Trace(int, std::uint64_t)>;

/// Named strategies: the diagonal ones ignore the seed, the universal
/// ones run on a seeded random connected shape.
inline const std::map<std::string, StrategyFn>& strategy_registry() {
    static const std::map<std::string, StrategyFn> reg{
        {"dl-partitioning", [](int n, std::uint64_t) { return dl_partitioning(n); }},
        {"dlc-folding", [](int n, std::uint64_t) { return dlc_folding(n); }},
        {"dlc-extending", [](int n, std::uint64_t) { return dlc_extending(n); }},
        {"dl-doubling", [](int n, std::uint64_t) { return dl_doubling(n); }},
        {"dl-recursion", [](int n, std::uint64_t) { return dl_recursion(n); }},
        {"u-box-partitioning",
         [](int n, std::uint64_t s) { return u_box_partitioning(random_connected_shape(n, s)); }},
        {"u-box-doubling",
         [](int n, std::uint64_t s) { return u_box_doubling(random_connected_shape(n, s)); }},
    };
    return reg;
}

inline bool strategy_uses_seed(const std::string& name) { return name.rfind("u-box", 0) == 0; }

/// Runs a strategy over the size/seed grid, replay-verifying every trace.
inline std::vector<BenchRecord> scaling_experiment(const std::string& strategy,
                                                   const std::vector<int>& sizes,
                                                   const std::vector<std::uint64_t>& seeds) {
    auto it = strategy_registry().find(strategy);
    if (it == strategy_registry().end())
        throw std::invalid_argument("unknown strategy: " + strategy);
    std::vector<BenchRecord> out;
    std::vector<std::uint64_t> use_seeds = strategy_uses_seed(strategy) ? seeds
                                                                        : std::vector<std::uint64_t>{0};
    for (int n : sizes)
        for (std::uint64_t seed : use_seeds) {
            auto t0 = std::chrono::steady_clock::now();
            Trace t = it->second(n, seed);
            auto r = replay(t);
            if (r.final.order() != static_cast<std::size_t>(n))
                throw std::logic_error("replay changed the order at n=" + std::to_string(n));
            auto t1 = std::chrono::steady_clock::now();
            BenchRecord rec;
            rec.strategy = strategy;
            rec.n = n;
            rec.seed = seed;
            rec.steps = t.step_count();
            rec.phases = t.phase_breakdown();
            rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            out.push_back(std::move(rec));
        }
    return out;
}

struct FitResult {
    double exponent = 0.0;      // least-squares slope of log steps vs log n
    bool prefers_nlogn = false; // n log n model beats the pure power law
    double rss_power = 0.0;
    double rss_nlogn = 0.0;
};

/// Ordinary least squares on the log-log points with the two smallest
/// sizes dropped; the model flag compares residuals of a fit in ln n
/// against one in ln(n log2 n).
inline FitResult fit_exponent(const std::vector<BenchRecord>& records) {
    std::map<int, std::pair<double, int>> by_n;  // n -> (sum steps, count)
    for (const auto& r : records) {
        by_n[r.n].first += static_cast<double>(r.steps);
        by_n[r.n].second += 1;
    }
    if (by_n.size() < 4) throw std::invalid_argument("need at least four sizes to fit");
    {
        double lo = static_cast<double>(by_n.begin()->first);
        double hi = static_cast<double>(by_n.rbegin()->first);
        if (hi / lo < 100.0) throw std::invalid_argument("sizes must span two decades");
    }
    std::vector<std::pair<double, double>> pts;  // (n, mean steps)
    for (auto& [n, acc] : by_n) pts.push_back({static_cast<double>(n), acc.first / acc.second});
    pts.erase(pts.begin(), pts.begin() + 2);  // transients dominate small n

    auto ols = [&](auto xf) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [n, s] : pts) {
            double x = xf(n), y = std::log(s);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double m = static_cast<double>(pts.size());
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        double inter = (sy - slope * sx) / m;
        double rss = 0;
        for (auto [n, s] : pts) {
            double e = std::log(s) - (inter + slope * xf(n));
            rss += e * e;
        }
        return std::pair<double, double>{slope, rss};
    };
    auto [slope_pow, rss_pow] = ols([](double n) { return std::log(n); });
    auto [slope_nl, rss_nl] = ols([](double n) { return std::log(n * std::log2(n)); });
    (void)slope_nl;
    FitResult f;
    f.exponent = slope_pow;
    f.rss_power = rss_pow;
    f.rss_nlogn = rss_nl;
    f.prefers_nlogn = rss_nl < rss_pow;
    return f;
}

/// CSV per the bench contract: one row per phase plus a `total` row. The
/// wall-time column is only meaningful on the total row.
inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "strategy,n,seed,steps,phase,phase_steps,wall_ms\n";
    for (const auto& r : records) {
        for (const auto& [label, count] : r.phases)
            out << r.strategy << ',' << r.n << ',' << r.seed << ',' << r.steps << ',' << label
                << ',' << count << ",0\n";
        out << r.strategy << ',' << r.n << ',' << r.seed << ',' << r.steps << ",total,"
            << r.steps << ',' << r.wall_ms << '\n';
    }
}

/// Minimal log-log scatter with the fitted power law, as a standalone SVG.
inline void write_scaling_svg(std::ostream& out, const std::vector<BenchRecord>& records,
                              const FitResult& fit, const std::string& title) {
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto& r : records) {
        double x = std::log10(static_cast<double>(r.n));
        double y = std::log10(static_cast<double>(std::max<std::size_t>(r.steps, 1)));
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    if (records.empty()) {
        out << "<svg xmlns='http://www.w3.org/2000/svg'/>\n";
        return;
    }
    if (max_x == min_x) max_x = min_x + 1;
    if (max_y == min_y) max_y = min_y + 1;
    const int W = 640, H = 480, M = 60;
    auto px = [&](double x) { return M + (x - min_x) / (max_x - min_x) * (W - 2 * M); };
    auto py = [&](double y) { return H - M - (y - min_y) / (max_y - min_y) * (H - 2 * M); };
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
        << " (exponent " << fit.exponent << ")</text>\n";
    out << "<line x1='" << M << "' y1='" << H - M << "' x2='" << W - M << "' y2='" << H - M
        << "' stroke='black'/>\n";
    out << "<line x1='" << M << "' y1='" << M << "' x2='" << M << "' y2='" << H - M
        << "' stroke='black'/>\n";
    out << "<text x='" << W / 2 << "' y='" << H - 16
        << "' text-anchor='middle' font-size='12'>log10 n</text>\n";
    out << "<text x='16' y='" << H / 2 << "' font-size='12' transform='rotate(-90 16 " << H / 2
        << ")'>log10 steps</text>\n";
    // fitted line through the centroid with the fitted slope
    double cx = 0, cy = 0;
    for (const auto& r : records) {
        cx += std::log10(static_cast<double>(r.n));
        cy += std::log10(static_cast<double>(std::max<std::size_t>(r.steps, 1)));
    }
    cx /= static_cast<double>(records.size());
    cy /= static_cast<double>(records.size());
    double y0 = cy + fit.exponent * (min_x - cx), y1 = cy + fit.exponent * (max_x - cx);
    out << "<line x1='" << px(min_x) << "' y1='" << py(y0) << "' x2='" << px(max_x) << "' y2='"
        << py(y1) << "' stroke='steelblue' stroke-width='1.5'/>\n";
    for (const auto& r : records) {
        double x = std::log10(static_cast<double>(r.n));
        double y = std::log10(static_cast<double>(std::max<std::size_t>(r.steps, 1)));
        out << "<circle cx='" << px(x) << "' cy='" << py(y) << "' r='3' fill='crimson'/>\n";
    }
    out << "</svg>\n";
}

}  // namespace pushline
