#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pushline/pushline.hpp"

using namespace pushline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Shape load_shape(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open shape file: " + path);
    try {
        return read_shape(in);
    } catch (const ParseError& e) {
        throw IoError(path + ": " + e.what());
    }
}

Trace load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace file: " + path);
    try {
        return read_trace(in);
    } catch (const ParseError& e) {
        throw IoError(path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<int> expand_sizes(const std::string& spec, const std::string& strategy) {
    std::vector<int> out;
    auto range = spec.find("..");
    if (range == std::string::npos) {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    }
    int lo = std::stoi(spec.substr(0, range));
    int hi = std::stoi(spec.substr(range + 2));
    bool pow2 = strategy == "dl-doubling" || strategy == "dl-recursion" ||
                strategy.rfind("u-box", 0) == 0;
    if (pow2) {
        for (int n = 1; n <= hi; n *= 2)
            if (n >= lo) out.push_back(n);
    } else {
        for (int s = 1; s * s <= hi; ++s)
            if (s * s >= lo) out.push_back(s * s);
    }
    if (out.empty()) throw UsageError("size range is empty: " + spec);
    return out;
}

/// Step bounds pinned per strategy; used by --check-bounds.
void check_bounds(const std::string& strategy, const Trace& t, int n) {
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("bound check failed for " + strategy + ": " + why);
    };
    std::size_t steps = t.step_count();
    int s = isqrt_floor(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    if (strategy == "dl-partitioning") {
        if (s * s == n && steps != static_cast<std::size_t>(static_cast<long>(n) * s + n - 2 * s))
            fail("square-case step count is off the closed form");
    } else if (strategy == "dl-doubling") {
        if (is_pow2(n) && n > 1 && steps > static_cast<std::size_t>(2L * n * log2n))
            fail("steps exceed 2 n log2 n");
    } else if (strategy == "dl-recursion") {
        if (is_pow2(n) && steps > static_cast<std::size_t>(n + 2L * n * log2n))
            fail("steps exceed n + 2 n log2 n");
    } else if (strategy == "dlc-folding" || strategy == "dlc-extending") {
        auto r = replay(t, true);
        for (std::size_t i = 0; i < r.connectivity.size(); ++i)
            if (!r.connectivity[i]) fail("connectivity broke at step " + std::to_string(i));
    } else if (strategy == "u-box-doubling") {
        for (auto& [label, count] : t.phase_breakdown())
            if (count > static_cast<std::size_t>(18L * n))
                fail("phase " + label + " exceeds 18n steps");
    } else if (strategy == "u-box-partitioning") {
        long sq = detail::ceil_sqrt(n);
        if (steps > static_cast<std::size_t>(2L * n * sq + n * sq + 2L * n))
            fail("steps exceed 3 n sqrt(n) + 2n");
    }
}

int cmd_transform(const std::string& strategy, int n, const std::string& source,
                  const std::string& target, std::uint64_t seed, const std::string& out,
                  bool bounds, bool monitor) {
    Trace t;
    int order = n;
    if (!target.empty()) {
        Shape a = load_shape(source);
        Shape b = load_shape(target);
        auto strat = strategy == "u-box-doubling" ? UniversalStrategy::BoxDoubling
                                                  : UniversalStrategy::BoxPartitioning;
        t = transform_shapes(a, b, strat);
        order = static_cast<int>(a.order());
    } else if (!source.empty()) {
        Shape a = load_shape(source);
        order = static_cast<int>(a.order());
        if (strategy == "u-box-partitioning") t = u_box_partitioning(a);
        else if (strategy == "u-box-doubling") t = u_box_doubling(a);
        else throw UsageError("strategy " + strategy + " takes --n, not --source");
    } else {
        const auto& reg = strategy_registry();
        auto it = reg.find(strategy);
        if (it == reg.end()) throw UsageError("unknown strategy: " + strategy);
        if (order < 1) throw UsageError("--n must be positive for " + strategy);
        t = it->second(order, seed);
    }
    auto r = replay(t, monitor);
    if (monitor)
        for (std::size_t i = 0; i < r.connectivity.size(); ++i)
            if (!r.connectivity[i]) {
                std::cerr << "connectivity broke at step " << i << "\n";
                return kExitVerification;
            }
    if (bounds) check_bounds(strategy, t, order);
    if (!out.empty()) save_text(out, trace_to_string(t));
    std::cout << "steps=" << t.step_count() << "\n";
    for (auto& [label, count] : t.phase_breakdown())
        std::cout << "phase " << label << " steps=" << count << "\n";
    if (auto line = as_line(r.final))
        std::cout << "final line n=" << line->length << " at (" << line->anchor.x << ","
                  << line->anchor.y << ") "
                  << (line->orientation == Orientation::Horizontal ? "horizontal" : "vertical")
                  << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& trace_path, bool monitor) {
    Trace t = load_trace(trace_path);
    try {
        auto r = replay(t, monitor);
        if (monitor)
            for (std::size_t i = 0; i < r.connectivity.size(); ++i)
                if (!r.connectivity[i]) {
                    std::cout << "disconnected after step " << i << "\n";
                    return kExitVerification;
                }
        std::cout << "ok steps=" << t.step_count() << "\n";
        return kExitOk;
    } catch (const InvalidMoveAt& e) {
        std::cout << "invalid move at step " << e.index << "\n";
        return kExitVerification;
    }
}

int cmd_bench(const std::string& strategy, const std::string& sizes_spec,
              const std::string& seeds_spec, const std::string& csv_path,
              const std::string& svg_path) {
    if (!strategy_registry().count(strategy)) throw UsageError("unknown strategy: " + strategy);
    std::vector<int> sizes = expand_sizes(sizes_spec, strategy);
    std::vector<std::uint64_t> seeds;
    {
        auto range = seeds_spec.find("..");
        if (range == std::string::npos) {
            std::stringstream ss(seeds_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) seeds.push_back(std::stoull(tok));
        } else {
            std::uint64_t lo = std::stoull(seeds_spec.substr(0, range));
            std::uint64_t hi = std::stoull(seeds_spec.substr(range + 2));
            for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        }
    }
    auto records = scaling_experiment(strategy, sizes, seeds);
    std::size_t total = 0;
    for (auto& r : records) total += r.steps;
    std::cout << "records=" << records.size() << " total_steps=" << total << "\n";
    std::optional<FitResult> fit;
    try {
        fit = fit_exponent(records);
        std::cout << "exponent=" << fit->exponent
                  << " model=" << (fit->prefers_nlogn ? "nlogn" : "power") << "\n";
    } catch (const std::invalid_argument&) {
        std::cout << "exponent=NA (need 4+ sizes over 2 decades)\n";
    }
    if (!csv_path.empty()) {
        std::ostringstream out;
        write_bench_csv(out, records);
        save_text(csv_path, out.str());
    }
    if (!svg_path.empty()) {
        std::ostringstream out;
        write_scaling_svg(out, records, fit.value_or(FitResult{}), strategy);
        save_text(svg_path, out.str());
    }
    return kExitOk;
}

int cmd_render(const std::string& trace_path, const std::string& format, int every,
               const std::string& out_path) {
    Trace t = load_trace(trace_path);
    std::ostringstream out;
    if (format == "ascii") render_ascii(out, t, every);
    else if (format == "svg") render_svg(out, t, every);
    else throw UsageError("unknown render format: " + format);
    if (out_path.empty()) std::cout << out.str();
    else save_text(out_path, out.str());
    return kExitOk;
}

int cmd_oracle(const std::string& source_path, const std::string& goal, int cap) {
    Shape s = load_shape(source_path);
    std::optional<int> best;
    int n = static_cast<int>(s.order());
    if (cap <= 0) cap = 2 * n * n;
    auto line_of = [&](Orientation o) {
        Shape l;
        for (int i = 0; i < n; ++i) l.add(o == Orientation::Horizontal ? Cell{i, 0} : Cell{0, i});
        return l;
    };
    if (goal == "line-horizontal") {
        best = bfs_min_moves_to(s, line_of(Orientation::Horizontal), cap);
    } else if (goal == "line-vertical") {
        best = bfs_min_moves_to(s, line_of(Orientation::Vertical), cap);
    } else if (goal == "line") {
        auto h = bfs_min_moves_to(s, line_of(Orientation::Horizontal), cap);
        auto v = bfs_min_moves_to(s, line_of(Orientation::Vertical), cap);
        best = h && v ? std::min(*h, *v) : (h ? h : v);
    } else if (goal.rfind("shape:", 0) == 0) {
        Shape g = load_shape(goal.substr(6));
        best = bfs_min_moves_to(s, g, cap);
    } else {
        throw UsageError("unknown goal: " + goal);
    }
    if (best) std::cout << *best << "\n";
    else std::cout << ">" << cap << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line-push reconfiguration toolkit"};
    app.require_subcommand(1);

    auto* transform = app.add_subcommand("transform", "generate a transformation trace");
    std::string strategy, source, target, out;
    int n = 0;
    std::uint64_t seed = 0;
    bool bounds = false, monitor = false;
    transform->add_option("--strategy", strategy, "strategy name")->required();
    transform->add_option("--n", n, "diagonal order");
    transform->add_option("--source", source, "source shape file");
    transform->add_option("--target", target, "target shape file (shape-to-shape)");
    transform->add_option("--seed", seed, "seed for random inputs");
    transform->add_option("--out", out, "trace output file");
    transform->add_flag("--check-bounds", bounds, "assert the strategy's step bounds");
    transform->add_flag("--monitor-connectivity", monitor, "require connectivity at every step");

    auto* verify = app.add_subcommand("verify", "replay and validate a trace");
    std::string trace_path;
    bool vmonitor = false;
    verify->add_option("--trace", trace_path, "trace file")->required();
    verify->add_flag("--monitor-connectivity", vmonitor, "require connectivity at every step");

    auto* bench = app.add_subcommand("bench", "run a scaling experiment");
    std::string sizes = "16..1024", seeds = "0", csv, svg;
    std::string bstrategy;
    bench->add_option("--strategy", bstrategy, "strategy name")->required();
    bench->add_option("--sizes", sizes, "sizes, e.g. 16..16384 or 25,100,400");
    bench->add_option("--seeds", seeds, "seeds, e.g. 0..9 or 1,2,3");
    bench->add_option("--out-csv", csv, "CSV output path");
    bench->add_option("--out-svg", svg, "SVG plot output path");

    auto* render = app.add_subcommand("render", "render a trace");
    std::string rtrace, format = "ascii", rout;
    int every = 1;
    render->add_option("--trace", rtrace, "trace file")->required();
    render->add_option("--format", format, "ascii or svg");
    render->add_option("--every", every, "sample every k-th step");
    render->add_option("--out", rout, "output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "exhaustive minimum move count");
    std::string opath, goal = "line";
    int cap = 0;
    oracle->add_option("--source", opath, "shape file")->required();
    oracle->add_option("--goal", goal, "line, line-horizontal, line-vertical, shape:<file>");
    oracle->add_option("--cap", cap, "search cap (default 2n^2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(transform))
            return cmd_transform(strategy, n, source, target, seed, out, bounds, monitor);
        if (app.got_subcommand(verify)) return cmd_verify(trace_path, vmonitor);
        if (app.got_subcommand(bench)) return cmd_bench(bstrategy, sizes, seeds, csv, svg);
        if (app.got_subcommand(render)) return cmd_render(rtrace, format, every, rout);
        if (app.got_subcommand(oracle)) return cmd_oracle(opath, goal, cap);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
