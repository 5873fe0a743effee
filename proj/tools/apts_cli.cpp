#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apts/bench.hpp"
#include "apts/gen.hpp"
#include "apts/runner.hpp"
#include "apts/svg.hpp"

namespace {

std::vector<std::size_t> parse_counts(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    return out;
}

std::vector<double> load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw apts::FormatMismatch("cannot open weights file '" + path + "'");
    }
    std::vector<double> w;
    double v;
    while (in >> v) w.push_back(v);
    return w;
}

void print_scaling(const std::vector<apts::ScalingRow>& rows, std::ostream& out) {
    out << "n_x\tT\tk\tbu_seconds\tggs_seconds\tapts_seconds\n";
    out.precision(6);
    for (const auto& r : rows) {
        out << r.n_x << '\t' << r.series_horizon << '\t' << r.k_used << '\t' << r.bu_seconds
            << '\t' << r.ggs_seconds << '\t' << r.apts_seconds << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-free multivariate time-series segmentation (trading-inspired consensus "
                 "plus bottom-up and Gaussian baselines)"};

    apts::RunOptions opts;
    opts.gen.clear(); // require explicit --gen or --input

    std::string format = "csv";
    std::string rows;
    std::string weights_path;
    std::string out_path;
    std::string svg_path;
    std::string scaling;
    double gamma_close = -1.0;

    app.add_option("--input", opts.input_path, "Input series file");
    app.add_option("--format", format, "Input format: csv, tsv or ucr")->default_str("csv");
    app.add_option("--rows", rows, "UCR rows to stack as channels, e.g. 0,3,7 (default: all)");
    app.add_option("--gen", opts.gen, "Synthetic input: example1, example2 or noisy");
    app.add_option("--algo", opts.algo, "Algorithm: apts, bu or ggs")->default_str("apts");
    app.add_option("--k", opts.k, "Breakpoint count for bu/ggs (default: taken from an APTS run)");
    app.add_option("--lambda", opts.lambda, "GGS covariance regularizer")->default_str("0.1");
    app.add_option("--eps-min", opts.cfg.eps_min, "Smallest positive transaction cost level");
    app.add_option("--eps-max", opts.cfg.eps_max, "Transaction cost upper bound (exclusive)");
    app.add_option("--gamma-mult", opts.cfg.gamma_mult, "Cost level multiplier per iteration");
    app.add_option("--gamma-close", gamma_close,
                   "Merge distance for forward/reverse breakpoints (default max(0.01*T, 2))");
    app.add_option("--gamma-plat", opts.cfg.gamma_plat, "Plateau filter threshold (0 disables)");
    app.add_option("--k-max", opts.cfg.k_max, "Maximum breakpoint count returned by apts");
    app.add_option("--weights", weights_path, "File with one channel weight per line");
    app.add_option("--seed", opts.seed, "Seed for --gen noisy");
    app.add_option("--sigma", opts.sigma, "Noise standard deviation for --gen noisy");
    app.add_option("--channels", opts.channels, "Replica count for --gen noisy");
    app.add_option("--out", out_path, "Write the run report here instead of stdout");
    app.add_option("--svg", svg_path, "Write an SVG plot of the segmented series");
    app.add_flag("--bench", opts.bench, "Repeat the solve and report min/median seconds");
    app.add_option("--repeat", opts.repeat, "Repetitions for --bench / --scaling");
    app.add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
    app.add_option("--scaling", scaling,
                   "Channel counts, e.g. 10,40,100: emit a solve-time table for all algorithms");

    CLI11_PARSE(app, argc, argv);

    try {
        if (opts.input_path.empty() && opts.gen.empty() && scaling.empty()) {
            throw apts::ConfigError("need --input or --gen");
        }
        opts.format = apts::parse_format(format);
        if (!rows.empty()) {
            for (std::size_t r : parse_counts(rows)) opts.ucr_rows.push_back(r);
        }
        if (gamma_close >= 0.0) opts.cfg.gamma_close = gamma_close;
        if (!weights_path.empty()) opts.cfg.weights = load_weights(weights_path);

        if (!scaling.empty()) {
            apts::MultiSeries base;
            if (!opts.input_path.empty()) {
                base = apts::load_series(opts.input_path, opts.format, opts.ucr_rows);
            } else {
                const apts::MultiSeries single =
                    opts.gen == "example2" ? apts::gen_example2() : apts::gen_example1();
                const auto counts = parse_counts(scaling);
                std::size_t largest = 1;
                for (std::size_t c : counts) largest = std::max(largest, c);
                base = apts::gen_noisy_replicas(single, largest, opts.sigma, opts.seed);
            }
            const auto table = apts::bench_scaling(base, parse_counts(scaling), opts.cfg,
                                                   opts.lambda, opts.threads, opts.repeat);
            if (out_path.empty()) {
                print_scaling(table, std::cout);
            } else {
                std::ofstream out(out_path);
                print_scaling(table, out);
            }
            return 0;
        }

        apts::RunOutcome outcome = apts::run(opts);
        if (out_path.empty()) {
            outcome.report.write(std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) throw apts::FormatMismatch("cannot write '" + out_path + "'");
            outcome.report.write(out);
        }
        if (!svg_path.empty()) {
            apts::write_svg_file(outcome.series, outcome.segmentation, svg_path);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
