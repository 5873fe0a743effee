#include "apts/runner.hpp"

#include <chrono>
#include <sstream>

#include "apts/baselines.hpp"
#include "apts/bench.hpp"
#include "apts/gen.hpp"

namespace apts {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

MultiSeries make_input(const RunOptions& opts, std::string& source_tag) {
    if (!opts.input_path.empty()) {
        source_tag = "file:" + opts.input_path;
        return load_series(opts.input_path, opts.format, opts.ucr_rows);
    }
    if (opts.gen == "example1") {
        source_tag = "gen:example1";
        return gen_example1();
    }
    if (opts.gen == "example2") {
        source_tag = "gen:example2";
        return gen_example2();
    }
    if (opts.gen == "noisy") {
        source_tag = "gen:noisy";
        const MultiSeries base = opts.noisy_base == "example2" ? gen_example2() : gen_example1();
        return gen_noisy_replicas(base, opts.channels, opts.sigma, opts.seed);
    }
    throw ConfigError("unknown generator '" + opts.gen + "'");
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<std::size_t>(std::stoull(item)));
    }
    return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace

RunOutcome run(const RunOptions& opts) {
    opts.cfg.validate();

    RunOutcome out;
    std::string source_tag;
    out.series = make_input(opts, source_tag);

    int k_for_baseline = opts.k;
    if (opts.algo != "apts" && k_for_baseline < 0) {
        k_for_baseline =
            std::max<int>(1, static_cast<int>(apts(out.series, opts.cfg, opts.threads)
                                                  .breakpoints.breakpoints.size()));
    }

    auto solve_once = [&] {
        if (opts.algo == "apts") {
            out.apts_result = apts(out.series, opts.cfg, opts.threads);
            out.segmentation = out.apts_result->breakpoints;
        } else if (opts.algo == "bu") {
            out.segmentation = bu_segment(out.series, k_for_baseline);
        } else if (opts.algo == "ggs") {
            out.segmentation = ggs_segment(out.series, k_for_baseline, opts.lambda);
        } else {
            throw ConfigError("unknown algorithm '" + opts.algo + "'");
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    solve_once();
    const double first_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    RunReport& rep = out.report;
    rep.algo = opts.algo;
    rep.source = source_tag;
    rep.n_x = out.series.n_x();
    rep.series_horizon = out.series.horizon();
    rep.breakpoints = out.segmentation.breakpoints;
    rep.seconds = first_seconds;

    if (opts.bench) {
        const TimingStats st = time_repeated(solve_once, opts.repeat);
        rep.seconds = st.min_seconds;
        rep.seconds_min = st.min_seconds;
        rep.seconds_median = st.median_seconds;
        rep.repeats = st.repeats;
    }

    if (out.apts_result) {
        rep.epsilons = out.apts_result->epsilons;
    }

    // Config echo: enough to replay the run.
    if (!opts.input_path.empty()) {
        rep.config.emplace_back("format", opts.format == FileFormat::csv   ? "csv"
                                          : opts.format == FileFormat::tsv ? "tsv"
                                                                           : "ucr");
        if (!opts.ucr_rows.empty()) rep.config.emplace_back("rows", join_indices(opts.ucr_rows));
    } else {
        rep.config.emplace_back("gen", opts.gen);
        if (opts.gen == "noisy") {
            rep.config.emplace_back("noisy_base", opts.noisy_base);
            rep.config.emplace_back("channels", std::to_string(opts.channels));
            rep.config.emplace_back("sigma", fmt(opts.sigma));
            rep.config.emplace_back("seed", std::to_string(opts.seed));
        }
    }
    rep.config.emplace_back("eps_min", fmt(opts.cfg.eps_min));
    rep.config.emplace_back("eps_max", fmt(opts.cfg.eps_max));
    rep.config.emplace_back("gamma_mult", fmt(opts.cfg.gamma_mult));
    rep.config.emplace_back("gamma_close", fmt(opts.cfg.resolved_gamma_close(out.series.horizon())));
    rep.config.emplace_back("gamma_plat", fmt(opts.cfg.gamma_plat));
    rep.config.emplace_back("k_max", std::to_string(opts.cfg.k_max));
    if (opts.cfg.weights) {
        std::ostringstream ws;
        ws.precision(17);
        for (std::size_t i = 0; i < opts.cfg.weights->size(); ++i) {
            if (i) ws << ',';
            ws << (*opts.cfg.weights)[i];
        }
        rep.config.emplace_back("weights", ws.str());
    }
    if (opts.algo != "apts") {
        rep.config.emplace_back("k", std::to_string(k_for_baseline));
    }
    if (opts.algo == "ggs") {
        rep.config.emplace_back("lambda", fmt(opts.lambda));
    }
    rep.config.emplace_back("threads", std::to_string(opts.threads));
    return out;
}

RunOptions options_from_report(const RunReport& rep) {
    RunOptions opts;
    opts.algo = rep.algo;
    if (rep.source.rfind("file:", 0) == 0) {
        opts.input_path = rep.source.substr(5);
        opts.format = parse_format(rep.config_value("format", "csv"));
        opts.ucr_rows = parse_index_list(rep.config_value("rows"));
        opts.gen.clear();
    } else {
        opts.gen = rep.config_value("gen", "example1");
        opts.noisy_base = rep.config_value("noisy_base", "example1");
        if (const auto s = rep.config_value("channels"); !s.empty()) opts.channels = std::stoull(s);
        if (const auto s = rep.config_value("sigma"); !s.empty()) opts.sigma = std::stod(s);
        if (const auto s = rep.config_value("seed"); !s.empty()) opts.seed = std::stoull(s);
    }
    if (const auto s = rep.config_value("eps_min"); !s.empty()) opts.cfg.eps_min = std::stod(s);
    if (const auto s = rep.config_value("eps_max"); !s.empty()) opts.cfg.eps_max = std::stod(s);
    if (const auto s = rep.config_value("gamma_mult"); !s.empty()) opts.cfg.gamma_mult = std::stod(s);
    if (const auto s = rep.config_value("gamma_close"); !s.empty()) opts.cfg.gamma_close = std::stod(s);
    if (const auto s = rep.config_value("gamma_plat"); !s.empty()) opts.cfg.gamma_plat = std::stod(s);
    if (const auto s = rep.config_value("k_max"); !s.empty()) opts.cfg.k_max = std::stoi(s);
    if (const auto s = rep.config_value("weights"); !s.empty()) {
        std::vector<double> w;
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) w.push_back(std::stod(item));
        opts.cfg.weights = std::move(w);
    }
    if (const auto s = rep.config_value("k"); !s.empty()) opts.k = std::stoi(s);
    if (const auto s = rep.config_value("lambda"); !s.empty()) opts.lambda = std::stod(s);
    if (const auto s = rep.config_value("threads"); !s.empty()) {
        opts.threads = static_cast<unsigned>(std::stoul(s));
    }
    return opts;
}

} // namespace apts
