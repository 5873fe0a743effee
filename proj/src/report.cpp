#include "apts/report.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace apts {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

const char* kKnownKeys[] = {"algo", "source", "n_x", "T", "breakpoints", "epsilons",
                            "seconds", "seconds_min", "seconds_median", "repeats"};

bool is_known(const std::string& key) {
    return std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) != std::end(kKnownKeys);
}

} // namespace

void RunReport::write(std::ostream& out) const {
    out << "algo: " << algo << '\n';
    out << "source: " << source << '\n';
    out << "n_x: " << n_x << '\n';
    out << "T: " << series_horizon << '\n';
    for (const auto& [k, v] : config) {
        out << k << ": " << v << '\n';
    }
    out << "breakpoints:";
    for (int tau : breakpoints) out << ' ' << tau;
    out << '\n';
    if (!epsilons.empty()) {
        out << "epsilons:";
        for (double e : epsilons) out << ' ' << fmt(e);
        out << '\n';
    }
    out << "seconds: " << fmt(seconds) << '\n';
    if (repeats > 1) {
        out << "seconds_min: " << fmt(seconds_min) << '\n';
        out << "seconds_median: " << fmt(seconds_median) << '\n';
        out << "repeats: " << repeats << '\n';
    }
}

std::string RunReport::to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

std::string RunReport::config_value(const std::string& key, const std::string& fallback) const {
    for (const auto& [k, v] : config) {
        if (k == key) return v;
    }
    return fallback;
}

RunReport parse_report(std::istream& in) {
    RunReport r;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw ParseError("expected 'key: value'", line_no);
        }
        const std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') value.erase(0, 1);

        std::istringstream vs(value);
        if (key == "algo") {
            r.algo = value;
        } else if (key == "source") {
            r.source = value;
        } else if (key == "n_x") {
            vs >> r.n_x;
        } else if (key == "T") {
            vs >> r.series_horizon;
        } else if (key == "breakpoints") {
            int tau;
            while (vs >> tau) r.breakpoints.push_back(tau);
        } else if (key == "epsilons") {
            double e;
            while (vs >> e) r.epsilons.push_back(e);
        } else if (key == "seconds") {
            vs >> r.seconds;
        } else if (key == "seconds_min") {
            vs >> r.seconds_min;
        } else if (key == "seconds_median") {
            vs >> r.seconds_median;
        } else if (key == "repeats") {
            vs >> r.repeats;
        } else {
            r.config.emplace_back(key, value);
        }
        if (is_known(key) && vs.fail() && key != "breakpoints" && key != "epsilons" &&
            key != "algo" && key != "source") {
            throw ParseError("bad value for '" + key + "'", line_no);
        }
    }
    return r;
}

RunReport parse_report_string(const std::string& text) {
    std::istringstream in(text);
    return parse_report(in);
}

} // namespace apts
