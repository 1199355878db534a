#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuchscode/errors.hpp"
#include "fuchscode/fuchsian.hpp"

namespace fxc::cli {

// 9 significant digits, enough to check the printed codeword values.
inline std::string fmt9(double v) {
    if (v == 0.0) v = 0.0; // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline Complex parse_tau(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("tau must be given as re,im");
    try {
        std::size_t used = 0;
        double re = std::stod(s.substr(0, comma), &used);
        if (used != comma) throw ParseError("bad tau real part: " + s);
        std::string rest = s.substr(comma + 1);
        double im = std::stod(rest, &used);
        if (used != rest.size()) throw ParseError("bad tau imaginary part: " + s);
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw ParseError("bad tau value: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("tau value out of range: " + s);
    }
}

// "start:step:stop", inclusive of stop up to half a step of slack.
inline std::vector<double> parse_snr_grid(double start, double step, double stop) {
    if (step <= 0.0) throw ParseError("SNR step must be positive");
    if (stop < start) throw ParseError("SNR stop below start");
    std::vector<double> grid;
    for (double v = start; v <= stop + step * 0.5; v += step) grid.push_back(v);
    return grid;
}

inline std::vector<double> parse_snr_spec(const std::string& s) {
    std::size_t c1 = s.find(':');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("SNR grid must be start:step:stop");
    try {
        double start = std::stod(s.substr(0, c1));
        double step = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        double stop = std::stod(s.substr(c2 + 1));
        return parse_snr_grid(start, step, stop);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad SNR grid: " + s);
    }
}

// Output sink: path or stdout when empty.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void setup_construct(CLI::App& app);
void setup_decode(CLI::App& app);
void setup_sweep(CLI::App& app);
void setup_complexity(CLI::App& app);
void setup_units(CLI::App& app);
void setup_catalog(CLI::App& app);

} // namespace fxc::cli
