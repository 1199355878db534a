#pragma once

#include <cstdint>
#include <vector>

#include "fuchscode/decode.hpp"

namespace fxc {

// Keyed counter generator (SplitMix64 core) feeding a Box-Muller transform.
// Every (seed, snr index, partition) triple owns an independent stream, so
// totals are identical no matter how partitions are scheduled onto threads.
class NoiseStream {
public:
    NoiseStream(std::uint64_t seed, std::uint64_t snr_index, std::uint64_t partition);

    std::uint64_t next_u64();
    // Uniform on [0, 1).
    double uniform();
    // Complex Gaussian with E|w|^2 = sigma^2 (sigma^2/2 per component).
    Complex awgn_sample(double sigma);
    // Uniform integer in [0, n).
    std::size_t pick(std::size_t n);

private:
    std::uint64_t state_;
};

enum class DecoderKind { Pra, Ml };

struct CellStats {
    double snr_db = 0.0;
    double sigma = 0.0;
    long long trials = 0;
    long long errors = 0;
    double ser = 0.0;
    double mean_ops = 0.0;
    long long max_ops = 0;
    double mean_iterations = 0.0;
};

struct MonteCarloConfig {
    std::uint64_t seed = 42;
    long long trials = 100000;
    int threads = 1;
    long long partition_size = 8192; // trials per RNG stream, fixed
};

// One SNR cell: per trial, draw a uniform codeword, add noise scaled from
// SNR via sigma^2 = P_av * 10^(-snr/10), decode, count symbol errors and
// operation totals. group may be null for ML decoding.
CellStats run_cell(const Codebook& c, const Group* g, DecoderKind decoder,
                   double snr_db, int snr_index, const MonteCarloConfig& cfg);

std::vector<CellStats> sweep(const Codebook& c, const Group* g, DecoderKind decoder,
                             const std::vector<double>& snr_db_grid, const MonteCarloConfig& cfg);

double qfunc(double x);

// Closed-form 4-QAM symbol error rate under nearest-point decoding.
double qam4_ser_analytic(double snr_db);

} // namespace fxc
