#include "fuchscode/channel.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "fuchscode/errors.hpp"

namespace fxc {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t snr_index, std::uint64_t partition) {
    state_ = seed;
    state_ = mix64(state_ + kGolden * (snr_index + 1));
    state_ = mix64(state_ + kGolden * (partition + 1));
}

std::uint64_t NoiseStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double NoiseStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex NoiseStream::awgn_sample(double sigma) {
    if (sigma == 0.0) return {0.0, 0.0};
    // u1 on (0, 1] keeps the log finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = (sigma / std::sqrt(2.0)) * std::sqrt(-2.0 * std::log(u1));
    double th = kTwoPi * u2;
    return {r * std::cos(th), r * std::sin(th)};
}

std::size_t NoiseStream::pick(std::size_t n) {
    if (n == 0) throw DomainError("empty pick range");
    std::uint64_t bucket = UINT64_MAX / n;
    std::uint64_t lim = bucket * n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= lim);
    return static_cast<std::size_t>(x / bucket);
}

namespace {

struct PartitionTally {
    long long errors = 0;
    long long ops_sum = 0;
    long long max_ops = 0;
    long long iter_sum = 0;
};

PartitionTally run_partition(const Codebook& c, const Group* g, DecoderKind decoder,
                             double sigma, std::uint64_t seed, int snr_index,
                             std::uint64_t partition, long long count) {
    NoiseStream stream(seed, static_cast<std::uint64_t>(snr_index), partition);
    PartitionTally t;
    for (long long k = 0; k < count; ++k) {
        std::size_t sent = stream.pick(c.size());
        Complex y = c.words[sent].point + stream.awgn_sample(sigma);
        DecodeResult r = decoder == DecoderKind::Pra ? pra_decode(c, *g, y) : ml_decode(c, y);
        if (r.status != DecodeStatus::Ok || r.index != static_cast<int>(sent)) t.errors++;
        t.ops_sum += r.total_ops;
        t.max_ops = std::max(t.max_ops, r.total_ops);
        t.iter_sum += r.iterations;
    }
    return t;
}

} // namespace

CellStats run_cell(const Codebook& c, const Group* g, DecoderKind decoder,
                   double snr_db, int snr_index, const MonteCarloConfig& cfg) {
    if (cfg.trials <= 0 || cfg.partition_size <= 0) throw DomainError("bad trial counts");
    if (decoder == DecoderKind::Pra && g == nullptr)
        throw DomainError("reduction decoding needs a group");

    double p_av = power_average(c);
    double sigma = std::sqrt(p_av * std::pow(10.0, -snr_db / 10.0));

    long long nparts = (cfg.trials + cfg.partition_size - 1) / cfg.partition_size;
    std::vector<PartitionTally> tallies(static_cast<std::size_t>(nparts));

    auto count_of = [&](long long p) {
        long long lo = p * cfg.partition_size;
        return std::min(cfg.partition_size, cfg.trials - lo);
    };

    if (cfg.threads <= 1) {
        for (long long p = 0; p < nparts; ++p)
            tallies[static_cast<std::size_t>(p)] = run_partition(
                c, g, decoder, sigma, cfg.seed, snr_index, static_cast<std::uint64_t>(p),
                count_of(p));
    } else {
        std::atomic<long long> next{0};
        auto worker = [&] {
            for (;;) {
                long long p = next.fetch_add(1);
                if (p >= nparts) return;
                tallies[static_cast<std::size_t>(p)] = run_partition(
                    c, g, decoder, sigma, cfg.seed, snr_index, static_cast<std::uint64_t>(p),
                    count_of(p));
            }
        };
        std::vector<std::thread> pool;
        int nthreads = std::min<long long>(cfg.threads, nparts);
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    PartitionTally total;
    for (const PartitionTally& t : tallies) {
        total.errors += t.errors;
        total.ops_sum += t.ops_sum;
        total.max_ops = std::max(total.max_ops, t.max_ops);
        total.iter_sum += t.iter_sum;
    }

    CellStats s;
    s.snr_db = snr_db;
    s.sigma = sigma;
    s.trials = cfg.trials;
    s.errors = total.errors;
    s.ser = static_cast<double>(total.errors) / static_cast<double>(cfg.trials);
    s.mean_ops = static_cast<double>(total.ops_sum) / static_cast<double>(cfg.trials);
    s.max_ops = total.max_ops;
    s.mean_iterations = static_cast<double>(total.iter_sum) / static_cast<double>(cfg.trials);
    return s;
}

std::vector<CellStats> sweep(const Codebook& c, const Group* g, DecoderKind decoder,
                             const std::vector<double>& snr_db_grid,
                             const MonteCarloConfig& cfg) {
    std::vector<CellStats> out;
    out.reserve(snr_db_grid.size());
    for (std::size_t i = 0; i < snr_db_grid.size(); ++i)
        out.push_back(run_cell(c, g, decoder, snr_db_grid[i], static_cast<int>(i), cfg));
    return out;
}

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double qam4_ser_analytic(double snr_db) {
    double q = qfunc(std::sqrt(std::pow(10.0, snr_db / 10.0)));
    return 2.0 * q - q * q;
}

} // namespace fxc
