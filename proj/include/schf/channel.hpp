#pragma once

#include "schf/code.hpp"
#include "schf/decoder.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace schf {

/// Counter-based random stream: every (seed, stream, counter) triple opens an
/// independent, reproducible sequence, so parallel trials are deterministic
/// regardless of scheduling. splitmix64 underneath.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
        state_ = mix(seed + 0x9E3779B97F4A7C15ull);
        state_ = mix(state_ ^ (stream + 0xBF58476D1CE4E5B9ull));
        state_ = mix(state_ ^ (counter + 0x94D049BB133111EBull));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform in (0, 1].
    double unit() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

    /// Uniform integer below bound (rejection sampling, unbiased).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Standard normal via Box-Muller, second value cached.
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double r = std::sqrt(-2.0 * std::log(unit()));
        const double a = two_pi * unit();
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

enum class DecoderKind { suboptimal, suboptimal_refined, ml };

/// Per-coordinate noise sigma for the convention SNR_dB = 10*log10(1/(n*sigma^2)),
/// i.e. unit signal energy against total noise energy n*sigma^2.
inline double sigma_from_snr_db(double snr_db, int dim) {
    return std::sqrt(std::pow(10.0, -snr_db / 10.0) / static_cast<double>(dim));
}

struct SimConfig {
    CodeSpec spec;
    std::vector<double> snr_db;
    std::uint64_t trials_per_point = 10'000;
    std::uint64_t seed = 1;
    DecoderKind decoder = DecoderKind::suboptimal_refined;
    int breadth = 1;
    int threads = 0; // 0 = hardware concurrency
    std::uint64_t enumeration_cap = default_enumeration_cap;
};

struct SnrRow {
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    double ser = 0.0;
    double ser_stderr = 0.0;
    double mean_decode_us = 0.0;
};

struct SimReport {
    CodeSpec spec;
    DecoderKind decoder = DecoderKind::suboptimal;
    std::uint64_t seed = 0;
    std::vector<SnrRow> rows;
};

inline const char* decoder_name(DecoderKind k) {
    switch (k) {
    case DecoderKind::suboptimal: return "suboptimal";
    case DecoderKind::suboptimal_refined: return "suboptimal-refined";
    case DecoderKind::ml: return "ml";
    }
    return "?";
}

/// Seeded AWGN Monte-Carlo: draw indices uniformly, add N(0, sigma^2) per
/// coordinate, decode, count index mismatches. Bit-identical counts for a
/// fixed config, independent of the worker count.
inline SimReport simulate(const SimConfig& cfg) {
    check_spec(cfg.spec);
    if (cfg.spec.variant != Variant::standard)
        throw std::invalid_argument("simulation requires the standard variant");
    if (cfg.trials_per_point < 1) throw std::domain_error("trials_per_point must be >= 1");

    const CodeTables tables = build_tables(cfg.spec);
    if (tables.total > BigInt(1) << 62)
        throw resource_error("codebook too large to draw indices");
    const std::uint64_t m = tables.total.convert_to<std::uint64_t>();
    const int dim = cfg.spec.dim;

    std::vector<Codeword> codebook;
    if (cfg.decoder == DecoderKind::ml)
        codebook = enumerate_codebook(tables, cfg.enumeration_cap);

    const DecodeConfig dcfg{cfg.breadth, cfg.decoder == DecoderKind::suboptimal_refined};

    SimReport report;
    report.spec = cfg.spec;
    report.decoder = cfg.decoder;
    report.seed = cfg.seed;

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : hw;

    for (std::size_t si = 0; si < cfg.snr_db.size(); ++si) {
        const double sigma = sigma_from_snr_db(cfg.snr_db[si], dim);

        struct Chunk {
            std::uint64_t errors = 0;
            std::int64_t decode_ns = 0;
        };
        auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
            Chunk chunk;
            std::vector<double> y(static_cast<std::size_t>(dim));
            for (std::uint64_t ti = lo; ti < hi; ++ti) {
                CounterRng rng(cfg.seed, si, ti);
                const std::uint64_t a = rng.below(m);
                const std::vector<double>& x = cfg.decoder == DecoderKind::ml
                                                   ? codebook[a].coords
                                                   : encode(tables, BigInt(a)).coords;
                for (int c = 0; c < dim; ++c)
                    y[static_cast<std::size_t>(c)] =
                        x[static_cast<std::size_t>(c)] + sigma * rng.gaussian();

                const auto t0 = std::chrono::steady_clock::now();
                bool wrong;
                if (cfg.decoder == DecoderKind::ml) {
                    wrong = decode_ml(codebook, y) != a;
                } else {
                    wrong = decode(tables, y, dcfg).index != a;
                }
                chunk.decode_ns +=
                    std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
                if (wrong) ++chunk.errors;
            }
            return chunk;
        };

        Chunk total;
        const std::uint64_t trials = cfg.trials_per_point;
        if (workers <= 1 || trials < 2 * workers) {
            total = run_range(0, trials);
        } else {
            std::vector<std::future<Chunk>> futs;
            const std::uint64_t step = (trials + workers - 1) / workers;
            for (std::uint64_t lo = 0; lo < trials; lo += step)
                futs.push_back(std::async(std::launch::async, run_range, lo,
                                          std::min(lo + step, trials)));
            for (auto& f : futs) {
                const Chunk c = f.get();
                total.errors += c.errors;
                total.decode_ns += c.decode_ns;
            }
        }

        SnrRow row;
        row.snr_db = cfg.snr_db[si];
        row.trials = trials;
        row.errors = total.errors;
        row.ser = static_cast<double>(total.errors) / static_cast<double>(trials);
        row.ser_stderr = std::sqrt(row.ser * (1.0 - row.ser) / static_cast<double>(trials));
        row.mean_decode_us =
            static_cast<double>(total.decode_ns) / 1000.0 / static_cast<double>(trials);
        report.rows.push_back(row);
    }
    return report;
}

struct DecoderTiming {
    DecoderKind decoder = DecoderKind::suboptimal;
    double mean_us = 0.0;
    double median_us = 0.0;
};

struct TimingReport {
    CodeSpec spec;
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::vector<DecoderTiming> timings; // suboptimal, refined, ml
};

/// Mean/median wall-clock per decode for the three decoders on identical
/// received vectors. Single-threaded; the decoders are interleaved per trial
/// after a warmup pass so clock-frequency drift hits all three equally.
inline TimingReport timing_probe(const SimConfig& cfg) {
    check_spec(cfg.spec);
    if (cfg.snr_db.empty()) throw std::domain_error("timing probe needs one SNR point");
    const CodeTables tables = build_tables(cfg.spec);
    const std::vector<Codeword> codebook = enumerate_codebook(tables, cfg.enumeration_cap);
    const std::uint64_t m = tables.total.convert_to<std::uint64_t>();
    const int dim = cfg.spec.dim;
    const double sigma = sigma_from_snr_db(cfg.snr_db.front(), dim);

    std::vector<std::vector<double>> ys;
    ys.reserve(cfg.trials_per_point);
    for (std::uint64_t ti = 0; ti < cfg.trials_per_point; ++ti) {
        CounterRng rng(cfg.seed, 0, ti);
        const std::uint64_t a = rng.below(m);
        std::vector<double> y = codebook[a].coords;
        for (double& c : y) c += sigma * rng.gaussian();
        ys.push_back(std::move(y));
    }

    const DecodeConfig plain_cfg{cfg.breadth, false};
    const DecodeConfig refined_cfg{cfg.breadth, true};
    auto run = [&](DecoderKind kind, const std::vector<double>& y) {
        if (kind == DecoderKind::ml) {
            volatile std::size_t sink = decode_ml(codebook, y);
            (void)sink;
        } else {
            volatile double sink =
                decode(tables, y, kind == DecoderKind::suboptimal ? plain_cfg : refined_cfg)
                    .residual;
            (void)sink;
        }
    };
    const DecoderKind kinds[] = {DecoderKind::suboptimal, DecoderKind::suboptimal_refined,
                                 DecoderKind::ml};

    const std::size_t warmup = std::min<std::size_t>(ys.size(), 256);
    for (std::size_t i = 0; i < warmup; ++i)
        for (DecoderKind kind : kinds) run(kind, ys[i]);

    std::vector<double> us[3];
    for (auto& v : us) v.reserve(ys.size());
    for (const auto& y : ys)
        for (int k = 0; k < 3; ++k) {
            const auto t0 = std::chrono::steady_clock::now();
            run(kinds[k], y);
            us[k].push_back(std::chrono::duration<double, std::micro>(
                                std::chrono::steady_clock::now() - t0)
                                .count());
        }

    TimingReport report;
    report.spec = cfg.spec;
    report.snr_db = cfg.snr_db.front();
    report.trials = cfg.trials_per_point;
    for (int k = 0; k < 3; ++k) {
        DecoderTiming t;
        t.decoder = kinds[k];
        double sum = 0.0;
        for (double v : us[k]) sum += v;
        t.mean_us = sum / static_cast<double>(us[k].size());
        std::nth_element(us[k].begin(), us[k].begin() + us[k].size() / 2, us[k].end());
        t.median_us = us[k][us[k].size() / 2];
        report.timings.push_back(t);
    }
    return report;
}

/// CSV rows (snr_db, trials, errors, ser, stderr), 17 significant digits.
inline std::string sim_report_csv(const SimReport& report) {
    std::ostringstream os;
    os << "snr_db,trials,errors,ser,stderr\n";
    os.precision(17);
    for (const auto& r : report.rows)
        os << r.snr_db << ',' << r.trials << ',' << r.errors << ',' << r.ser << ','
           << r.ser_stderr << '\n';
    return os.str();
}

} // namespace schf
