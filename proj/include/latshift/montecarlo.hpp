#pragma once

// Seeded stochastic verification. Shifts are exact dyadic rationals with
// denominator 2^64; boundary-unclean draws are detectable and resampled, so
// the whole pipeline stays float-free until statistics are compared.
// Shards partition the sample index range; the counter-based stream makes
// the tallies bit-identical for any shard count or thread schedule.

#include "latshift/counting.hpp"
#include "latshift/pmf.hpp"
#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace latshift {

struct SimConfig {
    std::uint64_t samples{100000};
    std::uint64_t seed{1};
    unsigned shards{1};

    bool operator==(const SimConfig& o) const {
        return samples == o.samples && seed == o.seed && shards == o.shards;
    }
};

struct EmpiricalReport {
    SimConfig config;
    std::map<std::int64_t, std::uint64_t> tallies;
    Rat mean;
    Rat variance;
    std::uint64_t resampled{0};   // boundary-unclean draws replaced
    std::uint64_t spot_checks{0}; // direct-count cross-checks performed

    bool operator==(const EmpiricalReport& o) const {
        return config == o.config && tallies == o.tallies && mean == o.mean &&
               variance == o.variance && resampled == o.resampled &&
               spot_checks == o.spot_checks;
    }
};

namespace detail {

inline unsigned thread_budget() {
    if (const char* env = std::getenv("LATSHIFT_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

struct ShardResult {
    std::map<std::int64_t, std::uint64_t> tallies;
    std::uint64_t resampled{0};
    std::uint64_t spot_checks{0};
    bool spot_check_failed{false};
};

inline ShardResult run_shard(const CountPlan& plan, const SimConfig& cfg,
                             std::uint64_t begin, std::uint64_t end) {
    ShardResult r;
    for (std::uint64_t i = begin; i < end; ++i) {
        DyadicPoint x;
        std::uint32_t attempt = 0;
        for (;; ++attempt) {
            if (attempt >= 128) throw std::runtime_error("resampling failed to find a clean shift");
            x = shift_at(cfg.seed, i, attempt);
            if (clean_shift(plan, x)) break;
            ++r.resampled;
        }
        const std::int64_t value = count_via_sides(plan, x);
        if (i % 100 == 0) {
            // direct enumeration spot check on 1% of samples
            ++r.spot_checks;
            ShiftedCount direct = count_shifted(plan, x);
            if (!direct.boundary_clean || direct.value != value) r.spot_check_failed = true;
        }
        ++r.tallies[value];
    }
    return r;
}

} // namespace detail

inline EmpiricalReport simulate(const IntPolygon& p, const SimConfig& cfg) {
    if (cfg.samples < 1) fail(Errc::ParseError, "need at least one sample");
    if (cfg.shards < 1) fail(Errc::ParseError, "need at least one shard");
    const CountPlan plan = CountPlan::make(p);

    // Shard s covers [s*N/K, (s+1)*N/K); the union is the same index set for
    // any K, so results do not depend on the partition.
    const std::uint64_t n = cfg.samples;
    std::vector<detail::ShardResult> results(cfg.shards);
    unsigned workers = std::min(cfg.shards, detail::thread_budget());
    std::vector<std::thread> pool;
    std::uint64_t next_shard = 0;
    std::mutex mtx;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            std::uint64_t s;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (next_shard >= cfg.shards || first_error) return;
                s = next_shard++;
            }
            std::uint64_t begin = n * s / cfg.shards;
            std::uint64_t end = n * (s + 1) / cfg.shards;
            try {
                results[s] = detail::run_shard(plan, cfg, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    EmpiricalReport rep;
    rep.config = cfg;
    for (const auto& r : results) {
        if (r.spot_check_failed) {
            throw std::runtime_error("side-formula count disagreed with direct enumeration");
        }
        rep.resampled += r.resampled;
        rep.spot_checks += r.spot_checks;
        for (const auto& [v, c] : r.tallies) rep.tallies[v] += c;
    }

    Int sum = 0, sum_sq = 0;
    for (const auto& [v, c] : rep.tallies) {
        sum += Int(v) * c;
        sum_sq += Int(v) * v * c;
    }
    rep.mean = Rat(sum, Int(n));
    rep.variance = Rat(sum_sq, Int(n)) - rep.mean * rep.mean;
    return rep;
}

struct ValueZ {
    std::int64_t value;
    double z;
};

struct ComparisonResult {
    std::vector<ValueZ> z_scores;
    double max_abs_z{0.0};
    double tv_distance{0.0};
    double tv_limit{0.0};
    std::vector<std::int64_t> outside_support;
    bool pass{false};

    std::string diagnostic() const {
        if (pass) return "ok";
        if (!outside_support.empty()) {
            return "observed value " + std::to_string(outside_support.front()) +
                   " outside exact support";
        }
        if (max_abs_z > 5.0) return "max |z| = " + std::to_string(max_abs_z) + " exceeds 5";
        return "total variation " + std::to_string(tv_distance) + " exceeds " +
               std::to_string(tv_limit);
    }
};

// Per-value z scores |phat - p| / sqrt(p(1-p)/N) and total variation
// distance; passes iff max |z| <= 5, TV <= 5 sqrt(|support|/N), and no mass
// lands outside the exact support.
inline ComparisonResult compare_to_exact(const EmpiricalReport& rep, const Pmf& pmf) {
    ComparisonResult res;
    const double n = static_cast<double>(rep.config.samples);
    double tv = 0.0;

    for (const auto& [v, c] : rep.tallies) {
        if (pmf.prob(v) == 0) res.outside_support.push_back(v);
    }
    for (const auto& [v, p_exact] : pmf.entries()) {
        const double p = rat_double(p_exact);
        auto it = rep.tallies.find(v);
        const double phat = (it == rep.tallies.end() ? 0.0 : static_cast<double>(it->second) / n);
        tv += std::abs(phat - p);
        const double sigma = std::sqrt(p * (1.0 - p) / n);
        const double z = sigma > 0 ? (phat - p) / sigma : 0.0;
        res.z_scores.push_back({v, z});
        res.max_abs_z = std::max(res.max_abs_z, std::abs(z));
    }
    for (const auto& v : res.outside_support) {
        tv += static_cast<double>(rep.tallies.at(v)) / n;
    }
    res.tv_distance = tv / 2.0;
    res.tv_limit = 5.0 * std::sqrt(static_cast<double>(pmf.support_size()) / n);
    res.pass = res.outside_support.empty() && res.max_abs_z <= 5.0 &&
               res.tv_distance <= res.tv_limit;
    return res;
}

} // namespace latshift
