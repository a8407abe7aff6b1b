#ifndef LCPS_BENCH_HPP
#define LCPS_BENCH_HPP

#include "lcps/core.hpp"
#include "lcps/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcps::bench {

struct GenSpec {
    Pos n = 0;
    Pos m = 0;
    int alphabet_size = 1;
    std::uint64_t seed = 0;
};

/// Symbol t of an alphabet of size s is the octet 'a' + t (mod 256).
Symbol alphabet_symbol(int t);

/// Two independent uniform strings drawn from one std::mt19937_64 stream
/// seeded with spec.seed: x first, then y. A draw maps to a symbol by
/// `engine() % alphabet_size`. Throws std::invalid_argument unless
/// 1 <= alphabet_size <= 256 and n, m >= 0.
std::pair<Seq, Seq> generate(const GenSpec& spec);

enum class RowStatus { Ok, CapacityExceeded, InputTooLarge };

std::string_view to_string(RowStatus s);

struct BenchRow {
    GenSpec spec;
    Algorithm algo = Algorithm::Dp;
    std::uint64_t r = 0;
    std::optional<std::size_t> length; // empty unless status is Ok
    double median_ms = 0.0;
    RowStatus status = RowStatus::Ok;
};

/// Median of the samples; 0 for none.
double median(std::vector<double> samples);

/// Runs every algorithm on every GenSpec `repetitions` times. Capacity
/// failures become row statuses. Throws LengthMismatch when two algorithms
/// disagree on one GenSpec.
std::vector<BenchRow> run_suite(const std::vector<GenSpec>& specs, const std::vector<Algorithm>& algos,
                                int repetitions = 5, const Limits& limits = {});

} // namespace lcps::bench

#endif // LCPS_BENCH_HPP
