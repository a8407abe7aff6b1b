#include "lcps/bench.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lcps::bench {

Symbol alphabet_symbol(int t)
{
    return static_cast<Symbol>(('a' + t) & 0xff);
}

std::pair<Seq, Seq> generate(const GenSpec& spec)
{
    if (spec.alphabet_size < 1 || spec.alphabet_size > 256)
        throw std::invalid_argument("alphabet size must be in [1, 256]");
    if (spec.n < 0 || spec.m < 0)
        throw std::invalid_argument("lengths must be non-negative");

    std::mt19937_64 engine(spec.seed);
    const auto s = static_cast<std::uint64_t>(spec.alphabet_size);
    auto draw = [&](Pos len) {
        std::string out(static_cast<std::size_t>(len), '\0');
        for (auto& ch : out)
            ch = static_cast<char>(alphabet_symbol(static_cast<int>(engine() % s)));
        return Seq(std::move(out));
    };
    Seq x = draw(spec.n);
    Seq y = draw(spec.m);
    return {std::move(x), std::move(y)};
}

std::string_view to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::CapacityExceeded: return "capacity_exceeded";
    case RowStatus::InputTooLarge: return "input_too_large";
    }
    return "unknown";
}

double median(std::vector<double> samples)
{
    if (samples.empty())
        return 0.0;
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

std::vector<BenchRow> run_suite(const std::vector<GenSpec>& specs, const std::vector<Algorithm>& algos,
                                int repetitions, const Limits& limits)
{
    if (repetitions < 1)
        throw std::invalid_argument("repetitions must be >= 1");

    std::vector<BenchRow> rows;
    for (const auto& spec : specs) {
        const auto [x, y] = generate(spec);
        const std::uint64_t r = count_matches(x, y);
        const std::size_t first_row = rows.size();

        for (Algorithm algo : algos) {
            BenchRow row{spec, algo, r, std::nullopt, 0.0, RowStatus::Ok};
            std::vector<double> times;
            try {
                for (int rep = 0; rep < repetitions; ++rep) {
                    SolveOutcome o = solve(x, y, algo, limits);
                    times.push_back(o.elapsed_ms);
                    row.length = o.result.length();
                }
                row.median_ms = median(times);
            } catch (const CapacityExceeded&) {
                row.status = RowStatus::CapacityExceeded;
                row.length.reset();
            } catch (const InputTooLarge&) {
                row.status = RowStatus::InputTooLarge;
                row.length.reset();
            }
            rows.push_back(row);
        }

        std::optional<std::size_t> agreed;
        for (std::size_t t = first_row; t < rows.size(); ++t) {
            if (!rows[t].length)
                continue;
            if (agreed && *agreed != *rows[t].length)
                throw LengthMismatch("algorithms disagree on n=" + std::to_string(spec.n) +
                                     " m=" + std::to_string(spec.m) + " s=" + std::to_string(spec.alphabet_size) +
                                     " seed=" + std::to_string(spec.seed));
            agreed = rows[t].length;
        }
    }
    return rows;
}

} // namespace lcps::bench
