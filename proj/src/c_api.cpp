#include "lcps/lcps.h"

#include "lcps/bench.hpp"
#include "lcps/core.hpp"
#include "lcps/match_index.hpp"
#include "lcps/solver.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <string>

struct lcps_result {
    lcps::SolveOutcome outcome;
};

struct lcps_match_summary {
    lcps::MatchSet set;
};

struct lcps_bench_report {
    std::vector<lcps::bench::BenchRow> rows;
};

namespace {

thread_local std::string g_last_error;

lcps_status fail(lcps_status status, const char* what)
{
    g_last_error = what;
    return status;
}

// Runs f and translates the library's exception types into status codes.
template <typename F>
lcps_status guarded(F&& f)
{
    try {
        f();
        return LCPS_OK;
    } catch (const lcps::CapacityExceeded& e) {
        return fail(LCPS_ERR_CAPACITY, e.what());
    } catch (const lcps::InputTooLarge& e) {
        return fail(LCPS_ERR_INPUT_TOO_LARGE, e.what());
    } catch (const lcps::InvalidWitness& e) {
        return fail(LCPS_ERR_INVALID_WITNESS, e.what());
    } catch (const lcps::LengthMismatch& e) {
        return fail(LCPS_ERR_LENGTH_MISMATCH, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LCPS_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(LCPS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(LCPS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LCPS_ERR_INTERNAL, "unknown error");
    }
}

lcps::Seq make_seq(const char* data, std::size_t len)
{
    if (data == nullptr && len != 0)
        throw std::invalid_argument("null sequence with non-zero length");
    if (len > static_cast<std::size_t>(INT32_MAX))
        throw std::invalid_argument("sequence longer than 2^31 - 1");
    return len == 0 ? lcps::Seq() : lcps::Seq(std::string(data, len));
}

lcps::Limits to_limits(const lcps_limits* l)
{
    lcps::Limits out;
    if (l) {
        if (l->max_dp_cells == 0 || l->max_rects == 0 || l->max_matches == 0)
            throw std::invalid_argument("limits must be >= 1");
        out.max_dp_cells = l->max_dp_cells;
        out.max_rects = l->max_rects;
        out.max_matches = l->max_matches;
    }
    return out;
}

lcps::Algorithm to_algorithm(lcps_algorithm a)
{
    switch (a) {
    case LCPS_ALGO_AUTO: return lcps::Algorithm::Auto;
    case LCPS_ALGO_DP: return lcps::Algorithm::Dp;
    case LCPS_ALGO_GEOM: return lcps::Algorithm::Geom;
    case LCPS_ALGO_ORACLE: return lcps::Algorithm::Oracle;
    }
    throw std::invalid_argument("unknown algorithm");
}

lcps_algorithm from_algorithm(lcps::Algorithm a)
{
    switch (a) {
    case lcps::Algorithm::Auto: return LCPS_ALGO_AUTO;
    case lcps::Algorithm::Dp: return LCPS_ALGO_DP;
    case lcps::Algorithm::Geom: return LCPS_ALGO_GEOM;
    case lcps::Algorithm::Oracle: return LCPS_ALGO_ORACLE;
    }
    return LCPS_ALGO_AUTO;
}

lcps::bench::GenSpec to_spec(const lcps_gen_spec& s)
{
    return lcps::bench::GenSpec{s.n, s.m, s.alphabet_size, s.seed};
}

} // namespace

extern "C" {

const char* lcps_version(void)
{
    return "1.0.0";
}

const char* lcps_last_error(void)
{
    return g_last_error.c_str();
}

const char* lcps_status_name(lcps_status status)
{
    switch (status) {
    case LCPS_OK: return "ok";
    case LCPS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LCPS_ERR_CAPACITY: return "capacity_exceeded";
    case LCPS_ERR_INPUT_TOO_LARGE: return "input_too_large";
    case LCPS_ERR_INVALID_WITNESS: return "invalid_witness";
    case LCPS_ERR_LENGTH_MISMATCH: return "length_mismatch";
    case LCPS_ERR_OUT_OF_MEMORY: return "out_of_memory";
    case LCPS_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* lcps_algorithm_name(lcps_algorithm algo)
{
    switch (algo) {
    case LCPS_ALGO_AUTO: return "auto";
    case LCPS_ALGO_DP: return "dp";
    case LCPS_ALGO_GEOM: return "geom";
    case LCPS_ALGO_ORACLE: return "oracle";
    }
    return "unknown";
}

lcps_status lcps_algorithm_parse(const char* name, lcps_algorithm* out)
{
    if (!name || !out)
        return fail(LCPS_ERR_INVALID_ARGUMENT, "null argument");
    auto a = lcps::parse_algorithm(name);
    if (!a)
        return fail(LCPS_ERR_INVALID_ARGUMENT, "unknown algorithm name");
    *out = from_algorithm(*a);
    return LCPS_OK;
}

void lcps_limits_default(lcps_limits* out)
{
    if (!out)
        return;
    const lcps::Limits d;
    out->max_dp_cells = d.max_dp_cells;
    out->max_rects = d.max_rects;
    out->max_matches = d.max_matches;
}

lcps_status lcps_solve(const char* x, size_t x_len, const char* y, size_t y_len, lcps_algorithm algo,
                       const lcps_limits* limits, lcps_result** out)
{
    if (!out)
        return fail(LCPS_ERR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    return guarded([&] {
        const lcps::Seq xs = make_seq(x, x_len);
        const lcps::Seq ys = make_seq(y, y_len);
        auto outcome = lcps::solve(xs, ys, to_algorithm(algo), to_limits(limits));
        *out = new lcps_result{std::move(outcome)};
    });
}

void lcps_result_free(lcps_result* result)
{
    delete result;
}

size_t lcps_result_length(const lcps_result* result)
{
    return result ? result->outcome.result.length() : 0;
}

const char* lcps_result_palindrome(const lcps_result* result)
{
    return result ? result->outcome.result.z.c_str() : "";
}

const int32_t* lcps_result_x_indices(const lcps_result* result)
{
    return result ? result->outcome.result.x_indices.data() : nullptr;
}

const int32_t* lcps_result_y_indices(const lcps_result* result)
{
    return result ? result->outcome.result.y_indices.data() : nullptr;
}

lcps_algorithm lcps_result_algorithm(const lcps_result* result)
{
    return result ? from_algorithm(result->outcome.algorithm) : LCPS_ALGO_AUTO;
}

uint64_t lcps_result_matches(const lcps_result* result)
{
    return result ? result->outcome.matches : 0;
}

double lcps_result_elapsed_ms(const lcps_result* result)
{
    return result ? result->outcome.elapsed_ms : 0.0;
}

int lcps_result_validate(const lcps_result* result, const char* x, size_t x_len, const char* y, size_t y_len)
{
    if (!result)
        return 0;
    int ok = 0;
    guarded([&] { ok = lcps::validate_witness(result->outcome.result, make_seq(x, x_len), make_seq(y, y_len)) ? 1 : 0; });
    return ok;
}

lcps_status lcps_match_summary_compute(const char* x, size_t x_len, const char* y, size_t y_len,
                                       uint64_t max_matches, lcps_match_summary** out)
{
    if (!out)
        return fail(LCPS_ERR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    return guarded([&] {
        auto set = lcps::build_match_set(make_seq(x, x_len), make_seq(y, y_len), max_matches);
        *out = new lcps_match_summary{std::move(set)};
    });
}

void lcps_match_summary_free(lcps_match_summary* summary)
{
    delete summary;
}

uint64_t lcps_match_summary_total(const lcps_match_summary* summary)
{
    return summary ? summary->set.r : 0;
}

size_t lcps_match_summary_symbol_count(const lcps_match_summary* summary)
{
    return summary ? summary->set.per_sigma.size() : 0;
}

lcps_status lcps_match_summary_symbol(const lcps_match_summary* summary, size_t index, unsigned char* symbol,
                                      uint64_t* x_count, uint64_t* y_count, uint64_t* r_sigma)
{
    if (!summary || index >= summary->set.per_sigma.size())
        return fail(LCPS_ERR_INVALID_ARGUMENT, "symbol index out of range");
    const auto& s = summary->set.per_sigma[index];
    if (symbol)
        *symbol = s.sigma();
    if (x_count)
        *x_count = s.x_occ().size();
    if (y_count)
        *y_count = s.y_occ().size();
    if (r_sigma)
        *r_sigma = s.r_sigma();
    return LCPS_OK;
}

lcps_status lcps_generate(const lcps_gen_spec* spec, char* x_out, char* y_out)
{
    if (!spec)
        return fail(LCPS_ERR_INVALID_ARGUMENT, "null spec");
    return guarded([&] {
        if ((spec->n > 0 && !x_out) || (spec->m > 0 && !y_out))
            throw std::invalid_argument("null output buffer");
        const auto [x, y] = lcps::bench::generate(to_spec(*spec));
        if (!x.empty())
            std::memcpy(x_out, x.str().data(), x.str().size());
        if (!y.empty())
            std::memcpy(y_out, y.str().data(), y.str().size());
    });
}

lcps_status lcps_bench_run(const lcps_gen_spec* specs, size_t spec_count, const lcps_algorithm* algos,
                           size_t algo_count, int32_t repetitions, const lcps_limits* limits,
                           lcps_bench_report** out)
{
    if (!out || (spec_count && !specs) || (algo_count && !algos))
        return fail(LCPS_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::vector<lcps::bench::GenSpec> gs;
        for (size_t t = 0; t < spec_count; ++t)
            gs.push_back(to_spec(specs[t]));
        std::vector<lcps::Algorithm> as;
        for (size_t t = 0; t < algo_count; ++t)
            as.push_back(to_algorithm(algos[t]));
        auto rows = lcps::bench::run_suite(gs, as, repetitions, to_limits(limits));
        *out = new lcps_bench_report{std::move(rows)};
    });
}

void lcps_bench_report_free(lcps_bench_report* report)
{
    delete report;
}

size_t lcps_bench_report_size(const lcps_bench_report* report)
{
    return report ? report->rows.size() : 0;
}

lcps_status lcps_bench_report_row(const lcps_bench_report* report, size_t index, lcps_bench_row* out)
{
    if (!report || !out || index >= report->rows.size())
        return fail(LCPS_ERR_INVALID_ARGUMENT, "row index out of range");
    const auto& r = report->rows[index];
    out->spec = lcps_gen_spec{r.spec.n, r.spec.m, r.spec.alphabet_size, r.spec.seed};
    out->algo = from_algorithm(r.algo);
    out->r = r.r;
    out->length = r.length ? static_cast<int64_t>(*r.length) : -1;
    out->median_ms = r.median_ms;
    switch (r.status) {
    case lcps::bench::RowStatus::Ok: out->status = LCPS_ROW_OK; break;
    case lcps::bench::RowStatus::CapacityExceeded: out->status = LCPS_ROW_CAPACITY_EXCEEDED; break;
    case lcps::bench::RowStatus::InputTooLarge: out->status = LCPS_ROW_INPUT_TOO_LARGE; break;
    }
    return LCPS_OK;
}

const char* lcps_row_status_name(lcps_row_status status)
{
    switch (status) {
    case LCPS_ROW_OK: return "ok";
    case LCPS_ROW_CAPACITY_EXCEEDED: return "capacity_exceeded";
    case LCPS_ROW_INPUT_TOO_LARGE: return "input_too_large";
    }
    return "unknown";
}

} // extern "C"
