#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <memory>
#include <sstream>

namespace lcps_cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct ResultDeleter {
    void operator()(lcps_result* r) const { lcps_result_free(r); }
};
struct SummaryDeleter {
    void operator()(lcps_match_summary* s) const { lcps_match_summary_free(s); }
};
struct ReportDeleter {
    void operator()(lcps_bench_report* r) const { lcps_bench_report_free(r); }
};
using ResultPtr = std::unique_ptr<lcps_result, ResultDeleter>;
using SummaryPtr = std::unique_ptr<lcps_match_summary, SummaryDeleter>;
using ReportPtr = std::unique_ptr<lcps_bench_report, ReportDeleter>;

std::string dump(const ordered_json& j)
{
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

int exit_code_for(lcps_status s)
{
    switch (s) {
    case LCPS_OK: return kExitOk;
    case LCPS_ERR_CAPACITY:
    case LCPS_ERR_INPUT_TOO_LARGE:
    case LCPS_ERR_OUT_OF_MEMORY: return kExitCapacity;
    case LCPS_ERR_INVALID_ARGUMENT: return kExitUsage;
    case LCPS_ERR_LENGTH_MISMATCH: return kExitDisagreement;
    default: return kExitInternal;
    }
}

std::vector<std::int32_t> copy_indices(const std::int32_t* p, std::size_t n)
{
    return n == 0 ? std::vector<std::int32_t>{} : std::vector<std::int32_t>(p, p + n);
}

struct Inputs {
    std::string x;
    std::string y;
};

Inputs load_inputs(const RunConfig& cfg)
{
    return Inputs{read_input(cfg.x, cfg.fasta), read_input(cfg.y, cfg.fasta)};
}

AlgoOutcome run_algorithm(const Inputs& in, lcps_algorithm algo, const lcps_limits& limits)
{
    AlgoOutcome o;
    o.algo = algo;
    lcps_result* raw = nullptr;
    o.status = lcps_solve(in.x.data(), in.x.size(), in.y.data(), in.y.size(), algo, &limits, &raw);
    if (o.status != LCPS_OK)
        return o;
    ResultPtr r(raw);
    o.algo = lcps_result_algorithm(r.get());
    o.length = lcps_result_length(r.get());
    o.palindrome.assign(lcps_result_palindrome(r.get()), o.length);
    o.x_indices = copy_indices(lcps_result_x_indices(r.get()), o.length);
    o.y_indices = copy_indices(lcps_result_y_indices(r.get()), o.length);
    o.valid = lcps_result_validate(r.get(), in.x.data(), in.x.size(), in.y.data(), in.y.size()) == 1;
    o.elapsed_ms = lcps_result_elapsed_ms(r.get());
    return o;
}

void add_limit_options(CLI::App* sub, lcps_limits& limits)
{
    const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());
    sub->add_option("--max-dp-cells", limits.max_dp_cells, "Cap on n*n*m*m DP table cells")->check(positive);
    sub->add_option("--max-rects", limits.max_rects, "Cap on the rectangle budget (sum of R_sigma^2)")
        ->check(positive);
    sub->add_option("--max-matches", limits.max_matches, "Cap on the match count R")->check(positive);
}

struct InputOptions {
    CLI::Option* x_lit = nullptr;
    CLI::Option* x_file = nullptr;
    CLI::Option* y_lit = nullptr;
    CLI::Option* y_file = nullptr;
};

InputOptions add_input_options(CLI::App* sub, RunConfig& cfg, std::string& x_lit, std::string& x_path,
                               std::string& y_lit, std::string& y_path)
{
    InputOptions o;
    o.x_lit = sub->add_option("-x", x_lit, "X given literally");
    o.x_file = sub->add_option("--x-file", x_path, "Read X from a file");
    o.y_lit = sub->add_option("-y", y_lit, "Y given literally");
    o.y_file = sub->add_option("--y-file", y_path, "Read Y from a file");
    o.x_lit->excludes(o.x_file);
    o.y_lit->excludes(o.y_file);
    sub->add_flag("--fasta", cfg.fasta, "Inputs are FASTA; the first record is used");
    return o;
}

} // namespace

RunConfig parse_args(int argc, const char* const* argv)
{
    RunConfig cfg;
    lcps_limits_default(&cfg.limits);

    CLI::App app{"Longest common palindromic subsequence of two byte strings", "lcps"};
    app.require_subcommand(1);

    std::string algo_name = "auto";
    std::string format_name = "text";
    const std::vector<std::string> algo_names{"auto", "dp", "geom", "oracle"};
    const std::vector<std::string> format_names{"text", "json"};

    std::string x_lit, x_path, y_lit, y_path;
    std::vector<InputOptions> input_opts;

    CLI::App* solve = app.add_subcommand("solve", "Compute an LCPS and its embedding");
    CLI::App* compare = app.add_subcommand("compare", "Run every algorithm and cross-check the results");
    CLI::App* matches = app.add_subcommand("matches", "Print the match count R and per-symbol counts as JSON");
    CLI::App* bench = app.add_subcommand("bench", "Time algorithms on generated inputs (JSON lines)");

    for (CLI::App* sub : {solve, compare, matches}) {
        input_opts.push_back(add_input_options(sub, cfg, x_lit, x_path, y_lit, y_path));
        add_limit_options(sub, cfg.limits);
    }
    solve->add_option("--algo", algo_name, "dp | geom | oracle | auto")->check(CLI::IsMember(algo_names));
    for (CLI::App* sub : {solve, compare})
        sub->add_option("--format", format_name, "text | json")->check(CLI::IsMember(format_names));

    std::vector<int> n_list{8, 10};
    std::vector<std::string> s_list{"2"};
    bench->add_option("--n-list", n_list, "Comma-separated lengths (n = m)")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--s-list", s_list, "Comma-separated alphabet sizes; 'n' means s = n")->delimiter(',');
    bench->add_option("--seed", cfg.seed, "PRNG seed");
    bench->add_option("--reps", cfg.reps, "Repetitions per row (median reported)")->check(CLI::PositiveNumber);
    bench->add_option("--algo", algo_name, "dp | geom | oracle | auto (auto runs all three)")
        ->check(CLI::IsMember(algo_names));
    add_limit_options(bench, cfg.limits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        cfg.help_requested = true;
        cfg.help_text = out.str();
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.format = format_name == "json" ? Format::Json : Format::Text;
    if (lcps_algorithm_parse(algo_name.c_str(), &cfg.algo) != LCPS_OK)
        throw UsageError("unknown algorithm: " + algo_name);

    if (bench->parsed()) {
        cfg.command = Command::Bench;
        cfg.n_list = n_list;
        for (const auto& s : s_list) {
            if (s == "n")
                continue;
            int v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size() || v < 1 || v > 256)
                throw UsageError("--s-list entries must be integers in [1, 256] or 'n': " + s);
        }
        cfg.s_list = s_list;
        return cfg;
    }

    std::size_t which = 0;
    if (solve->parsed()) {
        cfg.command = Command::Solve;
    } else if (compare->parsed()) {
        cfg.command = Command::Compare;
        which = 1;
    } else {
        cfg.command = Command::Matches;
        which = 2;
    }
    const InputOptions& io = input_opts[which];
    if (io.x_lit->count() == 0 && io.x_file->count() == 0)
        throw UsageError("X is required: give -x or --x-file");
    if (io.y_lit->count() == 0 && io.y_file->count() == 0)
        throw UsageError("Y is required: give -y or --y-file");
    if (io.x_lit->count())
        cfg.x.literal = x_lit;
    else
        cfg.x.path = x_path;
    if (io.y_lit->count())
        cfg.y.literal = y_lit;
    else
        cfg.y.path = y_path;
    return cfg;
}

std::string parse_fasta(std::string_view text)
{
    std::string seq;
    bool seen_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.front() == '>') {
            if (seen_header)
                break;
            seen_header = true;
            continue;
        }
        for (char ch : line) {
            const auto uc = static_cast<unsigned char>(ch);
            if (std::isspace(uc))
                continue;
            seq.push_back(static_cast<char>(std::toupper(uc)));
        }
    }
    return seq;
}

std::string read_input(const InputSource& src, bool fasta)
{
    std::string bytes;
    if (src.literal) {
        bytes = *src.literal;
    } else if (src.path) {
        std::ifstream in(*src.path, std::ios::binary);
        if (!in)
            throw IoError("cannot open " + *src.path);
        bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        if (in.bad())
            throw IoError("error while reading " + *src.path);
        if (!fasta && !bytes.empty() && bytes.back() == '\n') {
            bytes.pop_back();
            if (!bytes.empty() && bytes.back() == '\r')
                bytes.pop_back();
        }
    } else {
        throw IoError("no input source");
    }
    return fasta ? parse_fasta(bytes) : bytes;
}

int judge_agreement(std::span<const AlgoOutcome> outcomes)
{
    std::optional<std::size_t> length;
    bool any = false;
    for (const auto& o : outcomes) {
        if (o.status != LCPS_OK)
            continue;
        any = true;
        if (!o.valid)
            return kExitDisagreement;
        if (length && *length != o.length)
            return kExitDisagreement;
        length = o.length;
    }
    return any ? kExitOk : kExitCapacity;
}

int solve_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Inputs in = load_inputs(cfg);
    lcps_result* raw = nullptr;
    const lcps_status st =
        lcps_solve(in.x.data(), in.x.size(), in.y.data(), in.y.size(), cfg.algo, &cfg.limits, &raw);
    if (st != LCPS_OK) {
        err << "lcps: " << lcps_status_name(st) << ": " << lcps_last_error() << "\n";
        return exit_code_for(st);
    }
    ResultPtr r(raw);
    const std::size_t u = lcps_result_length(r.get());
    const std::string z(lcps_result_palindrome(r.get()), u);

    if (cfg.format == Format::Json) {
        ordered_json j;
        j["x_len"] = in.x.size();
        j["y_len"] = in.y.size();
        j["algorithm"] = lcps_algorithm_name(lcps_result_algorithm(r.get()));
        j["lcps_length"] = u;
        j["lcps"] = z;
        j["x_indices"] = copy_indices(lcps_result_x_indices(r.get()), u);
        j["y_indices"] = copy_indices(lcps_result_y_indices(r.get()), u);
        j["matches"] = lcps_result_matches(r.get());
        j["elapsed_ms"] = lcps_result_elapsed_ms(r.get());
        out << dump(j) << "\n";
    } else {
        out << u << "\n";
        if (u > 0)
            out << z << "\n";
    }
    return kExitOk;
}

int compare_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Inputs in = load_inputs(cfg);
    std::vector<AlgoOutcome> outcomes;
    for (lcps_algorithm a : {LCPS_ALGO_DP, LCPS_ALGO_GEOM, LCPS_ALGO_ORACLE})
        outcomes.push_back(run_algorithm(in, a, cfg.limits));
    const int code = judge_agreement(outcomes);

    if (cfg.format == Format::Json) {
        ordered_json j;
        j["agree"] = code == kExitOk;
        j["results"] = ordered_json::array();
        for (const auto& o : outcomes) {
            ordered_json row;
            row["algorithm"] = lcps_algorithm_name(o.algo);
            row["status"] = lcps_status_name(o.status);
            if (o.status == LCPS_OK) {
                row["lcps_length"] = o.length;
                row["lcps"] = o.palindrome;
                row["x_indices"] = o.x_indices;
                row["y_indices"] = o.y_indices;
                row["valid"] = o.valid;
                row["elapsed_ms"] = o.elapsed_ms;
            }
            j["results"].push_back(row);
        }
        out << dump(j) << "\n";
    } else {
        for (const auto& o : outcomes) {
            out << lcps_algorithm_name(o.algo) << " status=" << lcps_status_name(o.status);
            if (o.status == LCPS_OK)
                out << " length=" << o.length << " lcps=" << o.palindrome << " valid=" << (o.valid ? "yes" : "no")
                    << " time_ms=" << std::fixed << std::setprecision(3) << o.elapsed_ms;
            out << "\n";
        }
        out << (code == kExitOk ? "agree" : code == kExitCapacity ? "no algorithm completed" : "DISAGREE") << "\n";
    }
    if (code == kExitDisagreement)
        err << "lcps: algorithms disagree\n";
    else if (code == kExitCapacity)
        err << "lcps: every algorithm ran out of capacity\n";
    return code;
}

int bench_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<lcps_gen_spec> specs;
    for (int n : cfg.n_list)
        for (const auto& s : cfg.s_list) {
            const int size = s == "n" ? std::clamp(n, 1, 256) : std::stoi(s);
            specs.push_back(lcps_gen_spec{n, n, size, cfg.seed});
        }
    std::vector<lcps_algorithm> algos;
    if (cfg.algo == LCPS_ALGO_AUTO)
        algos = {LCPS_ALGO_DP, LCPS_ALGO_GEOM, LCPS_ALGO_ORACLE};
    else
        algos = {cfg.algo};

    lcps_bench_report* raw = nullptr;
    const lcps_status st = lcps_bench_run(specs.data(), specs.size(), algos.data(), algos.size(), cfg.reps,
                                          &cfg.limits, &raw);
    if (st != LCPS_OK) {
        err << "lcps: " << lcps_status_name(st) << ": " << lcps_last_error() << "\n";
        return exit_code_for(st);
    }
    ReportPtr report(raw);
    for (std::size_t t = 0; t < lcps_bench_report_size(report.get()); ++t) {
        lcps_bench_row row{};
        lcps_bench_report_row(report.get(), t, &row);
        ordered_json j;
        j["n"] = row.spec.n;
        j["m"] = row.spec.m;
        j["s"] = row.spec.alphabet_size;
        j["seed"] = row.spec.seed;
        j["algo"] = lcps_algorithm_name(row.algo);
        j["r"] = row.r;
        j["length"] = row.length >= 0 ? ordered_json(row.length) : ordered_json(nullptr);
        j["median_ms"] = row.median_ms;
        j["status"] = lcps_row_status_name(row.status);
        out << dump(j) << "\n";
    }
    return kExitOk;
}

int matches_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Inputs in = load_inputs(cfg);
    lcps_match_summary* raw = nullptr;
    const lcps_status st =
        lcps_match_summary_compute(in.x.data(), in.x.size(), in.y.data(), in.y.size(), cfg.limits.max_matches, &raw);
    if (st != LCPS_OK) {
        err << "lcps: " << lcps_status_name(st) << ": " << lcps_last_error() << "\n";
        return exit_code_for(st);
    }
    SummaryPtr summary(raw);
    ordered_json j;
    j["x_len"] = in.x.size();
    j["y_len"] = in.y.size();
    j["matches"] = lcps_match_summary_total(summary.get());
    j["per_sigma"] = ordered_json::array();
    for (std::size_t t = 0; t < lcps_match_summary_symbol_count(summary.get()); ++t) {
        unsigned char sym = 0;
        std::uint64_t xc = 0, yc = 0, rs = 0;
        lcps_match_summary_symbol(summary.get(), t, &sym, &xc, &yc, &rs);
        ordered_json e;
        e["symbol"] = std::string(1, static_cast<char>(sym));
        e["code"] = sym;
        e["x_count"] = xc;
        e["y_count"] = yc;
        e["r_sigma"] = rs;
        j["per_sigma"].push_back(e);
    }
    out << dump(j) << "\n";
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const UsageError& e) {
        err << "lcps: " << e.what() << "\nRun 'lcps --help' for usage.\n";
        return kExitUsage;
    }
    if (cfg.help_requested) {
        out << cfg.help_text;
        return kExitOk;
    }

    try {
        switch (cfg.command) {
        case Command::Solve: return solve_command(cfg, out, err);
        case Command::Compare: return compare_command(cfg, out, err);
        case Command::Bench: return bench_command(cfg, out, err);
        case Command::Matches: return matches_command(cfg, out, err);
        }
    } catch (const IoError& e) {
        err << "lcps: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "lcps: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

} // namespace lcps_cli
