#ifndef LCPS_TOOLS_CLI_HPP
#define LCPS_TOOLS_CLI_HPP

#include "lcps/lcps.h"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcps_cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitIo = 3,
    kExitCapacity = 4,
    kExitDisagreement = 5,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Solve, Compare, Bench, Matches };
enum class Format { Text, Json };

/// Exactly one of literal / path is set.
struct InputSource {
    std::optional<std::string> literal;
    std::optional<std::string> path;
};

struct RunConfig {
    Command command = Command::Solve;
    lcps_algorithm algo = LCPS_ALGO_AUTO;
    Format format = Format::Text;
    InputSource x;
    InputSource y;
    bool fasta = false;
    lcps_limits limits{};

    // bench only
    std::vector<int> n_list;
    std::vector<std::string> s_list; // integers, or "n" for s = n
    std::uint64_t seed = 1;
    int reps = 5;

    bool help_requested = false;
    std::string help_text;
};

/// Throws UsageError on unknown flags, bad values or missing inputs. A help
/// request sets help_requested instead.
RunConfig parse_args(int argc, const char* const* argv);

/// First record's sequence lines, whitespace dropped and letters uppercased.
std::string parse_fasta(std::string_view text);

/// Literal bytes, or file bytes minus one trailing newline. FASTA parsing is
/// applied on top when fasta is set. Throws IoError for unreadable files.
std::string read_input(const InputSource& src, bool fasta);

struct AlgoOutcome {
    lcps_algorithm algo = LCPS_ALGO_DP;
    lcps_status status = LCPS_OK;
    std::size_t length = 0;
    std::string palindrome;
    std::vector<std::int32_t> x_indices;
    std::vector<std::int32_t> y_indices;
    bool valid = false;
    double elapsed_ms = 0.0;
};

/// Exit code for a compare run: 0 when every completed algorithm agrees on
/// the length and produced a valid witness, 5 on any disagreement or invalid
/// witness, 4 when nothing completed.
int judge_agreement(std::span<const AlgoOutcome> outcomes);

int solve_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int compare_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int bench_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int matches_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lcps_cli

#endif // LCPS_TOOLS_CLI_HPP
