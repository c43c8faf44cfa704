#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relayarq/types.hpp"

namespace relayarq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;          // usage or domain errors
inline constexpr int kExitValidationFail = 2; // validate saw |z| > 4

enum class Command { Point, Sweep, Optimize, Simulate, Validate };
enum class ModeSelect { Single, AF, DF, Both };
enum class OutputFormat { Csv, Json };
enum class SimSource { Fading, FixedEps };

/// Either a scalar or an inclusive start:stop:count grid.
struct Axis {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;  // 1 = scalar

    bool is_range() const { return count > 1; }
    std::vector<double> values() const;

    static Axis scalar(double v) { return {v, v, 1}; }
    /// Parses "x" or "start:stop:count"; throws std::invalid_argument.
    static Axis parse(const std::string& text);
};

struct RunSpec {
    Command command = Command::Point;
    ModeSelect mode = ModeSelect::AF;
    double gamma_db = 10.0;
    double alpha = 3.12;
    std::optional<Axis> k;
    std::optional<Axis> rate;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::uint64_t max_slots = 10000;
    unsigned threads = 0;  // execution detail; never echoed in output
    SimSource source = SimSource::Fading;
    std::vector<double> eps_values;  // fixed-eps axis values
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // empty = stdout
};

/// dB -> linear power ratio.
double db_to_linear(double db);

// Command entry points; rows go to `out`, human diagnostics to `err`.
int cmd_point(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_optimize(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_validate(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Full CLI: parses argv, dispatches, honors --out. Returns the process
/// exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace relayarq::cli
