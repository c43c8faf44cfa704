#include "relayarq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "relayarq/analytic.hpp"
#include "relayarq/montecarlo.hpp"
#include "relayarq/optimizer.hpp"

namespace relayarq::cli {
namespace {

using ordered_json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, std::int64_t, std::uint64_t, bool,
                          std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cell_to_csv(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (auto* u = std::get_if<std::uint64_t>(&c)) return std::to_string(*u);
    if (auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    return std::get<std::string>(c);
}

ordered_json cell_to_json(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (auto* d = std::get_if<double>(&c)) return *d;
    if (auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (auto* u = std::get_if<std::uint64_t>(&c)) return *u;
    if (auto* b = std::get_if<bool>(&c)) return *b;
    return std::get<std::string>(c);
}

void write_table(const Table& t, const ordered_json& spec_echo, OutputFormat format,
                 std::ostream& out) {
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << t.columns[i];
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << cell_to_csv(row[i]);
            out << '\n';
        }
    } else {
        ordered_json doc;
        doc["spec"] = spec_echo;
        ordered_json rows = ordered_json::array();
        for (const auto& row : t.rows) {
            ordered_json r;
            for (std::size_t i = 0; i < row.size(); ++i)
                r[t.columns[i]] = cell_to_json(row[i]);
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
    }
}

const Cell kEmpty = std::monostate{};

std::string command_name(Command c) {
    switch (c) {
        case Command::Point: return "point";
        case Command::Sweep: return "sweep";
        case Command::Optimize: return "optimize";
        case Command::Simulate: return "simulate";
        case Command::Validate: return "validate";
    }
    return "?";
}

std::string mode_name(ModeSelect m) {
    switch (m) {
        case ModeSelect::Single: return "single";
        case ModeSelect::AF: return "af";
        case ModeSelect::DF: return "df";
        case ModeSelect::Both: return "both";
    }
    return "?";
}

std::vector<Mode> resolve_modes(ModeSelect m) {
    switch (m) {
        case ModeSelect::Single: return {Mode::Single};
        case ModeSelect::AF: return {Mode::AF};
        case ModeSelect::DF: return {Mode::DF};
        case ModeSelect::Both: return {Mode::AF, Mode::DF};
    }
    return {};
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double require_gamma(const RunSpec& spec) {
    if (!std::isfinite(spec.gamma_db))
        throw UsageError("--snr-db is required for this command");
    return db_to_linear(spec.gamma_db);
}

double require_scalar(const std::optional<Axis>& axis, const char* flag) {
    if (!axis || axis->is_range())
        throw UsageError(std::string(flag) + " must be given as a single value here");
    return axis->start;
}

ordered_json axis_echo(const Axis& a) {
    if (!a.is_range()) return a.start;
    return ordered_json{{"start", a.start}, {"stop", a.stop}, {"count", a.count}};
}

ordered_json base_echo(const RunSpec& spec) {
    ordered_json j;
    j["command"] = command_name(spec.command);
    j["mode"] = mode_name(spec.mode);
    j["gamma_db"] = std::isfinite(spec.gamma_db) ? ordered_json(spec.gamma_db)
                                                 : ordered_json(nullptr);
    j["alpha"] = spec.alpha;
    j["k"] = spec.k ? axis_echo(*spec.k) : ordered_json(nullptr);
    j["rate"] = spec.rate ? axis_echo(*spec.rate) : ordered_json(nullptr);
    return j;
}

ordered_json sim_echo(const RunSpec& spec) {
    ordered_json j = base_echo(spec);
    j["source"] = spec.source == SimSource::Fading ? "fading" : "fixed-eps";
    j["eps"] = spec.eps_values;
    j["trials"] = spec.trials;
    j["seed"] = spec.seed;
    j["max_slots"] = spec.max_slots;
    return j;
}

} // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> Axis::values() const {
    if (!is_range()) return {start};
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        v.push_back(start + (stop - start) * i / (count - 1));
    return v;
}

Axis Axis::parse(const std::string& text) {
    auto parse_num = [&](const std::string& s) {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
        return v;
    };
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) return Axis::scalar(parse_num(parts[0]));
    if (parts.size() != 3)
        throw std::invalid_argument("range must be start:stop:count, got '" + text + "'");
    Axis a;
    a.start = parse_num(parts[0]);
    a.stop = parse_num(parts[1]);
    a.count = static_cast<int>(std::stoll(parts[2]));
    if (a.count < 2)
        throw std::invalid_argument("range count must be >= 2 in '" + text + "'");
    if (!(a.start < a.stop))
        throw std::invalid_argument("range needs start < stop in '" + text + "'");
    return a;
}

int cmd_point(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    (void)err;
    double gamma = require_gamma(spec);
    double rate = require_scalar(spec.rate, "--rate");
    auto modes = resolve_modes(spec.mode);

    Table t;
    t.columns = {"mode", "gamma_db", "gamma", "alpha", "k",  "rate",
                 "eps_sd", "eps_srd", "eps_sr", "eps_rd",
                 "p1", "p2", "p3", "p4", "expected_time", "goodput"};
    for (Mode m : modes) {
        std::vector<Cell> row(t.columns.size(), kEmpty);
        row[0] = to_string(m);
        row[1] = spec.gamma_db;
        row[2] = gamma;
        row[3] = spec.alpha;
        row[5] = rate;
        if (m == Mode::Single) {
            if (spec.k) row[4] = require_scalar(spec.k, "--k");
            double e = outage_single(gamma, rate, 1.0);
            GoodputResult g = goodput_single(gamma, rate);
            row[6] = e;
            row[14] = g.expected_time;
            row[15] = g.goodput;
        } else {
            double k = require_scalar(spec.k, "--k");
            ChannelParams params{gamma, spec.alpha, k};
            params.validate();
            row[4] = k;
            if (m == Mode::AF) {
                double e1 = outage_single(gamma, rate, 1.0);
                double e2 = outage_af_relay_path(params, rate);
                StateDistribution sd = state_probs_af(e1, e2);
                GoodputResult g = goodput_af(params, rate);
                row[6] = e1;
                row[7] = e2;
                row[10] = sd.probs[0];
                row[11] = sd.probs[1];
                row[12] = sd.probs[2];
                row[14] = g.expected_time;
                row[15] = g.goodput;
            } else {
                OutageSet o = outage_df_links(params, rate);
                StateDistribution sd = state_probs_df(o.eps_sd, o.eps_path2, *o.eps_rd);
                GoodputResult g = goodput_df(params, rate);
                row[6] = o.eps_sd;
                row[8] = o.eps_path2;
                row[9] = *o.eps_rd;
                row[10] = sd.probs[0];
                row[11] = sd.probs[1];
                row[12] = sd.probs[2];
                row[13] = sd.probs[3];
                row[14] = g.expected_time;
                row[15] = g.goodput;
            }
        }
        t.rows.push_back(std::move(row));
    }
    write_table(t, base_echo(spec), spec.format, out);
    return kExitOk;
}

int cmd_sweep(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    (void)err;
    double gamma = require_gamma(spec);
    auto modes = resolve_modes(spec.mode);
    bool want_single = spec.mode == ModeSelect::Single;
    bool want_af = false, want_df = false;
    for (Mode m : modes) {
        want_af |= m == Mode::AF;
        want_df |= m == Mode::DF;
    }
    if (!spec.rate) throw UsageError("sweep needs --rate");
    if ((want_af || want_df) && !spec.k) throw UsageError("sweep needs --k for af/df");

    Axis k_axis = spec.k.value_or(Axis::scalar(0.5));
    Axis rate_axis = *spec.rate;
    int swept = (k_axis.is_range() ? 1 : 0) + (rate_axis.is_range() ? 1 : 0);
    if (swept == 0)
        throw UsageError("sweep needs at least one start:stop:count range (use point for scalars)");

    Table t;
    t.columns = {"gamma_db", "gamma", "alpha", "k", "rate",
                 "eps_sd", "eps_srd", "eps_sr", "eps_rd",
                 "eta_single", "eta_af", "eta_df"};
    for (double k : k_axis.values()) {
        for (double rate : rate_axis.values()) {
            std::vector<Cell> row(t.columns.size(), kEmpty);
            row[0] = spec.gamma_db;
            row[1] = gamma;
            row[2] = spec.alpha;
            if (spec.k) row[3] = k;
            row[4] = rate;
            row[5] = outage_single(gamma, rate, 1.0);
            if (want_single) row[9] = goodput_single(gamma, rate).goodput;
            if (want_af || want_df) {
                ChannelParams params{gamma, spec.alpha, k};
                params.validate();
                if (want_af) {
                    row[6] = outage_af_relay_path(params, rate);
                    row[10] = goodput_af(params, rate).goodput;
                }
                if (want_df) {
                    OutageSet o = outage_df_links(params, rate);
                    row[7] = o.eps_path2;
                    row[8] = *o.eps_rd;
                    row[11] = goodput_df(params, rate).goodput;
                }
            }
            t.rows.push_back(std::move(row));
        }
    }
    write_table(t, base_echo(spec), spec.format, out);
    return kExitOk;
}

int cmd_optimize(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    (void)err;
    double gamma = require_gamma(spec);
    if (spec.mode == ModeSelect::Single)
        throw UsageError("optimize supports --mode af, df, or both");
    auto modes = resolve_modes(spec.mode);
    bool want_af = spec.mode != ModeSelect::DF;
    bool want_df = spec.mode != ModeSelect::AF;

    Table t;
    if (spec.rate) {
        // fixed-rate relay placement: one row per rate with per-mode optima
        t.columns = {"gamma_db", "gamma", "alpha", "rate",
                     "k_star_af", "eta_star_af", "k_star_df", "eta_star_df"};
        for (double rate : spec.rate->values()) {
            std::vector<Cell> row(t.columns.size(), kEmpty);
            row[0] = spec.gamma_db;
            row[1] = gamma;
            row[2] = spec.alpha;
            row[3] = rate;
            if (want_af) {
                KOptimum o = optimize_k(Mode::AF, gamma, spec.alpha, rate);
                row[4] = o.k_star;
                row[5] = o.eta_star;
            }
            if (want_df) {
                KOptimum o = optimize_k(Mode::DF, gamma, spec.alpha, rate);
                row[6] = o.k_star;
                row[7] = o.eta_star;
            }
            t.rows.push_back(std::move(row));
        }
    } else {
        t.columns = {"mode", "gamma_db", "gamma", "alpha",
                     "k_star", "rate_star", "eta_star", "sweeps", "rate_on_boundary"};
        for (Mode m : modes) {
            OptResult r = optimize_joint(m, gamma, spec.alpha);
            std::vector<Cell> row(t.columns.size(), kEmpty);
            row[0] = to_string(m);
            row[1] = spec.gamma_db;
            row[2] = gamma;
            row[3] = spec.alpha;
            row[4] = r.best_k;
            row[5] = r.best_rate;
            row[6] = r.best_goodput;
            row[7] = static_cast<std::int64_t>(r.sweeps);
            row[8] = r.rate_on_boundary;
            t.rows.push_back(std::move(row));
        }
    }
    write_table(t, base_echo(spec), spec.format, out);
    return kExitOk;
}

namespace {

SimConfig sim_config_for(const RunSpec& spec, Mode mode, double e1, double e2,
                         double e3, double k, double rate) {
    SimConfig c;
    c.mode = mode;
    c.rate = rate;
    c.trials = spec.trials;
    c.seed = spec.seed;
    c.max_slots_per_codeword = spec.max_slots;
    c.threads = spec.threads;
    if (spec.source == SimSource::Fading) {
        c.source = OutageSource::SampledFading;
        c.params = ChannelParams{db_to_linear(spec.gamma_db), spec.alpha, k};
    } else {
        c.source = OutageSource::FixedEps;
        c.eps.eps_sd = e1;
        c.eps.eps_path2 = e2;
        if (mode == Mode::DF) c.eps.eps_rd = e3;
    }
    return c;
}

Mode single_sim_mode(const RunSpec& spec) {
    if (spec.mode == ModeSelect::AF) return Mode::AF;
    if (spec.mode == ModeSelect::DF) return Mode::DF;
    throw UsageError("this command needs --mode af or --mode df");
}

} // namespace

int cmd_simulate(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    (void)err;
    Mode mode = single_sim_mode(spec);
    double rate = spec.rate ? require_scalar(spec.rate, "--rate") : 1.0;

    Table t;
    t.columns = {"mode", "source", "gamma_db", "gamma", "alpha", "k", "rate",
                 "eps1", "eps2", "eps3", "trials", "seed", "max_slots",
                 "mean_slots", "std_error", "goodput", "truncated_trials",
                 "state1", "state2", "state3", "state4"};
    std::vector<Cell> row(t.columns.size(), kEmpty);
    row[0] = to_string(mode);
    row[6] = rate;
    row[10] = spec.trials;
    row[11] = spec.seed;
    row[12] = spec.max_slots;

    SimConfig config;
    if (spec.source == SimSource::Fading) {
        double gamma = require_gamma(spec);
        double k = require_scalar(spec.k, "--k");
        config = sim_config_for(spec, mode, 0, 0, 0, k, rate);
        row[1] = std::string("fading");
        row[2] = spec.gamma_db;
        row[3] = gamma;
        row[4] = spec.alpha;
        row[5] = k;
    } else {
        std::size_t need = mode == Mode::DF ? 3 : 2;
        if (spec.eps_values.size() != need)
            throw UsageError("--source fixed-eps needs --eps with " +
                             std::to_string(need) + " comma-separated values");
        double e3 = need == 3 ? spec.eps_values[2] : 0.0;
        config = sim_config_for(spec, mode, spec.eps_values[0], spec.eps_values[1],
                                e3, 0.5, rate);
        row[1] = std::string("fixed-eps");
        row[7] = spec.eps_values[0];
        row[8] = spec.eps_values[1];
        if (need == 3) row[9] = spec.eps_values[2];
    }
    SimReport rep = run_batch(config);
    row[13] = rep.mean_slots;
    row[14] = rep.std_error;
    row[15] = rep.empirical_goodput;
    row[16] = rep.truncated_trials;
    for (int i = 0; i < 4; ++i) row[17 + i] = rep.first_state_counts[i];
    t.rows.push_back(std::move(row));
    write_table(t, sim_echo(spec), spec.format, out);
    return kExitOk;
}

int cmd_validate(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    Mode mode = single_sim_mode(spec);
    if (spec.trials < 10000)
        throw UsageError("validate needs --trials >= 10000");

    struct Point {
        double e1 = 0, e2 = 0, e3 = 0;  // fixed-eps
        double k = 0, rate = 0;         // fading
        double analytic = 0;
    };
    std::vector<Point> grid;
    if (spec.source == SimSource::FixedEps) {
        if (spec.eps_values.empty())
            throw UsageError("--source fixed-eps needs --eps axis values");
        for (double e : spec.eps_values)
            if (!(e >= 0.0) || !(e < 1.0))
                throw UsageError("--eps values must lie in [0, 1)");
        for (double e1 : spec.eps_values)
            for (double e2 : spec.eps_values) {
                if (mode == Mode::AF) {
                    grid.push_back({e1, e2, 0, 0, 0, expected_time_af(e1, e2)});
                } else {
                    for (double e3 : spec.eps_values)
                        grid.push_back({e1, e2, e3, 0, 0, expected_time_df(e1, e2, e3)});
                }
            }
    } else {
        double gamma = require_gamma(spec);
        if (!spec.rate) throw UsageError("validate with --source fading needs --rate");
        if (!spec.k) throw UsageError("validate with --source fading needs --k");
        Axis k_axis = *spec.k;
        for (double k : k_axis.values())
            for (double rate : spec.rate->values()) {
                ChannelParams params{gamma, spec.alpha, k};
                params.validate();
                double analytic = mode == Mode::AF
                                      ? goodput_af(params, rate).expected_time
                                      : goodput_df(params, rate).expected_time;
                grid.push_back({0, 0, 0, k, rate, analytic});
            }
    }

    Table t;
    t.columns = {"mode", "source", "gamma_db", "gamma", "alpha", "k", "rate",
                 "eps1", "eps2", "eps3", "trials", "seed", "max_slots",
                 "analytic_slots", "mean_slots", "std_error", "z",
                 "truncated_trials"};
    double max_abs_z = 0.0;
    bool hard_fail = false;
    double rate_scalar =
        spec.source == SimSource::FixedEps && spec.rate ? require_scalar(spec.rate, "--rate") : 1.0;
    for (const Point& pt : grid) {
        double rate = spec.source == SimSource::Fading ? pt.rate : rate_scalar;
        SimConfig config = sim_config_for(spec, mode, pt.e1, pt.e2, pt.e3, pt.k, rate);
        SimReport rep = run_batch(config);
        double z;
        if (rep.std_error > 0.0) {
            z = (rep.mean_slots - pt.analytic) / rep.std_error;
        } else {
            z = rep.mean_slots == pt.analytic
                    ? 0.0
                    : std::numeric_limits<double>::infinity();
        }
        max_abs_z = std::max(max_abs_z, std::abs(z));
        if (std::abs(z) > 4.0) hard_fail = true;

        std::vector<Cell> row(t.columns.size(), kEmpty);
        row[0] = to_string(mode);
        row[1] = std::string(spec.source == SimSource::Fading ? "fading" : "fixed-eps");
        if (spec.source == SimSource::Fading) {
            row[2] = spec.gamma_db;
            row[3] = db_to_linear(spec.gamma_db);
            row[4] = spec.alpha;
            row[5] = pt.k;
            row[6] = rate;
        } else {
            row[7] = pt.e1;
            row[8] = pt.e2;
            if (mode == Mode::DF) row[9] = pt.e3;
        }
        row[10] = spec.trials;
        row[11] = spec.seed;
        row[12] = spec.max_slots;
        row[13] = pt.analytic;
        row[14] = rep.mean_slots;
        row[15] = rep.std_error;
        row[16] = z;
        row[17] = rep.truncated_trials;
        t.rows.push_back(std::move(row));
    }
    write_table(t, sim_echo(spec), spec.format, out);
    bool pass3 = max_abs_z <= 3.0;
    err << "validate: points=" << grid.size() << " max_abs_z=" << format_double(max_abs_z)
        << " => " << (pass3 ? "PASS" : "FAIL") << " (3 SE gate)\n";
    return hard_fail ? kExitValidationFail : kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"goodput of a 3-node relay network with ARQ: closed-form "
                 "evaluation, Monte Carlo simulation, and optimization"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "",
                   "config file with a [command] section (key=value; flags win)");

    RunSpec spec;
    spec.gamma_db = std::numeric_limits<double>::quiet_NaN();
    std::string mode_text = "af", format_text = "csv", source_text = "fading";
    std::string k_text, rate_text, eps_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--mode", mode_text, "single|af|df|both")
            ->check(CLI::IsMember({"single", "af", "df", "both"}));
        sub->add_option("--snr-db", spec.gamma_db, "transmit SNR in dB");
        sub->add_option("--alpha", spec.alpha, "path-loss exponent")
            ->capture_default_str();
        sub->add_option("--k", k_text, "relay location: value or start:stop:count");
        sub->add_option("--rate", rate_text, "rate (bits/channel use): value or start:stop:count");
        sub->add_option("--format", format_text, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", spec.out_path, "output path (default stdout)");
        return sub;
    };
    auto add_sim = [&](CLI::App* sub) {
        sub->add_option("--trials", spec.trials, "Monte Carlo trials")
            ->capture_default_str();
        sub->add_option("--seed", spec.seed, "random seed")->capture_default_str();
        sub->add_option("--max-slots", spec.max_slots, "per-codeword slot cap")
            ->capture_default_str();
        sub->add_option("--threads", spec.threads,
                        "worker threads (0 = auto; results do not depend on this)")
            ->capture_default_str();
        sub->add_option("--source", source_text, "fading|fixed-eps")
            ->check(CLI::IsMember({"fading", "fixed-eps"}));
        sub->add_option("--eps", eps_text,
                        "comma-separated outage probabilities for fixed-eps");
        return sub;
    };

    CLI::App* point = add_common(app.add_subcommand("point", "evaluate one operating point"));
    CLI::App* sweep = add_common(app.add_subcommand("sweep", "tabulate goodput over a grid"));
    CLI::App* optimize = add_common(
        app.add_subcommand("optimize", "find the goodput-maximizing relay location and rate"));
    CLI::App* simulate =
        add_sim(add_common(app.add_subcommand("simulate", "Monte Carlo ARQ simulation")));
    CLI::App* validate = add_sim(add_common(
        app.add_subcommand("validate", "compare simulation against the closed forms")));

    std::vector<const char*> argv;
    argv.push_back("relayarq");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (point->parsed()) spec.command = Command::Point;
        if (sweep->parsed()) spec.command = Command::Sweep;
        if (optimize->parsed()) spec.command = Command::Optimize;
        if (simulate->parsed()) spec.command = Command::Simulate;
        if (validate->parsed()) spec.command = Command::Validate;

        if (mode_text == "single") spec.mode = ModeSelect::Single;
        else if (mode_text == "af") spec.mode = ModeSelect::AF;
        else if (mode_text == "df") spec.mode = ModeSelect::DF;
        else spec.mode = ModeSelect::Both;
        spec.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Csv;
        spec.source = source_text == "fixed-eps" ? SimSource::FixedEps : SimSource::Fading;
        if (!k_text.empty()) spec.k = Axis::parse(k_text);
        if (!rate_text.empty()) spec.rate = Axis::parse(rate_text);
        if (!eps_text.empty()) {
            std::stringstream ss(eps_text);
            std::string tok;
            while (std::getline(ss, tok, ','))
                spec.eps_values.push_back(std::stod(tok));
        }

        std::ofstream file;
        std::ostream* rows_out = &out;
        if (!spec.out_path.empty()) {
            file.open(spec.out_path, std::ios::binary);
            if (!file) throw UsageError("cannot open output file '" + spec.out_path + "'");
            rows_out = &file;
        }
        switch (spec.command) {
            case Command::Point: return cmd_point(spec, *rows_out, err);
            case Command::Sweep: return cmd_sweep(spec, *rows_out, err);
            case Command::Optimize: return cmd_optimize(spec, *rows_out, err);
            case Command::Simulate: return cmd_simulate(spec, *rows_out, err);
            case Command::Validate: return cmd_validate(spec, *rows_out, err);
        }
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace relayarq::cli
