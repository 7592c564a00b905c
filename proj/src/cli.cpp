#include "flashcodes/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "flashcodes/bounds.hpp"
#include "flashcodes/handles.hpp"
#include "flashcodes/traceio.hpp"
#include "flashcodes/verifier.hpp"

namespace flashcodes::cli {

namespace {

long long parse_ll(const std::string& text) {
    long long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ContractError("range: '" + text + "' is not an integer");
    return value;
}

int to_int(long long v, const std::string& flag) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ContractError(flag + ": value out of range");
    return static_cast<int>(v);
}

// Per-scheme numeric flags; which of them apply depends on --scheme.
struct SchemeFlags {
    std::string scheme;
    long long n = 0, k = 0, q = 0, r = 0;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_k = nullptr;
    CLI::Option* opt_q = nullptr;
    CLI::Option* opt_r = nullptr;
};

void add_scheme_options(CLI::App* cmd, SchemeFlags& f) {
    cmd->add_option("--scheme", f.scheme,
                    "one of twobit|indexless|staged|staged-stacked|constrate|buffer")
        ->required();
    f.opt_n = cmd->add_option("--n", f.n, "total cells");
    f.opt_k = cmd->add_option("--k", f.k, "stored bits");
    f.opt_q = cmd->add_option("--q", f.q, "levels per cell");
    f.opt_r = cmd->add_option("--r", f.r, "buffer window length");
}

verifier::SchemeHandle make_handle(const SchemeFlags& f) {
    auto need = [&](CLI::Option* opt, const char* name) {
        if (opt->count() == 0)
            throw ContractError("scheme '" + f.scheme + "' requires " + name);
    };
    auto forbid = [&](CLI::Option* opt, const char* name) {
        if (opt->count() > 0)
            throw ContractError(std::string(name) + " does not apply to scheme '" +
                                f.scheme + "'");
    };
    if (f.scheme == "twobit") {
        need(f.opt_n, "--n");
        need(f.opt_q, "--q");
        forbid(f.opt_k, "--k");
        forbid(f.opt_r, "--r");
        return handles::make_twobit_handle(
            twobit::TwoBitConfig(to_int(f.n, "--n"), to_int(f.q, "--q")));
    }
    if (f.scheme == "indexless" || f.scheme == "staged" || f.scheme == "staged-stacked" ||
        f.scheme == "constrate") {
        need(f.opt_n, "--n");
        need(f.opt_k, "--k");
        need(f.opt_q, "--q");
        forbid(f.opt_r, "--r");
        int n = to_int(f.n, "--n"), k = to_int(f.k, "--k"), q = to_int(f.q, "--q");
        if (f.scheme == "indexless")
            return handles::make_indexless_handle(indexless::IndexlessConfig(n, k, q));
        if (f.scheme == "constrate")
            return handles::make_constrate_handle(constrate::ConstRateConfig(n, k, q));
        auto variant = f.scheme == "staged" ? staged::IndexVariant::per_stage
                                            : staged::IndexVariant::stacked_binary;
        return handles::make_staged_handle(staged::StagedConfig(n, k, q, variant));
    }
    if (f.scheme == "buffer") {
        need(f.opt_n, "--n");
        need(f.opt_q, "--q");
        need(f.opt_r, "--r");
        forbid(f.opt_k, "--k");
        return handles::make_buffer_handle(buffer::BufferConfig(
            to_int(f.n, "--n"), to_int(f.q, "--q"), to_int(f.r, "--r")));
    }
    throw ContractError("--scheme: unknown scheme '" + f.scheme +
                        "' (expected twobit|indexless|staged|staged-stacked|constrate|buffer)");
}

// Collect --n/--k/... range flags plus --grid name=spec entries into named
// axes; every required axis must be supplied exactly once.
std::vector<bounds::GridAxis> collect_axes(
    const std::vector<std::pair<std::string, CLI::Option*>>& flag_axes,
    const std::vector<std::string>& flag_specs, const std::vector<std::string>& grid) {
    std::map<std::string, std::vector<long long>> values;
    auto set_axis = [&](const std::string& name, const std::string& spec) {
        if (values.count(name))
            throw ContractError("axis '" + name + "' given more than once");
        values[name] = parse_range(spec);
    };
    for (std::size_t i = 0; i < flag_axes.size(); ++i)
        if (flag_axes[i].second->count() > 0) set_axis(flag_axes[i].first, flag_specs[i]);
    for (const std::string& entry : grid) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ContractError("--grid: expected name=values, got '" + entry + "'");
        std::string name = entry.substr(0, eq);
        bool known = std::any_of(flag_axes.begin(), flag_axes.end(),
                                 [&](const auto& a) { return a.first == name; });
        if (!known) throw ContractError("--grid: unknown axis '" + name + "'");
        set_axis(name, entry.substr(eq + 1));
    }
    std::vector<bounds::GridAxis> axes;
    for (const auto& [name, opt] : flag_axes) {
        (void)opt;
        if (!values.count(name))
            throw ContractError("missing axis: pass --" + name + " or --grid " + name +
                                "=...");
        axes.push_back({name, values[name]});
    }
    return axes;
}

std::string guarded(const std::function<std::string()>& cell) {
    try {
        return cell();
    } catch (const ContractError&) {
        return "error";
    }
}

void emit_flash_bounds(const std::vector<bounds::GridAxis>& axes, std::ostream& out) {
    bounds::SweepTable table;
    table.header = {"n", "k", "q", "lower", "indexless", "staged", "stacked"};
    for (long long n : axes[0].values)
        for (long long k : axes[1].values)
            for (long long q : axes[2].values) {
                std::vector<std::string> row{std::to_string(n), std::to_string(k),
                                             std::to_string(q)};
                row.push_back(guarded(
                    [&] { return bounds::lower_bound_deficiency(n, k, q).str(); }));
                row.push_back(guarded([&] {
                    return std::to_string(indexless::deficiency_bound(k, q));
                }));
                row.push_back(
                    guarded([&] { return std::to_string(staged::bound_per_stage(k, q)); }));
                row.push_back(
                    guarded([&] { return std::to_string(staged::bound_stacked(k, q)); }));
                table.rows.push_back(std::move(row));
            }
    out << bounds::to_csv(table);
}

void emit_buffer_bounds(const std::vector<bounds::GridAxis>& axes, std::ostream& out) {
    bounds::SweepTable table;
    table.header = {"q", "l", "r", "new", "old"};
    for (long long q : axes[0].values)
        for (long long l : axes[1].values)
            for (long long r : axes[2].values) {
                std::vector<std::string> row{std::to_string(q), std::to_string(l),
                                             std::to_string(r)};
                row.push_back(guarded([&] {
                    return std::to_string(buffer::bound_single_cell_new(
                        q, to_int(l, "--l"), to_int(r, "--r")));
                }));
                row.push_back(guarded([&] {
                    return std::to_string(buffer::bound_single_cell_old(
                        q, to_int(l, "--l"), to_int(r, "--r")));
                }));
                table.rows.push_back(std::move(row));
            }
    out << bounds::to_csv(table);
}

std::vector<int> read_inputs(const std::string& path, std::istream& in) {
    if (path == "-") return traceio::parse_inputs(in);
    std::ifstream file(path);
    if (!file) throw ContractError("--inputs: cannot open '" + path + "'");
    return traceio::parse_inputs(file);
}

std::string drain(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int simulate_action(const SchemeFlags& flags, const std::string& inputs_path,
                    const std::string& trace_path, std::istream& in, std::ostream& out) {
    verifier::SchemeHandle handle = make_handle(flags);
    std::vector<int> inputs = read_inputs(inputs_path, in);

    std::ofstream trace_file;
    std::ostream* trace = &out;
    if (trace_path != "-") {
        trace_file.open(trace_path);
        if (!trace_file) throw ContractError("--trace: cannot open '" + trace_path + "'");
        trace = &trace_file;
    }

    const bool is_buffer = handle.kind == verifier::SchemeKind::buffer;
    const char* input_key = is_buffer ? "b" : "i";
    auto emit = [&](long long w, std::optional<int> bit, const std::vector<int>& state) {
        if (is_buffer)
            *trace << buffer::trace_line(w, bit, CellVector(to_int(flags.q, "--q"), state),
                                         handle.decode(state))
                   << '\n';
        else
            *trace << traceio::flash_trace_line(w, bit, state, handle.decode(state)) << '\n';
    };

    std::vector<int> state = handle.initial();
    emit(0, std::nullopt, state);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto next = handle.write(state, inputs[i]);
        if (!next) {
            *trace << "w=" << (i + 1) << ' ' << input_key << '=' << inputs[i]
                   << " ERASE\n";
            return 1;
        }
        state = std::move(*next);
        emit(static_cast<long long>(i) + 1, inputs[i], state);
    }
    return 0;
}

}  // namespace

std::vector<long long> parse_range(const std::string& spec) {
    if (spec.empty()) throw ContractError("range: empty specification");
    std::vector<long long> values;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        long long lo = parse_ll(spec.substr(0, dots));
        std::string rest = spec.substr(dots + 2);
        long long step = 1;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = parse_ll(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        long long hi = parse_ll(rest);
        if (step < 1) throw ContractError("range: step must be positive");
        if (lo > hi) throw ContractError("range: lower end exceeds upper end");
        for (long long v = lo; v <= hi; v += step) values.push_back(v);
        return values;
    }
    std::size_t start = 0;
    while (true) {
        auto comma = spec.find(',', start);
        std::string token = spec.substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
        values.push_back(parse_ll(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"rewriting codes for flash memory: bounds, simulation, verification"};
    app.name("flashcodes");
    app.require_subcommand(1);

    // bounds
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "print bound tables as CSV");
    bounds_cmd->require_subcommand(1);
    CLI::App* bounds_flash = bounds_cmd->add_subcommand(
        "flash", "deficiency bounds over an n,k,q grid");
    std::string bf_n, bf_k, bf_q;
    std::vector<std::string> bf_grid;
    CLI::Option* bf_on = bounds_flash->add_option("--n", bf_n, "cells (range)");
    CLI::Option* bf_ok = bounds_flash->add_option("--k", bf_k, "bits (range)");
    CLI::Option* bf_oq = bounds_flash->add_option("--q", bf_q, "levels (range)");
    bounds_flash->add_option("--grid", bf_grid, "axis as name=range, repeatable");

    CLI::App* bounds_buffer = bounds_cmd->add_subcommand(
        "buffer", "single-cell buffer bounds over a q,l,r grid");
    std::string bb_q, bb_l, bb_r;
    std::vector<std::string> bb_grid;
    CLI::Option* bb_oq = bounds_buffer->add_option("--q", bb_q, "levels (range)");
    CLI::Option* bb_ol = bounds_buffer->add_option("--l", bb_l, "alphabet size (range)");
    CLI::Option* bb_or = bounds_buffer->add_option("--r", bb_r, "window length (range)");
    bounds_buffer->add_option("--grid", bb_grid, "axis as name=range, repeatable");

    // simulate
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "replay an input sequence, emitting a trace");
    SchemeFlags sim_flags;
    add_scheme_options(simulate_cmd, sim_flags);
    std::string sim_inputs;
    std::string sim_trace = "-";
    simulate_cmd->add_option("--inputs", sim_inputs, "input file, '-' for stdin")
        ->required();
    simulate_cmd->add_option("--trace", sim_trace, "trace file, '-' for stdout");

    // verify
    CLI::App* verify_cmd = app.add_subcommand("verify", "certify guaranteed writes");
    verify_cmd->require_subcommand(1);
    CLI::App* verify_ex = verify_cmd->add_subcommand(
        "exhaustive", "exact guaranteed writes by breadth-first search");
    SchemeFlags vex_flags;
    add_scheme_options(verify_ex, vex_flags);
    long long vex_budget = 10'000'000;
    verify_ex->add_option("--budget", vex_budget, "state budget before inconclusive");

    CLI::App* verify_rand = verify_cmd->add_subcommand(
        "random", "randomized adversary with per-step consistency checks");
    SchemeFlags vr_flags;
    add_scheme_options(verify_rand, vr_flags);
    std::uint64_t vr_seed = 1;
    long long vr_trials = 100;
    long long vr_horizon = 0;
    verify_rand->add_option("--seed", vr_seed, "base seed");
    verify_rand->add_option("--trials", vr_trials, "independent trials");
    CLI::Option* vr_oh =
        verify_rand->add_option("--horizon", vr_horizon, "writes per trial, default n(q-1)+1");

    // encode / decode
    CLI::App* encode_cmd =
        app.add_subcommand("encode", "one write applied to a serialized state on stdin");
    int enc_i = 0, enc_b = 0;
    CLI::Option* enc_oi = encode_cmd->add_option("--i", enc_i, "bit index to flip (flash)");
    CLI::Option* enc_ob = encode_cmd->add_option("--b", enc_b, "bit to append (buffer)");
    CLI::App* decode_cmd =
        app.add_subcommand("decode", "decode a serialized state on stdin");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds_flash->parsed()) {
            auto axes = collect_axes({{"n", bf_on}, {"k", bf_ok}, {"q", bf_oq}},
                                     {bf_n, bf_k, bf_q}, bf_grid);
            emit_flash_bounds(axes, out);
            return 0;
        }
        if (bounds_buffer->parsed()) {
            auto axes = collect_axes({{"q", bb_oq}, {"l", bb_ol}, {"r", bb_or}},
                                     {bb_q, bb_l, bb_r}, bb_grid);
            emit_buffer_bounds(axes, out);
            return 0;
        }
        if (simulate_cmd->parsed())
            return simulate_action(sim_flags, sim_inputs, sim_trace, in, out);
        if (verify_ex->parsed()) {
            verifier::SchemeHandle handle = make_handle(vex_flags);
            if (vex_budget < 1) throw ContractError("--budget: must be positive");
            verifier::VerificationReport report =
                verifier::min_writes_exhaustive(handle, vex_budget);
            out << "scheme=" << handle.name << '\n' << "mode=exhaustive\n"
                << verifier::report_text(report);
            return report.conclusive ? 0 : 3;
        }
        if (verify_rand->parsed()) {
            verifier::SchemeHandle handle = make_handle(vr_flags);
            long long horizon = vr_oh->count() > 0
                                    ? vr_horizon
                                    : vr_flags.n * (vr_flags.q - 1) + 1;
            verifier::RandomSummary summary =
                verifier::random_adversary(handle, vr_trials, horizon, vr_seed);
            out << "scheme=" << handle.name << '\n' << "mode=random\n"
                << "seed=" << vr_seed << '\n' << verifier::summary_text(summary);
            return summary.violations > 0 ? 1 : 0;
        }
        if (encode_cmd->parsed()) {
            std::string text = drain(in);
            verifier::SchemeHandle handle = handles::handle_from_state_text(text);
            std::vector<int> state = handle.parse(text);
            int input;
            if (handle.kind == verifier::SchemeKind::flash) {
                if (enc_oi->count() == 0)
                    throw ContractError("flash schemes need --i <bit index>");
                if (enc_ob->count() > 0)
                    throw ContractError("--b does not apply to flash schemes");
                input = enc_i;
            } else {
                if (enc_ob->count() == 0) throw ContractError("buffer needs --b <bit>");
                if (enc_oi->count() > 0)
                    throw ContractError("--i does not apply to buffer schemes");
                input = enc_b;
            }
            auto next = handle.write(state, input);
            if (!next) {
                out << "ERASE\n";
                return 1;
            }
            out << handle.serialize(*next);
            return 0;
        }
        if (decode_cmd->parsed()) {
            std::string text = drain(in);
            verifier::SchemeHandle handle = handles::handle_from_state_text(text);
            std::vector<int> payload = handle.decode(handle.parse(text));
            if (handle.kind == verifier::SchemeKind::flash) {
                out << "bits=" << traceio::join_csv(payload) << '\n';
            } else {
                std::reverse(payload.begin(), payload.end());  // print oldest-first
                out << "buffer=" << traceio::join_csv(payload) << '\n';
            }
            return 0;
        }
    } catch (const CorruptionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace flashcodes::cli
