#include "diffusion/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "diffusion/errors.hpp"
#include "diffusion/io.hpp"
#include "diffusion/verify.hpp"

namespace diffusion::cli {

namespace {

using io::Json;

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) throw InputError(path + ": cannot open for writing");
        stream_ = &file_;
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

struct SimulateArgs {
    std::string graph, config, output, format = "json";
    std::size_t steps = 10;
};

struct PeriodArgs {
    std::string graph, config, output;
    std::size_t max_steps = kDefaultMaxSteps;
};

struct EnumerateArgs {
    std::int64_t n = 1;
    bool json = false, ascii = false, count_only = false;
    std::string output;
};

struct PolyominoInput {
    std::string input, strips;
};

struct MapArgs {
    std::string input, output;
    bool normalize = false, check = false;
};

struct CountArgs {
    std::string mode = "recurrence", format, output;
    std::size_t n = 1;
    std::optional<std::size_t> to;
    std::size_t cap = 0;
};

struct VerifyArgs {
    std::size_t n_unlabelled = 7, n_labelled = 5, trials = 1000;
    std::uint64_t seed = VerifyOptions{}.seed;
    std::string fault = "none", output;
};

int simulate(const SimulateArgs& a, std::istream& in, std::ostream& out) {
    const auto g = io::parse_graph(io::read_document(a.graph, in));
    const auto c0 = io::parse_config(io::read_document(a.config, in), g);
    const auto trajectory = run(g, c0, a.steps);
    Sink sink(a.output, out);
    if (a.format == "csv") {
        *sink << io::trajectory_to_csv(trajectory);
    } else {
        *sink << io::trajectory_to_json(trajectory).dump() << '\n';
    }
    return kExitOk;
}

int period(const PeriodArgs& a, std::istream& in, std::ostream& out) {
    const auto g = io::parse_graph(io::read_document(a.graph, in));
    const auto c0 = io::parse_config(io::read_document(a.config, in), g);
    const auto report = detect_period(g, c0, a.max_steps);
    Sink sink(a.output, out);
    *sink << io::to_json(report).dump() << '\n';
    return kExitOk;
}

int enumerate(const EnumerateArgs& a, std::ostream& out) {
    if (a.n < 1) throw InputError("--n must be at least 1");
    Sink sink(a.output, out);
    if (a.count_only) {
        std::size_t count = 0;
        for (auto it = enumerate_board_pile(a.n).begin(); it != std::default_sentinel; ++it) ++count;
        *sink << io::count_to_json(static_cast<std::size_t>(a.n), BigCount(count)).dump() << '\n';
        return kExitOk;
    }
    if (a.ascii) {
        bool first = true;
        for (auto it = enumerate_board_pile(a.n).begin(); it != std::default_sentinel; ++it) {
            if (!first) *sink << '\n';
            *sink << render_ascii(*it) << '\n';
            first = false;
        }
        return kExitOk;
    }
    Json docs = Json::array();
    for (auto it = enumerate_board_pile(a.n).begin(); it != std::default_sentinel; ++it) docs.push_back(io::to_json(*it));
    *sink << docs.dump() << '\n';
    return kExitOk;
}

Json read_polyomino_doc(const PolyominoInput& p, std::istream& in) {
    if (!p.strips.empty()) return Json{{"strips", io::parse_document(p.strips, "--strips")}};
    if (p.input.empty()) throw InputError("one of --input or --strips is required");
    return io::read_document(p.input, in);
}

int render(const PolyominoInput& p, std::istream& in, std::ostream& out) {
    out << render_ascii(io::parse_polyomino(read_polyomino_doc(p, in))) << '\n';
    return kExitOk;
}

int map(const MapArgs& a, std::istream& in, std::ostream& out) {
    const auto doc = io::read_document(a.input, in);
    if (!doc.is_object()) throw InputError(a.input + ": expected a JSON object");
    std::optional<BoardPilePolyomino> poly;
    Json result;
    if (doc.contains("strips")) {
        poly = io::parse_polyomino(doc);
        result = io::to_json(poly_to_config(*poly));
    } else if (doc.contains("stacks")) {
        auto stacks = io::parse_config(doc);
        if (stacks.empty()) throw InputError("field \"stacks\" must not be empty");
        if (a.normalize) stacks = normalize(stacks);
        poly = config_to_poly(CompleteConfig::from_multiset(stacks.stacks()));
        result = io::to_json(*poly);
    } else {
        throw InputError(a.input + ": expected a \"strips\" (polyomino) or \"stacks\" (configuration) field");
    }
    int code = kExitOk;
    if (a.check) {
        const bool ok = check_fire_reflect(*poly);
        result["fire_reflect"] = ok;
        if (!ok) code = kExitDomainError;
    }
    Sink sink(a.output, out);
    *sink << result.dump() << '\n';
    return code;
}

BigCount count_one(const CountArgs& a, std::size_t n) {
    if (a.mode == "recurrence") return recurrence_counts(n).back();
    if (a.mode == "gf") return gf_coefficients(n).back();
    if (a.mode == "enumerate") {
        std::size_t count = 0;
        for (auto it = enumerate_board_pile(static_cast<std::int64_t>(n)).begin(); it != std::default_sentinel; ++it)
            ++count;
        return count;
    }
    if (a.mode == "brute") return brute_force_unlabelled(n, a.cap ? a.cap : kUnlabelledBruteForceCap);
    if (a.mode == "labelled") return labelled_period_count(n);
    if (a.mode == "labelled-brute") return brute_force_labelled(n, a.cap ? a.cap : kLabelledBruteForceCap);
    throw InputError("--mode: unknown mode \"" + a.mode + "\"");
}

int count(const CountArgs& a, std::ostream& out) {
    if (a.n < 1) throw InputError("--n must be at least 1");
    const std::size_t last = a.to.value_or(a.n);
    if (last < a.n) throw InputError("--to must not be smaller than --n");
    const std::string format = a.format.empty() ? (a.to ? "csv" : "json") : a.format;
    std::vector<std::pair<std::size_t, BigCount>> rows;
    for (std::size_t n = a.n; n <= last; ++n) rows.emplace_back(n, count_one(a, n));
    Sink sink(a.output, out);
    if (format == "csv") {
        *sink << "n,count\n";
        for (const auto& [n, c] : rows) *sink << n << ',' << c << '\n';
    } else if (rows.size() == 1) {
        *sink << io::count_to_json(rows[0].first, rows[0].second).dump() << '\n';
    } else {
        Json docs = Json::array();
        for (const auto& [n, c] : rows) docs.push_back(io::count_to_json(n, c));
        *sink << docs.dump() << '\n';
    }
    return kExitOk;
}

int verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions options;
    options.n_max_unlabelled = a.n_unlabelled;
    options.n_max_labelled = a.n_labelled;
    options.random_trials = a.trials;
    options.seed = a.seed;
    const auto fault = parse_fault(a.fault);
    if (!fault) throw InputError("--inject-fault: unknown fault \"" + a.fault + "\"");
    options.fault = *fault;

    const auto report = run_verification(options);
    out << "n:";
    for (std::size_t i = 0; i < report.table.size(); ++i) out << ' ' << i + 1;
    out << "\na_n:";
    for (const auto& v : report.table) out << ' ' << v;
    out << '\n';
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    if (!a.output.empty()) {
        Sink sink(a.output, out);
        *sink << report.to_json().dump(2) << '\n';
    } else {
        out << report.to_json().dump() << '\n';
    }
    return report.passed() ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parallel Diffusion on graphs and board-pile polyominoes", "pardiff"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Fire a configuration repeatedly and print the trajectory");
    sim_cmd->add_option("--graph", sim.graph, "Graph JSON file ('-' for stdin)")->required();
    sim_cmd->add_option("--config", sim.config, "Configuration JSON file")->required();
    sim_cmd->add_option("--steps", sim.steps, "Number of firings")->capture_default_str();
    sim_cmd->add_option("--format", sim.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sim_cmd->add_option("--output,-o", sim.output, "Output file (default stdout)");

    PeriodArgs per;
    auto* per_cmd = app.add_subcommand("period", "Report preperiod, period and the configurations in the period");
    per_cmd->add_option("--graph", per.graph, "Graph JSON file")->required();
    per_cmd->add_option("--config", per.config, "Configuration JSON file")->required();
    per_cmd->add_option("--max-steps", per.max_steps, "Firing budget")->check(CLI::PositiveNumber)->capture_default_str();
    per_cmd->add_option("--output,-o", per.output, "Output file");

    EnumerateArgs en;
    auto* en_cmd = app.add_subcommand("enumerate", "List every board-pile polyomino with n cells");
    en_cmd->add_option("--n", en.n, "Cell count")->required();
    auto* json_flag = en_cmd->add_flag("--json", en.json, "JSON array of polyominoes (default)");
    auto* ascii_flag = en_cmd->add_flag("--ascii", en.ascii, "ASCII drawings separated by blank lines");
    auto* count_flag = en_cmd->add_flag("--count-only", en.count_only, "Only the number of polyominoes");
    json_flag->excludes(ascii_flag)->excludes(count_flag);
    ascii_flag->excludes(count_flag);
    en_cmd->add_option("--output,-o", en.output, "Output file");

    PolyominoInput rend;
    auto* rend_cmd = app.add_subcommand("render", "Draw a polyomino as ASCII art");
    rend_cmd->add_option("--input", rend.input, "Polyomino JSON file");
    rend_cmd->add_option("--strips", rend.strips, "Inline strip list, e.g. [[0,2],[3,3],[2,1]]");

    MapArgs mp;
    auto* map_cmd = app.add_subcommand("map", "Map a polyomino to its K_n period configuration or back");
    map_cmd->add_option("--input", mp.input, "Polyomino or configuration JSON file")->required();
    map_cmd->add_flag("--normalize", mp.normalize, "Shift configuration input so its minimum is 0");
    map_cmd->add_flag("--check", mp.check, "Also check that firing matches reflection");
    map_cmd->add_option("--output,-o", mp.output, "Output file");

    CountArgs cnt;
    auto* cnt_cmd = app.add_subcommand("count", "Count period configurations of K_n");
    cnt_cmd->add_option("--mode", cnt.mode, "recurrence|gf|enumerate|brute|labelled|labelled-brute")
        ->check(CLI::IsMember({"recurrence", "gf", "enumerate", "brute", "labelled", "labelled-brute"}))
        ->capture_default_str();
    cnt_cmd->add_option("--n", cnt.n, "n, or the first n of a range")->required();
    cnt_cmd->add_option("--to", cnt.to, "Last n of a range");
    cnt_cmd->add_option("--format", cnt.format, "json or csv (default json for one n, csv for ranges)")
        ->check(CLI::IsMember({"json", "csv"}));
    cnt_cmd->add_option("--cap", cnt.cap, "Override the brute-force size cap");
    cnt_cmd->add_option("--output,-o", cnt.output, "Output file");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run the invariant suite against the brute-force oracles");
    ver_cmd->add_option("--n-unlabelled", ver.n_unlabelled, "Largest n for unlabelled oracle checks")->capture_default_str();
    ver_cmd->add_option("--n-labelled", ver.n_labelled, "Largest n for the labelled oracle")->capture_default_str();
    ver_cmd->add_option("--trials", ver.trials, "Random trials of the period bound")->capture_default_str();
    ver_cmd->add_option("--seed", ver.seed, "Random seed")->capture_default_str();
    ver_cmd->add_option("--inject-fault", ver.fault)->group("");
    ver_cmd->add_option("--output,-o", ver.output, "Write the JSON summary here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*sim_cmd) return simulate(sim, in, out);
        if (*per_cmd) return period(per, in, out);
        if (*en_cmd) return enumerate(en, out);
        if (*rend_cmd) return render(rend, in, out);
        if (*map_cmd) return map(mp, in, out);
        if (*cnt_cmd) return count(cnt, out);
        if (*ver_cmd) return verify(ver, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitInputError;
}

}  // namespace diffusion::cli
