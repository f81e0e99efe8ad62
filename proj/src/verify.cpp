#include "diffusion/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "diffusion/errors.hpp"

namespace diffusion {

namespace {

const std::vector<std::int64_t> kBoardPileCounts{1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727, 66441};

struct Faults {
    InjectedFault fault;

    CompleteConfig map(const BoardPilePolyomino& x) const {
        auto c = poly_to_config(x);
        if (fault != InjectedFault::Bijection || c.levels().size() < 2) return c;
        auto levels = std::vector<Level>(c.levels().begin(), c.levels().end());
        levels.back().value += 1;
        return CompleteConfig::from_levels(std::move(levels));
    }

    std::vector<BigCount> recurrence(std::size_t n) const {
        auto a = recurrence_counts(n);
        if (fault == InjectedFault::Recurrence && a.size() >= 5) a[4] += 1;
        return a;
    }
};

template <class T>
std::string join(const std::vector<T>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    return out.str();
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.2, 0.9)(rng));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

CheckResult check_board_pile_counts(const Faults& faults) {
    const auto rec = faults.recurrence(11);
    const auto gf = gf_coefficients(11);
    std::vector<std::int64_t> enumerated;
    for (std::int64_t n = 1; n <= 11; ++n) {
        std::int64_t count = 0;
        for (auto it = enumerate_board_pile(n).begin(); it != std::default_sentinel; ++it) ++count;
        enumerated.push_back(count);
    }
    bool ok = true;
    for (std::size_t i = 0; i < kBoardPileCounts.size(); ++i) {
        ok = ok && rec[i] == kBoardPileCounts[i] && gf[i] == kBoardPileCounts[i] && enumerated[i] == kBoardPileCounts[i];
    }
    return {"board_pile_counts", ok, "recurrence: " + join(rec) + "; enumeration: " + join(enumerated)};
}

CheckResult check_routes_to_thirty(const Faults& faults) {
    const auto rec = faults.recurrence(30);
    const auto gf = gf_coefficients(30);
    for (std::size_t n = 1; n <= 30; ++n) {
        if (rec[n - 1] != gf[n - 1] || gf[n - 1] != board_pile_count(n)) {
            return {"counting_routes_n30", false, "first disagreement at n = " + std::to_string(n)};
        }
    }
    return {"counting_routes_n30", true, "recurrence = generating function = composition sum for n <= 30"};
}

CheckResult check_bijection(const Faults& faults, std::size_t n_max) {
    std::size_t compared = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::set<std::vector<Stack>> image;
        for (auto it = enumerate_board_pile(static_cast<std::int64_t>(n)).begin(); it != std::default_sentinel; ++it) {
            image.insert(faults.map(*it).to_multiset());
        }
        const auto oracle = brute_force_period_multisets(n);
        if (!std::equal(image.begin(), image.end(), oracle.begin(), oracle.end())) {
            return {"bijection_image", false,
                    "n = " + std::to_string(n) + ": image has " + std::to_string(image.size()) +
                        " configurations, oracle found " + std::to_string(oracle.size())};
        }
        compared += oracle.size();
    }
    return {"bijection_image", true, std::to_string(compared) + " period configurations matched"};
}

CheckResult check_round_trips(const Faults& faults, std::size_t n_max) {
    std::size_t cases = 0;
    try {
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (auto it = enumerate_board_pile(static_cast<std::int64_t>(n)).begin(); it != std::default_sentinel; ++it) {
                const auto x = *it;
                if (config_to_poly(faults.map(x)) != x) {
                    return {"round_trips", false, "config_to_poly(f(x)) != x at n = " + std::to_string(n)};
                }
                ++cases;
            }
            for (const auto& ms : brute_force_period_multisets(n)) {
                const auto c = CompleteConfig::from_multiset(ms);
                if (faults.map(config_to_poly(c)) != c) {
                    return {"round_trips", false, "f(config_to_poly(c)) != c at n = " + std::to_string(n)};
                }
                ++cases;
            }
        }
    } catch (const Error& e) {
        return {"round_trips", false, e.what()};
    }
    return {"round_trips", true, std::to_string(cases) + " cases"};
}

CheckResult check_fire_reflect_all(std::size_t n_max) {
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (auto it = enumerate_board_pile(static_cast<std::int64_t>(n)).begin(); it != std::default_sentinel; ++it) {
            if (!check_fire_reflect(*it)) {
                return {"fire_reflect", false, "fails for " + io::to_json(*it).dump()};
            }
            ++cases;
        }
    }
    return {"fire_reflect", true, std::to_string(cases) + " polyominoes"};
}

CheckResult check_labelled(std::size_t n_max) {
    std::vector<BigCount> formula;
    for (std::size_t n = 1; n <= n_max; ++n) {
        formula.push_back(labelled_period_count(n));
        if (formula.back() != brute_force_labelled(n)) {
            return {"labelled_counts", false, "formula and oracle disagree at n = " + std::to_string(n)};
        }
    }
    return {"labelled_counts", true, "counts: " + join(formula)};
}

CheckResult check_asymptotics() {
    const auto roots = dominant_root();
    const auto c = closed_form_coefficients(roots);
    const auto a = recurrence_counts(30);
    bool ok = std::abs(roots.alpha1 - 3.2056L) <= 1e-4L && std::abs(c[0].real() - 0.1809L) <= 5e-4L;
    long double worst = 0;
    for (std::size_t n = 8; n <= 30; ++n) {
        const long double exact = a[n - 1].convert_to<long double>();
        worst = std::max(worst, std::abs(asymptotic_estimate(n) - exact) / exact);
    }
    ok = ok && worst < 0.01L;
    std::ostringstream detail;
    detail.precision(10);
    detail << "alpha1 = " << static_cast<double>(roots.alpha1) << ", c1 = " << static_cast<double>(c[0].real())
           << ", worst relative error (8 <= n <= 30) = " << static_cast<double>(worst);
    return {"asymptotics", ok, detail.str()};
}

CheckResult check_period_bound(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_int_distribution<Stack> stack(-10, 10);
    std::size_t period_two = 0;
    try {
        for (std::size_t t = 0; t < trials; ++t) {
            const auto g = random_graph(size(rng), rng);
            std::vector<Stack> s(g.vertex_count());
            for (auto& v : s) v = stack(rng);
            const auto report = detect_period(g, Configuration(s));
            const auto p = report.period;
            for (std::size_t i = 0; i < p; ++i) {
                if (fire(g, report.period_configs[i]) != report.period_configs[(i + 1) % p]) {
                    return {"period_bound", false, "period configurations do not cycle"};
                }
            }
            if (p == 2) ++period_two;
        }
    } catch (const Error& e) {
        return {"period_bound", false, e.what()};
    }
    return {"period_bound", true,
            std::to_string(trials) + " random trials, " + std::to_string(period_two) + " with period 2"};
}

}  // namespace

std::optional<InjectedFault> parse_fault(std::string_view name) {
    if (name == "none") return InjectedFault::None;
    if (name == "bijection") return InjectedFault::Bijection;
    if (name == "recurrence") return InjectedFault::Recurrence;
    return std::nullopt;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

io::Json VerificationReport::to_json() const {
    io::Json checks_json = io::Json::array();
    for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    io::Json table_json = io::Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) table_json.push_back(io::count_to_json(i + 1, table[i]));
    return {{"passed", passed()}, {"checks", checks_json}, {"table", table_json}};
}

VerificationReport run_verification(const VerifyOptions& options) {
    if (options.n_max_unlabelled < 1 || options.n_max_unlabelled > kUnlabelledBruteForceCap) {
        throw InputError("n_max_unlabelled must be in 1.." + std::to_string(kUnlabelledBruteForceCap));
    }
    if (options.n_max_labelled < 1 || options.n_max_labelled > kLabelledBruteForceCap) {
        throw InputError("n_max_labelled must be in 1.." + std::to_string(kLabelledBruteForceCap));
    }
    const Faults faults{options.fault};
    const bool was_enabled = audit::enabled();
    audit::enable(true);
    const auto before = audit::stats();

    VerificationReport report;
    report.table = faults.recurrence(11);
    report.checks.push_back(check_board_pile_counts(faults));
    report.checks.push_back(check_routes_to_thirty(faults));
    report.checks.push_back(check_bijection(faults, options.n_max_unlabelled));
    report.checks.push_back(check_round_trips(faults, options.n_max_unlabelled));
    report.checks.push_back(check_fire_reflect_all(options.n_max_unlabelled));
    report.checks.push_back(check_labelled(options.n_max_labelled));
    report.checks.push_back(check_asymptotics());
    report.checks.push_back(check_period_bound(options.random_trials, options.seed));

    const auto after = audit::stats();
    audit::enable(was_enabled);
    const auto calls = after.calls - before.calls;
    const auto violations = after.violations - before.violations;
    report.checks.push_back({"fire_audit", violations == 0,
                             std::to_string(calls) + " fire calls, " + std::to_string(violations) + " violations"});
    return report;
}

}  // namespace diffusion
