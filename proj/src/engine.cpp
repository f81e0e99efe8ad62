#include "diffusion/engine.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <unordered_map>

#include "diffusion/errors.hpp"

namespace diffusion {

namespace {

Stack checked_add(Stack a, Stack b) {
    Stack out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("stack arithmetic overflow adding " + std::to_string(a) + " and " + std::to_string(b));
    }
    return out;
}

void require_match(const Graph& g, const Configuration& c) {
    if (g.vertex_count() != c.size()) throw SizeMismatch(g.vertex_count(), c.size());
}

std::atomic<bool> g_audit_enabled{false};
std::atomic<std::uint64_t> g_audit_calls{0};
std::atomic<std::uint64_t> g_audit_violations{0};
std::function<void(std::vector<Stack>&)> g_fault_injector;

std::vector<Stack> fire_graph_raw(const Graph& g, std::span<const Stack> stacks) {
    std::vector<Stack> next(stacks.begin(), stacks.end());
    for (const auto& [u, v] : g.edges()) {
        if (stacks[u] > stacks[v]) {
            next[u] = checked_add(next[u], -1);
            next[v] = checked_add(next[v], 1);
        } else if (stacks[v] > stacks[u]) {
            next[v] = checked_add(next[v], -1);
            next[u] = checked_add(next[u], 1);
        }
    }
    if (g_fault_injector) g_fault_injector(next);
    return next;
}

// Input must be sorted ascending.
std::vector<Stack> fire_complete_raw(std::span<const Stack> sorted) {
    const auto n = static_cast<Stack>(sorted.size());
    std::vector<Stack> next(sorted.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const auto poorer = static_cast<Stack>(i);
        const auto richer = n - static_cast<Stack>(j);
        const Stack value = checked_add(sorted[i], richer - poorer);
        std::fill(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(j), value);
        i = j;
    }
    if (g_fault_injector) g_fault_injector(next);
    std::sort(next.begin(), next.end());
    return next;
}

bool shift_by(std::span<const Stack> in, Stack k, std::vector<Stack>& out) {
    out.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (__builtin_add_overflow(in[i], k, &out[i])) return false;
    }
    return true;
}

bool sums_match(std::span<const Stack> a, std::span<const Stack> b) {
    // Wide accumulator so the check itself cannot overflow.
    __int128 sa = 0;
    __int128 sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa == sb;
}

template <class Fire>
void audit_call(std::span<const Stack> input, std::span<const Stack> output, Fire&& fire_again) {
    if (!g_audit_enabled.load(std::memory_order_relaxed)) return;
    g_audit_calls.fetch_add(1, std::memory_order_relaxed);
    bool ok = sums_match(input, output);
    constexpr Stack kShift = 3;
    std::vector<Stack> shifted_in;
    std::vector<Stack> expected;
    if (ok && shift_by(input, kShift, shifted_in) && shift_by(output, kShift, expected)) {
        ok = fire_again(shifted_in) == expected;
    }
    if (!ok) g_audit_violations.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Stack Configuration::total() const {
    Stack sum = 0;
    for (auto s : stacks_) sum = checked_add(sum, s);
    return sum;
}

Configuration Configuration::shifted(Stack k) const {
    std::vector<Stack> out(stacks_.size());
    for (std::size_t i = 0; i < stacks_.size(); ++i) out[i] = checked_add(stacks_[i], k);
    return Configuration(std::move(out));
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto s : c) {
        h ^= std::hash<Stack>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Orientation::Orientation(std::vector<Edge> edges, std::vector<EdgeState> states)
    : edges_(std::move(edges)), states_(std::move(states)) {
    if (edges_.size() != states_.size()) throw SizeMismatch(edges_.size(), states_.size());
}

std::vector<std::pair<Vertex, Vertex>> Orientation::directed_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (states_[i] == EdgeState::Forward) out.emplace_back(edges_[i].u, edges_[i].v);
        if (states_[i] == EdgeState::Backward) out.emplace_back(edges_[i].v, edges_[i].u);
    }
    return out;
}

std::size_t Orientation::flat_count() const {
    return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), EdgeState::Flat));
}

Configuration fire(const Graph& g, const Configuration& c) {
    require_match(g, c);
    auto next = fire_graph_raw(g, c.stacks());
    audit_call(c.stacks(), next, [&](std::span<const Stack> s) { return fire_graph_raw(g, s); });
    return Configuration(std::move(next));
}

std::vector<Stack> fire_complete(std::span<const Stack> multiset) {
    if (multiset.empty()) throw InputError("fire_complete: empty multiset");
    std::vector<Stack> sorted(multiset.begin(), multiset.end());
    std::sort(sorted.begin(), sorted.end());
    auto next = fire_complete_raw(sorted);
    audit_call(sorted, next, [](std::span<const Stack> s) { return fire_complete_raw(s); });
    return next;
}

Orientation orientation_of(const Graph& g, const Configuration& c) {
    require_match(g, c);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<EdgeState> states;
    states.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (c[u] > c[v]) {
            states.push_back(EdgeState::Forward);
        } else if (c[v] > c[u]) {
            states.push_back(EdgeState::Backward);
        } else {
            states.push_back(EdgeState::Flat);
        }
    }
    return Orientation(std::move(edges), std::move(states));
}

std::vector<Configuration> run(const Graph& g, const Configuration& c0, std::size_t steps) {
    require_match(g, c0);
    std::vector<Configuration> seq;
    seq.reserve(steps + 1);
    seq.push_back(c0);
    for (std::size_t t = 0; t < steps; ++t) seq.push_back(fire(g, seq.back()));
    return seq;
}

PeriodReport detect_period(const Graph& g, const Configuration& c0, std::size_t max_steps) {
    require_match(g, c0);
    if (max_steps == 0) throw InputError("max_steps must be at least 1");
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen;
    std::vector<Configuration> seq{c0};
    seen.emplace(c0, 0);
    for (std::size_t t = 1; t <= max_steps; ++t) {
        seq.push_back(fire(g, seq.back()));
        auto [it, inserted] = seen.emplace(seq.back(), t);
        if (inserted) continue;
        const std::size_t first = it->second;
        const std::size_t period = t - first;
        if (period > 2) throw PeriodNotOneOrTwo(period, first);
        PeriodReport report;
        report.preperiod = first;
        report.period = period;
        report.period_configs.assign(seq.begin() + static_cast<std::ptrdiff_t>(first),
                                     seq.begin() + static_cast<std::ptrdiff_t>(t));
        return report;
    }
    throw NoRepeatWithinBudget(max_steps);
}

std::vector<Stack> normalize(std::span<const Stack> stacks) {
    if (stacks.empty()) return {};
    const Stack lo = *std::min_element(stacks.begin(), stacks.end());
    std::vector<Stack> out(stacks.size());
    for (std::size_t i = 0; i < stacks.size(); ++i) {
        if (__builtin_sub_overflow(stacks[i], lo, &out[i])) throw OverflowError("normalize: stack range too wide");
    }
    return out;
}

Configuration normalize(const Configuration& c) { return Configuration(normalize(c.stacks())); }

bool equivalent(const Configuration& c, const Configuration& d) {
    if (c.size() != d.size()) throw SizeMismatch(c.size(), d.size());
    return normalize(c) == normalize(d);
}

bool is_period_config(const Graph& g, const Configuration& c) { return fire(g, fire(g, c)) == c; }

bool is_period_config_complete(std::span<const Stack> multiset) {
    std::vector<Stack> sorted(multiset.begin(), multiset.end());
    std::sort(sorted.begin(), sorted.end());
    return fire_complete(fire_complete(sorted)) == sorted;
}

namespace audit {

void enable(bool on) { g_audit_enabled.store(on); }
bool enabled() { return g_audit_enabled.load(); }
Stats stats() { return {g_audit_calls.load(), g_audit_violations.load()}; }
void reset() {
    g_audit_calls.store(0);
    g_audit_violations.store(0);
}
void set_fault_injector(std::function<void(std::vector<Stack>&)> injector) { g_fault_injector = std::move(injector); }

}  // namespace audit

}  // namespace diffusion
