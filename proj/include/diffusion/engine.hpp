#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "diffusion/graph.hpp"

namespace diffusion {

using Stack = std::int64_t;

/// Stack size per vertex of some graph. Values may be negative (debt).
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<Stack> stacks) : stacks_(std::move(stacks)) {}
    Configuration(std::initializer_list<Stack> stacks) : stacks_(stacks) {}

    std::size_t size() const noexcept { return stacks_.size(); }
    bool empty() const noexcept { return stacks_.empty(); }
    Stack operator[](Vertex v) const { return stacks_[v]; }
    std::span<const Stack> stacks() const noexcept { return stacks_; }
    auto begin() const noexcept { return stacks_.begin(); }
    auto end() const noexcept { return stacks_.end(); }

    // Sum of all stacks; throws OverflowError if it does not fit.
    Stack total() const;
    // Adds k to every stack (C + k). Overflow-checked.
    Configuration shifted(Stack k) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<Stack> stacks_;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

enum class EdgeState { Forward, Backward, Flat };

/// Orientation induced by a configuration: each edge (u, v) with u < v is
/// Forward when u is richer, Backward when v is richer, Flat on a tie.
/// States are indexed in the order of Graph::edges().
class Orientation {
public:
    Orientation(std::vector<Edge> edges, std::vector<EdgeState> states);

    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeState> states() const noexcept { return states_; }
    EdgeState state(std::size_t edge_index) const { return states_.at(edge_index); }

    // (from, to) pairs for every non-flat edge, from richer to poorer.
    std::vector<std::pair<Vertex, Vertex>> directed_edges() const;
    std::size_t flat_count() const;

private:
    std::vector<Edge> edges_;
    std::vector<EdgeState> states_;
};

struct PeriodReport {
    std::size_t preperiod = 0;
    std::size_t period = 1;
    std::vector<Configuration> period_configs;
};

inline constexpr std::size_t kDefaultMaxSteps = 10000;

/// One synchronous Parallel Diffusion step: every vertex gains one chip per
/// strictly richer neighbour and loses one per strictly poorer neighbour.
Configuration fire(const Graph& g, const Configuration& c);

/// fire() specialised to K_n on an unlabelled configuration. Input order is
/// irrelevant; the result is sorted ascending.
std::vector<Stack> fire_complete(std::span<const Stack> multiset);

Orientation orientation_of(const Graph& g, const Configuration& c);

/// Returns C_0..C_steps.
std::vector<Configuration> run(const Graph& g, const Configuration& c0, std::size_t steps);

/// Finds the first exact repeat C_t = C_s (s < t) and reports preperiod s
/// and period t - s. Throws NoRepeatWithinBudget when no repeat occurs
/// within max_steps firings and PeriodNotOneOrTwo for any cycle longer
/// than two.
PeriodReport detect_period(const Graph& g, const Configuration& c0, std::size_t max_steps = kDefaultMaxSteps);

/// Subtracts the minimum so the smallest stack becomes 0.
Configuration normalize(const Configuration& c);
std::vector<Stack> normalize(std::span<const Stack> stacks);

/// True iff d = c + k for some integer k.
bool equivalent(const Configuration& c, const Configuration& d);

/// True iff firing twice returns c exactly.
bool is_period_config(const Graph& g, const Configuration& c);
bool is_period_config_complete(std::span<const Stack> multiset);

// Global runtime audit of the firing rule. When enabled, every fire() and
// fire_complete() call also checks chip conservation and that shifting the
// input by a constant shifts the output by the same constant. Violations
// are counted, never thrown, so test harnesses can report them at exit.
namespace audit {

struct Stats {
    std::uint64_t calls = 0;
    std::uint64_t violations = 0;
};

void enable(bool on = true);
bool enabled();
Stats stats();
void reset();

// Test-only hook: when set, the firing result is passed through this
// function before being returned. Used to prove the audit detects faults.
void set_fault_injector(std::function<void(std::vector<Stack>&)> injector);

}  // namespace audit

}  // namespace diffusion
