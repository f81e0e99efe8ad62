#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diffusion/engine.hpp"
#include "diffusion/polyomino.hpp"

namespace diffusion {

struct Level {
    Stack value = 0;
    std::int64_t multiplicity = 1;

    friend bool operator==(const Level&, const Level&) = default;
    friend auto operator<=>(const Level&, const Level&) = default;
};

/// Configuration of an unlabelled K_n as a multiset: strictly ascending
/// stack values with their multiplicities ({0^2, 3^2, 5^4, 8^2}).
class CompleteConfig {
public:
    // Groups an arbitrary-order multiset into levels.
    static CompleteConfig from_multiset(std::span<const Stack> stacks);
    // Levels must be strictly ascending with positive multiplicities.
    static CompleteConfig from_levels(std::vector<Level> levels);

    std::span<const Level> levels() const noexcept { return levels_; }
    std::int64_t vertex_count() const noexcept;
    bool is_normalized() const noexcept { return !levels_.empty() && levels_.front().value == 0; }
    // Sorted ascending, one entry per vertex.
    std::vector<Stack> to_multiset() const;

    friend bool operator==(const CompleteConfig&, const CompleteConfig&) = default;
    friend auto operator<=>(const CompleteConfig& a, const CompleteConfig& b) { return a.levels_ <=> b.levels_; }

private:
    explicit CompleteConfig(std::vector<Level> levels) : levels_(std::move(levels)) {}

    std::vector<Level> levels_;
};

/// Level k gets value d_1 + ... + d_k and multiplicity len_k.
CompleteConfig poly_to_config(const BoardPilePolyomino& x);

/// Inverse of poly_to_config. Throws NotNormalized when the smallest value
/// is not 0 and NotAPeriodConfiguration when firing twice does not return
/// the configuration.
BoardPilePolyomino config_to_poly(const CompleteConfig& c);

/// Checks that one firing of f(x) equals f(reflect(x)) up to a shift.
bool check_fire_reflect(const BoardPilePolyomino& x);

}  // namespace diffusion
