#include "diffusion/bijection.hpp"

#include <algorithm>
#include <string>

#include "diffusion/errors.hpp"

namespace diffusion {

CompleteConfig CompleteConfig::from_multiset(std::span<const Stack> stacks) {
    std::vector<Stack> sorted(stacks.begin(), stacks.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Level> levels;
    for (auto s : sorted) {
        if (levels.empty() || levels.back().value != s) {
            levels.push_back({s, 1});
        } else {
            ++levels.back().multiplicity;
        }
    }
    return CompleteConfig(std::move(levels));
}

CompleteConfig CompleteConfig::from_levels(std::vector<Level> levels) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].multiplicity < 1) {
            throw InputError("level " + std::to_string(i) + " has multiplicity " +
                             std::to_string(levels[i].multiplicity));
        }
        if (i > 0 && levels[i].value <= levels[i - 1].value) {
            throw InputError("level values must be strictly ascending");
        }
    }
    return CompleteConfig(std::move(levels));
}

std::int64_t CompleteConfig::vertex_count() const noexcept {
    std::int64_t n = 0;
    for (const auto& l : levels_) n += l.multiplicity;
    return n;
}

std::vector<Stack> CompleteConfig::to_multiset() const {
    std::vector<Stack> out;
    for (const auto& l : levels_) out.insert(out.end(), static_cast<std::size_t>(l.multiplicity), l.value);
    return out;
}

CompleteConfig poly_to_config(const BoardPilePolyomino& x) {
    std::vector<Level> levels;
    Stack value = 0;
    for (const auto& s : x.strips()) {
        value += s.offset;
        levels.push_back({value, s.length});
    }
    return CompleteConfig::from_levels(std::move(levels));
}

BoardPilePolyomino config_to_poly(const CompleteConfig& c) {
    if (c.levels().empty()) throw InputError("configuration has no vertices");
    if (!c.is_normalized()) {
        throw NotNormalized("smallest stack is " + std::to_string(c.levels().front().value) + ", expected 0");
    }
    if (!is_period_config_complete(c.to_multiset())) {
        throw NotAPeriodConfiguration("configuration does not return to itself after two firings");
    }
    std::vector<Strip> strips;
    Stack previous = 0;
    for (const auto& l : c.levels()) {
        strips.push_back({l.value - previous, l.multiplicity});
        previous = l.value;
    }
    return BoardPilePolyomino::validate(std::move(strips));
}

bool check_fire_reflect(const BoardPilePolyomino& x) {
    const auto fired = normalize(fire_complete(poly_to_config(x).to_multiset()));
    return fired == poly_to_config(reflect(x)).to_multiset();
}

}  // namespace diffusion
