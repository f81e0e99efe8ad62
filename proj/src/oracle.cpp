// Exhaustive scans over small complete graphs. These deliberately avoid the
// polyomino machinery so they can serve as independent oracles for it.

#include <algorithm>

#include "diffusion/counting.hpp"
#include "diffusion/errors.hpp"

namespace diffusion {

namespace {

void require_within_cap(std::size_t n, std::size_t cap) {
    if (n < 1) throw InputError("brute force needs n >= 1");
    if (n > cap) throw CapExceeded(n, cap);
}

}  // namespace

std::vector<std::vector<Stack>> brute_force_period_multisets(std::size_t n, std::size_t cap) {
    require_within_cap(n, cap);
    const auto max_value = static_cast<Stack>(2 * n);
    std::vector<std::vector<Stack>> found;
    // Nondecreasing sequences with first entry 0, advanced like an odometer.
    std::vector<Stack> ms(n, 0);
    while (true) {
        if (fire_complete(fire_complete(ms)) == ms) found.push_back(ms);
        std::size_t i = n;
        while (i > 1 && ms[i - 1] == max_value) --i;
        if (i == 1) break;
        const Stack next = ms[i - 1] + 1;
        std::fill(ms.begin() + static_cast<std::ptrdiff_t>(i - 1), ms.end(), next);
    }
    std::sort(found.begin(), found.end());
    return found;
}

BigCount brute_force_unlabelled(std::size_t n, std::size_t cap) {
    return BigCount(brute_force_period_multisets(n, cap).size());
}

BigCount brute_force_labelled(std::size_t n, std::size_t cap) {
    require_within_cap(n, cap);
    const auto max_value = static_cast<Stack>(2 * n);
    const Graph kn = Graph::complete(n);
    std::vector<Stack> v(n, 0);
    BigCount count = 0;
    while (true) {
        if (*std::min_element(v.begin(), v.end()) == 0) {
            const Configuration c(v);
            if (is_period_config(kn, c)) ++count;
        }
        std::size_t i = n;
        while (i > 0 && v[i - 1] == max_value) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
    }
    return count;
}

}  // namespace diffusion
