#include "diffusion/polyomino.hpp"

#include <algorithm>
#include <numeric>

#include "diffusion/errors.hpp"

namespace diffusion {

namespace {

std::int64_t max_offset(std::int64_t below, std::int64_t above) { return below + above - 1; }

}  // namespace

BoardPilePolyomino BoardPilePolyomino::validate(std::vector<Strip> strips) {
    using Kind = PolyominoError::Kind;
    if (strips.empty()) throw PolyominoError(Kind::EmptyStripList, 0, 0, 0, "polyomino has no strips");
    for (std::size_t i = 0; i < strips.size(); ++i) {
        if (strips[i].length < 1) {
            throw PolyominoError(Kind::NonPositiveLength, i, 0, 0,
                                 "strip " + std::to_string(i + 1) + " has length " +
                                     std::to_string(strips[i].length) + "; lengths must be positive");
        }
    }
    if (strips[0].offset != 0) {
        throw PolyominoError(Kind::FirstOffsetNonzero, 0, 0, 0,
                             "first strip offset must be 0, got " + std::to_string(strips[0].offset));
    }
    for (std::size_t i = 1; i < strips.size(); ++i) {
        const std::int64_t hi = max_offset(strips[i - 1].length, strips[i].length);
        if (strips[i].offset < 1 || strips[i].offset > hi) {
            throw PolyominoError(Kind::OffsetOutOfRange, i, 1, hi,
                                 "strip " + std::to_string(i + 1) + " offset " + std::to_string(strips[i].offset) +
                                     " outside 1.." + std::to_string(hi));
        }
    }
    return BoardPilePolyomino(std::move(strips));
}

std::int64_t BoardPilePolyomino::cell_count() const noexcept {
    return std::accumulate(strips_.begin(), strips_.end(), std::int64_t{0},
                           [](std::int64_t acc, const Strip& s) { return acc + s.length; });
}

std::vector<std::int64_t> BoardPilePolyomino::lengths() const {
    std::vector<std::int64_t> out;
    out.reserve(strips_.size());
    for (const auto& s : strips_) out.push_back(s.length);
    return out;
}

StripLayout layout(const BoardPilePolyomino& x) {
    const auto strips = x.strips();
    StripLayout placed;
    placed.reserve(strips.size());
    placed.push_back({0, strips[0].length});
    // d_i = x_i + len_i - x_{i-1}
    for (std::size_t i = 1; i < strips.size(); ++i) {
        placed.push_back({placed.back().x_start + strips[i].offset - strips[i].length, strips[i].length});
    }
    const auto lo = std::min_element(placed.begin(), placed.end(), [](const auto& a, const auto& b) {
                        return a.x_start < b.x_start;
                    })->x_start;
    for (auto& p : placed) p.x_start -= lo;
    return placed;
}

BoardPilePolyomino from_layout(const StripLayout& placed) {
    std::vector<Strip> strips;
    strips.reserve(placed.size());
    for (std::size_t i = 0; i < placed.size(); ++i) {
        const std::int64_t d = i == 0 ? 0 : placed[i].x_start + placed[i].length - placed[i - 1].x_start;
        strips.push_back({d, placed[i].length});
    }
    return BoardPilePolyomino::validate(std::move(strips));
}

BoardPilePolyomino reflect(const BoardPilePolyomino& x) {
    auto placed = layout(x);
    std::reverse(placed.begin(), placed.end());
    return from_layout(placed);
}

std::string render_ascii(const BoardPilePolyomino& x) {
    const auto placed = layout(x);
    std::string out;
    for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
        if (!out.empty()) out += '\n';
        out.append(static_cast<std::size_t>(it->x_start), ' ');
        out.append(static_cast<std::size_t>(it->length), '#');
    }
    return out;
}

CompositionRange::CompositionRange(std::int64_t n) : n_(n) {
    if (n < 1) throw InputError("compositions need n >= 1, got " + std::to_string(n));
}

CompositionRange::iterator::iterator(std::int64_t n) : parts_(static_cast<std::size_t>(n), 1), done_(false) {}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
    // Lexicographic successor: drop the last part L, bump the new last part,
    // then append L - 1 ones.
    if (parts_.size() <= 1) {
        done_ = true;
        return *this;
    }
    const std::int64_t last = parts_.back();
    parts_.pop_back();
    ++parts_.back();
    parts_.insert(parts_.end(), static_cast<std::size_t>(last - 1), 1);
    return *this;
}

BoardPileRange enumerate_board_pile(std::int64_t n) {
    if (n < 1) throw InputError("enumerate_board_pile needs n >= 1, got " + std::to_string(n));
    return BoardPileRange(n, false, {});
}

BoardPileRange enumerate_board_pile_with_lengths(std::vector<std::int64_t> lengths) {
    if (lengths.empty() || std::any_of(lengths.begin(), lengths.end(), [](auto l) { return l < 1; })) {
        throw InputError("strip lengths must be a nonempty list of positive integers");
    }
    const auto n = std::accumulate(lengths.begin(), lengths.end(), std::int64_t{0});
    return BoardPileRange(n, true, std::move(lengths));
}

BoardPileRange::iterator BoardPileRange::begin() const { return iterator(n_, single_, lengths_); }

BoardPileRange::iterator::iterator(std::int64_t n, bool single_composition, std::vector<std::int64_t> lengths)
    : single_composition_(single_composition), done_(false) {
    if (!single_composition_) {
        composition_ = CompositionRange::iterator(n);
        lengths = *composition_;
    }
    strips_.reserve(lengths.size());
    for (auto len : lengths) strips_.push_back({1, len});
    reset_offsets();
}

void BoardPileRange::iterator::reset_offsets() {
    for (std::size_t i = 0; i < strips_.size(); ++i) strips_[i].offset = i == 0 ? 0 : 1;
}

bool BoardPileRange::iterator::advance_offsets() {
    for (std::size_t i = strips_.size(); i-- > 1;) {
        if (strips_[i].offset < max_offset(strips_[i - 1].length, strips_[i].length)) {
            ++strips_[i].offset;
            return true;
        }
        strips_[i].offset = 1;
    }
    return false;
}

BoardPilePolyomino BoardPileRange::iterator::operator*() const { return BoardPilePolyomino::validate(strips_); }

BoardPileRange::iterator& BoardPileRange::iterator::operator++() {
    if (advance_offsets()) return *this;
    if (single_composition_) {
        done_ = true;
        return *this;
    }
    ++composition_;
    if (composition_ == std::default_sentinel) {
        done_ = true;
        return *this;
    }
    strips_.clear();
    for (auto len : *composition_) strips_.push_back({1, len});
    reset_offsets();
    return *this;
}

}  // namespace diffusion
