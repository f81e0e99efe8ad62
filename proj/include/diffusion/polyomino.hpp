#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace diffusion {

/// One h-strip in (d, len) form. `offset` is the distance from the least
/// x-coordinate of the strip below to the greatest x-coordinate of this one
/// (0 for the bottom strip).
struct Strip {
    std::int64_t offset = 0;
    std::int64_t length = 1;

    friend bool operator==(const Strip&, const Strip&) = default;
    friend auto operator<=>(const Strip&, const Strip&) = default;
};

/// Absolute placement of a strip: leftmost cell column and length. Row
/// index is the strip index, bottom row first.
struct PlacedStrip {
    std::int64_t x_start = 0;
    std::int64_t length = 1;

    friend bool operator==(const PlacedStrip&, const PlacedStrip&) = default;
};

/// Strips placed in the plane, translated so the smallest x_start is 0.
using StripLayout = std::vector<PlacedStrip>;

/// A fixed board-pile polyomino: at most one h-strip per row, consecutive
/// strips sharing at least one edge. Only constructible through validate(),
/// so every instance satisfies
///   len_i >= 1, d_1 = 0, 1 <= d_{i+1} <= len_i + len_{i+1} - 1.
class BoardPilePolyomino {
public:
    static BoardPilePolyomino validate(std::vector<Strip> strips);

    std::span<const Strip> strips() const noexcept { return strips_; }
    std::size_t strip_count() const noexcept { return strips_.size(); }
    std::int64_t cell_count() const noexcept;
    std::vector<std::int64_t> lengths() const;

    friend bool operator==(const BoardPilePolyomino&, const BoardPilePolyomino&) = default;
    friend auto operator<=>(const BoardPilePolyomino& a, const BoardPilePolyomino& b) {
        return a.strips_ <=> b.strips_;
    }

private:
    explicit BoardPilePolyomino(std::vector<Strip> strips) : strips_(std::move(strips)) {}

    std::vector<Strip> strips_;
};

inline BoardPilePolyomino validate(std::vector<Strip> strips) {
    return BoardPilePolyomino::validate(std::move(strips));
}

StripLayout layout(const BoardPilePolyomino& x);

/// Inverse of layout(): recovers (d, len) from absolute placements. Throws
/// PolyominoError if the placement is not a board-pile polyomino.
BoardPilePolyomino from_layout(const StripLayout& placed);

/// Mirror image about a horizontal axis (strip order reversed).
BoardPilePolyomino reflect(const BoardPilePolyomino& x);

/// One text line per strip, top strip first, '#' for cells. No trailing
/// whitespace; lines joined by '\n' with no final newline.
std::string render_ascii(const BoardPilePolyomino& x);

/// Compositions of n in lexicographic order, e.g. n = 3 gives
/// (1,1,1), (1,2), (2,1), (3).
class CompositionRange {
public:
    class iterator {
    public:
        using value_type = std::vector<std::int64_t>;
        using difference_type = std::ptrdiff_t;
        using reference = const value_type&;
        using pointer = const value_type*;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(std::int64_t n);

        reference operator*() const { return parts_; }
        pointer operator->() const { return &parts_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.done_; }

    private:
        std::vector<std::int64_t> parts_;
        bool done_ = true;
    };

    explicit CompositionRange(std::int64_t n);
    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::int64_t n_;
};

/// Every board-pile polyomino whose strip lengths are `lengths`, offsets
/// advanced odometer-style (last offset fastest). One independent
/// partition of the full enumeration.
class BoardPileRange {
public:
    class iterator {
    public:
        using value_type = BoardPilePolyomino;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(std::int64_t n, bool single_composition, std::vector<std::int64_t> lengths);

        BoardPilePolyomino operator*() const;
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.done_; }

    private:
        bool advance_offsets();
        void reset_offsets();

        CompositionRange::iterator composition_;
        bool single_composition_ = false;
        std::vector<Strip> strips_;
        bool done_ = true;
    };

    iterator begin() const;
    std::default_sentinel_t end() const { return {}; }

private:
    friend BoardPileRange enumerate_board_pile(std::int64_t n);
    friend BoardPileRange enumerate_board_pile_with_lengths(std::vector<std::int64_t> lengths);

    BoardPileRange(std::int64_t n, bool single, std::vector<std::int64_t> lengths)
        : n_(n), single_(single), lengths_(std::move(lengths)) {}

    std::int64_t n_;
    bool single_;
    std::vector<std::int64_t> lengths_;
};

/// Streams every board-pile n-omino exactly once: compositions of n in
/// lexicographic order, offsets odometer-style within each composition.
BoardPileRange enumerate_board_pile(std::int64_t n);
BoardPileRange enumerate_board_pile_with_lengths(std::vector<std::int64_t> lengths);

}  // namespace diffusion
