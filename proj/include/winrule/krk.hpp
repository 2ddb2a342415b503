#ifndef WINRULE_KRK_HPP
#define WINRULE_KRK_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "winrule/core.hpp"
#include "winrule/random.hpp"

namespace winrule::krk {

/// King-rook-king position, white to move. Files and ranks are 1..8.
/// Pieces may share a square; all 8^6 combinations are valid inputs.
struct Position {
    int wk_file = 1, wk_rank = 1;
    int wr_file = 1, wr_rank = 1;
    int bk_file = 1, bk_rank = 1;

    friend bool operator==(const Position&, const Position&) = default;
};

inline constexpr std::uint32_t position_count = 262144;  // 8^6
inline constexpr std::size_t feature_count = 18;
inline constexpr std::size_t rule_count = 7;

inline void check(const Position& p) {
    for (int v : {p.wk_file, p.wk_rank, p.wr_file, p.wr_rank, p.bk_file, p.bk_rank})
        if (v < 1 || v > 8) throw Error("KRK coordinate " + std::to_string(v) + " outside 1..8");
}

/// Position with the given enumeration id (base-8 digits, white king file
/// most significant).
inline Position position(std::uint32_t id) {
    if (id >= position_count) throw Error("KRK position id out of range");
    std::array<int, 6> c{};
    for (int k = 5; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = static_cast<int>(id % 8) + 1;
        id /= 8;
    }
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

inline std::uint32_t id(const Position& p) {
    check(p);
    std::uint32_t v = 0;
    for (int c : {p.wk_file, p.wk_rank, p.wr_file, p.wr_rank, p.bk_file, p.bk_rank})
        v = v * 8 + static_cast<std::uint32_t>(c - 1);
    return v;
}

inline bool adjacent(int x, int y) { return std::abs(x - y) <= 1; }

/// `x` lies strictly between `lo` and `hi`.
inline bool between(int x, int lo, int hi) {
    return std::min(lo, hi) < x && x < std::max(lo, hi);
}

/// Truth values of the seven rule bodies of the reference illegality theory.
inline std::array<bool, rule_count> rule_bodies(const Position& p) {
    const bool rook_king_file = p.wr_file == p.bk_file;
    const bool rook_king_rank = p.wr_rank == p.bk_rank;
    return {
        p.wk_file == p.wr_file && p.wk_rank == p.wr_rank,            // white king on rook
        rook_king_file && rook_king_rank,                             // rook on black king
        adjacent(p.wk_file, p.bk_file) && adjacent(p.wk_rank, p.bk_rank),  // kings touch
        rook_king_file && p.wk_file != p.wr_file,                     // check along file
        rook_king_rank && p.wk_rank != p.wr_rank,                     // check along rank
        rook_king_file && !between(p.wk_rank, p.wr_rank, p.bk_rank),  // unblocked file check
        rook_king_rank && !between(p.wk_file, p.wr_file, p.bk_file),  // unblocked rank check
    };
}

/// 1-based index of the first reference rule that fires, or 0 if legal.
inline int first_rule(const Position& p) {
    const auto bodies = rule_bodies(p);
    for (std::size_t r = 0; r < bodies.size(); ++r)
        if (bodies[r]) return static_cast<int>(r) + 1;
    return 0;
}

inline bool illegal(const Position& p) {
    check(p);
    return first_rule(p) != 0;
}

/// Coordinate pairs compared by the propositional features, in order.
/// Each pair contributes equal, adjacent (|diff| <= 1), less_than (first < second).
inline const std::array<std::pair<const char*, const char*>, 6>& feature_pairs() {
    static const std::array<std::pair<const char*, const char*>, 6> pairs{{
        {"wk_file", "wr_file"},
        {"wk_file", "bk_file"},
        {"wr_file", "bk_file"},
        {"wk_rank", "wr_rank"},
        {"wk_rank", "bk_rank"},
        {"wr_rank", "bk_rank"},
    }};
    return pairs;
}

inline constexpr std::array<const char*, 3> relation_names{"eq", "adj", "lt"};

/// 18 boolean attributes, values declared as (false|true); class is
/// (illegal|legal) with illegal positive.
inline Schema schema() {
    std::vector<Attribute> attrs;
    for (const auto& [x, y] : feature_pairs())
        for (const char* rel : relation_names)
            attrs.push_back(Attribute::symbolic(std::string(rel) + "_" + x + "_" + y,
                                                {"false", "true"}));
    return Schema(std::move(attrs));
}

inline Dataset empty_dataset() {
    return Dataset(schema(), "class", {"illegal", "legal"}, 0);
}

/// Feature index of relation `rel` (0 eq, 1 adj, 2 lt) on pair `pair`.
inline constexpr std::size_t feature(std::size_t pair, std::size_t rel) { return pair * 3 + rel; }

inline Example encode(const Position& p) {
    check(p);
    const std::array<std::pair<int, int>, 6> pairs{{
        {p.wk_file, p.wr_file},
        {p.wk_file, p.bk_file},
        {p.wr_file, p.bk_file},
        {p.wk_rank, p.wr_rank},
        {p.wk_rank, p.bk_rank},
        {p.wr_rank, p.bk_rank},
    }};
    Example e;
    e.values.reserve(feature_count);
    for (const auto& [x, y] : pairs) {
        e.values.push_back(x == y ? 1.0 : 0.0);
        e.values.push_back(adjacent(x, y) ? 1.0 : 0.0);
        e.values.push_back(x < y ? 1.0 : 0.0);
    }
    e.label = first_rule(p) != 0 ? Label::positive : Label::negative;
    return e;
}

/// Every position once, in enumeration-id order.
inline Dataset enumeration() {
    Dataset d = empty_dataset();
    d.reserve(position_count);
    for (std::uint32_t i = 0; i < position_count; ++i) d.push_back(encode(position(i)));
    return d;
}

/// `count` uniformly drawn positions. Without replacement `count` may not
/// exceed the number of distinct positions.
inline Dataset generate(std::size_t count, Seed seed, bool with_replacement = false) {
    if (count < 1) throw Error("KRK sample size must be at least 1");
    if (!with_replacement && count > position_count)
        throw Error("KRK sample size " + std::to_string(count) +
                    " exceeds the 262144 distinct positions; use sampling with replacement");
    Dataset d = empty_dataset();
    d.reserve(count);
    if (with_replacement) {
        Rng rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, position_count - 1);
        for (std::size_t k = 0; k < count; ++k) d.push_back(encode(position(pick(rng))));
        return d;
    }
    IndexList ids(position_count);
    for (std::uint32_t i = 0; i < position_count; ++i) ids[i] = i;
    for (auto i : random_partition(ids, count, seed).first)
        d.push_back(encode(position(static_cast<std::uint32_t>(i))));
    return d;
}

}  // namespace winrule::krk

#endif  // WINRULE_KRK_HPP
