#pragma once

// The partition of the integers into square and oblong (plane case) and into
// cube and parallelepipedal (solid case), with the figure associated to each.

#include "euclid.hpp"

#include <array>
#include <utility>
#include <variant>
#include <vector>

namespace arithmos {

/// n = side * side.
struct SquareEquilateral {
    Natural side;
    friend bool operator==(const SquareEquilateral&, const SquareEquilateral&) = default;
};

/// n is not a square; canonical figure is the rectangle (1, n).
struct Oblong {
    std::pair<Natural, Natural> figure;
    friend bool operator==(const Oblong&, const Oblong&) = default;
};

using PlaneClass = std::variant<SquareEquilateral, Oblong>;

/// n = side * side * side.
struct CubeEquilateral {
    Natural side;
    friend bool operator==(const CubeEquilateral&, const CubeEquilateral&) = default;
};

/// n is not a cube; canonical figure is the solid (1, 1, n).
struct Parallelepipedal {
    std::array<Natural, 3> figure;
    friend bool operator==(const Parallelepipedal&, const Parallelepipedal&) = default;
};

using SolidClass = std::variant<CubeEquilateral, Parallelepipedal>;

inline bool is_square(const PlaneClass& c) { return std::holds_alternative<SquareEquilateral>(c); }
inline bool is_cube(const SolidClass& c) { return std::holds_alternative<CubeEquilateral>(c); }

inline PlaneClass classify_plane(const Natural& n)
{
    if (auto side = integer_root(n, Degree::square)) {
        return SquareEquilateral{*side};
    }
    return Oblong{{Natural(1), n}};
}

inline SolidClass classify_solid(const Natural& n)
{
    if (auto side = integer_root(n, Degree::cube)) {
        return CubeEquilateral{*side};
    }
    return Parallelepipedal{{Natural(1), Natural(1), n}};
}

/// Product of the sides of whatever figure the class carries.
inline Natural figure_area(const PlaneClass& c)
{
    return std::visit(
        [](const auto& v) -> Natural {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SquareEquilateral>) {
                return v.side * v.side;
            } else {
                return v.figure.first * v.figure.second;
            }
        },
        c);
}

inline Natural figure_volume(const SolidClass& c)
{
    return std::visit(
        [](const auto& v) -> Natural {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, CubeEquilateral>) {
                return v.side * v.side * v.side;
            } else {
                return v.figure[0] * v.figure[1] * v.figure[2];
            }
        },
        c);
}

/// Every rectangle (p, q) with p <= q and p * q == n, ordered by p.
///
/// A square appears here as (k, k) alongside its unequal rectangles.
inline std::vector<std::pair<Natural, Natural>> oblong_factorizations(const Natural& n)
{
    std::vector<std::pair<Natural, Natural>> out;
    const BigInt limit = floor_root(n, Degree::square).value();
    for (BigInt p = 1; p <= limit; ++p) {
        if (n.value() % p == 0) {
            out.emplace_back(Natural(p), Natural(BigInt(n.value() / p)));
        }
    }
    return out;
}

struct ClassificationRow {
    Natural n;
    PlaneClass plane;
    SolidClass solid;
    friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

/// Rows for 1..max, in order, each exactly once.
struct ClassificationTable {
    Natural max;
    std::vector<ClassificationRow> rows;
    friend bool operator==(const ClassificationTable&, const ClassificationTable&) = default;
};

inline ClassificationTable classification_table(const Natural& max)
{
    ClassificationTable table{max, {}};
    if (max.fits_u64()) {
        table.rows.reserve(max.to_u64());
    }
    for (BigInt n = 1; n <= max.value(); ++n) {
        Natural v(n);
        table.rows.push_back({v, classify_plane(v), classify_solid(v)});
    }
    return table;
}

/// Number of non-squares ("powers") among 1..max, i.e. max - floor(sqrt(max)).
inline BigInt power_count(const Natural& max) { return max.value() - floor_root(max, Degree::square).value(); }

} // namespace arithmos
