#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/// Published values the verification suite compares against, kept verbatim
/// (including the cells that do not reproduce).
namespace resgaps::reference {

struct ExtremeRow {
    std::string t;
    std::string max;
    std::string min_positive;
};

/// Extreme contributions per root lattice, from the printed formulas, for
/// A1..A8, D4..D8, E6, E7.
const std::vector<ExtremeRow>& extreme_rows();

struct BoundsRow {
    int id;
    std::string t;
    std::string ek;
    std::string torsion;
    std::string c_max;
    std::string c_min;
    std::optional<std::string> delta;
};

/// Cases with Delta = 2.
const std::vector<BoundsRow>& delta_two_rows();
/// Cases with Delta > 2.
const std::vector<BoundsRow>& delta_above_two_rows();

struct CriticalRow {
    int n;
    std::array<std::int64_t, 4> printed;
    /// Shipped witness; equals `printed` except where the printed one
    /// does not evaluate to n.
    std::array<std::int64_t, 4> shipped;
};

/// Representations of the 29 critical integers by x1^2+..+x4^2-x1x2-x2x3-x3x4.
const std::vector<CriticalRow>& critical_rows();

struct RankOneRow {
    int id;
    std::string t;
    int mu_denominator;                // mu = 1/mu_denominator
    std::array<std::int64_t, 2> first_gaps;
};

/// Torsion-free rank-1 cases with their printed first gap numbers.
const std::vector<RankOneRow>& rank_one_rows();

struct SquareRow {
    int id;
    std::string t;
    std::string ek;
    std::string mu;
    std::int64_t lo;
    std::int64_t hi;
    bool half_open;
    std::vector<std::int64_t> squares;  // the listed n^2 in I
};

/// Perfect squares in I = [(4-c_max)/mu, (4-c_min)/mu].
const std::vector<SquareRow>& square_rows();

/// Rank >= 5 cases, all gap-free.
const std::vector<int>& gap_free_ids();

/// The only case of rank >= 1 with a 1-gap.
inline constexpr int kOneGapId = 43;

}  // namespace resgaps::reference
