#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resgaps/rational.hpp"

namespace resgaps {

/// Root lattice label A_m, D_m or E_m attached to a reducible fiber.
struct AdeLabel {
    char family = 'A';  // 'A', 'D' or 'E'
    int rank = 1;

    /// "A3", "D5", "E7". Throws ParseError.
    static AdeLabel parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

/// Canonical order: E before D before A, larger rank first.
bool canonical_less(const AdeLabel& a, const AdeLabel& b);

/// Parses "A3+A2+A1^2" or "0" (empty) into labels sorted canonically.
std::vector<AdeLabel> parse_t(std::string_view text);
std::string t_string(std::vector<AdeLabel> labels);

struct KodairaFiber {
    enum class Kind { In, InStar, II, III, IV, IIStar, IIIStar, IVStar };

    Kind kind = Kind::In;
    int n = 1;  // for In (n >= 1) and InStar (n >= 0)

    /// "I4", "I0*", "II", "III*", ... Throws ParseError.
    static KodairaFiber parse(std::string_view text);
    std::string str() const;

    bool reducible() const;
    /// Throws Error(InvalidComponent) for irreducible fibers.
    AdeLabel lattice() const;
};

struct FiberConfig {
    std::vector<KodairaFiber> fibers;

    /// Comma-separated Kodaira symbols, e.g. "I4,IV,III,I1".
    static FiberConfig parse(std::string_view text);
    std::string str() const;

    /// Lattices of the reducible members, sorted canonically.
    std::vector<AdeLabel> t_lattices() const;
};

/// Local contribution contr_v(P) of a section meeting component i.
/// Valid indices: A_m 0..m, D_m 0..3, E6 0..2, E7 0..1, E8 0.
/// Throws Error(InvalidComponent).
Rational contr_single(const AdeLabel& t, int i);

/// contr_v(P,Q) for components i and j (either order). Throws
/// Error(UndefinedPair) for distinct nonzero indices on A1 or E7 and
/// Error(InvalidComponent) for out-of-range indices.
Rational contr_pair(const AdeLabel& t, int i, int j);

struct Extremes {
    Rational max;
    Rational min_positive;
};

/// Throws Error(NoPositiveContribution) for E8.
Extremes extremes(const AdeLabel& t);

struct Bounds {
    Rational c_max;
    Rational c_min;
    Rational delta;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// E8 summands are skipped; no remaining summand gives (0,0,0).
Bounds bounds(std::span<const AdeLabel> t);
Bounds bounds(const FiberConfig& config);

/// h(P) = 2 + 2 P.O - sum of contributions.
Rational height(std::int64_t p_dot_o, std::span<const Rational> contributions);

/// <P,Q> = 1 + P.O + Q.O - P.Q - sum of pair contributions.
Rational pairing(std::int64_t p_dot_o, std::int64_t q_dot_o, std::int64_t p_dot_q,
                 std::span<const Rational> pair_contributions);

}  // namespace resgaps
