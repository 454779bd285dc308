#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgaps/catalog.hpp"
#include "resgaps/rational.hpp"

namespace resgaps {

enum class Status { Realized, Gap, Unknown };

std::string_view to_string(Status s) noexcept;

/// How a witness proves that P1.P2 = k for some pair of sections.
enum class Route {
    TorsionPair,        // rank 0: O and a torsion section are disjoint
    NarrowHeight,       // narrow P, h = 2+2k, so P.O = k
    TorsionNarrow,      // narrow P, h = 2k, torsion Q: P.Q = k
    Interval,           // non-narrow P whose height pins P.O to k
    TorsionShifted,     // P+Q for narrow P and torsion Q, then as Interval
    BoundaryTorsion,    // Delta = 2, P.O in {k-1, k}; k-1 forces P.Q' = k
    Override,           // catalog-supplied component data
    ConstructionA1x4,   // four orthogonal narrow roots and four squares
    ConstructionA4,     // an A4 chain of narrow roots and the A4/2 form
};

std::string_view to_string(Route r) noexcept;

struct WitnessTrace {
    Route route = Route::NarrowHeight;
    std::vector<std::int64_t> coords;  // free basis
    bool add_torsion = false;          // the section is sum(coords) + Q
    Rational height;
    /// Integers the height allows for (section).O, ascending.
    std::vector<std::int64_t> p_dot_o;
    std::optional<std::int64_t> p_dot_q;  // torsion routes
    std::vector<Rational> contributions;  // override route only
    std::string derivation;
};

struct GapCertificate {
    Rational norm_lo;  // enumerated free-lattice norms
    Rational norm_hi;
    std::uint64_t vectors_examined = 0;
    std::string detail;
};

struct GapVerdict {
    Status status = Status::Unknown;
    std::int64_t k = 0;
    std::optional<WitnessTrace> witness;
    std::optional<GapCertificate> certificate;
    std::string reason;  // Unknown only
};

enum class NecessaryBranch { None, NarrowHeight, NonNarrowInterval };

struct NecessaryResult {
    bool holds = false;
    NecessaryBranch branch = NecessaryBranch::None;
    std::optional<std::vector<std::int64_t>> coords;  // first vector found
    GapCertificate searched;
};

/// Some section other than O could meet O with multiplicity k: either a
/// narrow P with h = 2+2k, or a P outside the narrow lattice with
/// h in [2+2k-c_max, 2+2k-c_min]. With torsion, narrow free classes and the
/// zero class count as outside, through P+Q. Throws Error(RankZero),
/// Error(BudgetExceeded).
NecessaryResult necessary_holds(const SurfaceCase& c, std::int64_t k);

/// First route that applies, already validated; nullopt when none does.
std::optional<WitnessTrace> sufficient_realize(const SurfaceCase& c, std::int64_t k);

/// Recomputes the height from the coordinates and re-derives the claimed
/// intersection number through the height and pairing formulas.
bool validate_witness(const SurfaceCase& c, std::int64_t k, const WitnessTrace& w);

GapVerdict decide(const SurfaceCase& c, std::int64_t k);

/// Narrow witness for h = 2+2k from an A1^4 or A4 configuration of narrow
/// roots; nullopt when the narrow lattice has neither.
std::optional<WitnessTrace> construct_gap_free_witness(const SurfaceCase& c, std::int64_t k);

/// Rank 1, trivial torsion: k is a gap iff mu(2+2k) is not the square of an
/// integer and no integer n with mu*n not integral has n^2 in
/// [(2+2k-c_max)/mu, (2+2k-c_min)/mu]. Throws Error(Inapplicable).
bool closed_form_r1(const SurfaceCase& c, std::int64_t k);

struct OneGapEntry {
    int id = 0;
    std::optional<bool> has_1_gap;  // nullopt when undecided
    std::string method;
};

std::vector<OneGapEntry> one_gap_class(const Catalog& catalog);

struct DensityReport {
    std::int64_t n = 0;
    std::int64_t gaps = 0;
    std::int64_t unknown = 0;
    Rational density;  // gaps / n
};

/// Scans k = 1..n.
DensityReport gap_density(const SurfaceCase& c, std::int64_t n);

}  // namespace resgaps
