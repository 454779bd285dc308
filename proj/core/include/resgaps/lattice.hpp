#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resgaps/matrix.hpp"
#include "resgaps/rational.hpp"

namespace resgaps {

/// Symbolic lattice expression. Build through the factories; they keep
/// direct sums flat, so structural equality matches textual equality.
struct LatticeSpec {
    enum class Kind { RootA, RootD, RootE, ScaledUnit, ExplicitGram, DirectSum, Dual };

    Kind kind = Kind::DirectSum;
    int n = 0;                           // RootA/RootD/RootE
    Rational q;                          // ScaledUnit
    SymMatrix gram;                      // ExplicitGram
    std::vector<LatticeSpec> children;   // DirectSum, Dual (one child)

    static LatticeSpec root_a(int n);
    static LatticeSpec root_d(int n);
    static LatticeSpec root_e(int n);
    static LatticeSpec scaled_unit(const Rational& q);
    static LatticeSpec explicit_gram(const SymMatrix& gram);
    /// Flattens nested sums; a single summand is returned unwrapped.
    static LatticeSpec direct_sum(std::vector<LatticeSpec> parts);
    static LatticeSpec dual(LatticeSpec child);

    /// Empty direct sum, the rank-0 lattice.
    static LatticeSpec zero() { return direct_sum({}); }

    friend bool operator==(const LatticeSpec& a, const LatticeSpec& b);
};

/// Cartan-matrix Gram for A_n (n>=1), D_n (n>=4) or E_n (n in 6..8).
/// D and E use Bourbaki node numbering. Throws Error(MalformedSpec).
SymMatrix root_gram(char family, int n);

/// Throws Error(MalformedSpec) for out-of-range roots, nonpositive scalars
/// or an explicit Gram that is not positive-definite.
SymMatrix realize(const LatticeSpec& spec);

/// Grammar (whitespace ignored):
///   expr := "0" | term ("+" term)*
///   term := atom ("*" | "^" int)*
///   atom := A<n> | D<n> | E<n> | "<" q ">" | "(" q ")" matrix | matrix | "(" expr ")"
/// Throws ParseError.
LatticeSpec parse_lattice(std::string_view text);

/// Inverse of parse_lattice on factory-built specs.
std::string to_string(const LatticeSpec& spec);

struct LatticeVector {
    std::vector<std::int64_t> coords;
    Rational norm;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Exact Fincke-Pohst enumeration over a fixed positive-definite Gram.
///
/// Only the canonical member of each +-pair is produced (first nonzero
/// coordinate positive), in ascending lexicographic order of coordinates.
/// The factorization is computed once; instances are immutable.
class Enumerator {
public:
    /// Return false to stop the walk.
    using Visitor = std::function<bool(std::span<const std::int64_t> coords, const Rational& norm)>;

    explicit Enumerator(const SymMatrix& gram, std::uint64_t budget = kDefaultBudget);

    const SymMatrix& gram() const { return gram_; }
    std::size_t dim() const { return gram_.dim(); }

    /// Visits nonzero canonical x with lo <= Q(x) <= hi. Returns false when the
    /// visitor stopped early. Throws Error(BudgetExceeded) once more than
    /// `budget` search nodes have been expanded.
    bool visit(const Rational& lo, const Rational& hi, const Visitor& visitor) const;

    /// Lexicographically smallest canonical x with Q(x) = target that passes
    /// `accept` (when given).
    std::optional<LatticeVector> find_norm(
        const Rational& target,
        const std::function<bool(std::span<const std::int64_t>)>& accept = {}) const;

private:
    SymMatrix gram_;
    std::uint64_t budget_;
    // LDL^T of the index-reversed Gram
    std::vector<std::vector<Rational>> lower_;
    std::vector<Rational> diag_;
};

/// Zero vector plus one representative per +-pair with norm <= bound, sorted
/// by norm then coordinates. Throws Error(BudgetExceeded).
std::vector<LatticeVector> short_vectors(const SymMatrix& gram, const Rational& bound,
                                         std::uint64_t budget = kDefaultBudget);

/// True iff free_gram * coords is integral, i.e. the point lies in the dual
/// of the free lattice. Throws Error(DimensionMismatch).
bool in_narrow(const SymMatrix& free_gram, std::span<const std::int64_t> coords);

/// Coordinates in the free basis of the narrow vector with narrow-basis
/// coordinates y, using x = N y for the narrow Gram N.
std::vector<std::int64_t> narrow_to_free(const SymMatrix& narrow_gram, std::span<const std::int64_t> y);

}  // namespace resgaps
