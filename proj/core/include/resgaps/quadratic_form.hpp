#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "resgaps/catalog.hpp"
#include "resgaps/lattice.hpp"
#include "resgaps/matrix.hpp"

namespace resgaps {

/// Positive-definite form Q(x) = x^T A x taking integer values on Z^r:
/// integer diagonal and half-integer off-diagonal entries. Forms with an
/// integer matrix report is_integer_matrix().
class IntQuadraticForm {
public:
    /// Throws Error(NotIntegral) or Error(NotPositiveDefinite).
    explicit IntQuadraticForm(const SymMatrix& matrix);

    /// Accepts "[[a,b],[b,c]]" or whitespace-separated rows, one per line.
    static IntQuadraticForm parse(std::string_view text);

    std::size_t dim() const { return matrix_.dim(); }
    const SymMatrix& matrix() const { return matrix_; }
    bool is_integer_matrix() const { return matrix_.is_integral(); }

    Integer value(std::span<const std::int64_t> x) const;

    const Enumerator& enumerator() const { return *enumerator_; }

private:
    SymMatrix matrix_;
    std::shared_ptr<const Enumerator> enumerator_;
};

/// x1^2+x2^2+x3^2+x4^2-x1x2-x2x3-x3x4, half the A4 Cartan form.
IntQuadraticForm lemma_form_a4();

/// adjugate of the narrow Gram; Q_X(x) = det(narrow) * h(x). Throws
/// Error(RankZero).
IntQuadraticForm build_qx(const SurfaceCase& c);

/// Smallest canonical x (lexicographic) with Q(x) = n; the zero vector for n = 0.
/// Throws Error(BudgetExceeded) after `budget` search nodes.
std::optional<std::vector<std::int64_t>> represents(const IntQuadraticForm& form, const Integer& n,
                                                    std::uint64_t budget = kDefaultBudget);

struct IntervalWitness {
    std::vector<std::int64_t> coords;
    Integer value;
};

/// Smallest (value, coords) witness with value in [ceil(lo), floor(hi)],
/// hi excluded when open_right, value not divisible by exclude_multiples_of
/// when given. The zero vector is never returned.
std::optional<IntervalWitness> represents_in_interval(const IntQuadraticForm& form, const Rational& lo,
                                                      const Rational& hi, bool open_right,
                                                      std::optional<Integer> exclude_multiples_of = std::nullopt);

/// Lexicographically smallest (a1,a2,a3,a4) with a1>=a2>=a3>=a4>=0 and
/// a1^2+a2^2+a3^2+a4^2 = l.
std::array<Integer, 4> four_square(const Integer& l);

/// The 29 integers of the 290 criterion, ascending.
const std::vector<int>& critical_290();

/// Witness per critical integer, nullopt where the form fails to represent
/// it. Universality follows from all-witnessed only for integer-valued forms,
/// which this type guarantees.
std::map<int, std::optional<std::vector<std::int64_t>>> check_290_critical(const IntQuadraticForm& form);

}  // namespace resgaps
