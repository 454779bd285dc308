#include "resgaps/quadratic_form.hpp"

#include <sstream>
#include <string>

#include "resgaps/error.hpp"

namespace resgaps {

IntQuadraticForm::IntQuadraticForm(const SymMatrix& matrix) : matrix_(matrix) {
    for (std::size_t i = 0; i < matrix.dim(); ++i) {
        if (!matrix(i, i).is_integer()) throw Error(ErrorCode::NotIntegral, "form is not integer-valued: " + matrix.str());
        for (std::size_t j = i + 1; j < matrix.dim(); ++j)
            if (!(matrix(i, j) * 2).is_integer()) {
                throw Error(ErrorCode::NotIntegral, "form is not integer-valued: " + matrix.str());
            }
    }
    if (!is_positive_definite(matrix)) {
        throw Error(ErrorCode::NotPositiveDefinite, "form is not positive-definite: " + matrix.str());
    }
    enumerator_ = std::make_shared<const Enumerator>(matrix_);
}

IntQuadraticForm IntQuadraticForm::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact.push_back(c);
    if (!compact.empty() && compact.front() == '[') return IntQuadraticForm(SymMatrix::parse(compact));

    std::vector<std::vector<Rational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<Rational> row;
        std::string token;
        try {
            while (fields >> token) row.push_back(Rational::parse(token));
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(0, "empty form");
    try {
        return IntQuadraticForm(SymMatrix::from_rows(rows));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DimensionMismatch) throw ParseError(0, e.what());
        throw;
    }
}

Integer IntQuadraticForm::value(std::span<const std::int64_t> x) const { return norm(matrix_, x).numerator(); }

IntQuadraticForm lemma_form_a4() { return IntQuadraticForm(root_gram('A', 4).scaled(Rational(1, 2))); }

IntQuadraticForm build_qx(const SurfaceCase& c) { return IntQuadraticForm(adjugate(c.narrow_gram())); }

std::optional<std::vector<std::int64_t>> represents(const IntQuadraticForm& form, const Integer& n, std::uint64_t budget) {
    if (n < 0) return std::nullopt;
    if (n == 0) return std::vector<std::int64_t>(form.dim());
    const auto v = budget == kDefaultBudget ? form.enumerator().find_norm(Rational(n))
                                            : Enumerator(form.matrix(), budget).find_norm(Rational(n));
    if (!v) return std::nullopt;
    return v->coords;
}

std::optional<IntervalWitness> represents_in_interval(const IntQuadraticForm& form, const Rational& lo,
                                                      const Rational& hi, bool open_right,
                                                      std::optional<Integer> exclude_multiples_of) {
    Integer first = lo.ceil();
    Integer last = hi.floor();
    if (open_right && hi.is_integer()) last -= 1;
    if (first < 1) first = 1;
    if (first > last) return std::nullopt;
    std::optional<IntervalWitness> best;
    form.enumerator().visit(Rational(first), Rational(last), [&](std::span<const std::int64_t> x, const Rational& q) {
        const Integer value = q.numerator();
        if (exclude_multiples_of && *exclude_multiples_of != 0 && value % *exclude_multiples_of == 0) return true;
        std::vector<std::int64_t> coords(x.begin(), x.end());
        if (!best || value < best->value || (value == best->value && coords < best->coords)) {
            best = IntervalWitness{std::move(coords), value};
        }
        return true;
    });
    return best;
}

std::array<Integer, 4> four_square(const Integer& l) {
    if (l < 0) throw Error(ErrorCode::DimensionMismatch, "four_square of a negative integer");
    // a1 >= a2 >= a3 >= a4 forces a1^2 >= l/4, and so on down the chain
    auto lowest = [](const Integer& rest, int slots) {
        Integer a = isqrt(rest / slots);
        while (a * a * slots < rest) ++a;
        return a;
    };
    for (Integer a1 = lowest(l, 4); a1 * a1 <= l; ++a1) {
        const Integer r1 = l - a1 * a1;
        for (Integer a2 = lowest(r1, 3); a2 <= a1 && a2 * a2 <= r1; ++a2) {
            const Integer r2 = r1 - a2 * a2;
            for (Integer a3 = lowest(r2, 2); a3 <= a2 && a3 * a3 <= r2; ++a3) {
                const Integer r3 = r2 - a3 * a3;
                if (is_perfect_square(r3)) {
                    const Integer a4 = isqrt(r3);
                    if (a4 <= a3) return {a1, a2, a3, a4};
                }
            }
        }
    }
    throw Error(ErrorCode::NotFound, "no four-square decomposition of " + l.get_str());
}

const std::vector<int>& critical_290() {
    static const std::vector<int> v{1,  2,  3,  5,  6,  7,  10, 13, 14,  15,  17,  19,  21,  22, 23,
                                    26, 29, 30, 31, 34, 35, 37, 42, 58, 93, 110, 145, 203, 290};
    return v;
}

std::map<int, std::optional<std::vector<std::int64_t>>> check_290_critical(const IntQuadraticForm& form) {
    std::map<int, std::optional<std::vector<std::int64_t>>> out;
    for (int n : critical_290()) out[n] = represents(form, Integer(n));
    return out;
}

}  // namespace resgaps
