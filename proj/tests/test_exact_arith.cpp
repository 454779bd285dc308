#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "resgaps/error.hpp"
#include "resgaps/lattice.hpp"
#include "resgaps/matrix.hpp"
#include "resgaps/rational.hpp"

using namespace resgaps;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no resgaps::Error thrown";
    return ErrorCode::Inapplicable;
}

Matrix reconstruct(const Ldlt& f) {
    const std::size_t n = f.diagonal.size();
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = f.diagonal[i];
    return f.lower * d * f.lower.transpose();
}

}  // namespace

TEST(Rational, NormalizesSignAndCommonFactors) {
    const Rational q(Integer(6), Integer(-4));
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational(Integer(4), Integer(2)).str(), "2");
    EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("13/6"), Rational(Integer(13), Integer(6)));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
    for (const char* bad : {"", "1/", "/2", "1/0", " 1", "1.5", "a"}) {
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
    }
}

TEST(Rational, FieldOperationsAreExact) {
    const Rational a(Integer(1), Integer(3));
    const Rational b(Integer(1), Integer(6));
    EXPECT_EQ(a + b, Rational(Integer(1), Integer(2)));
    EXPECT_EQ(a - b, b);
    EXPECT_EQ(a * b, Rational(Integer(1), Integer(18)));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(Integer(-1), Integer(3)));
    EXPECT_LT(b, a);
    EXPECT_GT(Rational(0), -a);
}

TEST(Rational, FloorCeilAndSquareRoots) {
    EXPECT_EQ(Rational(Integer(-7), Integer(2)).floor(), -4);
    EXPECT_EQ(Rational(Integer(-7), Integer(2)).ceil(), -3);
    EXPECT_EQ(Rational(Integer(7), Integer(2)).floor(), 3);
    EXPECT_EQ(Rational(5).ceil(), 5);
    EXPECT_EQ(isqrt(Integer(0)), 0);
    EXPECT_EQ(isqrt(Integer(24)), 4);
    EXPECT_EQ(isqrt(Integer(25)), 5);
    EXPECT_TRUE(is_perfect_square(Integer(144)));
    EXPECT_FALSE(is_perfect_square(Integer(143)));
    EXPECT_FALSE(is_perfect_square(Integer(-4)));
}

TEST(Rational, LargeValuesStayExact) {
    Integer big(1);
    for (int i = 0; i < 100; ++i) big *= 3;
    const Rational q(big, big + 1);
    EXPECT_EQ(q * Rational(big + 1) / Rational(big), Rational(1));
    EXPECT_THROW(to_int64(big), std::overflow_error);
}

TEST(Ldlt, OneByOne) {
    const Ldlt f = ldlt(SymMatrix{{2}});
    EXPECT_EQ(f.lower, Matrix({{1}}));
    EXPECT_EQ(f.diagonal, std::vector<Rational>{2});
}

TEST(Ldlt, A2) {
    const SymMatrix a2{{2, -1}, {-1, 2}};
    const Ldlt f = ldlt(a2);
    EXPECT_EQ(f.lower, Matrix({{1, 0}, {Rational(Integer(-1), Integer(2)), 1}}));
    EXPECT_EQ(f.diagonal, (std::vector<Rational>{2, Rational(Integer(3), Integer(2))}));
    EXPECT_EQ(reconstruct(f), a2.as_matrix());
}

TEST(Ldlt, IndefiniteIsRejected) {
    EXPECT_EQ(code_of([] { ldlt(SymMatrix{{1, 2}, {2, 1}}); }), ErrorCode::NotPositiveDefinite);
    EXPECT_FALSE(is_positive_definite(SymMatrix{{1, 2}, {2, 1}}));
    EXPECT_FALSE(is_positive_definite(SymMatrix{{0}}));
}

TEST(Ldlt, RoundTripOnRandomMatrices) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const SymMatrix m = oracle::random_pd(rng, 1 + trial % 5);
        const Ldlt f = ldlt(m);
        EXPECT_EQ(reconstruct(f), m.as_matrix()) << m.str();
        for (const auto& d : f.diagonal) EXPECT_GT(d, 0);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            EXPECT_EQ(f.lower(i, i), 1);
            for (std::size_t j = i + 1; j < m.dim(); ++j) EXPECT_EQ(f.lower(i, j), 0);
        }
    }
}

TEST(Adjugate, SmallCases) {
    EXPECT_EQ(adjugate(SymMatrix{{2, -1}, {-1, 2}}), (SymMatrix{{2, 1}, {1, 2}}));
    EXPECT_EQ(adjugate(SymMatrix{{2}}), (SymMatrix{{1}}));
}

TEST(Adjugate, A3TimesAdjugateIsDetTimesIdentity) {
    const SymMatrix a3 = root_gram('A', 3);
    EXPECT_EQ(det(a3), 4);
    const auto p = oracle::product(a3, adjugate(a3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p[i][j], i == j ? 4 : 0);
}

TEST(Adjugate, SingularInputGivesZeroProduct) {
    const SymMatrix m{{1, 2}, {2, 4}};
    EXPECT_EQ(det(m), 0);
    const auto p = oracle::product(m, adjugate(m));
    for (const auto& row : p)
        for (const auto& v : row) EXPECT_EQ(v, 0);
}

TEST(Det, MatchesCofactorExpansion) {
    EXPECT_EQ(det(SymMatrix{{2}}), 2);
    EXPECT_EQ(det(root_gram('A', 2)), 3);
    EXPECT_EQ(det(root_gram('E', 8)), 1);
    EXPECT_EQ(det(root_gram('D', 5)), 4);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const SymMatrix m = oracle::random_pd(rng, 1 + trial % 4);
        EXPECT_EQ(det(m), oracle::cofactor_det(oracle::rows(m)));
        EXPECT_GT(det(m), 0);
    }
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(SymMatrix{{Rational(Integer(1), Integer(2))}}), (SymMatrix{{2}}));
    const SymMatrix b31 = SymMatrix{{2, 1}, {1, 8}}.scaled(Rational(Integer(1), Integer(15)));
    EXPECT_EQ(inverse(b31), (SymMatrix{{8, -1}, {-1, 2}}));
    EXPECT_EQ(code_of([] { inverse(SymMatrix{{0}}); }), ErrorCode::SingularMatrix);
}

TEST(Inverse, AgreesWithAdjugateOverDet) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const SymMatrix m = oracle::random_pd(rng, 1 + trial % 4);
        const SymMatrix inv = inverse(m);
        EXPECT_TRUE(oracle::is_identity(oracle::product(m, inv)));
        EXPECT_EQ(inv, adjugate(m).scaled(Rational(1) / det(m)));
    }
}

TEST(SymMatrix, ParseRenderAndSymmetry) {
    const SymMatrix m = SymMatrix::parse("[[2, -1], [-1, 1/2]]");
    EXPECT_EQ(m.str(), "[[2,-1],[-1,1/2]]");
    EXPECT_EQ(SymMatrix::parse(m.str()), m);
    EXPECT_THROW(SymMatrix::parse("[[1,2],[3,4]]"), Error);
    EXPECT_THROW(SymMatrix::parse("[[1,2]"), ParseError);
    EXPECT_TRUE((SymMatrix{{2, 1}, {1, 4}}).is_even());
    EXPECT_FALSE((SymMatrix{{3}}).is_even());
}

TEST(SymMatrix, NormAndDimensionChecks) {
    const SymMatrix a2 = root_gram('A', 2);
    const std::vector<std::int64_t> x{1, 1};
    EXPECT_EQ(norm(a2, x), 2);
    const std::vector<std::int64_t> y{1, 0, 0};
    EXPECT_EQ(code_of([&] { norm(a2, y); }), ErrorCode::DimensionMismatch);
}

TEST(Purity, RepeatedCallsAgree) {
    const SymMatrix e7 = root_gram('E', 7);
    EXPECT_EQ(inverse(e7), inverse(e7));
    EXPECT_EQ(inverse(e7).str(), inverse(e7).str());
}
