#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "resgaps/catalog.hpp"
#include "resgaps/error.hpp"
#include "resgaps/gap_engine.hpp"
#include "resgaps/reference_tables.hpp"

using namespace resgaps;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

const Catalog& embedded() {
    static const Catalog c = Catalog::embedded();
    return c;
}

const SurfaceCase& no(int id) { return embedded().lookup(id); }

const Catalog& rank_zero() {
    static const Catalog c = Catalog::load_file(std::string(RESGAPS_TEST_DATA_DIR) + "/rank_zero.txt");
    return c;
}

bool square(long n) {
    if (n < 0) return false;
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

}  // namespace

TEST(Necessary, No43) {
    const NecessaryResult k1 = necessary_holds(no(43), 1);
    EXPECT_FALSE(k1.holds);
    EXPECT_EQ(k1.branch, NecessaryBranch::None);
    EXPECT_EQ(k1.searched.norm_hi, 4);

    const NecessaryResult k0 = necessary_holds(no(43), 0);
    // P = (1) has h = 1/2 = 2 - c_max, so the interval branch already fires
    EXPECT_TRUE(k0.holds);
    EXPECT_EQ(k0.branch, NecessaryBranch::NonNarrowInterval);
    EXPECT_EQ(*k0.coords, std::vector<std::int64_t>{1});
}

TEST(Necessary, No27ThroughTheInterval) {
    const NecessaryResult r = necessary_holds(no(27), 1);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.branch, NecessaryBranch::NonNarrowInterval);
    ASSERT_TRUE(r.coords);
    EXPECT_EQ(oracle::quad(no(27).free_gram(), *r.coords), q(8, 3));
}

TEST(Necessary, RankZeroIsRejected) {
    try {
        necessary_holds(rank_zero().cases().begin()->second, 1);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RankZero);
    }
}

TEST(Sufficient, No53UsesTheHalfOpenInterval) {
    const auto w = sufficient_realize(no(53), 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->coords, std::vector<std::int64_t>{3});
    EXPECT_EQ(w->height, q(9, 6));
    EXPECT_TRUE(validate_witness(no(53), 1, *w));
}

TEST(Sufficient, No7NarrowA1x4) {
    const auto w = sufficient_realize(no(7), 3);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->height, 8);
    EXPECT_EQ(w->p_dot_o, std::vector<std::int64_t>{3});
    EXPECT_TRUE(in_narrow(no(7).free_gram(), w->coords));
    EXPECT_EQ(oracle::quad(no(7).free_gram(), w->coords), 8);
    EXPECT_EQ(height(3, {}), w->height);
}

TEST(Sufficient, No43HasNoneAtOne) { EXPECT_FALSE(sufficient_realize(no(43), 1)); }

TEST(Sufficient, WitnessesRevalidate) {
    for (const auto& [id, c] : embedded().cases()) {
        if (c.rank() == 0) continue;
        for (std::int64_t k = 0; k <= 12; ++k) {
            const auto w = sufficient_realize(c, k);
            if (!w) continue;
            EXPECT_TRUE(validate_witness(c, k, *w)) << id << " k=" << k;
            EXPECT_EQ(oracle::quad(c.free_gram(), w->coords), w->height) << id;
            // sufficiency implies the necessary disjunction
            EXPECT_TRUE(necessary_holds(c, k).holds) << id << " k=" << k;
        }
    }
}

TEST(ValidateWitness, RejectsTamperedTraces) {
    auto w = *sufficient_realize(no(43), 3);
    EXPECT_TRUE(validate_witness(no(43), 3, w));
    EXPECT_FALSE(validate_witness(no(43), 2, w));
    auto bad = w;
    bad.coords = {3};
    EXPECT_FALSE(validate_witness(no(43), 3, bad));
    bad = w;
    bad.route = Route::Interval;
    EXPECT_FALSE(validate_witness(no(43), 3, bad));
}

TEST(Decide, TableNineExamples) {
    for (std::int64_t k : {1, 4}) EXPECT_EQ(decide(no(43), k).status, Status::Gap) << k;
    for (std::int64_t k : {8, 11}) EXPECT_EQ(decide(no(45), k).status, Status::Gap) << k;
    EXPECT_EQ(decide(no(55), 16).status, Status::Gap);
    EXPECT_EQ(decide(no(43), 3).status, Status::Realized);
}

TEST(Decide, GapCarriesACertificate) {
    const GapVerdict v = decide(no(43), 1);
    ASSERT_TRUE(v.certificate);
    EXPECT_EQ(v.certificate->norm_lo, q(5, 2));
    EXPECT_EQ(v.certificate->norm_hi, 4);
    EXPECT_FALSE(v.witness);
}

TEST(Decide, RankZero) {
    for (const auto& [id, c] : rank_zero().cases()) {
        EXPECT_EQ(decide(c, 5).status, Status::Gap) << id;
        EXPECT_EQ(decide(c, 1).status, Status::Gap) << id;
        // k = 0 needs a second section, i.e. nontrivial torsion
        const GapVerdict v0 = decide(c, 0);
        EXPECT_EQ(v0.status, c.torsion.trivial() ? Status::Gap : Status::Realized) << id;
        if (v0.witness) EXPECT_TRUE(validate_witness(c, 0, *v0.witness));
    }
}

TEST(Decide, DeltaBelowTwoIsAlwaysDecided) {
    for (const auto& [id, c] : embedded().cases()) {
        if (c.rank() == 0 || c.bounds().delta >= 2) continue;
        for (std::int64_t k = 0; k <= 40; ++k) EXPECT_NE(decide(c, k).status, Status::Unknown) << id << " k=" << k;
    }
}

TEST(Decide, UnknownExplainsItself) {
    for (const auto& [id, c] : embedded().cases()) {
        for (std::int64_t k = 0; k <= 20; ++k) {
            const GapVerdict v = decide(c, k);
            EXPECT_EQ(v.k, k);
            if (v.status == Status::Unknown) EXPECT_FALSE(v.reason.empty()) << id;
            if (v.status == Status::Realized) EXPECT_TRUE(v.witness && validate_witness(c, k, *v.witness)) << id;
            if (v.status == Status::Gap) EXPECT_FALSE(necessary_holds(c, k).holds) << id;
        }
    }
}

TEST(Decide, GapFreeForLargeRank) {
    for (int id : reference::gap_free_ids())
        for (std::int64_t k = 0; k <= 200; k += 7) EXPECT_EQ(decide(no(id), k).status, Status::Realized) << id << " k=" << k;
}

TEST(ClosedForm, Examples) {
    EXPECT_FALSE(closed_form_r1(no(43), 3));
    EXPECT_TRUE(closed_form_r1(no(49), 3));
    // No. 55, mu = 1/20: gap iff (k+1)/10 is not a square and no n with
    // 20 not dividing n has n^2 in [40k-4, 40k+25]
    for (long k = 0; k <= 300; ++k) {
        bool filtered = false;
        for (long n = 1; n * n <= 40 * k + 25; ++n)
            filtered = filtered || (n * n >= 40 * k - 4 && n % 20 != 0);
        const bool narrow = (k + 1) % 10 == 0 && square((k + 1) / 10);
        EXPECT_EQ(closed_form_r1(no(55), k), !narrow && !filtered) << k;
    }
}

TEST(ClosedForm, Inapplicable) {
    for (int id : {31, 53, 1}) {
        try {
            closed_form_r1(no(id), 1);
            ADD_FAILURE() << id;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::Inapplicable);
        }
    }
}

TEST(ClosedForm, AgreesWithDecideAndTheSieve) {
    for (const auto& row : reference::rank_one_rows()) {
        const SurfaceCase& c = no(row.id);
        const auto sieve = oracle::rank_one_gaps(row.mu_denominator, c.bounds().c_max, c.bounds().c_min, 500);
        for (std::int64_t k = 0; k <= 500; ++k) {
            const Status s = decide(c, k).status;
            ASSERT_NE(s, Status::Unknown) << row.id << " k=" << k;
            EXPECT_EQ(s == Status::Gap, closed_form_r1(c, k)) << row.id << " k=" << k;
            EXPECT_EQ(s == Status::Gap, sieve.count(k) == 1) << row.id << " k=" << k;
        }
    }
}

TEST(GapFreeConstruction, CoversRanksFiveToEight) {
    for (int id : reference::gap_free_ids()) {
        for (std::int64_t k : {0, 1, 5, 17, 99}) {
            const auto w = construct_gap_free_witness(no(id), k);
            ASSERT_TRUE(w) << id;
            EXPECT_TRUE(w->route == Route::ConstructionA1x4 || w->route == Route::ConstructionA4);
            EXPECT_EQ(w->height, 2 + 2 * k);
            EXPECT_TRUE(validate_witness(no(id), k, *w)) << id << " k=" << k;
        }
    }
    EXPECT_FALSE(construct_gap_free_witness(no(43), 1));
}

TEST(OneGap, Classification) {
    std::map<int, OneGapEntry> by_id;
    for (const auto& e : one_gap_class(embedded())) by_id[e.id] = e;
    ASSERT_TRUE(by_id.at(43).has_1_gap);
    EXPECT_TRUE(*by_id.at(43).has_1_gap);
    EXPECT_FALSE(*by_id.at(27).has_1_gap);
    EXPECT_EQ(by_id.at(27).method, "interval-square");
    EXPECT_FALSE(*by_id.at(59).has_1_gap);
    EXPECT_EQ(by_id.at(59).method, "override-witness");
    for (const auto& [id, e] : by_id) {
        ASSERT_TRUE(e.has_1_gap) << id << " " << e.method;
        EXPECT_EQ(*e.has_1_gap, id == reference::kOneGapId) << id;
    }
    for (const auto& e : one_gap_class(rank_zero())) {
        EXPECT_TRUE(*e.has_1_gap);
        EXPECT_EQ(e.method, "rank-0");
    }
}

TEST(OneGap, No59Override) {
    const GapVerdict v = decide(no(59), 1);
    ASSERT_EQ(v.status, Status::Realized);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->route, Route::Override);
    EXPECT_EQ(v.witness->height, q(16, 12));
    EXPECT_EQ(v.witness->contributions, (std::vector<Rational>{1, q(2, 3), q(1, 2), q(1, 2)}));
    EXPECT_EQ(height(1, v.witness->contributions), v.witness->height);
}

TEST(Density, No43MatchesSquareSieve) {
    const DensityReport r = gap_density(no(43), 100);
    long realized = 0;
    for (long k = 1; k <= 100; ++k) realized += square(k + 1) || square(4 * k + 1);
    EXPECT_EQ(r.gaps, 100 - realized);
    EXPECT_EQ(r.density, Rational(Integer(100 - realized), Integer(100)));
    EXPECT_EQ(r.unknown, 0);
}

TEST(Density, RankZeroIsAllGaps) {
    const DensityReport r = gap_density(rank_zero().cases().begin()->second, 10);
    EXPECT_EQ(r.gaps, 10);
    EXPECT_EQ(r.density, 1);
}

TEST(Density, No45) {
    std::set<std::int64_t> gaps;
    for (std::int64_t k = 1; k <= 20; ++k)
        if (decide(no(45), k).status == Status::Gap) gaps.insert(k);
    EXPECT_TRUE(gaps.count(8) && gaps.count(11));
    EXPECT_EQ(gap_density(no(45), 20).gaps, static_cast<std::int64_t>(gaps.size()));
}

TEST(Torsion, DeltaTwoCasesAllHaveTorsion) {
    for (const auto& [id, c] : embedded().cases())
        if (c.bounds().delta == 2) EXPECT_FALSE(c.torsion.trivial()) << id;
}
