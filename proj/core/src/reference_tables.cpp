#include "resgaps/reference_tables.hpp"

#include "resgaps/rational.hpp"

namespace resgaps::reference {

const std::vector<ExtremeRow>& extreme_rows() {
    static const std::vector<ExtremeRow> rows = [] {
        std::vector<ExtremeRow> r;
        // A_{n-1}: l(n-l)/n with l = floor(n/2), and (n-1)/n
        for (int n = 2; n <= 9; ++n) {
            const int l = n / 2;
            r.push_back({"A" + std::to_string(n - 1), Rational(Integer(l * (n - l)), Integer(n)).str(),
                         Rational(Integer(n - 1), Integer(n)).str()});
        }
        // D_{n+4}: 1 + n/4, and 1
        for (int n = 0; n <= 4; ++n)
            r.push_back({"D" + std::to_string(n + 4), (Rational(1) + Rational(Integer(n), Integer(4))).str(), "1"});
        r.push_back({"E6", "4/3", "4/3"});
        r.push_back({"E7", "3/2", "3/2"});
        return r;
    }();
    return rows;
}

const std::vector<BoundsRow>& delta_two_rows() {
    static const std::vector<BoundsRow> rows{
        {24, "A1^5", "A1*^3", "Z/2", "5/2", "1/2", std::nullopt},
        {38, "A3+A1^3", "A1*+<1/4>", "Z/2", "5/2", "1/2", std::nullopt},
        {53, "A5+A1^2", "<1/6>", "Z/2", "5/2", "1/2", std::nullopt},
        {57, "D4+A1^3", "A1*", "(Z/2)^2", "5/2", "1/2", std::nullopt},
        {58, "A3^2+A1", "A1*", "Z/4", "5/2", "1/2", std::nullopt},
        {61, "A2^3+A1", "<1/6>", "Z/3", "5/2", "1/2", std::nullopt},
    };
    return rows;
}

const std::vector<BoundsRow>& delta_above_two_rows() {
    static const std::vector<BoundsRow> rows{
        {41, "A2+A1^4", "(1/6)[[2,1],[1,2]]", "Z/2", "8/3", "1/2", "13/6"},
        {42, "A1^6", "A1*^2", "(Z/2)^2", "3", "1/2", "5/2"},
        {59, "A3+A2+A1^2", "<1/12>", "Z/2", "8/3", "1/2", "13/6"},
        {60, "A3+A1^4", "<1/4>", "(Z/2)^2", "3", "1/2", "5/2"},
    };
    return rows;
}

const std::vector<CriticalRow>& critical_rows() {
    static const std::vector<CriticalRow> rows = [] {
        std::vector<CriticalRow> r{
            {1, {1, 0, 0, 0}, {}},     {2, {1, 0, 1, 0}, {}},     {3, {1, 1, 2, 0}, {}},
            {5, {1, 0, 2, 0}, {}},     {6, {1, 1, -2, -1}, {}},   {7, {1, 1, -2, 0}, {}},
            {10, {1, 0, 3, 0}, {}},    {13, {2, 0, 3, 0}, {}},    {14, {1, 2, 5, 1}, {}},
            {15, {1, 5, 5, 2}, {}},    {17, {1, 0, 4, 0}, {}},    {19, {1, 5, 3, -1}, {}},
            {21, {1, 5, 0, 0}, {}},    {22, {1, 5, 0, -1}, {}},   {23, {1, 6, 6, 2}, {}},
            {26, {1, 0, 5, 0}, {}},    {29, {2, 0, 5, 0}, {}},    {30, {1, 5, 0, -3}, {}},
            {31, {1, 3, -4, -2}, {}},  {34, {3, 0, 5, 0}, {}},    {35, {1, 2, -2, 4}, {}},
            {37, {1, 0, 6, 0}, {}},    {42, {1, 1, -4, 3}, {}},   {58, {3, 0, 7, 0}, {}},
            {93, {1, 1, -10, 0}, {}},  {110, {1, -2, 3, -8}, {}}, {145, {1, 0, 12, 0}, {}},
            {203, {1, -5, -9, 8}, {}}, {290, {1, 0, 17, 0}, {}},
        };
        for (auto& row : r) row.shipped = row.printed;
        // printed (1,1,-10,0) evaluates to 111; flipping the second sign gives 93
        for (auto& row : r)
            if (row.n == 93) row.shipped = {1, -1, -10, 0};
        return r;
    }();
    return rows;
}

const std::vector<RankOneRow>& rank_one_rows() {
    static const std::vector<RankOneRow> rows{
        {43, "E7", 2, {1, 4}},       {45, "A7", 8, {8, 11}},       {46, "D7", 4, {2, 5}},
        {47, "A6+A1", 14, {12, 16}}, {49, "E6+A1", 6, {3, 7}},     {50, "D5+A2", 12, {6, 11}},
        {55, "A4+A3", 20, {16, 20}}, {56, "A4+A2+A1", 30, {22, 27}},
    };
    return rows;
}

const std::vector<SquareRow>& square_rows() {
    static const std::vector<SquareRow> rows{
        {20, "A2^2+A1", "A2*+<1/6>", "1/6", 13, 23, false, {16}},
        {27, "E6", "A2*", "2/3", 4, 4, false, {4}},
        {29, "A5+A1", "A1*+<1/6>", "1/6", 12, 21, false, {16}},
        {31, "A4+A2", "(1/15)[[2,1],[1,8]]", "2/15", 16, 21, false, {16}},
        {37, "A3+A2+A1", "A1*+<1/12>", "1/12", 22, 28, false, {25}},
        {40, "A2^2+A1^2", "<1/6>^2", "1/6", 10, 21, false, {16}},
        {53, "A5+A1^2", "<1/6>", "1/6", 9, 12, true, {9}},
        {59, "A3+A2+A1^2", "<1/12>", "1/12", 16, 42, false, {16, 25, 36}},
        {61, "A2^3+A1", "<1/6>", "1/6", 9, 12, true, {9}},
    };
    return rows;
}

const std::vector<int>& gap_free_ids() {
    static const std::vector<int> ids{1, 2, 3, 4, 5, 6, 7};
    return ids;
}

}  // namespace resgaps::reference
