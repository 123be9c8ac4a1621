#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "liegrowth/cocharacter.hpp"

using namespace liegrowth;

namespace {

MultiPartition mp(std::initializer_list<std::vector<int>> parts) {
    MultiPartition out;
    for (const auto& p : parts) out.components.emplace_back(p);
    return out;
}

constexpr Family kSl2Families[] = {Family::SL2_Z2, Family::SL2_Z2xZ2, Family::SL2_Z};

/// Every tuple of partitions with `arity` components and total m.
void for_each_multipartition(std::size_t arity, int m, const std::function<void(const MultiPartition&)>& fn,
                             MultiPartition prefix = {}) {
    if (prefix.components.size() == arity) {
        if (prefix.total() == m) fn(prefix);
        return;
    }
    const int used = prefix.components.empty() ? 0 : prefix.total();
    for (int s = 0; s <= m - used; ++s) {
        for (const auto& p : partitions_of(s)) {
            auto next = prefix;
            next.components.push_back(p);
            for_each_multipartition(arity, m, fn, next);
        }
    }
}

std::vector<std::pair<int, Integer>> samples(int first, int last, const std::function<Integer(int)>& g) {
    std::vector<std::pair<int, Integer>> out;
    for (int m = first; m <= last; ++m) out.emplace_back(m, g(m));
    return out;
}

}  // namespace

TEST_CASE("multiplicity examples") {
    CHECK(multiplicity(Family::SL2_Z2, mp({{1}, {1}}), 2) == 1);
    CHECK(multiplicity(Family::SL2_Z2, mp({{2}, {}}), 2) == 0);
    CHECK(multiplicity(Family::SL2_Z, mp({{3}, {}, {1}}), 4) == 0);
    CHECK(multiplicity(Family::SL2_Z2xZ2, mp({{1}, {1}, {1}}), 3) == 0);
    CHECK_THROWS_AS(multiplicity(Family::SL2_Z2, mp({{1}, {1}, {}}), 2), ArityMismatch);
    CHECK_THROWS_AS(multiplicity(Family::SL2_Z, mp({{1}, {1}}), 2), ArityMismatch);
    CHECK_THROWS_AS(family_arity(Family::SLN_VASILOVSKY), UnsupportedFamily);
}

TEST_CASE("multiplicity vanishes on forbidden shapes") {
    for (auto family : kSl2Families) {
        const auto arity = family_arity(family);
        for (int m = 1; m <= 6; ++m) {
            for_each_multipartition(arity, m, [&](const MultiPartition& x) {
                CHECK((multiplicity(family, x, m) == 0 || multiplicity(family, x, m) == 1));
                bool forbidden = false;
                for (std::size_t i = 0; i < x.components.size(); ++i) {
                    const auto rows = x.components[i].rows();
                    const bool two_row_slot = family == Family::SL2_Z2 && i == 1;
                    if (rows >= 3 || (rows == 2 && !two_row_slot)) forbidden = true;
                }
                if (forbidden) CHECK(multiplicity(family, x, m) == 0);
            });
        }
    }
}

TEST_CASE("admissible multipartitions are exactly the multiplicity-one ones") {
    for (auto family : kSl2Families) {
        for (int m = 2; m <= 6; ++m) {
            std::size_t count = 0;
            for_each_multipartition(family_arity(family), m,
                                    [&](const MultiPartition& x) { count += static_cast<std::size_t>(multiplicity(family, x, m)); });
            const auto adm = admissible_multipartitions(family, m);
            CHECK(adm.size() == count);
            for (const auto& x : adm) {
                CHECK(x.total() == m);
                CHECK(multiplicity(family, x, m) == 1);
            }
        }
    }
}

TEST_CASE("a_m_formula examples") {
    CHECK(a_m_formula(Family::SL2_Z2, 1, 2) == 1);
    CHECK(a_m_formula(Family::SL2_Z2, 2, 2) == 5);  // [h_i, y_j] for four pairs plus [y_1, y_2]
    CHECK(a_m_formula(Family::SL2_Z, 1, 2) == 3);  // [e,h], [h,f], [e,f]
    CHECK_THROWS_AS(a_m_formula(Family::SL2_Z2, 1, 1), UsageError);
}

TEST_CASE("a_m_formula agrees with brute force at small sizes") {
    const GradingSpec specs[] = {GradingSpec::sl2_z2(), GradingSpec::sl2_z2xz2(), GradingSpec::sl2_z()};
    for (const auto& spec : specs) {
        for (int m = 2; m <= 5; ++m) {
            CAPTURE(spec.name());
            CAPTURE(m);
            CHECK(a_m_formula(spec.family, 2, m) == Integer(static_cast<unsigned long>(a_m_bruteforce(spec, 2, m))));
        }
    }
}

TEST_CASE("a_m is nondecreasing in k") {
    for (auto family : kSl2Families) {
        for (int m = 2; m <= 12; ++m) {
            for (int k = 1; k < 4; ++k) CHECK(a_m_formula(family, k, m) <= a_m_formula(family, k + 1, m));
        }
    }
}

TEST_CASE("growth is the cumulative sum of a_m") {
    CHECK(growth(Family::SL2_Z2xZ2, 1, 1) == 3);
    CHECK(degree_one_count(Family::SL2_Z2, 3) == 6);
    for (auto family : kSl2Families) {
        CHECK(growth(family, 2, 0) == 0);
        for (int n = 2; n <= 15; ++n) CHECK(growth(family, 2, n) - growth(family, 2, n - 1) == a_m_formula(family, 2, n));
        auto table = formula_table(family, 2, 15);
        CHECK(table.growth(15) == growth(family, 2, 15));
    }
}

TEST_CASE("fit_degree on exact polynomials") {
    auto sq = fit_degree(samples(1, 12, [](int m) -> Integer { return Integer(m) * m; }));
    CHECK(sq.degree == 2);
    CHECK(sq.stable);

    auto cubic = fit_degree(samples(1, 14, [](int m) -> Integer { return Integer(m) * m * m + m; }));
    CHECK(cubic.degree == 3);

    auto parity = fit_degree(samples(1, 20, [](int m) -> Integer { return Integer(m) * m + (m % 2 ? 3 : 0); }));
    CHECK(parity.degree == 2);
    CHECK(parity.stable);

    CHECK_THROWS_AS(fit_degree(samples(1, 3, [](int m) -> Integer { return Integer(m); })), InsufficientData);
    // a quartic needs twelve samples
    CHECK_THROWS_AS(fit_degree(samples(1, 9, [](int m) -> Integer { return Integer(m) * m * m * m; })), InsufficientData);
}
