#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liegrowth/tableaux.hpp"

using namespace liegrowth;

namespace {

/// Counts semistandard fillings by trying every filling of the cells.
Integer count_all_fillings(const Partition& shape, int k) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 1);
    const int cells = shape.size();
    Integer count = 0;
    while (true) {
        Tableau t{shape, rows};
        if (t.is_semistandard()) ++count;
        // odometer increment over all cells
        int carried = 0;
        for (auto& r : rows) {
            for (auto& v : r) {
                if (v < k) {
                    ++v;
                    goto next;
                }
                v = 1;
                ++carried;
            }
        }
        if (carried == cells) break;
    next:;
    }
    return count;
}

}  // namespace

TEST_CASE("partition validation and parsing") {
    CHECK(Partition::parse("2,1").parts() == std::vector<int>{2, 1});
    CHECK(Partition::parse("").rows() == 0);
    CHECK(Partition::parse("0").rows() == 0);
    CHECK_THROWS_AS(Partition::parse("1,2"), InvalidShape);
    CHECK_THROWS_AS(Partition::parse("2,,1"), InvalidShape);
    CHECK_THROWS_AS(Partition::parse("a"), InvalidShape);
    CHECK_THROWS_AS(Partition({3, 0}), InvalidShape);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("ssyt_count examples") {
    CHECK(ssyt_count(Partition({2}), 2) == 3);
    CHECK(ssyt_count(Partition({1, 1}), 1) == 0);
    CHECK(ssyt_count(Partition({2, 1}), 2) == 2);
    CHECK(ssyt_count(Partition{}, 3) == 1);
}

TEST_CASE("enumerated tableaux are semistandard and distinct") {
    std::vector<Tableau> seen;
    for_each_ssyt(Partition({3, 2, 1}), 4, [&](const Tableau& t) {
        CHECK(t.is_semistandard());
        seen.push_back(t);
    });
    CHECK(Integer(static_cast<unsigned long>(seen.size())) == ssyt_count(Partition({3, 2, 1}), 4));
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i].rows != seen[i - 1].rows);
}

TEST_CASE("ssyt_count agrees with exhaustive filling") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& shape : partitions_of(n)) {
            for (int k = 1; k <= 3; ++k) {
                CAPTURE(shape.to_string());
                CAPTURE(k);
                CHECK(ssyt_count(shape, k) == count_all_fillings(shape, k));
            }
        }
    }
}

TEST_CASE("schur_dim_one_row examples") {
    CHECK(schur_dim_one_row(2, 2) == 3);
    CHECK(schur_dim_one_row(0, 4) == 1);
    CHECK(schur_dim_one_row(5, 1) == 1);
}

TEST_CASE("schur_dim_two_row examples") {
    CHECK(schur_dim_two_row(2, 1, 3) == 8);
    CHECK(schur_dim_two_row(1, 1, 2) == 1);
    CHECK(schur_dim_two_row(3, 1, 1) == 0);
    CHECK_THROWS_AS(schur_dim_two_row(1, 2, 3), InvalidShape);
}

TEST_CASE("closed forms equal enumeration") {
    for (int k = 1; k <= 5; ++k) {
        for (int p = 0; p <= 8; ++p) CHECK(schur_dim_one_row(p, k) == ssyt_count(p ? Partition({p}) : Partition{}, k));
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= a; ++b) {
                std::vector<int> parts;
                if (a) parts.push_back(a);
                if (b) parts.push_back(b);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(k);
                CHECK(schur_dim_two_row(a, b, k) == ssyt_count(Partition(parts), k));
            }
        }
    }
}

TEST_CASE("more rows than letters gives no tableaux") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 0; n <= 7; ++n) {
            for (const auto& shape : partitions_of(n)) {
                if (shape.rows() > static_cast<std::size_t>(k)) CHECK(ssyt_count(shape, k) == 0);
            }
        }
    }
}
