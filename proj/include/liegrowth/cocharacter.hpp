#pragma once

// Multiplicity rules for the graded cocharacters of sl_2, the resulting
// closed-form a_m, growth g(n) and exact polynomial-degree fitting.

#include <utility>
#include <vector>

#include "liegrowth/graded_model.hpp"
#include "liegrowth/spanning.hpp"
#include "liegrowth/tableaux.hpp"

namespace liegrowth {

/// One partition per support degree, in the family's support order.
struct MultiPartition {
    std::vector<Partition> components;

    int total() const;
    std::vector<int> sizes() const;
    std::string to_string() const;
};

/// Number of support components for an sl2 family (2 or 3).
std::size_t family_arity(Family family);

/// 0 or 1. Throws ArityMismatch when the component count does not match the
/// family, UnsupportedFamily for sl_n.
int multiplicity(Family family, const MultiPartition& mp, int m);

/// Multipartitions of m with multiplicity 1, in size-split order.
std::vector<MultiPartition> admissible_multipartitions(Family family, int m);

/// Sum over admissible multipartitions of the product of tableau counts in
/// k letters per component. Requires m >= 2.
Integer a_m_formula(Family family, int k, int m);

/// a_1 = k times the number of nonzero homogeneous components.
Integer degree_one_count(Family family, int k);

/// g(n) = a_1 + sum_{2 <= m <= n} a_m_formula; g(0) = 0.
Integer growth(Family family, int k, int n);

GrowthTable formula_table(Family family, int k, int m_max);

struct FitReport {
    int degree = 0;
    int window_first = 0;
    int window_last = 0;
    /// 1 for plain differences, 2 when a period-2 pattern forced stride 2.
    int stride = 1;
    /// Same degree on the window with its last two samples removed.
    bool stable = false;
};

/// Smallest d whose d-th differences are eventually constant. A degree d is
/// only accepted with at least 2d + 4 samples; throws InsufficientData when
/// no degree can be certified. `values` must have consecutive m.
FitReport fit_degree(const std::vector<std::pair<int, Integer>>& values);

}  // namespace liegrowth
