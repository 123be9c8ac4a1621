#pragma once

// Partitions, semistandard Young tableaux and their counts in k letters.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "liegrowth/poly.hpp"

namespace liegrowth {

/// Weakly decreasing list of positive parts; empty is the empty partition.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidShape unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    /// Parses "2,1" style text; "" or "0" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    int size() const;
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Row-wise filling of a shape with entries in 1..k.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// Rows weakly increase, columns strictly increase.
    bool is_semistandard() const;
};

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Visits every semistandard tableau of `shape` with entries in 1..k.
void for_each_ssyt(const Partition& shape, int k, const std::function<void(const Tableau&)>& visit);

/// Number of semistandard tableaux of `shape` in 1..k, by enumeration.
Integer ssyt_count(const Partition& shape, int k);

/// C(p+k-1, k-1): one-row tableaux of length p in k letters.
Integer schur_dim_one_row(int p, int k);

/// Two-row shape (a, b): (a-b+1)/(k-1) * C(a+k-1, k-2) * C(b+k-2, k-2).
/// Throws InvalidShape when a < b or b < 0.
Integer schur_dim_two_row(int a, int b, int k);

Integer binomial(int n, int r);

}  // namespace liegrowth
