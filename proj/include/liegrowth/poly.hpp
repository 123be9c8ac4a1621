#pragma once

// Exact sparse multivariate polynomials over Q and exact rank of rational
// row sets. Entries of evaluated generic matrices live here.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "liegrowth/error.hpp"

namespace liegrowth {

using Integer = mpz_class;
using Rational = mpq_class;

enum class VarKind : std::uint8_t { diagonal, off_diagonal, generic };

/// A commuting indeterminate. For matrix-position variables `row`/`col` are
/// the 1-based position; for `generic` variables `row` is the basis slot
/// (a, b, c, ...) and `col` is unused. `generator` is the generator index r.
struct VarId {
    VarKind kind = VarKind::generic;
    std::uint16_t row = 0;
    std::uint16_t col = 0;
    std::uint16_t generator = 0;

    static VarId diagonal(int i, int r);
    static VarId entry(int p, int q, int r);  // diagonal when p == q
    static VarId scalar(int slot, int r);

    friend auto operator<=>(const VarId&, const VarId&) = default;
    std::string name() const;
};

/// Product of variables with positive exponents, stored sorted by VarId.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(VarId v, std::uint32_t exponent = 1);
    /// Zero exponents are dropped, repeated variables merged.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponent(VarId v) const;
    bool is_one() const { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    /// Graded lexicographic: total degree first, then the factor sequence.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Sparse polynomial with nonzero rational coefficients. The zero polynomial
/// has no terms.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(const Monomial& m, const Rational& c = 1);
    static Polynomial variable(VarId v) { return Polynomial(Monomial(v)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

/// Ordered list of monomials with constant-time-ish index lookup.
class MonomialBasis {
public:
    MonomialBasis() = default;
    explicit MonomialBasis(std::vector<Monomial> monomials);

    std::size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    /// Throws MonomialNotInBasis when absent.
    std::size_t index_of(const Monomial& m) const;

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

/// v[i] = coefficient of basis[i] in p.
std::vector<Rational> coeff_vector(const Polynomial& p, const MonomialBasis& basis);
std::vector<Rational> coeff_vector(const Polynomial& p, const std::vector<Monomial>& basis);

/// Incremental fraction-free row reduction over Z. Rows are integer vectors
/// of a fixed width; each stored pivot row is primitive (content 1).
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t width) : width_(width) {}

    /// Returns true if the row increased the rank.
    bool add(std::vector<Integer> row);
    /// Clears the shared denominator of a rational row first.
    bool add_rational(std::span<const Rational> row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t width() const { return width_; }
    bool full() const { return pivots_.size() == width_; }

private:
    struct Pivot {
        std::size_t column;
        std::vector<Integer> row;
    };

    std::size_t width_;
    std::vector<Pivot> pivots_;
};

/// Scales a rational row by the lcm of its denominators.
std::vector<Integer> clear_denominators(std::span<const Rational> row);

/// Rank over Q of the span of `rows`. Throws DimensionMismatch on ragged input.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace liegrowth
