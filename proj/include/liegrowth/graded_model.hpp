#pragma once

// Graded Lie algebra models realized by generic matrices: the three
// nontrivial gradings of sl_2 and the Vasilovsky Z_n-grading of sl_n.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liegrowth/poly.hpp"

namespace liegrowth {

enum class Family { SL2_Z2, SL2_Z2xZ2, SL2_Z, SLN_VASILOVSKY };

enum class GroupKind { Z2, Z2xZ2, Z, Zn };

/// Element of a grading group. `modulus` is 2 for Z2 / Z2xZ2, n for Zn and
/// 0 for Z. Only `a` is used except for Z2xZ2. Values are kept reduced.
struct Degree {
    GroupKind group = GroupKind::Z;
    int modulus = 0;
    int a = 0;
    int b = 0;

    static Degree z2(int a);
    static Degree z2xz2(int a, int b);
    static Degree z(int a);
    static Degree zn(int n, int a);

    /// Group addition; throws SizeMismatch when the groups differ.
    friend Degree operator+(const Degree& x, const Degree& y);
    friend auto operator<=>(const Degree&, const Degree&) = default;

    std::string to_string() const;
};

/// Description of a graded finite-dimensional Lie algebra model.
struct GradingSpec {
    Family family = Family::SL2_Z2;
    int n = 2;
    std::vector<Degree> support;         // fixed order
    std::map<Degree, int> component_dims;

    static GradingSpec sl2_z2();
    static GradingSpec sl2_z2xz2();
    static GradingSpec sl2_z();
    static GradingSpec sln_vasilovsky(int n);

    /// Accepts "sl2-z2", "sl2-z2xz2", "sl2-z" and "sln" (with `n`).
    static GradingSpec from_name(std::string_view name, int n = 2);

    std::string name() const;
    bool is_sl2_family() const { return family != Family::SLN_VASILOVSKY; }
    int dim(const Degree& d) const;
    bool in_support(const Degree& d) const { return dim(d) > 0; }
    /// Position of `d` in `support`; throws UnknownLetter when absent.
    std::size_t support_index(const Degree& d) const;
};

/// A graded generator symbol x_index^degree; index is 1-based.
struct Letter {
    Degree degree;
    int index = 1;

    friend auto operator<=>(const Letter&, const Letter&) = default;
    std::string to_string() const;
};

/// Interpreted left-normed: [[...[[l1,l2],l3]...],lr].
using LieWord = std::vector<Letter>;

/// n x n matrix of polynomials, homogeneous of the given degree.
class GenericMatrix {
public:
    GenericMatrix(int size, Degree degree);

    int size() const { return size_; }
    const Degree& degree() const { return degree_; }

    /// 0-based access.
    Polynomial& at(int p, int q) { return entries_[static_cast<std::size_t>(p * size_ + q)]; }
    const Polynomial& at(int p, int q) const {
        return entries_[static_cast<std::size_t>(p * size_ + q)];
    }
    const std::vector<Polynomial>& entries() const { return entries_; }

    bool is_zero() const;
    Polynomial trace() const;

    friend bool operator==(const GenericMatrix&, const GenericMatrix&) = default;
    std::string to_string() const;

private:
    int size_;
    Degree degree_;
    std::vector<Polynomial> entries_;
};

using GeneratorMap = std::map<Letter, GenericMatrix>;

/// All letters (degree in support, index 1..k) in their fixed order.
std::vector<Letter> letters(const GradingSpec& spec, int k);

/// Variables occurring in the generic element of `letter`.
std::vector<VarId> letter_variables(const GradingSpec& spec, const Letter& letter);

/// The generic homogeneous element for one letter.
GenericMatrix generic_generator(const GradingSpec& spec, const Letter& letter);

GeneratorMap generic_generators(const GradingSpec& spec, int k);

/// Matrix commutator AB - BA, graded by the sum of degrees.
GenericMatrix bracket(const GenericMatrix& a, const GenericMatrix& b);

/// Left fold of `bracket` over the letters of `word`.
GenericMatrix evaluate_word(const LieWord& word, const GeneratorMap& gens);

/// Ordinary matrix product, graded by the sum of degrees.
GenericMatrix multiply(const GenericMatrix& a, const GenericMatrix& b);

std::string family_name(Family f);

}  // namespace liegrowth
