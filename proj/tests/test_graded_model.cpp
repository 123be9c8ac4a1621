#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "liegrowth/graded_model.hpp"
#include "liegrowth/spanning.hpp"

using namespace liegrowth;

namespace {

Polynomial var(VarId v) { return Polynomial::variable(v); }
Polynomial a(int r) { return var(VarId::scalar(0, r)); }
Polynomial b(int r) { return var(VarId::scalar(1, r)); }
Polynomial c(int r) { return var(VarId::scalar(2, r)); }

std::vector<GradingSpec> all_models() {
    return {GradingSpec::sl2_z2(), GradingSpec::sl2_z2xz2(), GradingSpec::sl2_z(),
            GradingSpec::sln_vasilovsky(2), GradingSpec::sln_vasilovsky(3), GradingSpec::sln_vasilovsky(4)};
}

GenericMatrix sum(const GenericMatrix& x, const GenericMatrix& y) {
    GenericMatrix out(x.size(), x.degree());
    for (int p = 0; p < x.size(); ++p)
        for (int q = 0; q < x.size(); ++q) out.at(p, q) = x.at(p, q) + y.at(p, q);
    return out;
}

}  // namespace

TEST_CASE("grading specs match the listed supports") {
    auto z2 = GradingSpec::sl2_z2();
    CHECK(z2.support.size() == 2);
    CHECK(z2.dim(Degree::z2(0)) == 1);
    CHECK(z2.dim(Degree::z2(1)) == 2);

    auto v = GradingSpec::sl2_z2xz2();
    CHECK(v.dim(Degree::z2xz2(0, 0)) == 0);
    CHECK(v.dim(Degree::z2xz2(1, 0)) == 1);
    CHECK(v.dim(Degree::z2xz2(0, 1)) == 1);
    CHECK(v.dim(Degree::z2xz2(1, 1)) == 1);

    auto z = GradingSpec::sl2_z();
    CHECK(z.dim(Degree::z(2)) == 0);
    for (int d : {-1, 0, 1}) CHECK(z.dim(Degree::z(d)) == 1);

    for (int n = 2; n <= 5; ++n) {
        auto s = GradingSpec::sln_vasilovsky(n);
        int total = 0;
        for (const auto& [d, dim] : s.component_dims) total += dim;
        CHECK(total == n * n - 1);
        CHECK(s.dim(Degree::zn(n, 0)) == n - 1);
        for (int i = 1; i < n; ++i) CHECK(s.dim(Degree::zn(n, i)) == n);
    }
    CHECK_THROWS_AS(GradingSpec::from_name("gl3"), UnsupportedFamily);
    CHECK_THROWS_AS(GradingSpec::sln_vasilovsky(1), UnsupportedFamily);
}

TEST_CASE("degree arithmetic reduces in the group") {
    CHECK(Degree::z2(1) + Degree::z2(1) == Degree::z2(0));
    CHECK(Degree::z2xz2(1, 0) + Degree::z2xz2(1, 1) == Degree::z2xz2(0, 1));
    CHECK(Degree::z(1) + Degree::z(1) == Degree::z(2));
    CHECK(Degree::zn(3, 2) + Degree::zn(3, 2) == Degree::zn(3, 1));
    CHECK_THROWS_AS(Degree::z2(1) + Degree::z(1), SizeMismatch);
}

TEST_CASE("generic_generators examples") {
    auto s3 = GradingSpec::sln_vasilovsky(3);
    auto g3 = generic_generators(s3, 1);
    const auto& a1 = g3.at(Letter{Degree::zn(3, 1), 1});
    GenericMatrix expected(3, Degree::zn(3, 1));
    expected.at(0, 1) = var(VarId::entry(1, 2, 1));
    expected.at(1, 2) = var(VarId::entry(2, 3, 1));
    expected.at(2, 0) = var(VarId::entry(3, 1, 1));
    CHECK(a1 == expected);

    auto s2 = GradingSpec::sln_vasilovsky(2);
    const auto a0 = generic_generator(s2, Letter{Degree::zn(2, 0), 1});
    GenericMatrix diag(2, Degree::zn(2, 0));
    diag.at(0, 0) = var(VarId::diagonal(1, 1));
    diag.at(1, 1) = -var(VarId::diagonal(1, 1));
    CHECK(a0 == diag);

    auto z2 = GradingSpec::sl2_z2();
    const auto odd2 = generic_generator(z2, Letter{Degree::z2(1), 2});
    CHECK(odd2.at(0, 1) == b(2));
    CHECK(odd2.at(1, 0) == c(2));
    CHECK(odd2.at(0, 0).is_zero());
    CHECK(odd2.at(1, 1).is_zero());

    CHECK_THROWS_AS(generic_generator(GradingSpec::sl2_z(), Letter{Degree::z(2), 1}), UnknownLetter);
    CHECK_THROWS_AS(generic_generators(z2, 0), UnknownLetter);
}

TEST_CASE("variables are fresh per position and index") {
    for (const auto& spec : all_models()) {
        std::set<VarId> seen;
        std::size_t count = 0;
        for (const auto& l : letters(spec, 2)) {
            for (const auto& v : letter_variables(spec, l)) {
                seen.insert(v);
                ++count;
            }
        }
        CHECK(seen.size() == count);
    }
}

TEST_CASE("bracket examples in sl2") {
    auto z2 = GradingSpec::sl2_z2();
    auto g = generic_generators(z2, 2);
    const auto& h1 = g.at(Letter{Degree::z2(0), 1});
    const auto& y1 = g.at(Letter{Degree::z2(1), 1});
    const auto& y2 = g.at(Letter{Degree::z2(1), 2});

    auto hy = bracket(h1, y1);
    CHECK(hy.degree() == Degree::z2(1));
    CHECK(hy.at(0, 1) == a(1) * b(1) * Rational(2));
    CHECK(hy.at(1, 0) == a(1) * c(1) * Rational(-2));
    CHECK(hy.at(0, 0).is_zero());

    CHECK(bracket(y1, y1).is_zero());

    auto yy = bracket(y1, y2);
    Polynomial coeff = b(1) * c(2) - b(2) * c(1);
    CHECK(yy.at(0, 0) == coeff);
    CHECK(yy.at(1, 1) == -coeff);
    CHECK(yy.at(0, 1).is_zero());
    CHECK(yy.degree() == Degree::z2(0));

    CHECK_THROWS_AS(bracket(h1, generic_generator(GradingSpec::sln_vasilovsky(3), Letter{Degree::zn(3, 0), 1})),
                    SizeMismatch);
}

TEST_CASE("evaluate_word examples") {
    auto z2 = GradingSpec::sl2_z2();
    auto g = generic_generators(z2, 1);
    Letter h{Degree::z2(0), 1}, y{Degree::z2(1), 1};
    CHECK(evaluate_word({h}, g) == g.at(h));
    CHECK(evaluate_word({h, y}, g) == bracket(g.at(h), g.at(y)));
    CHECK(evaluate_word({y, y}, g).is_zero());
    CHECK_THROWS_AS(evaluate_word({Letter{Degree::z2(1), 5}}, g), UnknownLetter);
    CHECK_THROWS_AS(evaluate_word({}, g), UnknownLetter);
}

TEST_CASE("bracket of degrees outside the support vanishes") {
    auto z = GradingSpec::sl2_z();
    auto g = generic_generators(z, 2);
    auto ff = bracket(g.at(Letter{Degree::z(1), 1}), g.at(Letter{Degree::z(1), 2}));
    CHECK(ff.is_zero());
    CHECK(ff.degree() == Degree::z(2));

    auto v = GradingSpec::sl2_z2xz2();
    auto gv = generic_generators(v, 2);
    auto hh = bracket(gv.at(Letter{Degree::z2xz2(1, 0), 1}), gv.at(Letter{Degree::z2xz2(1, 0), 2}));
    CHECK(hh.is_zero());
    CHECK(hh.degree() == Degree::z2xz2(0, 0));
}

TEST_CASE("Lie axioms hold on generic generators of every model") {
    for (const auto& spec : all_models()) {
        CAPTURE(spec.name());
        auto g = generic_generators(spec, 2);
        std::vector<GenericMatrix> gens;
        for (const auto& [l, m] : g) gens.push_back(m);
        for (const auto& m : gens) CHECK(m.trace().is_zero());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = 0; j < gens.size(); ++j) {
                auto ab = bracket(gens[i], gens[j]);
                auto ba = bracket(gens[j], gens[i]);
                CHECK(sum(ab, ba).is_zero());
                CHECK(ab.trace().is_zero());
            }
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = 0; j < gens.size(); ++j) {
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    const auto& A = gens[i];
                    const auto& B = gens[j];
                    const auto& C = gens[k];
                    auto jac = sum(sum(bracket(A, bracket(B, C)), bracket(B, bracket(C, A))), bracket(C, bracket(A, B)));
                    CHECK(jac.is_zero());
                }
            }
        }
    }
}

TEST_CASE("Vasilovsky support pattern of evaluated words") {
    for (int n : {3, 4}) {
        auto spec = GradingSpec::sln_vasilovsky(n);
        auto g = generic_generators(spec, 1);
        std::vector<Letter> ls = letters(spec, 1);
        // every word of length 3 over the letters
        for (const auto& l1 : ls)
            for (const auto& l2 : ls)
                for (const auto& l3 : ls) {
                    auto w = evaluate_word({l1, l2, l3}, g);
                    const int deg = ((l1.degree.a + l2.degree.a + l3.degree.a) % n + n) % n;
                    CHECK(w.degree() == Degree::zn(n, deg));
                    CHECK(w.trace().is_zero());
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            if (!w.at(p, q).is_zero()) CHECK((((q - p) % n) + n) % n == deg);
                }
    }
}

TEST_CASE("n=2 Vasilovsky model has the dims of the sl2 Z2 model") {
    auto v = GradingSpec::sln_vasilovsky(2);
    auto z2 = GradingSpec::sl2_z2();
    for (int k : {1, 2}) {
        for (int m = 1; m <= 6; ++m) {
            for (const auto& md : multidegrees(z2, k, m)) {
                MultiDegree mv;
                for (const auto& [l, cnt] : md.counts) mv.counts[Letter{Degree::zn(2, l.degree.a), l.index}] = cnt;
                CHECK(component_dim(z2, k, md) == component_dim(v, k, mv));
            }
        }
    }
}
