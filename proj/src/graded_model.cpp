#include "liegrowth/graded_model.hpp"

#include <sstream>

namespace liegrowth {

namespace {

int reduce(int value, int modulus) {
    if (modulus == 0) return value;
    int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

// One term s * M of a generic sl_2 element, M given by its 2x2 integer entries.
struct Sl2Term {
    int slot;
    int m[2][2];
};

constexpr int kH[2][2] = {{1, 0}, {0, -1}};
constexpr int kE[2][2] = {{0, 1}, {0, 0}};
constexpr int kF[2][2] = {{0, 0}, {1, 0}};

std::vector<Sl2Term> sl2_terms(const GradingSpec& spec, const Degree& d) {
    auto term = [](int slot, const int (&m)[2][2]) {
        return Sl2Term{slot, {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
    };
    switch (spec.family) {
    case Family::SL2_Z2:
        if (d.a == 0) return {term(0, kH)};
        return {term(1, kE), term(2, kF)};
    case Family::SL2_Z2xZ2: {
        if (d == Degree::z2xz2(1, 0)) return {term(0, kH)};
        const int e_plus_f[2][2] = {{0, 1}, {1, 0}};
        const int e_minus_f[2][2] = {{0, 1}, {-1, 0}};
        if (d == Degree::z2xz2(0, 1)) return {term(1, e_plus_f)};
        return {term(2, e_minus_f)};
    }
    case Family::SL2_Z:
        if (d.a == -1) return {term(0, kE)};
        if (d.a == 0) return {term(1, kH)};
        return {term(2, kF)};
    case Family::SLN_VASILOVSKY:
        break;
    }
    throw UnsupportedFamily("not an sl2 family");
}

}  // namespace

Degree Degree::z2(int a) { return Degree{GroupKind::Z2, 2, reduce(a, 2), 0}; }
Degree Degree::z2xz2(int a, int b) { return Degree{GroupKind::Z2xZ2, 2, reduce(a, 2), reduce(b, 2)}; }
Degree Degree::z(int a) { return Degree{GroupKind::Z, 0, a, 0}; }
Degree Degree::zn(int n, int a) { return Degree{GroupKind::Zn, n, reduce(a, n), 0}; }

Degree operator+(const Degree& x, const Degree& y) {
    if (x.group != y.group || x.modulus != y.modulus) {
        throw SizeMismatch("adding degrees from different grading groups");
    }
    return Degree{x.group, x.modulus, reduce(x.a + y.a, x.modulus), reduce(x.b + y.b, x.modulus)};
}

std::string Degree::to_string() const {
    if (group == GroupKind::Z2xZ2) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return std::to_string(a);
}

std::string Letter::to_string() const { return "x" + std::to_string(index) + "^" + degree.to_string(); }

GradingSpec GradingSpec::sl2_z2() {
    GradingSpec s;
    s.family = Family::SL2_Z2;
    s.n = 2;
    s.support = {Degree::z2(0), Degree::z2(1)};
    s.component_dims = {{Degree::z2(0), 1}, {Degree::z2(1), 2}};
    return s;
}

GradingSpec GradingSpec::sl2_z2xz2() {
    GradingSpec s;
    s.family = Family::SL2_Z2xZ2;
    s.n = 2;
    s.support = {Degree::z2xz2(1, 0), Degree::z2xz2(0, 1), Degree::z2xz2(1, 1)};
    for (const auto& d : s.support) s.component_dims[d] = 1;
    return s;
}

GradingSpec GradingSpec::sl2_z() {
    GradingSpec s;
    s.family = Family::SL2_Z;
    s.n = 2;
    s.support = {Degree::z(-1), Degree::z(0), Degree::z(1)};
    for (const auto& d : s.support) s.component_dims[d] = 1;
    return s;
}

GradingSpec GradingSpec::sln_vasilovsky(int n) {
    if (n < 2) throw UnsupportedFamily("sl_n needs n >= 2");
    GradingSpec s;
    s.family = Family::SLN_VASILOVSKY;
    s.n = n;
    for (int i = 0; i < n; ++i) {
        s.support.push_back(Degree::zn(n, i));
        s.component_dims[Degree::zn(n, i)] = i == 0 ? n - 1 : n;
    }
    return s;
}

GradingSpec GradingSpec::from_name(std::string_view name, int n) {
    if (name == "sl2-z2") return sl2_z2();
    if (name == "sl2-z2xz2") return sl2_z2xz2();
    if (name == "sl2-z") return sl2_z();
    if (name == "sln") return sln_vasilovsky(n);
    throw UnsupportedFamily("unknown grading family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::SL2_Z2: return "sl2-z2";
    case Family::SL2_Z2xZ2: return "sl2-z2xz2";
    case Family::SL2_Z: return "sl2-z";
    case Family::SLN_VASILOVSKY: return "sln";
    }
    return "?";
}

std::string GradingSpec::name() const {
    if (family == Family::SLN_VASILOVSKY) return "sln-n" + std::to_string(n);
    return family_name(family);
}

int GradingSpec::dim(const Degree& d) const {
    auto it = component_dims.find(d);
    return it == component_dims.end() ? 0 : it->second;
}

std::size_t GradingSpec::support_index(const Degree& d) const {
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] == d) return i;
    }
    throw UnknownLetter("degree " + d.to_string() + " not in the support of " + name());
}

GenericMatrix::GenericMatrix(int size, Degree degree)
    : size_(size), degree_(degree), entries_(static_cast<std::size_t>(size * size)) {
    if (size < 1) throw SizeMismatch("matrix size must be positive");
}

bool GenericMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Polynomial GenericMatrix::trace() const {
    Polynomial t;
    for (int i = 0; i < size_; ++i) t += at(i, i);
    return t;
}

std::string GenericMatrix::to_string() const {
    std::ostringstream os;
    os << "deg " << degree_.to_string() << " [";
    for (int p = 0; p < size_; ++p) {
        os << (p ? "; " : "");
        for (int q = 0; q < size_; ++q) os << (q ? ", " : "") << at(p, q).to_string();
    }
    os << "]";
    return os.str();
}

std::vector<Letter> letters(const GradingSpec& spec, int k) {
    std::vector<Letter> out;
    for (const auto& d : spec.support) {
        for (int r = 1; r <= k; ++r) out.push_back(Letter{d, r});
    }
    return out;
}

std::vector<VarId> letter_variables(const GradingSpec& spec, const Letter& letter) {
    spec.support_index(letter.degree);
    std::vector<VarId> vars;
    if (spec.is_sl2_family()) {
        for (const auto& t : sl2_terms(spec, letter.degree)) vars.push_back(VarId::scalar(t.slot, letter.index));
        return vars;
    }
    const int n = spec.n;
    const int i = letter.degree.a;
    if (i == 0) {
        for (int p = 1; p < n; ++p) vars.push_back(VarId::diagonal(p, letter.index));
    } else {
        for (int p = 1; p <= n; ++p) {
            int q = reduce(p - 1 + i, n) + 1;
            vars.push_back(VarId::entry(p, q, letter.index));
        }
    }
    return vars;
}

GenericMatrix generic_generator(const GradingSpec& spec, const Letter& letter) {
    spec.support_index(letter.degree);
    if (letter.index < 1) throw UnknownLetter("generator index must be >= 1");
    GenericMatrix m(spec.n, letter.degree);
    if (spec.is_sl2_family()) {
        for (const auto& t : sl2_terms(spec, letter.degree)) {
            Polynomial v = Polynomial::variable(VarId::scalar(t.slot, letter.index));
            for (int p = 0; p < 2; ++p) {
                for (int q = 0; q < 2; ++q) {
                    if (t.m[p][q] != 0) m.at(p, q) += v * Rational(t.m[p][q]);
                }
            }
        }
        return m;
    }
    const int n = spec.n;
    if (letter.degree.a == 0) {
        // A_0 = sum_{i<n} x_ii e_ii - (sum_{i<n} x_ii) e_nn
        for (int p = 1; p < n; ++p) {
            Polynomial x = Polynomial::variable(VarId::diagonal(p, letter.index));
            m.at(p - 1, p - 1) = x;
            m.at(n - 1, n - 1) -= x;
        }
    } else {
        for (const auto& v : letter_variables(spec, letter)) m.at(v.row - 1, v.col - 1) = Polynomial::variable(v);
    }
    return m;
}

GeneratorMap generic_generators(const GradingSpec& spec, int k) {
    if (k < 1) throw UnknownLetter("k must be >= 1");
    GeneratorMap gens;
    for (const auto& l : letters(spec, k)) gens.emplace(l, generic_generator(spec, l));
    return gens;
}

GenericMatrix multiply(const GenericMatrix& a, const GenericMatrix& b) {
    if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
    const int n = a.size();
    GenericMatrix out(n, a.degree() + b.degree());
    for (int p = 0; p < n; ++p) {
        for (int r = 0; r < n; ++r) {
            const auto& x = a.at(p, r);
            if (x.is_zero()) continue;
            for (int q = 0; q < n; ++q) {
                const auto& y = b.at(r, q);
                if (!y.is_zero()) out.at(p, q) += x * y;
            }
        }
    }
    return out;
}

GenericMatrix bracket(const GenericMatrix& a, const GenericMatrix& b) {
    if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
    const int n = a.size();
    GenericMatrix out(n, a.degree() + b.degree());
    for (int p = 0; p < n; ++p) {
        for (int r = 0; r < n; ++r) {
            const auto& ab = a.at(p, r);
            const auto& ba = b.at(p, r);
            for (int q = 0; q < n; ++q) {
                if (!ab.is_zero() && !b.at(r, q).is_zero()) out.at(p, q) += ab * b.at(r, q);
                if (!ba.is_zero() && !a.at(r, q).is_zero()) out.at(p, q) -= ba * a.at(r, q);
            }
        }
    }
    return out;
}

GenericMatrix evaluate_word(const LieWord& word, const GeneratorMap& gens) {
    if (word.empty()) throw UnknownLetter("empty word");
    auto lookup = [&](const Letter& l) -> const GenericMatrix& {
        auto it = gens.find(l);
        if (it == gens.end()) throw UnknownLetter("letter " + l.to_string() + " has no generator");
        return it->second;
    };
    GenericMatrix acc = lookup(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) acc = bracket(acc, lookup(word[i]));
    return acc;
}

}  // namespace liegrowth
