#include "liegrowth/cocharacter.hpp"

#include <cstdlib>
#include <optional>

namespace liegrowth {

int MultiPartition::total() const {
    int t = 0;
    for (const auto& p : components) t += p.size();
    return t;
}

std::vector<int> MultiPartition::sizes() const {
    std::vector<int> s;
    for (const auto& p : components) s.push_back(p.size());
    return s;
}

std::string MultiPartition::to_string() const {
    std::string s;
    for (const auto& p : components) s += (s.empty() ? "" : " x ") + p.to_string();
    return s;
}

std::size_t family_arity(Family family) {
    switch (family) {
    case Family::SL2_Z2: return 2;
    case Family::SL2_Z2xZ2:
    case Family::SL2_Z: return 3;
    case Family::SLN_VASILOVSKY: break;
    }
    throw UnsupportedFamily("no cocharacter formula for sl_n");
}

namespace {

bool odd(int x) { return (x % 2 + 2) % 2 == 1; }

}  // namespace

int multiplicity(Family family, const MultiPartition& mp, int m) {
    const std::size_t arity = family_arity(family);
    if (mp.components.size() != arity) {
        throw ArityMismatch("expected " + std::to_string(arity) + " components, got " +
                            std::to_string(mp.components.size()));
    }
    if (mp.total() != m) return 0;

    if (family == Family::SL2_Z2) {
        const auto& sigma = mp.components[0];
        const auto& tau = mp.components[1];
        if (sigma.rows() > 1 || tau.rows() > 2) return 0;
        const int p = sigma.size();
        const int q = tau.part(1);
        const int r = tau.part(0) - tau.part(1);
        return (p != m && r != m && (odd(r) || odd(p + q))) ? 1 : 0;
    }

    for (const auto& c : mp.components) {
        if (c.rows() > 1) return 0;
    }
    const int p = mp.components[0].size();
    const int q = mp.components[1].size();
    const int r = mp.components[2].size();
    if (p == m || q == m || r == m) return 0;
    if (family == Family::SL2_Z2xZ2) return (odd(p + q) || odd(q + r)) ? 1 : 0;
    return std::abs(p - r) <= 1 ? 1 : 0;
}

namespace {

Partition row(int length) { return length == 0 ? Partition{} : Partition({length}); }

Partition two_rows(int a, int b) {
    if (b == 0) return row(a);
    return Partition({a, b});
}

}  // namespace

std::vector<MultiPartition> admissible_multipartitions(Family family, int m) {
    std::vector<MultiPartition> out;
    if (family_arity(family) == 2) {
        // sigma = (p), tau = (q + r, q) with p + 2q + r = m
        for (int p = 0; p <= m; ++p) {
            for (int q = 0; 2 * q <= m - p; ++q) {
                const int r = m - p - 2 * q;
                MultiPartition mp{{row(p), two_rows(q + r, q)}};
                if (multiplicity(family, mp, m) == 1) out.push_back(std::move(mp));
            }
        }
        return out;
    }
    for (int p = 0; p <= m; ++p) {
        for (int q = 0; q <= m - p; ++q) {
            MultiPartition mp{{row(p), row(q), row(m - p - q)}};
            if (multiplicity(family, mp, m) == 1) out.push_back(std::move(mp));
        }
    }
    return out;
}

Integer a_m_formula(Family family, int k, int m) {
    if (m < 2) throw UsageError("a_m_formula needs m >= 2; degree 1 uses the generator count");
    if (k < 1) throw UsageError("k must be >= 1");
    Integer sum = 0;
    for (const auto& mp : admissible_multipartitions(family, m)) {
        Integer term = 1;
        for (const auto& c : mp.components) {
            term *= c.rows() <= 1 ? schur_dim_one_row(c.size(), k) : schur_dim_two_row(c.part(0), c.part(1), k);
            if (term == 0) break;
        }
        sum += term;
    }
    return sum;
}

Integer degree_one_count(Family family, int k) {
    return Integer(k) * Integer(static_cast<unsigned long>(family_arity(family) == 2 ? 2 : 3));
}

Integer growth(Family family, int k, int n) {
    if (n <= 0) return 0;
    Integer g = degree_one_count(family, k);
    for (int m = 2; m <= n; ++m) g += a_m_formula(family, k, m);
    return g;
}

GrowthTable formula_table(Family family, int k, int m_max) {
    family_arity(family);
    GrowthTable t;
    t.family = family;
    t.k = k;
    t.method = Method::formula;
    for (int m = 1; m <= m_max; ++m) t.entries[m] = m == 1 ? degree_one_count(family, k) : a_m_formula(family, k, m);
    return t;
}

namespace {

std::vector<Integer> differences(std::vector<Integer> v, int order, std::size_t stride) {
    for (int i = 0; i < order; ++i) {
        if (v.size() <= stride) return {};
        std::vector<Integer> next(v.size() - stride);
        for (std::size_t j = 0; j < next.size(); ++j) next[j] = v[j + stride] - v[j];
        v = std::move(next);
    }
    return v;
}

/// The last half (at least four values) is constant along each residue
/// class modulo `period`.
bool tail_periodic(const std::vector<Integer>& v, std::size_t period) {
    std::size_t tail = std::max<std::size_t>(4, v.size() / 2);
    if (v.size() < tail) return false;
    const std::size_t start = v.size() - tail;
    for (std::size_t j = start + period; j < v.size(); ++j) {
        if (v[j] != v[j - period]) return false;
    }
    return true;
}

struct Fit {
    int degree;
    int stride;
};

std::optional<Fit> fit_samples(const std::vector<Integer>& g) {
    const int n = static_cast<int>(g.size());
    for (int d = 0; n >= 2 * d + 4; ++d) {
        if (tail_periodic(differences(g, d, 1), 1)) return Fit{d, 1};
        if (tail_periodic(differences(g, d, 2), 2)) return Fit{d, 2};
    }
    return std::nullopt;
}

}  // namespace

FitReport fit_degree(const std::vector<std::pair<int, Integer>>& values) {
    if (values.empty()) throw InsufficientData("no samples to fit");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].first != values[i - 1].first + 1) throw InsufficientData("samples must have consecutive m");
    }
    std::vector<Integer> g;
    for (const auto& [m, v] : values) g.push_back(v);

    auto full = fit_samples(g);
    if (!full) {
        throw InsufficientData("cannot certify a degree from " + std::to_string(g.size()) +
                               " samples; a degree d needs at least 2d+4 samples");
    }
    FitReport report;
    report.degree = full->degree;
    report.stride = full->stride;
    report.window_first = values.front().first;
    report.window_last = values.back().first;

    g.resize(g.size() >= 2 ? g.size() - 2 : 0);
    auto shorter = fit_samples(g);
    report.stable = shorter && shorter->degree == full->degree;
    return report;
}

}  // namespace liegrowth
