#include "liegrowth/poly.hpp"

#include <algorithm>
#include <sstream>

namespace liegrowth {

VarId VarId::diagonal(int i, int r) {
    return VarId{VarKind::diagonal, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(i),
                 static_cast<std::uint16_t>(r)};
}

VarId VarId::entry(int p, int q, int r) {
    if (p == q) return diagonal(p, r);
    return VarId{VarKind::off_diagonal, static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(q),
                 static_cast<std::uint16_t>(r)};
}

VarId VarId::scalar(int slot, int r) {
    return VarId{VarKind::generic, static_cast<std::uint16_t>(slot), 0, static_cast<std::uint16_t>(r)};
}

std::string VarId::name() const {
    std::ostringstream os;
    if (kind == VarKind::generic) {
        os << static_cast<char>('a' + row) << generator;
    } else {
        os << 'x' << row << col << '_' << generator;
    }
    return os.str();
}

Monomial::Monomial(VarId v, std::uint32_t exponent) {
    if (exponent > 0) {
        factors_.emplace_back(v, exponent);
        degree_ = exponent;
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
        m.degree_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const VarId& x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

Polynomial::Polynomial(const Rational& c) : Polynomial(Monomial{}, c) {}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    Rational v = c;
    v.canonicalize();  // mpq_class(num, den) is not reduced on construction
    if (v != 0) terms_.emplace(m, std::move(v));
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (s.empty()) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + '*';
            s += m.to_string();
        }
    }
    return s;
}

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.try_emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw MonomialNotInBasis("monomial " + m.to_string() + " not in basis");
    return it->second;
}

std::vector<Rational> coeff_vector(const Polynomial& p, const MonomialBasis& basis) {
    std::vector<Rational> v(basis.size());
    for (const auto& [m, c] : p.terms()) v[basis.index_of(m)] = c;
    return v;
}

std::vector<Rational> coeff_vector(const Polynomial& p, const std::vector<Monomial>& basis) {
    return coeff_vector(p, MonomialBasis(basis));
}

std::vector<Integer> clear_denominators(std::span<const Rational> row) {
    Integer lcm = 1;
    for (const auto& x : row) {
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.get_num() * (lcm / x.get_den()));
    return out;
}

namespace {

void make_primitive(std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& x : row) {
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g > 1) {
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

bool RankAccumulator::add(std::vector<Integer> row) {
    if (row.size() != width_) {
        throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                                " added to accumulator of width " + std::to_string(width_));
    }
    if (full()) return false;
    for (const auto& pivot : pivots_) {
        const Integer& lead = pivot.row[pivot.column];
        if (row[pivot.column] == 0) continue;
        Integer factor = row[pivot.column];
        // row <- lead*row - factor*pivot, eliminating the pivot column
        for (std::size_t j = 0; j < width_; ++j) {
            if (row[j] != 0) row[j] *= lead;
            if (pivot.row[j] != 0) row[j] -= factor * pivot.row[j];
        }
        make_primitive(row);
    }
    auto nz = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
    if (nz == row.end()) return false;
    auto column = static_cast<std::size_t>(nz - row.begin());
    if (row[column] < 0) {
        for (auto& x : row) x = -x;
    }
    pivots_.push_back(Pivot{column, std::move(row)});
    return true;
}

bool RankAccumulator::add_rational(std::span<const Rational> row) {
    if (row.size() != width_) {
        throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                                " added to accumulator of width " + std::to_string(width_));
    }
    return add(clear_denominators(row));
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    RankAccumulator acc(rows.front().size());
    for (const auto& row : rows) acc.add_rational(row);
    return acc.rank();
}

}  // namespace liegrowth
