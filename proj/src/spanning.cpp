#include "liegrowth/spanning.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace liegrowth {

MultiDegree::MultiDegree(std::map<Letter, int> c) {
    for (const auto& [l, n] : c) {
        if (n < 0) throw EmptyMultiDegree("negative occurrence count for " + l.to_string());
        if (n > 0) counts.emplace(l, n);
    }
}

MultiDegree MultiDegree::of_word(const LieWord& word) {
    MultiDegree md;
    for (const auto& l : word) ++md.counts[l];
    return md;
}

int MultiDegree::total() const {
    int t = 0;
    for (const auto& [l, n] : counts) t += n;
    return t;
}

int MultiDegree::count(const Letter& l) const {
    auto it = counts.find(l);
    return it == counts.end() ? 0 : it->second;
}

std::string MultiDegree::key() const {
    std::string s;
    for (const auto& [l, n] : counts) {
        if (!s.empty()) s += ' ';
        s += l.degree.to_string() + '#' + std::to_string(l.index) + ':' + std::to_string(n);
    }
    return s;
}

std::vector<MultiDegree> multidegrees(const GradingSpec& spec, int k, int m) {
    const auto alphabet = letters(spec, k);
    std::vector<MultiDegree> out;
    std::vector<int> c(alphabet.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == alphabet.size()) {
            c[i] = left;
            MultiDegree md;
            for (std::size_t j = 0; j < alphabet.size(); ++j) {
                if (c[j] > 0) md.counts.emplace(alphabet[j], c[j]);
            }
            out.push_back(std::move(md));
            return;
        }
        for (int x = left; x >= 0; --x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (m >= 0 && !alphabet.empty()) rec(0, m);
    return out;
}

namespace {

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void require_nonempty(const MultiDegree& md) {
    if (md.total() < 1) throw EmptyMultiDegree("multidegree has total degree 0");
}

/// Depth-first walk over the distinct sequences realizing a multiset of
/// letters. `extend(state, letter)` returns the child state or nullopt to
/// prune the subtree; `leaf(state)` returns false to stop the walk.
template <class State>
class WordWalker {
public:
    using Extend = std::function<std::optional<State>(const State*, const Letter&)>;
    using Leaf = std::function<bool(const State&)>;

    WordWalker(const MultiDegree& md, Extend extend, Leaf leaf)
        : extend_(std::move(extend)), leaf_(std::move(leaf)) {
        for (const auto& [l, n] : md.counts) {
            alphabet_.push_back(l);
            remaining_.push_back(n);
        }
        left_ = md.total();
    }

    void run(bool fix_first) {
        stopped_ = false;
        const std::size_t first_end = fix_first ? 1 : alphabet_.size();
        for (std::size_t i = 0; i < first_end && !stopped_; ++i) step(nullptr, i);
    }

private:
    void step(const State* parent, std::size_t i) {
        auto child = extend_(parent, alphabet_[i]);
        if (!child) return;
        --remaining_[i];
        --left_;
        if (left_ == 0) {
            if (!leaf_(*child)) stopped_ = true;
        } else {
            for (std::size_t j = 0; j < alphabet_.size() && !stopped_; ++j) {
                if (remaining_[j] > 0) step(&*child, j);
            }
        }
        ++remaining_[i];
        ++left_;
    }

    Extend extend_;
    Leaf leaf_;
    std::vector<Letter> alphabet_;
    std::vector<int> remaining_;
    int left_ = 0;
    bool stopped_ = false;
};

std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> factors;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == vars.size()) {
            factors.emplace_back(vars[i], static_cast<std::uint32_t>(left));
            out.push_back(Monomial::from_factors(factors));
            factors.pop_back();
            return;
        }
        for (int e = left; e >= 0; --e) {
            factors.emplace_back(vars[i], static_cast<std::uint32_t>(e));
            rec(i + 1, left - e);
            factors.pop_back();
        }
    };
    if (!vars.empty()) rec(0, degree);
    return out;
}

/// All monomials with the prescribed degree in each letter's variables, in
/// graded-lex order.
MonomialBasis multidegree_basis(const GradingSpec& spec, const MultiDegree& md) {
    std::vector<Monomial> basis{Monomial{}};
    for (const auto& [l, n] : md.counts) {
        auto part = monomials_of_degree(letter_variables(spec, l), n);
        std::vector<Monomial> next;
        next.reserve(basis.size() * part.size());
        for (const auto& a : basis) {
            for (const auto& b : part) next.push_back(a * b);
        }
        basis = std::move(next);
    }
    std::sort(basis.begin(), basis.end());
    return MonomialBasis(std::move(basis));
}

/// Flattens all entries of `m` into one integer row over entry-major
/// columns (entry * |basis| + monomial index), clearing denominators.
std::vector<Integer> matrix_row(const GenericMatrix& m, const MonomialBasis& basis) {
    const std::size_t b = basis.size();
    std::vector<Integer> row(m.entries().size() * b);
    Integer lcm = 1;
    for (const auto& e : m.entries()) {
        for (const auto& [mono, c] : e.terms()) {
            if (c.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        for (const auto& [mono, c] : m.entries()[i].terms()) {
            row[i * b + basis.index_of(mono)] = c.get_num() * (lcm / c.get_den());
        }
    }
    return row;
}

void validate(const GradingSpec& spec, int k, const MultiDegree& md) {
    for (const auto& [l, n] : md.counts) {
        if (!spec.in_support(l.degree)) {
            throw UnknownLetter("degree " + l.degree.to_string() + " is outside the support of " + spec.name());
        }
        if (l.index < 1 || l.index > k) {
            throw UnknownLetter("generator index " + std::to_string(l.index) + " outside 1.." + std::to_string(k));
        }
    }
}

std::string memo_key(const GradingSpec& spec, int k, const MultiDegree& md, bool fix_first) {
    return spec.name() + "|k" + std::to_string(k) + (fix_first ? "|first|" : "|all|") + md.key();
}

Degree zero_degree(const GradingSpec& spec) {
    Degree z = spec.support.front();
    z.a = 0;
    z.b = 0;
    return z;
}

}  // namespace

Integer word_count(const MultiDegree& md, bool fix_first) {
    require_nonempty(md);
    Integer num = factorial(md.total() - (fix_first ? 1 : 0));
    bool first = true;
    for (const auto& [l, n] : md.counts) {
        num /= factorial(n - ((fix_first && first) ? 1 : 0));
        first = false;
    }
    return num;
}

std::vector<LieWord> enumerate_words(const MultiDegree& md, bool fix_first) {
    require_nonempty(md);
    std::vector<LieWord> out;
    WordWalker<LieWord> walker(
        md,
        [](const LieWord* parent, const Letter& l) -> std::optional<LieWord> {
            LieWord w = parent ? *parent : LieWord{};
            w.push_back(l);
            return w;
        },
        [&](const LieWord& w) {
            out.push_back(w);
            return true;
        });
    walker.run(fix_first);
    return out;
}

MemoStore::MemoStore(std::optional<std::filesystem::path> directory) : directory_(std::move(directory)) {
    if (!directory_) return;
    std::ifstream in(*directory_ / "component_dims.tsv");
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.rfind('\t');
        if (tab == std::string::npos) continue;
        entries_[line.substr(0, tab)] = std::stoull(line.substr(tab + 1));
    }
}

std::optional<std::filesystem::path> MemoStore::directory_from_environment() {
    const char* v = std::getenv(kEnvVar);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::filesystem::path(v);
}

std::optional<std::size_t> MemoStore::find(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void MemoStore::insert(const std::string& key, std::size_t value) {
    std::lock_guard lock(mutex_);
    entries_.try_emplace(key, value);
}

std::size_t MemoStore::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

void MemoStore::flush() const {
    if (!directory_) return;
    std::lock_guard lock(mutex_);
    std::filesystem::create_directories(*directory_);
    const auto target = *directory_ / "component_dims.tsv";
    const auto tmp = *directory_ / "component_dims.tsv.tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
    }
    std::filesystem::rename(tmp, target);
}

std::size_t component_dim(const GradingSpec& spec, int k, const MultiDegree& md, const SpanOptions& opts) {
    require_nonempty(md);
    validate(spec, k, md);
    if (md.total() == 1) return spec.dim(md.counts.begin()->first.degree) > 0 ? 1 : 0;

    const std::string key = memo_key(spec, k, md, opts.fix_first);
    if (opts.memo) {
        if (auto hit = opts.memo->find(key)) return *hit;
    }

    const Integer words = word_count(md, opts.fix_first);
    if (words > Integer(std::to_string(opts.word_cap))) {
        throw ResourceLimit("multidegree " + md.key() + " has " + words.get_str() +
                            " words, above the word cap of " + std::to_string(opts.word_cap));
    }

    GeneratorMap gens;
    for (const auto& [l, n] : md.counts) gens.emplace(l, generic_generator(spec, l));
    const MonomialBasis basis = multidegree_basis(spec, md);
    RankAccumulator acc(static_cast<std::size_t>(spec.n * spec.n) * basis.size());

    WordWalker<GenericMatrix> walker(
        md,
        [&](const GenericMatrix* parent, const Letter& l) -> std::optional<GenericMatrix> {
            const GenericMatrix& g = gens.at(l);
            if (parent == nullptr) return g;
            GenericMatrix b = bracket(*parent, g);
            if (b.is_zero()) return std::nullopt;  // every extension vanishes too
            return b;
        },
        [&](const GenericMatrix& value) {
            acc.add(matrix_row(value, basis));
            return !acc.full();
        });
    walker.run(opts.fix_first);

    const std::size_t dim = acc.rank();
    if (opts.memo) opts.memo->insert(key, dim);
    return dim;
}

std::map<MultiDegree, std::size_t> component_dims(const GradingSpec& spec, int k, int m, const SpanOptions& opts) {
    std::map<MultiDegree, std::size_t> out;
    for (const auto& md : multidegrees(spec, k, m)) out.emplace(md, component_dim(spec, k, md, opts));
    return out;
}

std::size_t a_m_bruteforce(const GradingSpec& spec, int k, int m, const SpanOptions& opts) {
    if (m < 1) throw EmptyMultiDegree("a_m needs m >= 1");
    std::size_t sum = 0;
    for (const auto& md : multidegrees(spec, k, m)) sum += component_dim(spec, k, md, opts);
    return sum;
}

Integer GrowthTable::growth(int upto) const {
    Integer g = 0;
    for (const auto& [m, a] : entries) {
        if (m > upto) break;
        g += a;
    }
    return g;
}

std::vector<std::pair<int, Integer>> GrowthTable::partial_sums() const {
    std::vector<std::pair<int, Integer>> out;
    Integer g = 0;
    for (const auto& [m, a] : entries) {
        g += a;
        out.emplace_back(m, g);
    }
    return out;
}

GrowthTable bruteforce_table(const GradingSpec& spec, int k, int m_max, const SpanOptions& opts) {
    GrowthTable t;
    t.family = spec.family;
    t.n = spec.n;
    t.k = k;
    t.method = Method::brute_force;
    for (int m = 1; m <= m_max; ++m) t.entries[m] = Integer(std::to_string(a_m_bruteforce(spec, k, m, opts)));
    return t;
}

namespace {

struct AssocState {
    GenericMatrix product;
    Degree degree;
    LieWord word;
};

/// Visits every admissible associative word of length m with its product.
void walk_assoc(const GradingSpec& spec, int k, int m, bool filtered,
                const std::function<void(const AssocState&)>& leaf) {
    const auto alphabet = letters(spec, k);
    const Degree zero = zero_degree(spec);
    GeneratorMap gens = generic_generators(spec, k);
    std::function<void(const AssocState&)> rec = [&](const AssocState& s) {
        if (static_cast<int>(s.word.size()) == m) {
            leaf(s);
            return;
        }
        for (const auto& l : alphabet) {
            if (filtered) {
                if (s.word.size() == 1 && l == s.word.front()) continue;
                if (s.degree == zero && l.degree == zero) continue;
            }
            AssocState next{multiply(s.product, gens.at(l)), s.degree + l.degree, s.word};
            next.word.push_back(l);
            rec(next);
        }
    };
    if (m < 1) return;
    for (const auto& l : alphabet) rec(AssocState{gens.at(l), l.degree, LieWord{l}});
}

}  // namespace

std::vector<LieWord> assoc_words_M(const GradingSpec& spec, int k, int m) {
    if (m < 1) throw EmptyMultiDegree("word length must be >= 1");
    std::vector<LieWord> out;
    const auto alphabet = letters(spec, k);
    const Degree zero = zero_degree(spec);
    LieWord w;
    std::function<void(const Degree&)> rec = [&](const Degree& prefix) {
        if (static_cast<int>(w.size()) == m) {
            out.push_back(w);
            return;
        }
        for (const auto& l : alphabet) {
            if (w.size() == 1 && l == w.front()) continue;
            if (prefix == zero && l.degree == zero) continue;
            w.push_back(l);
            rec(prefix + l.degree);
            w.pop_back();
        }
    };
    for (const auto& l : alphabet) {
        w = {l};
        rec(l.degree);
    }
    return out;
}

std::map<MultiDegree, std::size_t> assoc_dims(const GradingSpec& spec, int k, int m, bool filtered) {
    if (m < 1) throw EmptyMultiDegree("word length must be >= 1");
    struct Group {
        MonomialBasis basis;
        RankAccumulator acc;
    };
    std::map<MultiDegree, Group> groups;
    walk_assoc(spec, k, m, filtered, [&](const AssocState& s) {
        auto md = MultiDegree::of_word(s.word);
        auto it = groups.find(md);
        if (it == groups.end()) {
            auto basis = multidegree_basis(spec, md);
            const std::size_t width = static_cast<std::size_t>(spec.n * spec.n) * basis.size();
            it = groups.emplace(md, Group{std::move(basis), RankAccumulator(width)}).first;
        }
        it->second.acc.add(matrix_row(s.product, it->second.basis));
    });
    std::map<MultiDegree, std::size_t> out;
    for (const auto& [md, g] : groups) out.emplace(md, g.acc.rank());
    return out;
}

std::size_t assoc_component_dim(const GradingSpec& spec, int k, int m) {
    std::size_t sum = 0;
    for (const auto& [md, d] : assoc_dims(spec, k, m, true)) sum += d;
    return sum;
}

std::size_t assoc_full_dim(const GradingSpec& spec, int k, int m) {
    std::size_t sum = 0;
    for (const auto& [md, d] : assoc_dims(spec, k, m, false)) sum += d;
    return sum;
}

}  // namespace liegrowth
