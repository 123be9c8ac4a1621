#pragma once

// Dimensions of multihomogeneous components of relatively free graded Lie
// algebras, computed as exact ranks of left-normed word evaluations on
// generic matrices.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "liegrowth/graded_model.hpp"

namespace liegrowth {

/// Occurrence count per letter. Only positive counts are stored.
struct MultiDegree {
    std::map<Letter, int> counts;

    MultiDegree() = default;
    explicit MultiDegree(std::map<Letter, int> c);
    static MultiDegree of_word(const LieWord& word);

    int total() const;
    int count(const Letter& l) const;
    /// Canonical text encoding, e.g. "0#1:2 1#1:1".
    std::string key() const;

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) { return a.counts < b.counts; }
};

/// All multidegrees of total `m` over the letters of (spec, k), in
/// lexicographic order of the count vector.
std::vector<MultiDegree> multidegrees(const GradingSpec& spec, int k, int m);

/// Number of distinct letter sequences realizing `md`.
Integer word_count(const MultiDegree& md, bool fix_first);

/// Distinct letter sequences realizing `md`; with `fix_first`, only those
/// starting with the smallest letter of `md`. Throws EmptyMultiDegree.
std::vector<LieWord> enumerate_words(const MultiDegree& md, bool fix_first);

/// Thread-safe store of computed component dimensions. When constructed
/// with a directory, entries are loaded from and flushed to a file there.
class MemoStore {
public:
    /// In-memory only when `directory` is empty.
    explicit MemoStore(std::optional<std::filesystem::path> directory = std::nullopt);
    /// Value of LIEGROWTH_CACHE_DIR, if set and nonempty.
    static std::optional<std::filesystem::path> directory_from_environment();

    std::optional<std::size_t> find(const std::string& key) const;
    void insert(const std::string& key, std::size_t value);
    std::size_t size() const;
    void flush() const;

    static constexpr const char* kEnvVar = "LIEGROWTH_CACHE_DIR";

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::size_t> entries_;
    std::optional<std::filesystem::path> directory_;
};

struct SpanOptions {
    bool fix_first = false;
    /// Refuse multidegrees with more words than this.
    std::uint64_t word_cap = 1'000'000;
    MemoStore* memo = nullptr;
};

/// Dimension of the component of `md` in the relatively free algebra.
std::size_t component_dim(const GradingSpec& spec, int k, const MultiDegree& md,
                          const SpanOptions& opts = {});

/// component_dim for every multidegree of total m.
std::map<MultiDegree, std::size_t> component_dims(const GradingSpec& spec, int k, int m,
                                                  const SpanOptions& opts = {});

std::size_t a_m_bruteforce(const GradingSpec& spec, int k, int m, const SpanOptions& opts = {});

enum class Method { brute_force, formula };

/// a_m values for consecutive m; growth(n) is the partial sum.
struct GrowthTable {
    Family family = Family::SL2_Z2;
    int n = 2;
    int k = 1;
    Method method = Method::brute_force;
    std::map<int, Integer> entries;

    Integer growth(int upto) const;
    std::vector<std::pair<int, Integer>> partial_sums() const;
};

GrowthTable bruteforce_table(const GradingSpec& spec, int k, int m_max, const SpanOptions& opts = {});

/// Associative words of length m: the first two letters differ, and a
/// letter of degree 0 never follows a prefix of total degree 0.
std::vector<LieWord> assoc_words_M(const GradingSpec& spec, int k, int m);

/// Rank of the entrywise coefficient vectors of the products of words, per
/// multidegree. `filtered` selects assoc_words_M instead of all words.
std::map<MultiDegree, std::size_t> assoc_dims(const GradingSpec& spec, int k, int m, bool filtered);

std::size_t assoc_component_dim(const GradingSpec& spec, int k, int m);
/// Dimension of the degree-m part of the associative algebra generated by
/// the generic generators (no filter).
std::size_t assoc_full_dim(const GradingSpec& spec, int k, int m);

}  // namespace liegrowth
