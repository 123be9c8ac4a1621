#include "liegrowth/tableaux.hpp"

#include <cassert>
#include <sstream>

namespace liegrowth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidShape("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidShape("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw InvalidShape("empty part in '" + std::string(text) + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidShape("bad part '" + item + "'");
        }
        if (used != item.size()) throw InvalidShape("bad part '" + item + "'");
        if (v == 0 && parts.empty() && text == "0") break;
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

bool Tableau::is_semistandard() const {
    if (rows.size() != shape.rows()) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.part(r)) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

namespace {

// Fills columns left to right; within a column, top to bottom.
class ColumnFiller {
public:
    ColumnFiller(const Partition& shape, int k) : shape_(shape), k_(k) {
        rows_.resize(shape.rows());
        for (std::size_t r = 0; r < shape.rows(); ++r) rows_[r].assign(static_cast<std::size_t>(shape.part(r)), 0);
        for (int c = 0; c < shape.part(0); ++c) {
            int h = 0;
            while (static_cast<std::size_t>(h) < shape.rows() && shape.part(static_cast<std::size_t>(h)) > c) ++h;
            heights_.push_back(h);
        }
    }

    void run(const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
        // a column of height h needs h distinct letters
        if (!heights_.empty() && heights_.front() > k_) return;
        visit_ = &visit;
        fill(0, 0);
    }

private:
    void fill(std::size_t col, std::size_t row) {
        if (col == heights_.size()) {
            (*visit_)(rows_);
            return;
        }
        const auto h = static_cast<std::size_t>(heights_[col]);
        if (row == h) {
            fill(col + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, rows_[row][col - 1]);
        if (row > 0) lo = std::max(lo, rows_[row - 1][col] + 1);
        // leave room for the strictly increasing entries below
        const int hi = k_ - static_cast<int>(h - 1 - row);
        for (int v = lo; v <= hi; ++v) {
            rows_[row][col] = v;
            fill(col, row + 1);
        }
    }

    const Partition& shape_;
    int k_;
    std::vector<int> heights_;
    std::vector<std::vector<int>> rows_;
    const std::function<void(const std::vector<std::vector<int>>&)>* visit_ = nullptr;
};

}  // namespace

void for_each_ssyt(const Partition& shape, int k, const std::function<void(const Tableau&)>& visit) {
    if (k < 1) return;
    if (shape.rows() == 0) {
        visit(Tableau{shape, {}});
        return;
    }
    ColumnFiller filler(shape, k);
    filler.run([&](const std::vector<std::vector<int>>& rows) { visit(Tableau{shape, rows}); });
}

Integer ssyt_count(const Partition& shape, int k) {
    if (k < 1) return shape.rows() == 0 ? 1 : 0;
    if (shape.rows() == 0) return 1;
    if (shape.rows() > static_cast<std::size_t>(k)) return 0;
    Integer count = 0;
    ColumnFiller filler(shape, k);
    filler.run([&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

Integer binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

Integer schur_dim_one_row(int p, int k) {
    if (p < 0) throw InvalidShape("negative row length");
    if (k < 1) return p == 0 ? 1 : 0;
    return binomial(p + k - 1, k - 1);
}

Integer schur_dim_two_row(int a, int b, int k) {
    if (b < 0 || a < b) {
        throw InvalidShape("two-row shape (" + std::to_string(a) + "," + std::to_string(b) + ") is not a partition");
    }
    if (k < 1) return (a == 0 && b == 0) ? 1 : 0;
    if (k == 1) return b == 0 ? schur_dim_one_row(a, 1) : Integer(0);
    Rational v(Integer(a - b + 1), Integer(k - 1));
    v *= Rational(binomial(a + k - 1, k - 2) * binomial(b + k - 2, k - 2));
    v.canonicalize();
    if (v.get_den() != 1) throw InvalidShape("two-row tableau count is not an integer");
    return v.get_num();
}

}  // namespace liegrowth
