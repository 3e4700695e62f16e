#ifndef NOVALG_COMBINATORICS_TABLEAUX_HPP
#define NOVALG_COMBINATORICS_TABLEAUX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/combinatorics/partition.hpp>

namespace novalg::combinatorics
{

// Labelling of the Young diagram of a partition by positive integers,
// stored row by row.
class tableau
{
public:
    explicit tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
    {
        std::vector<int> lengths;
        for (const auto &r : rows_) {
            if (r.empty()) {
                throw std::invalid_argument("tableau rows must be nonempty");
            }
            for (int v : r) {
                if (v < 1) {
                    throw std::invalid_argument("tableau labels must be positive");
                }
            }
            lengths.push_back(static_cast<int>(r.size()));
        }
        shape_ = partition(std::move(lengths));
    }

    [[nodiscard]] const partition &shape() const noexcept
    {
        return shape_;
    }
    [[nodiscard]] const std::vector<std::vector<int>> &rows() const noexcept
    {
        return rows_;
    }
    [[nodiscard]] int max_label() const noexcept
    {
        int m = 0;
        for (const auto &r : rows_) {
            for (int v : r) {
                m = std::max(m, v);
            }
        }
        return m;
    }

    // Shape of the cells labelled at most h.
    [[nodiscard]] partition sub_shape(int h) const
    {
        std::vector<int> lengths;
        for (const auto &r : rows_) {
            int c = static_cast<int>(std::count_if(r.begin(), r.end(), [h](int v) { return v <= h; }));
            lengths.push_back(c);
        }
        return partition::from_multiset(std::move(lengths));
    }

    [[nodiscard]] bool weakly_increasing() const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c > 0 && rows_[r][c] < rows_[r][c - 1]) {
                    return false;
                }
                if (r > 0 && rows_[r][c] < rows_[r - 1][c]) {
                    return false;
                }
            }
        }
        return true;
    }

    // Rows weakly, columns strictly increasing.
    [[nodiscard]] bool semistandard() const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c > 0 && rows_[r][c] < rows_[r][c - 1]) {
                    return false;
                }
                if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) {
                    return false;
                }
            }
        }
        return true;
    }

    // Rows as space separated labels joined by " / ".
    [[nodiscard]] std::string to_string() const
    {
        std::string s;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) {
                s += " / ";
            }
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) {
                    s += ' ';
                }
                s += std::to_string(rows_[r][c]);
            }
        }
        return s;
    }

    friend auto operator<=>(const tableau &a, const tableau &b)
    {
        return a.rows_ <=> b.rows_;
    }
    friend bool operator==(const tableau &a, const tableau &b)
    {
        return a.rows_ == b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
    partition shape_;
};

namespace detail
{

struct tableau_fill
{
    int k;
    std::vector<std::vector<int>> rows;
    std::vector<tableau> out;

    void run(std::size_t r, std::size_t c)
    {
        if (r == rows.size()) {
            accept();
            return;
        }
        if (c == rows[r].size()) {
            run(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) {
            lo = std::max(lo, rows[r][c - 1]);
        }
        if (r > 0) {
            lo = std::max(lo, rows[r - 1][c]);
        }
        for (int v = lo; v <= k; ++v) {
            rows[r][c] = v;
            run(r, c + 1);
        }
    }

    void accept()
    {
        // count[h] = number of cells labelled h; deepest[h] = last row holding h.
        std::vector<int> count(static_cast<std::size_t>(k + 1), 0);
        std::vector<int> deepest(static_cast<std::size_t>(k + 1), -1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (int v : rows[r]) {
                ++count[static_cast<std::size_t>(v)];
                deepest[static_cast<std::size_t>(v)] = static_cast<int>(r);
            }
        }
        int below = 0;
        for (int h = 1; h <= k; ++h) {
            if (count[static_cast<std::size_t>(h)] == 0) {
                return;
            }
            if (deepest[static_cast<std::size_t>(h)] + 1 > below + 1) {
                return;
            }
            below += count[static_cast<std::size_t>(h)];
        }
        out.emplace_back(rows);
    }
};

} // namespace detail

// T_{p,k}: surjective labellings by [k], weakly increasing along rows and
// columns, with the cells labelled h inside the first N_{<h}+1 rows.
// Listed in lexicographic order of the row-major label sequence.
inline std::vector<tableau> enumerate_tableaux(const partition &p, int k)
{
    if (k < 1) {
        throw std::invalid_argument("enumerate_tableaux: k must be positive");
    }
    if (p.is_zero()) {
        return {};
    }
    detail::tableau_fill fill{k, {}, {}};
    for (int len : p.parts()) {
        fill.rows.emplace_back(static_cast<std::size_t>(len), 0);
    }
    fill.run(0, 0);
    return std::move(fill.out);
}

namespace detail
{

inline void standard_rec(std::vector<int> &lengths, const partition &p, int next, std::vector<std::vector<int>> &rows,
                         std::vector<tableau> &out)
{
    if (next > p.size()) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t r = 0; r < lengths.size(); ++r) {
        bool fits = lengths[r] < p[r] && (r == 0 || lengths[r] < lengths[r - 1]);
        if (!fits) {
            continue;
        }
        rows[r][static_cast<std::size_t>(lengths[r])] = next;
        ++lengths[r];
        standard_rec(lengths, p, next + 1, rows, out);
        --lengths[r];
    }
}

} // namespace detail

// Standard Young tableaux of shape p, built by adding 1,2,.. at outer corners.
inline std::vector<tableau> enumerate_standard_tableaux(const partition &p)
{
    std::vector<tableau> out;
    if (p.is_zero()) {
        return out;
    }
    std::vector<int> lengths(static_cast<std::size_t>(p.length()), 0);
    std::vector<std::vector<int>> rows;
    for (int len : p.parts()) {
        rows.emplace_back(static_cast<std::size_t>(len), 0);
    }
    detail::standard_rec(lengths, p, 1, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Semistandard tableaux of shape p with label set exactly [k].
inline std::vector<tableau> enumerate_semistandard_tableaux(const partition &p, int k)
{
    std::vector<tableau> out;
    if (p.is_zero()) {
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int len : p.parts()) {
        rows.emplace_back(static_cast<std::size_t>(len), 0);
    }
    auto rec = [&](auto &&self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            std::vector<bool> used(static_cast<std::size_t>(k + 1), false);
            for (const auto &row : rows) {
                for (int v : row) {
                    used[static_cast<std::size_t>(v)] = true;
                }
            }
            for (int h = 1; h <= k; ++h) {
                if (!used[static_cast<std::size_t>(h)]) {
                    return;
                }
            }
            out.emplace_back(rows);
            return;
        }
        if (c == rows[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) {
            lo = std::max(lo, rows[r][c - 1]);
        }
        if (r > 0) {
            lo = std::max(lo, rows[r - 1][c] + 1);
        }
        for (int v = lo; v <= k; ++v) {
            rows[r][c] = v;
            self(self, r, c + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace novalg::combinatorics

#endif
