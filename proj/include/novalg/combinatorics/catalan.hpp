#ifndef NOVALG_COMBINATORICS_CATALAN_HPP
#define NOVALG_COMBINATORICS_CATALAN_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>

namespace novalg::combinatorics
{

inline integer catalan_number(long n)
{
    return binomial(2 * n, n) / (n + 1);
}

// Word w_1..w_i with w_1+..+w_j <= j-1 for j < i and total i-1.
class catalan_word
{
public:
    explicit catalan_word(std::vector<int> letters) : letters_(std::move(letters))
    {
        if (letters_.empty()) {
            throw std::invalid_argument("catalan word must be nonempty");
        }
        long sum = 0;
        const long i = static_cast<long>(letters_.size());
        for (long j = 1; j <= i; ++j) {
            int l = letters_[static_cast<std::size_t>(j - 1)];
            if (l < 0) {
                throw std::invalid_argument("catalan word letters must be nonnegative");
            }
            sum += l;
            if (j < i && sum > j - 1) {
                throw std::invalid_argument("catalan word prefix sum too large");
            }
        }
        if (sum != i - 1) {
            throw std::invalid_argument("catalan word total must be length - 1");
        }
    }

    [[nodiscard]] const std::vector<int> &letters() const noexcept
    {
        return letters_;
    }
    [[nodiscard]] int length() const noexcept
    {
        return static_cast<int>(letters_.size());
    }
    // 1-based access, as in the letter names w_1..w_i.
    [[nodiscard]] int at(int j) const
    {
        return letters_.at(static_cast<std::size_t>(j - 1));
    }

    // d_j = j-1-(w_1+..+w_j); nonnegative with d_1 = d_i = 0.
    [[nodiscard]] std::vector<int> auxiliary() const
    {
        std::vector<int> d(letters_.size());
        int sum = 0;
        for (std::size_t j = 0; j < letters_.size(); ++j) {
            sum += letters_[j];
            d[j] = static_cast<int>(j) - sum;
        }
        return d;
    }

    // c_w = prod_j binom(d_j + w_j, w_j).
    [[nodiscard]] integer coefficient() const
    {
        auto d = auxiliary();
        integer c = 1;
        for (std::size_t j = 0; j < letters_.size(); ++j) {
            c *= binomial(d[j] + letters_[j], letters_[j]);
        }
        return c;
    }

    // Digits when every letter is below 10, dot separated otherwise.
    [[nodiscard]] std::string to_string() const
    {
        bool small = true;
        for (int l : letters_) {
            small = small && l < 10;
        }
        std::string s;
        for (std::size_t j = 0; j < letters_.size(); ++j) {
            if (!small && j) {
                s += '.';
            }
            s += std::to_string(letters_[j]);
        }
        return s;
    }

    friend auto operator<=>(const catalan_word &, const catalan_word &) = default;
    friend bool operator==(const catalan_word &, const catalan_word &) = default;

private:
    std::vector<int> letters_;
};

// Parses the digit form ("0002013") or the dot form ("0.0.10.1...").
inline catalan_word parse_catalan_word(std::string_view text)
{
    std::vector<int> letters;
    if (text.find('.') != std::string_view::npos) {
        int cur = 0;
        bool have = false;
        for (char ch : text) {
            if (ch == '.') {
                if (!have) {
                    throw std::invalid_argument("bad catalan word");
                }
                letters.push_back(cur);
                cur = 0;
                have = false;
            } else if (ch >= '0' && ch <= '9') {
                cur = cur * 10 + (ch - '0');
                have = true;
            } else {
                throw std::invalid_argument("bad catalan word");
            }
        }
        if (!have) {
            throw std::invalid_argument("bad catalan word");
        }
        letters.push_back(cur);
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw std::invalid_argument("bad catalan word");
            }
            letters.push_back(ch - '0');
        }
    }
    return catalan_word(std::move(letters));
}

namespace detail
{

inline void catalan_rec(int i, int j, int sum, std::vector<int> &cur, std::vector<catalan_word> &out)
{
    if (j == i) {
        cur.push_back(i - 1 - sum);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int l = 0; sum + l <= j - 1; ++l) {
        cur.push_back(l);
        catalan_rec(i, j + 1, sum + l, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// K_i in lexicographic order.
inline std::vector<catalan_word> enumerate_catalan_words(int i)
{
    if (i < 1) {
        throw std::invalid_argument("enumerate_catalan_words: i must be positive");
    }
    std::vector<catalan_word> out;
    std::vector<int> cur;
    detail::catalan_rec(i, 1, 0, cur, out);
    return out;
}

// u v_1 .. v_{j-1} (v_j + 1).
inline catalan_word magma_join(const catalan_word &u, const catalan_word &v)
{
    std::vector<int> w = u.letters();
    w.insert(w.end(), v.letters().begin(), v.letters().end());
    ++w.back();
    return catalan_word(std::move(w));
}

// Unique (u, v) with u v-joined giving w; split after the last interior zero of d(w).
inline std::pair<catalan_word, catalan_word> magma_factor(const catalan_word &w)
{
    const int i = w.length();
    if (i < 2) {
        throw std::invalid_argument("magma_factor: the length-1 word is a generator");
    }
    auto d = w.auxiliary();
    int j = 1;
    for (int h = 1; h < i; ++h) {
        if (d[static_cast<std::size_t>(h - 1)] == 0) {
            j = h;
        }
    }
    const auto &l = w.letters();
    std::vector<int> u(l.begin(), l.begin() + j);
    std::vector<int> v(l.begin() + j, l.end());
    --v.back();
    return {catalan_word(std::move(u)), catalan_word(std::move(v))};
}

struct binary_tree_node;

// Planar binary rooted tree; immutable, structure shared between copies.
class binary_tree
{
public:
    binary_tree() = default; // the single leaf

    static binary_tree leaf()
    {
        return {};
    }
    static binary_tree join(const binary_tree &left, const binary_tree &right)
    {
        binary_tree t;
        t.node_ = make_node(left, right);
        return t;
    }

    [[nodiscard]] bool is_leaf() const noexcept
    {
        return !node_;
    }
    [[nodiscard]] int leaves() const noexcept;
    [[nodiscard]] const binary_tree &left() const;
    [[nodiscard]] const binary_tree &right() const;

    // "x" for a leaf, "(L,R)" otherwise.
    [[nodiscard]] std::string to_string() const
    {
        if (is_leaf()) {
            return "x";
        }
        return "(" + left().to_string() + "," + right().to_string() + ")";
    }

    friend bool operator==(const binary_tree &a, const binary_tree &b)
    {
        if (a.is_leaf() || b.is_leaf()) {
            return a.is_leaf() && b.is_leaf();
        }
        return a.node_ == b.node_ || (a.left() == b.left() && a.right() == b.right());
    }

private:
    static std::shared_ptr<const binary_tree_node> make_node(const binary_tree &left, const binary_tree &right);

    std::shared_ptr<const binary_tree_node> node_;
};

struct binary_tree_node
{
    binary_tree left;
    binary_tree right;
    int leaves;
};

inline int binary_tree::leaves() const noexcept
{
    return node_ ? node_->leaves : 1;
}

inline const binary_tree &binary_tree::left() const
{
    if (!node_) {
        throw std::logic_error("binary_tree: a leaf has no children");
    }
    return node_->left;
}

inline const binary_tree &binary_tree::right() const
{
    if (!node_) {
        throw std::logic_error("binary_tree: a leaf has no children");
    }
    return node_->right;
}

inline std::shared_ptr<const binary_tree_node> binary_tree::make_node(const binary_tree &left,
                                                                      const binary_tree &right)
{
    return std::make_shared<const binary_tree_node>(binary_tree_node{left, right, left.leaves() + right.leaves()});
}

// All planar binary trees with i leaves.
inline std::vector<binary_tree> enumerate_binary_trees(int i)
{
    if (i < 1) {
        throw std::invalid_argument("enumerate_binary_trees: i must be positive");
    }
    std::vector<std::vector<binary_tree>> by_size(static_cast<std::size_t>(i + 1));
    by_size[1] = {binary_tree::leaf()};
    for (int n = 2; n <= i; ++n) {
        for (int a = 1; a < n; ++a) {
            for (const auto &l : by_size[static_cast<std::size_t>(a)]) {
                for (const auto &r : by_size[static_cast<std::size_t>(n - a)]) {
                    by_size[static_cast<std::size_t>(n)].push_back(binary_tree::join(l, r));
                }
            }
        }
    }
    return by_size[static_cast<std::size_t>(i)];
}

namespace detail
{

// Each left edge below an inner node v is sent to the rightmost leaf of v's
// right subtree; returns the leaf count of t.
inline int walk_word(const binary_tree &t, int offset, std::vector<int> &w)
{
    if (t.is_leaf()) {
        return 1;
    }
    int l = walk_word(t.left(), offset, w);
    int r = walk_word(t.right(), offset + l, w);
    ++w[static_cast<std::size_t>(offset + l + r - 1)];
    return l + r;
}

inline int walk_inc(const binary_tree &t, int offset, int target, std::vector<int> &phi)
{
    if (t.is_leaf()) {
        if (target >= 0) {
            phi[static_cast<std::size_t>(offset)] = target + 1;
        }
        return 1;
    }
    const int l = t.left().leaves();
    const int r = t.right().leaves();
    walk_inc(t.left(), offset, offset + l + r - 1, phi);
    walk_inc(t.right(), offset + l, target, phi);
    return l + r;
}

} // namespace detail

// w_j counts the left edges whose walk ends at leaf j.
inline catalan_word binary_tree_word(const binary_tree &t)
{
    std::vector<int> w(static_cast<std::size_t>(t.leaves()), 0);
    detail::walk_word(t, 0, w);
    return catalan_word(std::move(w));
}

inline binary_tree word_binary_tree(const catalan_word &w)
{
    if (w.length() == 1) {
        return binary_tree::leaf();
    }
    auto [u, v] = magma_factor(w);
    return binary_tree::join(word_binary_tree(u), word_binary_tree(v));
}

// phi : [i-1] -> [i] with phi(k) > k, stored as phi(1),..,phi(i-1).
class inc_map
{
public:
    explicit inc_map(std::vector<int> values) : values_(std::move(values))
    {
        const int i = static_cast<int>(values_.size()) + 1;
        for (int k = 1; k < i; ++k) {
            int v = values_[static_cast<std::size_t>(k - 1)];
            if (v <= k || v > i) {
                throw std::invalid_argument("inc map requires k < phi(k) <= i");
            }
        }
    }

    [[nodiscard]] const std::vector<int> &values() const noexcept
    {
        return values_;
    }
    // Size of the codomain.
    [[nodiscard]] int codomain() const noexcept
    {
        return static_cast<int>(values_.size()) + 1;
    }

    // (|phi^-1(1)|, .., |phi^-1(i)|).
    [[nodiscard]] catalan_word multiplicity_word() const
    {
        std::vector<int> w(static_cast<std::size_t>(codomain()), 0);
        for (int v : values_) {
            ++w[static_cast<std::size_t>(v - 1)];
        }
        return catalan_word(std::move(w));
    }

    friend auto operator<=>(const inc_map &, const inc_map &) = default;
    friend bool operator==(const inc_map &, const inc_map &) = default;

private:
    std::vector<int> values_;
};

// Inc(i) in lexicographic order of value vectors.
inline std::vector<inc_map> enumerate_inc(int i)
{
    if (i < 1) {
        throw std::invalid_argument("enumerate_inc: i must be positive");
    }
    std::vector<inc_map> out;
    std::vector<int> v(static_cast<std::size_t>(i - 1));
    for (int k = 1; k < i; ++k) {
        v[static_cast<std::size_t>(k - 1)] = k + 1;
    }
    while (true) {
        out.emplace_back(v);
        int k = i - 1;
        while (k >= 1 && v[static_cast<std::size_t>(k - 1)] == i) {
            v[static_cast<std::size_t>(k - 1)] = k + 1;
            --k;
        }
        if (k < 1) {
            return out;
        }
        ++v[static_cast<std::size_t>(k - 1)];
    }
}

namespace detail
{

inline std::vector<int> canonical_values(const std::vector<int> &w)
{
    const int i = static_cast<int>(w.size());
    if (i == 1) {
        return {};
    }
    int j = 1;
    while (w[static_cast<std::size_t>(j - 1)] == 0) {
        ++j;
    }
    const int a = w[static_cast<std::size_t>(j - 1)];
    std::vector<int> rest(static_cast<std::size_t>(j - a), 0);
    rest.insert(rest.end(), w.begin() + j, w.end());
    auto inner = canonical_values(rest);
    std::vector<int> phi(static_cast<std::size_t>(i - 1));
    for (int k = 1; k < i; ++k) {
        if (k >= j - a && k <= j - 1) {
            phi[static_cast<std::size_t>(k - 1)] = j;
        } else {
            int s = k < j - a ? k : k - a;
            phi[static_cast<std::size_t>(k - 1)] = inner[static_cast<std::size_t>(s - 1)] + a;
        }
    }
    return phi;
}

} // namespace detail

// Representative of the fiber over w taking I_j = {j-w_j,..,j-1} at each step.
inline inc_map canonical_inc_representative(const catalan_word &w)
{
    return inc_map(detail::canonical_values(w.letters()));
}

// The walk-based map of a planar binary tree: a leaf climbs down to the first
// left edge below it, then up the right spine of the sibling subtree.
inline inc_map binary_tree_inc(const binary_tree &t)
{
    std::vector<int> phi(static_cast<std::size_t>(t.leaves()), 0);
    detail::walk_inc(t, 0, -1, phi);
    phi.pop_back();
    return inc_map(std::move(phi));
}

} // namespace novalg::combinatorics

#endif
