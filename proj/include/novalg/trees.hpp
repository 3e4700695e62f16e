#ifndef NOVALG_TREES_HPP
#define NOVALG_TREES_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics/lehmer.hpp>
#include <novalg/combinatorics/partition.hpp>
#include <novalg/linear_combination.hpp>

namespace novalg::trees
{

using combinatorics::partition;
using combinatorics::permutation;

// Non-planar rooted tree in canonical form: children sorted increasingly.
// Order: by vertex count, then lexicographically on the sorted children.
class rooted_tree
{
public:
    // The single vertex.
    rooted_tree() = default;

    explicit rooted_tree(std::vector<rooted_tree> children) : children_(std::move(children))
    {
        std::sort(children_.begin(), children_.end());
        for (const auto &c : children_) {
            size_ += c.size_;
        }
    }

    [[nodiscard]] int size() const noexcept
    {
        return size_;
    }
    [[nodiscard]] const std::vector<rooted_tree> &children() const noexcept
    {
        return children_;
    }
    [[nodiscard]] int fertility() const noexcept
    {
        return static_cast<int>(children_.size());
    }

    // Brace notation: x, x{x}, x{x,x{x}}.
    [[nodiscard]] std::string to_string() const
    {
        std::string s = "x";
        if (!children_.empty()) {
            s += '{';
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) {
                    s += ',';
                }
                s += children_[i].to_string();
            }
            s += '}';
        }
        return s;
    }

    // Parent of each vertex in preorder (root first, parent -1).
    [[nodiscard]] std::vector<int> parent_array() const
    {
        std::vector<int> parent;
        append_preorder(-1, parent);
        return parent;
    }

    friend std::strong_ordering operator<=>(const rooted_tree &a, const rooted_tree &b)
    {
        if (auto c = a.size_ <=> b.size_; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                      b.children_.end());
    }
    friend bool operator==(const rooted_tree &a, const rooted_tree &b)
    {
        return a.size_ == b.size_ && a.children_ == b.children_;
    }

private:
    void append_preorder(int parent_index, std::vector<int> &parent) const
    {
        const int me = static_cast<int>(parent.size());
        parent.push_back(parent_index);
        for (const auto &c : children_) {
            c.append_preorder(me, parent);
        }
    }

    std::vector<rooted_tree> children_;
    int size_ = 1;
};

using tree_combination = linear_combination<rooted_tree>;

namespace detail
{

inline rooted_tree parse_tree_at(std::string_view s, std::size_t &i)
{
    if (i >= s.size() || s[i] != 'x') {
        throw std::invalid_argument("bad tree: expected 'x'");
    }
    ++i;
    std::vector<rooted_tree> children;
    if (i < s.size() && s[i] == '{') {
        ++i;
        while (true) {
            children.push_back(parse_tree_at(s, i));
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == '}') {
                ++i;
                break;
            }
            throw std::invalid_argument("bad tree: expected ',' or '}'");
        }
    }
    return rooted_tree(std::move(children));
}

} // namespace detail

// Inverse of rooted_tree::to_string (spaces ignored).
inline rooted_tree parse_tree(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (ch != ' ') {
            s += ch;
        }
    }
    std::size_t i = 0;
    auto t = detail::parse_tree_at(s, i);
    if (i != s.size()) {
        throw std::invalid_argument("bad tree: trailing characters");
    }
    return t;
}

inline rooted_tree ladder(int n)
{
    rooted_tree t;
    for (int k = 1; k < n; ++k) {
        t = rooted_tree(std::vector<rooted_tree>{t});
    }
    return t;
}

inline rooted_tree corolla(int leaves)
{
    return rooted_tree(std::vector<rooted_tree>(static_cast<std::size_t>(leaves)));
}

// T grafted with S at every vertex, multiplicities collected.
inline tree_combination graft(const rooted_tree &t, const rooted_tree &s)
{
    tree_combination r;
    auto with_child = t.children();
    with_child.push_back(s);
    r.add(rooted_tree(std::move(with_child)), 1);
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        for (const auto &[g, c] : graft(t.children()[i], s)) {
            auto kids = t.children();
            kids[i] = g;
            r.add(rooted_tree(std::move(kids)), c);
        }
    }
    return r;
}

// Bilinear extension of graft.
inline tree_combination graft(const tree_combination &a, const tree_combination &b)
{
    return bilinear<tree_combination>(a, b, [](const rooted_tree &x, const rooted_tree &y) { return graft(x, y); });
}

// T_n, sorted, obtained by grafting a vertex onto every tree of T_{n-1}.
inline std::vector<rooted_tree> enumerate_rooted_trees(int n)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_rooted_trees: n must be positive");
    }
    std::set<rooted_tree> level{rooted_tree()};
    for (int m = 2; m <= n; ++m) {
        std::set<rooted_tree> next;
        for (const auto &t : level) {
            for (const auto &[g, c] : graft(t, rooted_tree())) {
                next.insert(g);
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

// Product over vertices of the descendant counts (vertex included).
inline integer tree_factorial(const rooted_tree &t)
{
    integer r = t.size();
    for (const auto &c : t.children()) {
        r *= tree_factorial(c);
    }
    return r;
}

// Groups equal children: i_1! .. i_h! sigma(T_1)^{i_1} .. sigma(T_h)^{i_h}.
inline integer symmetry_factor(const rooted_tree &t)
{
    integer r = 1;
    const auto &ch = t.children();
    for (std::size_t i = 0; i < ch.size();) {
        std::size_t j = i;
        while (j < ch.size() && ch[j] == ch[i]) {
            ++j;
        }
        r *= factorial(static_cast<long>(j - i));
        integer s = symmetry_factor(ch[i]);
        for (std::size_t k = i; k < j; ++k) {
            r *= s;
        }
        i = j;
    }
    return r;
}

// N_T = n! / (T! sigma(T)).
inline integer increasing_labelings(const rooted_tree &t)
{
    return factorial(t.size()) / (tree_factorial(t) * symmetry_factor(t));
}

// Pl(T) = (i_1+..+i_h)!/(i_1!..i_h!) Pl(T_1)^{i_1} .. Pl(T_h)^{i_h}.
inline integer planar_embeddings(const rooted_tree &t)
{
    const auto &ch = t.children();
    std::vector<long> groups;
    integer r = 1;
    for (std::size_t i = 0; i < ch.size();) {
        std::size_t j = i;
        while (j < ch.size() && ch[j] == ch[i]) {
            ++j;
        }
        groups.push_back(static_cast<long>(j - i));
        integer pl = planar_embeddings(ch[i]);
        for (std::size_t k = i; k < j; ++k) {
            r *= pl;
        }
        i = j;
    }
    return r * multinomial(groups);
}

inline void collect_fertilities(const rooted_tree &t, std::vector<int> &out)
{
    out.push_back(t.fertility());
    for (const auto &c : t.children()) {
        collect_fertilities(c, out);
    }
}

// Positive vertex fertilities, sorted decreasingly: a partition of |T|-1.
inline partition psi(const rooted_tree &t)
{
    std::vector<int> f;
    collect_fertilities(t, f);
    return partition::from_multiset(std::move(f));
}

// Rooted tree with ordered children.
class planar_tree
{
public:
    planar_tree() = default;
    explicit planar_tree(std::vector<planar_tree> children) : children_(std::move(children))
    {
        for (const auto &c : children_) {
            size_ += c.size_;
        }
    }

    [[nodiscard]] int size() const noexcept
    {
        return size_;
    }
    [[nodiscard]] const std::vector<planar_tree> &children() const noexcept
    {
        return children_;
    }

    [[nodiscard]] rooted_tree canonical() const
    {
        std::vector<rooted_tree> kids;
        for (const auto &c : children_) {
            kids.push_back(c.canonical());
        }
        return rooted_tree(std::move(kids));
    }

    [[nodiscard]] std::vector<int> parent_array() const
    {
        std::vector<int> parent;
        append_preorder(-1, parent);
        return parent;
    }

    [[nodiscard]] std::string to_string() const
    {
        std::string s = "x";
        if (!children_.empty()) {
            s += '{';
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) {
                    s += ',';
                }
                s += children_[i].to_string();
            }
            s += '}';
        }
        return s;
    }

    friend bool operator==(const planar_tree &a, const planar_tree &b)
    {
        return a.size_ == b.size_ && a.children_ == b.children_;
    }

private:
    void append_preorder(int parent_index, std::vector<int> &parent) const
    {
        const int me = static_cast<int>(parent.size());
        parent.push_back(parent_index);
        for (const auto &c : children_) {
            c.append_preorder(me, parent);
        }
    }

    std::vector<planar_tree> children_;
    int size_ = 1;
};

// All planar rooted trees with n vertices (Catalan(n-1) of them).
inline std::vector<planar_tree> enumerate_planar_trees(int n)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_planar_trees: n must be positive");
    }
    // forests[m] = ordered forests with m vertices in total.
    std::vector<std::vector<std::vector<planar_tree>>> forests(static_cast<std::size_t>(n));
    std::vector<std::vector<planar_tree>> trees(static_cast<std::size_t>(n + 1));
    forests[0].push_back({});
    for (int m = 1; m <= n; ++m) {
        for (const auto &f : forests[static_cast<std::size_t>(m - 1)]) {
            trees[static_cast<std::size_t>(m)].emplace_back(f);
        }
        if (m == n) {
            break;
        }
        // Forests of size m: first tree of size a, then a forest of size m-a.
        for (int a = 1; a <= m; ++a) {
            for (const auto &t : trees[static_cast<std::size_t>(a)]) {
                for (const auto &rest : forests[static_cast<std::size_t>(m - a)]) {
                    std::vector<planar_tree> f{t};
                    f.insert(f.end(), rest.begin(), rest.end());
                    forests[static_cast<std::size_t>(m)].push_back(std::move(f));
                }
            }
        }
    }
    return trees[static_cast<std::size_t>(n)];
}

inline partition psi(const planar_tree &t)
{
    return psi(t.canonical());
}

namespace detail
{

// Counts strictly increasing labellings (child > parent) into [t]; with
// surjective set, only those hitting every label. Vertices in preorder, so a
// parent always precedes its children.
struct monotone_counter
{
    const std::vector<int> &parent;
    int t;
    bool surjective;
    std::vector<int> label;
    std::vector<int> used;
    integer count = 0;

    void run(std::size_t v)
    {
        if (v == parent.size()) {
            if (surjective) {
                for (int h = 1; h <= t; ++h) {
                    if (used[static_cast<std::size_t>(h)] == 0) {
                        return;
                    }
                }
            }
            count += 1;
            return;
        }
        if (surjective) {
            int missing = 0;
            for (int h = 1; h <= t; ++h) {
                missing += used[static_cast<std::size_t>(h)] == 0 ? 1 : 0;
            }
            if (missing > static_cast<int>(parent.size() - v)) {
                return;
            }
        }
        int lo = parent[v] < 0 ? 1 : label[static_cast<std::size_t>(parent[v])] + 1;
        for (int l = lo; l <= t; ++l) {
            label[v] = l;
            ++used[static_cast<std::size_t>(l)];
            run(v + 1);
            --used[static_cast<std::size_t>(l)];
        }
    }
};

inline integer count_monotone(const std::vector<int> &parent, int t, bool surjective)
{
    if (t < 0) {
        throw std::invalid_argument("count_monotone: negative range");
    }
    monotone_counter c{parent, t, surjective, std::vector<int>(parent.size(), 0),
                       std::vector<int>(static_cast<std::size_t>(t + 1), 0)};
    c.run(0);
    return c.count;
}

} // namespace detail

// Number of strictly monotone maps V(T) -> [t], root as the minimum.
inline integer strict_monotone_count(const rooted_tree &t, int range)
{
    return detail::count_monotone(t.parent_array(), range, false);
}
inline integer strict_monotone_count(const planar_tree &t, int range)
{
    return detail::count_monotone(t.parent_array(), range, false);
}

// (omega_1(T), .., omega_n(T)): surjective strictly monotone maps onto [k],
// by exhaustive enumeration.
inline std::vector<integer> strict_order_counts(const std::vector<int> &parent)
{
    std::vector<integer> out;
    for (int k = 1; k <= static_cast<int>(parent.size()); ++k) {
        out.push_back(detail::count_monotone(parent, k, true));
    }
    return out;
}
inline std::vector<integer> strict_order_counts(const rooted_tree &t)
{
    return strict_order_counts(t.parent_array());
}
inline std::vector<integer> strict_order_counts(const planar_tree &t)
{
    return strict_order_counts(t.parent_array());
}

// omega(T) = sum_k (-1)^{k-1}/k omega_k(T).
inline rational omega(const rooted_tree &t)
{
    auto w = strict_order_counts(t);
    rational r = 0;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        r += rational(sign_power(static_cast<long>(k) - 1) * w[k - 1], static_cast<long>(k));
    }
    r.canonicalize();
    return r;
}

// sum_{|T| <= cap} T / (T! sigma(T)).
inline tree_combination tree_exponential(int cap)
{
    tree_combination r;
    for (int n = 1; n <= cap; ++n) {
        for (const auto &t : enumerate_rooted_trees(n)) {
            r.add(t, make_rational(1, tree_factorial(t) * symmetry_factor(t)));
        }
    }
    return r;
}

// sum_{|T| <= cap} omega(T) / sigma(T) T.
inline tree_combination tree_logarithm(int cap)
{
    tree_combination r;
    for (int n = 1; n <= cap; ++n) {
        for (const auto &t : enumerate_rooted_trees(n)) {
            r.add(t, omega(t) / rational(symmetry_factor(t)));
        }
    }
    return r;
}

// Vertices are the labels 1..n; parent(l) = 0 marks the root. Stored as a
// parent array indexed by label rather than labels on a canonical shape.
class labeled_tree
{
public:
    explicit labeled_tree(std::vector<int> parent) : parent_(std::move(parent))
    {
        const int n = static_cast<int>(parent_.size());
        int roots = 0;
        for (int l = 1; l <= n; ++l) {
            int p = parent_[static_cast<std::size_t>(l - 1)];
            if (p < 0 || p > n || p == l) {
                throw std::invalid_argument("labeled_tree: bad parent");
            }
            roots += p == 0 ? 1 : 0;
        }
        if (n > 0 && roots != 1) {
            throw std::invalid_argument("labeled_tree: exactly one root required");
        }
        // Reject cycles: every label must reach the root.
        for (int l = 1; l <= n; ++l) {
            int v = l;
            for (int steps = 0; v != 0; ++steps) {
                if (steps > n) {
                    throw std::invalid_argument("labeled_tree: cycle");
                }
                v = parent_[static_cast<std::size_t>(v - 1)];
            }
        }
    }

    [[nodiscard]] int size() const noexcept
    {
        return static_cast<int>(parent_.size());
    }
    // 0 for the root.
    [[nodiscard]] int parent(int label) const
    {
        return parent_.at(static_cast<std::size_t>(label - 1));
    }
    [[nodiscard]] const std::vector<int> &parents() const noexcept
    {
        return parent_;
    }
    [[nodiscard]] int root() const
    {
        for (int l = 1; l <= size(); ++l) {
            if (parent(l) == 0) {
                return l;
            }
        }
        throw std::logic_error("labeled_tree: empty");
    }
    // Children sorted by label.
    [[nodiscard]] std::vector<int> children(int label) const
    {
        std::vector<int> c;
        for (int l = 1; l <= size(); ++l) {
            if (parent(l) == label) {
                c.push_back(l);
            }
        }
        return c;
    }
    [[nodiscard]] int fertility(int label) const
    {
        return static_cast<int>(children(label).size());
    }

    [[nodiscard]] bool increasing() const
    {
        for (int l = 1; l <= size(); ++l) {
            if (parent(l) != 0 && parent(l) > l) {
                return false;
            }
        }
        return true;
    }
    [[nodiscard]] bool decreasing() const
    {
        for (int l = 1; l <= size(); ++l) {
            if (parent(l) != 0 && parent(l) < l) {
                return false;
            }
        }
        return true;
    }

    // Forget the labels (the map Phi).
    [[nodiscard]] rooted_tree shape() const
    {
        return shape_at(root());
    }

    // Labels in preorder, children visited by increasing label.
    [[nodiscard]] std::vector<int> preorder_labels() const
    {
        std::vector<int> out;
        if (size() > 0) {
            preorder_at(root(), out);
        }
        return out;
    }

    // Nested form such as 1{2,3{4}}.
    [[nodiscard]] std::string to_string() const
    {
        return size() == 0 ? std::string() : string_at(root());
    }

    friend auto operator<=>(const labeled_tree &, const labeled_tree &) = default;
    friend bool operator==(const labeled_tree &, const labeled_tree &) = default;

private:
    [[nodiscard]] rooted_tree shape_at(int label) const
    {
        std::vector<rooted_tree> kids;
        for (int c : children(label)) {
            kids.push_back(shape_at(c));
        }
        return rooted_tree(std::move(kids));
    }
    void preorder_at(int label, std::vector<int> &out) const
    {
        out.push_back(label);
        for (int c : children(label)) {
            preorder_at(c, out);
        }
    }
    [[nodiscard]] std::string string_at(int label) const
    {
        std::string s = std::to_string(label);
        auto kids = children(label);
        if (!kids.empty()) {
            s += '{';
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) {
                    s += ',';
                }
                s += string_at(kids[i]);
            }
            s += '}';
        }
        return s;
    }

    std::vector<int> parent_;
};

// Increasing trees on [n]: parent(l) < l for l >= 2; (n-1)! of them.
inline std::vector<labeled_tree> enumerate_increasing_trees(int n)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_increasing_trees: n must be positive");
    }
    std::vector<labeled_tree> out;
    std::vector<int> parent(static_cast<std::size_t>(n), 1);
    parent[0] = 0;
    while (true) {
        out.emplace_back(parent);
        int l = n;
        while (l >= 2 && parent[static_cast<std::size_t>(l - 1)] == l - 1) {
            parent[static_cast<std::size_t>(l - 1)] = 1;
            --l;
        }
        if (l < 2) {
            return out;
        }
        ++parent[static_cast<std::size_t>(l - 1)];
    }
}

// Decreasing trees on [n]: root n, parent(l) > l.
inline std::vector<labeled_tree> enumerate_decreasing_trees(int n)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_decreasing_trees: n must be positive");
    }
    std::vector<labeled_tree> out;
    std::vector<int> parent(static_cast<std::size_t>(n), n);
    parent[static_cast<std::size_t>(n - 1)] = 0;
    while (true) {
        out.emplace_back(parent);
        int l = n - 1;
        while (l >= 1 && parent[static_cast<std::size_t>(l - 1)] == l + 1) {
            parent[static_cast<std::size_t>(l - 1)] = n;
            --l;
        }
        if (l < 1) {
            return out;
        }
        --parent[static_cast<std::size_t>(l - 1)];
    }
}

// Letter m of sigma sits at insertion slot i (counted from the right, 1-based)
// among the letters 1..m; then vertex m+1 hangs below vertex i.
inline labeled_tree gamma(const permutation &sigma)
{
    const auto &w = sigma.word();
    const int n = sigma.size();
    std::vector<int> pos(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < n; ++j) {
        pos[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])] = j;
    }
    std::vector<int> parent(static_cast<std::size_t>(n + 1), 0);
    for (int m = 1; m <= n; ++m) {
        int slot = 1;
        for (int j = pos[static_cast<std::size_t>(m)] + 1; j < n; ++j) {
            slot += w[static_cast<std::size_t>(j)] < m ? 1 : 0;
        }
        parent[static_cast<std::size_t>(m)] = slot;
    }
    return labeled_tree(std::move(parent));
}

inline permutation gamma_inverse(const labeled_tree &t)
{
    if (!t.increasing() || t.root() != 1) {
        throw std::invalid_argument("gamma_inverse: tree must be increasing with root 1");
    }
    const int n = t.size() - 1;
    std::vector<int> word;
    for (int m = 1; m <= n; ++m) {
        int slot = t.parent(m + 1);
        // slot - 1 letters to the right of m.
        word.insert(word.end() - (slot - 1), m);
    }
    return permutation(std::move(word));
}

} // namespace novalg::trees

#endif
