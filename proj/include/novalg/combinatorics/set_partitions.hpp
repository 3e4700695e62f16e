#ifndef NOVALG_COMBINATORICS_SET_PARTITIONS_HPP
#define NOVALG_COMBINATORICS_SET_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace novalg::combinatorics
{

// Blocks hold 0-based elements in increasing order.
using block = std::vector<int>;
using block_list = std::vector<block>;

namespace detail
{

// Restricted growth strings: a[i] <= 1 + max(a[0..i-1]), a[0] = 0. Blocks come
// out ordered by their minima.
template <typename F>
void rgs_rec(int n, int i, int used, int exact_blocks, std::vector<int> &a, F &f)
{
    if (exact_blocks >= 0 && used + (n - i) < exact_blocks) {
        return;
    }
    if (i == n) {
        if (exact_blocks >= 0 && used != exact_blocks) {
            return;
        }
        block_list blocks(static_cast<std::size_t>(used));
        for (int e = 0; e < n; ++e) {
            blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(e)])].push_back(e);
        }
        f(static_cast<const block_list &>(blocks));
        return;
    }
    int limit = used + 1;
    if (exact_blocks >= 0) {
        limit = std::min(limit, exact_blocks);
    }
    for (int b = 0; b < limit; ++b) {
        a[static_cast<std::size_t>(i)] = b;
        rgs_rec(n, i + 1, std::max(used, b + 1), exact_blocks, a, f);
    }
}

} // namespace detail

// Visit every set partition of {0,..,n-1}; blocks ordered by minimum.
// n = 0 visits the empty partition once.
template <typename F>
void for_each_set_partition(int n, F &&f)
{
    if (n < 0) {
        throw std::invalid_argument("for_each_set_partition: negative size");
    }
    std::vector<int> a(static_cast<std::size_t>(n));
    detail::rgs_rec(n, 0, 0, -1, a, f);
}

// Same, restricted to exactly k blocks.
template <typename F>
void for_each_set_partition(int n, int k, F &&f)
{
    if (n < 0 || k < 0) {
        throw std::invalid_argument("for_each_set_partition: negative size");
    }
    std::vector<int> a(static_cast<std::size_t>(n));
    detail::rgs_rec(n, 0, 0, k, a, f);
}

// Visit every ordered set partition of {0,..,n-1} into exactly k nonempty
// blocks, i.e. every surjection onto k labelled blocks.
template <typename F>
void for_each_ordered_set_partition(int n, int k, F &&f)
{
    for_each_set_partition(n, k, [&](const block_list &blocks) {
        std::vector<std::size_t> order(blocks.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        block_list arranged(blocks.size());
        do {
            for (std::size_t i = 0; i < order.size(); ++i) {
                arranged[i] = blocks[order[i]];
            }
            f(static_cast<const block_list &>(arranged));
        } while (std::next_permutation(order.begin(), order.end()));
    });
}

// Visit every function {0,..,m-1} -> {0,..,n-1}, as a value vector.
template <typename F>
void for_each_function(int m, int n, F &&f)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("for_each_function: negative size");
    }
    if (n == 0 && m > 0) {
        return;
    }
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    while (true) {
        f(static_cast<const std::vector<int> &>(v));
        int i = m - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == n - 1) {
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) {
            return;
        }
        ++v[static_cast<std::size_t>(i)];
    }
}

// Visit every subset of {0,..,n-1} given as (subset, complement).
template <typename F>
void for_each_subset(int n, F &&f)
{
    if (n < 0 || n > 30) {
        throw std::invalid_argument("for_each_subset: size out of range");
    }
    std::vector<int> in;
    std::vector<int> out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        in.clear();
        out.clear();
        for (int e = 0; e < n; ++e) {
            ((mask >> e) & 1UL ? in : out).push_back(e);
        }
        f(static_cast<const std::vector<int> &>(in), static_cast<const std::vector<int> &>(out));
    }
}

} // namespace novalg::combinatorics

#endif
