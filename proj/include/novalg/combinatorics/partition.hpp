#ifndef NOVALG_COMBINATORICS_PARTITION_HPP
#define NOVALG_COMBINATORICS_PARTITION_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>

namespace novalg::combinatorics
{

// Weakly decreasing sequence of positive integers. The empty sequence is the
// partition (0) of 0.
class partition
{
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    // Sorts decreasingly and drops zero entries.
    static partition from_multiset(std::vector<int> values)
    {
        std::erase(values, 0);
        std::sort(values.begin(), values.end(), std::greater<>{});
        return partition(std::move(values));
    }

    [[nodiscard]] const std::vector<int> &parts() const noexcept
    {
        return parts_;
    }
    [[nodiscard]] int size() const noexcept
    {
        int s = 0;
        for (int v : parts_) {
            s += v;
        }
        return s;
    }
    [[nodiscard]] int length() const noexcept
    {
        return static_cast<int>(parts_.size());
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return parts_.empty();
    }
    // Parts beyond the length read as 0.
    [[nodiscard]] int operator[](std::size_t i) const noexcept
    {
        return i < parts_.size() ? parts_[i] : 0;
    }
    [[nodiscard]] int multiplicity(int value) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    // p! = p_1! ... p_k!
    [[nodiscard]] integer factorial() const
    {
        integer r = 1;
        for (int v : parts_) {
            r *= novalg::factorial(v);
        }
        return r;
    }

    // Product of the factorials of the multiplicities of equal parts.
    [[nodiscard]] integer symmetry_factor() const
    {
        integer r = 1;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) {
                ++j;
            }
            r *= novalg::factorial(static_cast<long>(j - i));
            i = j;
        }
        return r;
    }

    // Partition obtained by adjoining a part (value 0 is ignored).
    [[nodiscard]] partition with_part(int value) const
    {
        std::vector<int> v = parts_;
        v.push_back(value);
        return from_multiset(std::move(v));
    }

    [[nodiscard]] std::string to_string() const
    {
        if (parts_.empty()) {
            return "(0)";
        }
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    // Graded order: by size, then reverse-lexicographic (larger parts first).
    friend std::strong_ordering operator<=>(const partition &a, const partition &b)
    {
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                      a.parts_.end());
    }
    friend bool operator==(const partition &, const partition &) = default;

private:
    std::vector<int> parts_;
};

// Accepts "3,2,1", "(3,2,1)", "3 2 1"; "0", "()" and "" give the partition (0).
inline partition parse_partition(std::string_view text)
{
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            int v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
            if (ec != std::errc{}) {
                throw std::invalid_argument("bad partition: " + std::string(text));
            }
            values.push_back(v);
            i = static_cast<std::size_t>(ptr - text.data());
        } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
            ++i;
        } else {
            throw std::invalid_argument("bad partition: " + std::string(text));
        }
    }
    if (values.size() == 1 && values[0] == 0) {
        values.clear();
    }
    return partition(std::move(values));
}

namespace detail
{

inline void partitions_rec(int remaining, int max_part, int slots, std::vector<int> &cur,
                           std::vector<partition> &out)
{
    if (remaining == 0) {
        if (slots <= 0) {
            out.emplace_back(cur);
        }
        return;
    }
    if (slots == 0) {
        return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        // Remaining slots must be able to absorb what is left.
        if (slots > 0 && static_cast<long>(v) * slots < remaining) {
            break;
        }
        cur.push_back(v);
        partitions_rec(remaining - v, v, slots > 0 ? slots - 1 : slots, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All partitions of n in reverse-lexicographic order; {(0)} for n = 0.
inline std::vector<partition> enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    }
    std::vector<partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, -1, cur, out);
    return out;
}

// Partitions of n with exactly k parts, reverse-lexicographic.
inline std::vector<partition> enumerate_partitions(int n, int k)
{
    if (n < 0 || k < 0) {
        throw std::invalid_argument("enumerate_partitions: n and k must be nonnegative");
    }
    std::vector<partition> out;
    if (k == 0) {
        if (n == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<int> cur;
    detail::partitions_rec(n, n, k, cur, out);
    return out;
}

// All partitions with size in [0, max_size], graded order.
inline std::vector<partition> enumerate_partitions_up_to(int max_size)
{
    std::vector<partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto ps = enumerate_partitions(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

// mu < nu: l(mu) <= l(nu), mu_i <= nu_i for i <= l(mu), and one of these
// l(mu) + 1 inequalities is strict.
inline bool partition_less(const partition &mu, const partition &nu)
{
    if (mu.length() > nu.length()) {
        return false;
    }
    bool strict = mu.length() < nu.length();
    for (int i = 0; i < mu.length(); ++i) {
        if (mu[i] > nu[i]) {
            return false;
        }
        strict = strict || mu[i] < nu[i];
    }
    return strict;
}

// p' <_a p. Not transitive.
inline bool admissible(const partition &p_prime, const partition &p)
{
    return partition_less(p_prime, p) && p.length() <= p_prime.size() + 1;
}

} // namespace novalg::combinatorics

#endif
