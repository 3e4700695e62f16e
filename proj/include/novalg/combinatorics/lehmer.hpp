#ifndef NOVALG_COMBINATORICS_LEHMER_HPP
#define NOVALG_COMBINATORICS_LEHMER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics/partition.hpp>

namespace novalg::combinatorics
{

// phi : [n] -> [n] with phi(k) <= k, stored as phi(1),..,phi(n).
class subexceedent_fn
{
public:
    explicit subexceedent_fn(std::vector<int> values) : values_(std::move(values))
    {
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (values_[k] < 1 || values_[k] > static_cast<int>(k) + 1) {
                throw std::invalid_argument("subexceedent function requires 1 <= phi(k) <= k");
            }
        }
    }
    [[nodiscard]] const std::vector<int> &values() const noexcept
    {
        return values_;
    }
    [[nodiscard]] int size() const noexcept
    {
        return static_cast<int>(values_.size());
    }
    friend auto operator<=>(const subexceedent_fn &, const subexceedent_fn &) = default;
    friend bool operator==(const subexceedent_fn &, const subexceedent_fn &) = default;

private:
    std::vector<int> values_;
};

// l_1..l_n with l_i <= n-i.
class lehmer_code
{
public:
    explicit lehmer_code(std::vector<int> letters) : letters_(std::move(letters))
    {
        const int n = static_cast<int>(letters_.size());
        for (int i = 1; i <= n; ++i) {
            int l = letters_[static_cast<std::size_t>(i - 1)];
            if (l < 0 || l > n - i) {
                throw std::invalid_argument("lehmer code requires 0 <= l_i <= n-i");
            }
        }
    }
    [[nodiscard]] const std::vector<int> &letters() const noexcept
    {
        return letters_;
    }
    [[nodiscard]] std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_.size() > 9 && i) {
                s += '.';
            }
            s += std::to_string(letters_[i]);
        }
        return s;
    }
    friend auto operator<=>(const lehmer_code &, const lehmer_code &) = default;
    friend bool operator==(const lehmer_code &, const lehmer_code &) = default;

private:
    std::vector<int> letters_;
};

// One-line notation sigma(1)..sigma(n) of a permutation of [n].
class permutation
{
public:
    explicit permutation(std::vector<int> word) : word_(std::move(word))
    {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("not a permutation");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    [[nodiscard]] const std::vector<int> &word() const noexcept
    {
        return word_;
    }
    [[nodiscard]] int size() const noexcept
    {
        return static_cast<int>(word_.size());
    }
    [[nodiscard]] std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (word_.size() > 9 && i) {
                s += '.';
            }
            s += std::to_string(word_[i]);
        }
        return s;
    }
    friend auto operator<=>(const permutation &, const permutation &) = default;
    friend bool operator==(const permutation &, const permutation &) = default;

private:
    std::vector<int> word_;
};

// Digit string such as "362857194" (n <= 9).
inline permutation parse_permutation(const std::string &digits)
{
    std::vector<int> w;
    for (char ch : digits) {
        if (ch < '1' || ch > '9') {
            throw std::invalid_argument("bad permutation: " + digits);
        }
        w.push_back(ch - '0');
    }
    return permutation(std::move(w));
}

// Leib(n) in lexicographic order of value vectors; Leib(0) is the empty map.
inline std::vector<subexceedent_fn> enumerate_leib(int n)
{
    if (n < 0) {
        throw std::invalid_argument("enumerate_leib: negative size");
    }
    std::vector<subexceedent_fn> out;
    std::vector<int> v(static_cast<std::size_t>(n), 1);
    while (true) {
        out.emplace_back(v);
        int k = n;
        while (k >= 1 && v[static_cast<std::size_t>(k - 1)] == k) {
            v[static_cast<std::size_t>(k - 1)] = 1;
            --k;
        }
        if (k < 1) {
            return out;
        }
        ++v[static_cast<std::size_t>(k - 1)];
    }
}

// (phi(n)-1, phi(n-1)-1, .., phi(1)-1).
inline lehmer_code leib_code(const subexceedent_fn &phi)
{
    std::vector<int> l(phi.values().rbegin(), phi.values().rend());
    for (int &x : l) {
        --x;
    }
    return lehmer_code(std::move(l));
}

inline subexceedent_fn leib_from_code(const lehmer_code &code)
{
    std::vector<int> v(code.letters().rbegin(), code.letters().rend());
    for (int &x : v) {
        ++x;
    }
    return subexceedent_fn(std::move(v));
}

// Nonzero fiber sizes |phi^-1(i)|, sorted decreasingly.
inline partition leib_partition(const subexceedent_fn &phi)
{
    std::vector<int> fibers(static_cast<std::size_t>(phi.size()), 0);
    for (int v : phi.values()) {
        ++fibers[static_cast<std::size_t>(v - 1)];
    }
    return partition::from_multiset(std::move(fibers));
}

// S_n in lexicographic order.
inline std::vector<permutation> enumerate_permutations(int n)
{
    if (n < 0) {
        throw std::invalid_argument("enumerate_permutations: negative size");
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = i + 1;
    }
    std::vector<permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// l_i = #{j > i : sigma(j) < sigma(i)}.
inline lehmer_code lehmer(const permutation &sigma)
{
    const auto &w = sigma.word();
    std::vector<int> l(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            l[i] += w[j] < w[i] ? 1 : 0;
        }
    }
    return lehmer_code(std::move(l));
}

// Inverse of lehmer(): l_i picks the (l_i+1)-th smallest unused letter.
inline permutation permutation_from_lehmer(const lehmer_code &code)
{
    std::vector<int> pool(code.letters().size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        pool[i] = static_cast<int>(i) + 1;
    }
    std::vector<int> w;
    for (int l : code.letters()) {
        w.push_back(pool[static_cast<std::size_t>(l)]);
        pool.erase(pool.begin() + l);
    }
    return permutation(std::move(w));
}

// Multiplicities of the letters of the Lehmer code, sorted decreasingly.
inline partition lehmer_partition(const permutation &sigma)
{
    auto code = lehmer(sigma);
    std::vector<int> mult(code.letters().size() + 1, 0);
    for (int l : code.letters()) {
        ++mult[static_cast<std::size_t>(l)];
    }
    return partition::from_multiset(std::move(mult));
}

// {i : sigma(i) > sigma(i+1)}, 1-based.
inline std::vector<int> descent_set(const permutation &sigma)
{
    std::vector<int> d;
    const auto &w = sigma.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            d.push_back(static_cast<int>(i) + 1);
        }
    }
    return d;
}

// {i : l_{i+1} < l_i}, 1-based.
inline std::vector<int> descent_set(const lehmer_code &code)
{
    std::vector<int> d;
    const auto &l = code.letters();
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i + 1] < l[i]) {
            d.push_back(static_cast<int>(i) + 1);
        }
    }
    return d;
}

// Signed Stirling numbers of the first kind: x(x-1)..(x-j+1) = sum_i s(j,i) x^i.
inline integer stirling_first(int j, int i)
{
    if (j < 0 || i < 0) {
        throw std::invalid_argument("stirling_first: negative argument");
    }
    if (i > j) {
        return 0;
    }
    std::vector<integer> row{1}; // s(0, .)
    for (int n = 0; n < j; ++n) {
        std::vector<integer> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k + 1] += row[k];
            next[k] -= n * row[k];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(i)];
}

// a_{n,k} = #{sigma in S_n with k descents}.
inline integer eulerian(int n, int k)
{
    if (n < 0 || k < 0) {
        throw std::invalid_argument("eulerian: negative argument");
    }
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    std::vector<integer> row{1}; // n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<integer> next(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < m; ++j) {
            if (j < m - 1) {
                next[static_cast<std::size_t>(j)] += (j + 1) * row[static_cast<std::size_t>(j)];
            }
            if (j >= 1) {
                next[static_cast<std::size_t>(j)] += (m - j) * row[static_cast<std::size_t>(j - 1)];
            }
        }
        row = std::move(next);
    }
    return k < n ? row[static_cast<std::size_t>(k)] : integer(0);
}

} // namespace novalg::combinatorics

#endif
