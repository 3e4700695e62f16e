#ifndef NOVALG_NOVIKOV_HPP
#define NOVALG_NOVIKOV_HPP

#include <algorithm>
#include <compare>

#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics/partition.hpp>
#include <novalg/linear_combination.hpp>
#include <novalg/trees.hpp>

namespace novalg::novikov
{

using combinatorics::partition;

// The variable a_i of generator a, i >= -1, with d(a_i) = a_{i+1}.
struct variable
{
    int generator = 0;
    int order = -1;

    friend auto operator<=>(const variable &, const variable &) = default;
    friend bool operator==(const variable &, const variable &) = default;
};

// Commutative monomial in the variables, factors kept sorted.
class monomial
{
public:
    monomial() = default;
    explicit monomial(std::vector<variable> factors) : factors_(std::move(factors))
    {
        for (const auto &v : factors_) {
            if (v.order < -1 || v.generator < 0) {
                throw std::invalid_argument("monomial: variable order must be >= -1");
            }
        }
        std::sort(factors_.begin(), factors_.end());
    }

    // The generator a^{[g]} itself, i.e. a_{-1}.
    static monomial generator(int g = 0)
    {
        return monomial({variable{g, -1}});
    }

    [[nodiscard]] const std::vector<variable> &factors() const noexcept
    {
        return factors_;
    }
    // Number of factors; the grading of the free Novikov algebra.
    [[nodiscard]] int degree() const noexcept
    {
        return static_cast<int>(factors_.size());
    }
    // Sum of the orders; -1 on the free Novikov algebra.
    [[nodiscard]] int weight() const noexcept
    {
        int w = 0;
        for (const auto &v : factors_) {
            w += v.order;
        }
        return w;
    }

    friend monomial operator*(const monomial &a, const monomial &b)
    {
        monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                   std::back_inserter(r.factors_));
        return r;
    }

    // Factors as x<g>_<i> with repeated factors collected into powers.
    [[nodiscard]] std::string to_string() const
    {
        if (factors_.empty()) {
            return "1";
        }
        std::string s;
        for (std::size_t i = 0; i < factors_.size();) {
            std::size_t j = i;
            while (j < factors_.size() && factors_[j] == factors_[i]) {
                ++j;
            }
            if (!s.empty()) {
                s += '*';
            }
            s += "x" + std::to_string(factors_[i].generator) + "_" + std::to_string(factors_[i].order);
            if (j - i > 1) {
                s += "^" + std::to_string(j - i);
            }
            i = j;
        }
        return s;
    }

    friend auto operator<=>(const monomial &, const monomial &) = default;
    friend bool operator==(const monomial &, const monomial &) = default;

private:
    std::vector<variable> factors_;
};

using diff_poly = linear_combination<monomial>;

// Element of the one-generator free Novikov algebra in the basis x_p.
using element = linear_combination<partition>;

// Keep the terms of degree at most cap; cap < 0 keeps everything.
inline diff_poly truncate(const diff_poly &a, int cap)
{
    if (cap < 0) {
        return a;
    }
    return a.filter([cap](const monomial &m) { return m.degree() <= cap; });
}

// Product in the commutative algebra, truncated at degree cap (cap < 0: none).
inline diff_poly multiply(const diff_poly &a, const diff_poly &b, int cap = -1)
{
    diff_poly r;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            if (cap >= 0 && ma.degree() + mb.degree() > cap) {
                continue;
            }
            r.add(ma * mb, ca * cb);
        }
    }
    return r;
}

inline diff_poly power(const diff_poly &a, int k, int cap = -1)
{
    diff_poly r(monomial{});
    for (int i = 0; i < k; ++i) {
        r = multiply(r, a, cap);
    }
    return r;
}

// Leibniz rule: raise the order of each factor in turn.
inline diff_poly derivative(const monomial &m)
{
    diff_poly r;
    const auto &f = m.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0 && f[i] == f[i - 1]) {
            continue;
        }
        std::size_t mult = 1;
        while (i + mult < f.size() && f[i + mult] == f[i]) {
            ++mult;
        }
        auto g = f;
        ++g[i].order;
        r.add(monomial(std::move(g)), static_cast<long>(mult));
    }
    return r;
}

inline diff_poly derivative(const diff_poly &a, int n = 1)
{
    diff_poly r = a;
    for (int k = 0; k < n; ++k) {
        r = r.map_linear<diff_poly>([](const monomial &m) { return derivative(m); });
    }
    return r;
}

// a < b = d(a) b.
inline diff_poly right_product(const diff_poly &a, const diff_poly &b, int cap = -1)
{
    return multiply(derivative(a), b, cap);
}

// The opposite (left Novikov) product a > b := b < a.
inline diff_poly left_product(const diff_poly &a, const diff_poly &b, int cap = -1)
{
    return right_product(b, a, cap);
}

// a{a_1..a_n} = a_1 .. a_n d^n(a).
inline diff_poly brace(const diff_poly &a, const std::vector<diff_poly> &args, int cap = -1)
{
    diff_poly r = derivative(a, static_cast<int>(args.size()));
    for (const auto &x : args) {
        r = multiply(r, x, cap);
    }
    return truncate(r, cap);
}

// The same brace rebuilt from the pre-Lie product alone:
// v{w_1..w_n} = (v{w_1..w_{n-1}}){w_n} - sum_i v{w_1..w_i{w_n}..w_{n-1}}.
inline diff_poly brace_recursive(const diff_poly &v, const std::vector<diff_poly> &ws)
{
    if (ws.empty()) {
        return v;
    }
    std::vector<diff_poly> head(ws.begin(), ws.end() - 1);
    const diff_poly &last = ws.back();
    diff_poly r = right_product(brace_recursive(v, head), last);
    for (std::size_t i = 0; i < head.size(); ++i) {
        auto modified = head;
        modified[i] = right_product(head[i], last);
        r -= brace_recursive(v, modified);
    }
    return r;
}

// x_p = x_{p_1-1} .. x_{p_k-1} x_{-1}^{|p|-k+1}.
inline monomial partition_monomial(const partition &p, int generator = 0)
{
    std::vector<variable> f;
    for (int part : p.parts()) {
        f.push_back({generator, part - 1});
    }
    for (int i = 0; i < p.size() - p.length() + 1; ++i) {
        f.push_back({generator, -1});
    }
    return monomial(std::move(f));
}

// Inverse of partition_monomial on weight -1 monomials of one generator.
inline partition monomial_partition(const monomial &m)
{
    if (m.weight() != -1) {
        throw std::invalid_argument("monomial_partition: weight must be -1");
    }
    std::vector<int> parts;
    for (const auto &v : m.factors()) {
        if (v.generator != m.factors().front().generator) {
            throw std::invalid_argument("monomial_partition: single generator required");
        }
        if (v.order >= 0) {
            parts.push_back(v.order + 1);
        }
    }
    return partition::from_multiset(std::move(parts));
}

inline diff_poly to_diff_poly(const element &e)
{
    diff_poly r;
    for (const auto &[p, c] : e) {
        r.add(partition_monomial(p), c);
    }
    return r;
}

inline element from_diff_poly(const diff_poly &a)
{
    element r;
    for (const auto &[m, c] : a) {
        r.add(monomial_partition(m), c);
    }
    return r;
}

// The generator x = x_{(0)}.
inline element x()
{
    return element(partition{});
}

// Degree |p|+1 of the basis vector x_p.
inline int degree(const partition &p)
{
    return p.size() + 1;
}

inline element truncate(const element &a, int cap)
{
    if (cap < 0) {
        return a;
    }
    return a.filter([cap](const partition &p) { return degree(p) <= cap; });
}

inline element prelie_product(const element &a, const element &b, int cap = -1)
{
    return from_diff_poly(right_product(to_diff_poly(a), to_diff_poly(b), cap));
}

inline element left_product(const element &a, const element &b, int cap = -1)
{
    return prelie_product(b, a, cap);
}

inline element brace(const element &a, const std::vector<element> &args, int cap = -1)
{
    std::vector<diff_poly> d;
    for (const auto &x : args) {
        d.push_back(to_diff_poly(x));
    }
    return from_diff_poly(brace(to_diff_poly(a), d, cap));
}

// rho(x{z_1..z_k}) = x_{k-1} rho(z_1) .. rho(z_k).
inline monomial rho(const trees::rooted_tree &t, int generator = 0)
{
    monomial m({variable{generator, t.fertility() - 1}});
    for (const auto &c : t.children()) {
        m = m * rho(c, generator);
    }
    return m;
}

// Linear extension of T -> x_{Psi(T)}.
inline element psi_linear(const trees::tree_combination &a)
{
    element r;
    for (const auto &[t, c] : a) {
        r.add(trees::psi(t), c);
    }
    return r;
}

// exp(y) = sum_n y^{<n}/n!, left-bracketed powers, up to degree cap.
inline diff_poly exp_series(const diff_poly &y, int cap)
{
    diff_poly r;
    diff_poly pw = truncate(y, cap);
    integer fact = 1;
    for (int n = 1; n <= cap && !pw.empty(); ++n) {
        fact *= n;
        r.add_scaled(pw, make_rational(1, fact));
        pw = right_product(pw, y, cap);
    }
    return r;
}

// log(f) = f + sum_{n>=2} sum_{i=1}^{n-1} (-1)^i/(i+1)
//   sum_{k_1+..+k_i=n-1} 1/(k_1!..k_i!) (..(f{f^k_1})..){f^k_i},
// with g{f^k} = f^k d^k(g). Terms of degree above cap are dropped.
inline diff_poly log_series(const diff_poly &f, int cap)
{
    diff_poly r = truncate(f, cap);
    // chains[s][i]: sum over compositions of s into i parts of the nested
    // braces divided by the factorials.
    std::vector<std::vector<diff_poly>> chains(static_cast<std::size_t>(cap), std::vector<diff_poly>());
    for (auto &row : chains) {
        row.resize(static_cast<std::size_t>(cap));
    }
    if (cap < 1) {
        return r;
    }
    chains[0][0] = truncate(f, cap);
    std::vector<diff_poly> fpow(static_cast<std::size_t>(cap));
    for (int k = 1; k < cap; ++k) {
        fpow[static_cast<std::size_t>(k)] = power(f, k, cap);
    }
    for (int s = 1; s < cap; ++s) {
        for (int i = 1; i <= s; ++i) {
            diff_poly acc;
            for (int k = 1; k <= s - i + 1; ++k) {
                const auto &prev = chains[static_cast<std::size_t>(s - k)][static_cast<std::size_t>(i - 1)];
                if (prev.empty()) {
                    continue;
                }
                diff_poly step = multiply(fpow[static_cast<std::size_t>(k)], derivative(prev, k), cap);
                acc.add_scaled(step, make_rational(1, factorial(k)));
            }
            chains[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = std::move(acc);
            r.add_scaled(chains[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)],
                         rational(sign_power(i), i + 1));
        }
    }
    return r;
}

// v (*) w = w + v{exp(w)} = v + w + sum_{k>=1} w^k d^k(v)/k!.
inline diff_poly circled(const diff_poly &v, const diff_poly &w, int cap)
{
    diff_poly r = truncate(v, cap) + truncate(w, cap);
    diff_poly wk(monomial{});
    for (int k = 1; k <= cap; ++k) {
        wk = multiply(wk, w, cap);
        if (wk.empty()) {
            break;
        }
        r.add_scaled(multiply(wk, derivative(v, k), cap), make_rational(1, factorial(k)));
    }
    return r;
}

inline element exp_series(const element &y, int cap)
{
    return from_diff_poly(exp_series(to_diff_poly(y), cap));
}
inline element log_series(const element &f, int cap)
{
    return from_diff_poly(log_series(to_diff_poly(f), cap));
}
inline element circled(const element &v, const element &w, int cap)
{
    return from_diff_poly(circled(to_diff_poly(v), to_diff_poly(w), cap));
}

} // namespace novalg::novikov

#endif
