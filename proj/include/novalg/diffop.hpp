#ifndef NOVALG_DIFFOP_HPP
#define NOVALG_DIFFOP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics.hpp>
#include <novalg/enveloping.hpp>
#include <novalg/linear_combination.hpp>
#include <novalg/novikov.hpp>

// Formal differential operators FDiff = A[D] over A = Q[u] with d = d/du.
namespace novalg::diffop
{

// Polynomial in u with rational coefficients, dense, no trailing zeros.
class dpoly
{
public:
    dpoly() = default;
    explicit dpoly(std::vector<rational> coeffs) : c_(std::move(coeffs))
    {
        trim();
    }

    static dpoly constant(const rational &a)
    {
        return dpoly({a});
    }
    // c u^k.
    static dpoly power(int k, const rational &c = 1)
    {
        std::vector<rational> v(static_cast<std::size_t>(k + 1), rational(0));
        v.back() = c;
        return dpoly(std::move(v));
    }

    [[nodiscard]] const std::vector<rational> &coefficients() const noexcept
    {
        return c_;
    }
    [[nodiscard]] rational coefficient(int k) const
    {
        return k >= 0 && static_cast<std::size_t>(k) < c_.size() ? c_[static_cast<std::size_t>(k)] : rational(0);
    }
    // -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept
    {
        return static_cast<int>(c_.size()) - 1;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return c_.empty();
    }

    [[nodiscard]] dpoly derivative(int n = 1) const
    {
        if (n >= static_cast<int>(c_.size())) {
            return {};
        }
        std::vector<rational> d(c_.size() - static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = c_[k + static_cast<std::size_t>(n)] * falling_factorial(static_cast<long>(k) + n, n);
        }
        return dpoly(std::move(d));
    }

    [[nodiscard]] rational operator()(const rational &u) const
    {
        rational r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) {
            r = r * u + c_[k];
        }
        return r;
    }

    dpoly &operator+=(const dpoly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), rational(0));
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }
    dpoly &operator-=(const dpoly &o)
    {
        *this += rational(-1) * o;
        return *this;
    }
    friend dpoly operator+(dpoly a, const dpoly &b)
    {
        a += b;
        return a;
    }
    friend dpoly operator-(dpoly a, const dpoly &b)
    {
        a -= b;
        return a;
    }
    friend dpoly operator*(const rational &s, dpoly a)
    {
        for (auto &c : a.c_) {
            c *= s;
        }
        a.trim();
        return a;
    }
    friend dpoly operator*(const dpoly &a, const dpoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<rational> r(a.c_.size() + b.c_.size() - 1, rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return dpoly(std::move(r));
    }
    friend bool operator==(const dpoly &, const dpoly &) = default;

    // "3/2*u^2 - u + 1/3"; "0" when zero.
    [[nodiscard]] std::string to_string() const
    {
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const rational &c = c_[k];
            if (c == 0) {
                continue;
            }
            rational a = abs(c);
            if (!s.empty()) {
                s += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                s += "-";
            }
            std::string mag = is_integral(a) ? a.get_num().get_str() : to_string_rational(a);
            if (k == 0) {
                s += mag;
                continue;
            }
            if (a != 1) {
                s += mag + "*";
            }
            s += k == 1 ? "u" : "u^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }

private:
    static std::string to_string_rational(const rational &q)
    {
        return novalg::to_string(q);
    }
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<rational> c_;
};

// sum_n a_n D^n; zero coefficients removed.
class fdiff
{
public:
    fdiff() = default;
    // a D^n.
    fdiff(int n, dpoly a)
    {
        add(n, a);
    }

    [[nodiscard]] const std::map<int, dpoly> &terms() const noexcept
    {
        return terms_;
    }
    [[nodiscard]] dpoly coefficient(int n) const
    {
        auto it = terms_.find(n);
        return it == terms_.end() ? dpoly{} : it->second;
    }
    // Highest n with a_n != 0; -1 for zero.
    [[nodiscard]] int order() const noexcept
    {
        return terms_.empty() ? -1 : terms_.rbegin()->first;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    void add(int n, const dpoly &a)
    {
        if (a.is_zero()) {
            return;
        }
        auto &slot = terms_[n];
        slot += a;
        if (slot.is_zero()) {
            terms_.erase(n);
        }
    }

    fdiff &operator+=(const fdiff &o)
    {
        for (const auto &[n, a] : o.terms_) {
            add(n, a);
        }
        return *this;
    }
    fdiff &operator-=(const fdiff &o)
    {
        for (const auto &[n, a] : o.terms_) {
            add(n, rational(-1) * a);
        }
        return *this;
    }
    friend fdiff operator+(fdiff a, const fdiff &b)
    {
        a += b;
        return a;
    }
    friend fdiff operator-(fdiff a, const fdiff &b)
    {
        a -= b;
        return a;
    }
    friend fdiff operator*(const rational &s, const fdiff &a)
    {
        fdiff r;
        for (const auto &[n, c] : a.terms_) {
            r.add(n, s * c);
        }
        return r;
    }
    friend bool operator==(const fdiff &, const fdiff &) = default;

    // "(u^2)*D^2 + (3*u)*D"; "0" when zero.
    [[nodiscard]] std::string to_string() const
    {
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + it->second.to_string() + ")";
            if (it->first > 0) {
                s += it->first == 1 ? "*D" : "*D^" + std::to_string(it->first);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    std::map<int, dpoly> terms_;
};

// (a D^n) * (b D^m) = sum_p binom(n,p) a d^{n-p}(b) D^{m+p}.
inline fdiff star(const fdiff &x, const fdiff &y)
{
    fdiff r;
    for (const auto &[n, a] : x.terms()) {
        for (const auto &[m, b] : y.terms()) {
            for (int p = 0; p <= n; ++p) {
                r.add(m + p, rational(binomial(n, p)) * (a * b.derivative(n - p)));
            }
        }
    }
    return r;
}

// The commutative product (a D^n) . (b D^m) = ab D^{n+m}.
inline fdiff dot(const fdiff &x, const fdiff &y)
{
    fdiff r;
    for (const auto &[n, a] : x.terms()) {
        for (const auto &[m, b] : y.terms()) {
            r.add(n + m, a * b);
        }
    }
    return r;
}

// ev(sum_n a_n D^n)(f) = sum_n a_n d^n f.
inline dpoly ev_apply(const fdiff &op, const dpoly &f)
{
    dpoly r;
    for (const auto &[n, a] : op.terms()) {
        r += a * f.derivative(n);
    }
    return r;
}

// The operator with the given action on 1, u, .., u^max_order, solved
// triangularly: ev(op)(u^n) = sum_{j <= n} a_j n!/(n-j)! u^{n-j}. Recovers op
// from its action whenever order(op) <= max_order, which makes ev injective.
template <typename Action>
fdiff fdiff_from_action(Action &&action, int max_order)
{
    fdiff r;
    for (int n = 0; n <= max_order; ++n) {
        dpoly target = action(dpoly::power(n));
        dpoly known = ev_apply(r, dpoly::power(n));
        dpoly a = rational(1) / rational(factorial(n)) * (target - known);
        r.add(n, a);
    }
    return r;
}

// a D.
inline fdiff first_order(const dpoly &a)
{
    return fdiff(1, a);
}

// gamma(a_1 . .. . a_n) = a_1 .. a_n D^n.
inline fdiff gamma(const std::vector<dpoly> &factors)
{
    dpoly prod = dpoly::constant(1);
    for (const auto &a : factors) {
        prod = prod * a;
    }
    return fdiff(static_cast<int>(factors.size()), prod);
}

// Basis label u^k of A inside the enveloping algebra Q[A].
struct upow
{
    int k = 0;

    friend auto operator<=>(const upow &, const upow &) = default;
    friend bool operator==(const upow &, const upow &) = default;
};

using env_poly = enveloping::env_element<upow>;

} // namespace novalg::diffop

namespace novalg::enveloping
{

// u^k{u^a_1 .. u^a_n} = u^a_1 .. u^a_n d^n(u^k). The grading 1-k is the one
// the brace preserves; it is not positive, so degree caps do not apply.
template <>
struct label_traits<diffop::upow>
{
    static linear_combination<diffop::upow> brace(const diffop::upow &w, const std::vector<diffop::upow> &zs)
    {
        const long n = static_cast<long>(zs.size());
        integer c = falling_factorial(w.k, n);
        if (c == 0) {
            return {};
        }
        int e = w.k - static_cast<int>(n);
        for (const auto &z : zs) {
            e += z.k;
        }
        return linear_combination<diffop::upow>(diffop::upow{e}, rational(c));
    }
    static int degree(const diffop::upow &l)
    {
        return 1 - l.k;
    }
    static std::string to_string(const diffop::upow &l)
    {
        return "u^" + std::to_string(l.k);
    }
};

} // namespace novalg::enveloping

namespace novalg::diffop
{

// a_1 . .. . a_n in Q[A], expanded in the monomials u^k.
inline env_poly realize_monomial(const std::vector<dpoly> &factors)
{
    env_poly r = enveloping::unit<upow>();
    for (const auto &a : factors) {
        linear_combination<upow> lin;
        for (int k = 0; k <= a.degree(); ++k) {
            lin.add(upow{k}, a.coefficient(k));
        }
        r = enveloping::odot(r, enveloping::embed(lin));
    }
    return r;
}

// gamma extended linearly to Q[A].
inline fdiff gamma(const env_poly &e)
{
    fdiff r;
    for (const auto &[m, c] : e) {
        int total = 0;
        for (const auto &l : m.labels()) {
            total += l.k;
        }
        r.add(m.length(), dpoly::power(total, c));
    }
    return r;
}

// Substitutes a^{[g]}_j -> d^{j+1} f_g in a differential monomial expression,
// generators numbered from 1.
inline dpoly substitute(const novikov::diff_poly &expr, const std::vector<dpoly> &f)
{
    dpoly r;
    for (const auto &[m, c] : expr) {
        dpoly term = dpoly::constant(c);
        for (const auto &v : m.factors()) {
            if (v.generator < 1 || v.generator > static_cast<int>(f.size())) {
                throw std::out_of_range("substitute: generator without a polynomial");
            }
            term = term * f[static_cast<std::size_t>(v.generator - 1)].derivative(v.order + 1);
        }
        r += term;
    }
    return r;
}

// gamma after substituting f into each label of a multi-generator element.
inline fdiff gamma_substituted(const enveloping::env_element<novikov::monomial> &e, const std::vector<dpoly> &f)
{
    fdiff r;
    for (const auto &[m, c] : e) {
        dpoly prod = dpoly::constant(c);
        for (const auto &l : m.labels()) {
            prod = prod * substitute(novikov::diff_poly(l), f);
        }
        r.add(m.length(), prod);
    }
    return r;
}

// Right side of the Leibniz normal form: the sum over set partitions ordered
// by minima of prod_blocks (sum_{w in K_h} c_w prod_r d^{w_r} f_{x_r}) D^k,
// k the number of blocks.
inline fdiff leibniz_normal_form(const std::vector<dpoly> &f)
{
    const int i = static_cast<int>(f.size());
    fdiff r;
    combinatorics::for_each_set_partition(i, [&](const combinatorics::block_list &blocks) {
        dpoly prod = dpoly::constant(1);
        for (const auto &b : blocks) {
            const int h = static_cast<int>(b.size());
            dpoly block_sum;
            for (const auto &w : combinatorics::enumerate_catalan_words(h)) {
                dpoly term = dpoly::constant(rational(w.coefficient()));
                for (int s = 0; s < h; ++s) {
                    term = term * f[static_cast<std::size_t>(b[static_cast<std::size_t>(s)])].derivative(w.at(s + 1));
                }
                block_sum += term;
            }
            prod = prod * block_sum;
        }
        r.add(static_cast<int>(blocks.size()), prod);
    });
    return r;
}

// (f_1 D) * .. * (f_i D).
inline fdiff compose_first_order(const std::vector<dpoly> &f)
{
    fdiff r(0, dpoly::constant(1));
    for (const auto &a : f) {
        r = star(r, first_order(a));
    }
    return r;
}

inline bool verify_leibniz_normal_form(const std::vector<dpoly> &f)
{
    if (f.empty()) {
        throw std::invalid_argument("verify_leibniz_normal_form: at least one polynomial required");
    }
    return compose_first_order(f) == leibniz_normal_form(f);
}

// n-th component of a_1 .. a_m D^m: sum_{k >= n} s(k,n)/k! times the sum over
// ordered set partitions into k blocks of a_I1 D^|I1| * .. * a_Ik D^|Ik|.
inline fdiff pbw_component(int n, const std::vector<dpoly> &a)
{
    const int m = static_cast<int>(a.size());
    fdiff r;
    for (int k = std::max(n, 1); k <= m; ++k) {
        rational s = make_rational(combinatorics::stirling_first(k, n), factorial(k));
        if (s == 0) {
            continue;
        }
        fdiff sum;
        combinatorics::for_each_ordered_set_partition(m, k, [&](const combinatorics::block_list &blocks) {
            fdiff term(0, dpoly::constant(1));
            for (const auto &b : blocks) {
                std::vector<dpoly> part;
                for (int idx : b) {
                    part.push_back(a[static_cast<std::size_t>(idx)]);
                }
                term = star(term, gamma(part));
            }
            sum += term;
        });
        r += s * sum;
    }
    return r;
}

inline bool verify_pbw_decomposition(const std::vector<dpoly> &a)
{
    if (a.empty()) {
        throw std::invalid_argument("verify_pbw_decomposition: at least one polynomial required");
    }
    fdiff total;
    for (int n = 1; n <= static_cast<int>(a.size()); ++n) {
        total += pbw_component(n, a);
    }
    return total == gamma(a);
}

// Polynomial of degree at most max_degree with integer coefficients in [-3, 3].
inline dpoly random_dpoly(std::mt19937 &rng, int max_degree)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<rational> c;
    for (int k = 0; k <= max_degree; ++k) {
        c.emplace_back(coeff(rng));
    }
    return dpoly(std::move(c));
}

// Nonzero random operator of order at most max_order.
inline fdiff random_fdiff(std::mt19937 &rng, int max_order, int max_degree)
{
    fdiff r;
    while (r.is_zero()) {
        for (int n = 0; n <= max_order; ++n) {
            r.add(n, random_dpoly(rng, max_degree));
        }
    }
    return r;
}

} // namespace novalg::diffop

#endif
