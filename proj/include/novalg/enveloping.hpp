#ifndef NOVALG_ENVELOPING_HPP
#define NOVALG_ENVELOPING_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics.hpp>
#include <novalg/linear_combination.hpp>
#include <novalg/novikov.hpp>
#include <novalg/trees.hpp>

// Polynomial realization Q[N] of the enveloping algebra of a Novikov algebra N:
// commutative monomials in basis labels of N, with the product
// w_1..w_n * z_1..z_m = sum over I_1 u .. u I_{n+1} = [m] of
// w_1{z_I1} .. w_n{z_In} z_I(n+1).
namespace novalg::enveloping
{

using combinatorics::partition;
using novikov::diff_poly;
using novikov::monomial;

// A label type L supplies the brace of N on basis labels and a positive
// degree that every brace preserves additively.
template <typename L>
struct label_traits;

// One generator, basis x_p.
template <>
struct label_traits<partition>
{
    static linear_combination<partition> brace(const partition &a, const std::vector<partition> &args)
    {
        std::vector<diff_poly> d;
        d.reserve(args.size());
        for (const auto &p : args) {
            d.emplace_back(novikov::partition_monomial(p));
        }
        return novikov::from_diff_poly(novikov::brace(diff_poly(novikov::partition_monomial(a)), d));
    }
    static int degree(const partition &p)
    {
        return p.size() + 1;
    }
    static std::string to_string(const partition &p)
    {
        return "x_" + p.to_string();
    }
};

// Several generators, basis the differential monomials of weight -1.
template <>
struct label_traits<monomial>
{
    static linear_combination<monomial> brace(const monomial &a, const std::vector<monomial> &args)
    {
        std::vector<diff_poly> d;
        d.reserve(args.size());
        for (const auto &m : args) {
            d.emplace_back(m);
        }
        return novikov::brace(diff_poly(a), d);
    }
    static int degree(const monomial &m)
    {
        return m.degree();
    }
    static std::string to_string(const monomial &m)
    {
        return m.to_string();
    }
};

// Commutative monomial of Q[N]; labels kept sorted.
template <typename L>
class env_monomial
{
public:
    env_monomial() = default;
    explicit env_monomial(std::vector<L> labels) : labels_(std::move(labels))
    {
        std::sort(labels_.begin(), labels_.end());
    }

    [[nodiscard]] const std::vector<L> &labels() const noexcept
    {
        return labels_;
    }
    // Polynomial degree in Q[N].
    [[nodiscard]] int length() const noexcept
    {
        return static_cast<int>(labels_.size());
    }
    // Sum of the label degrees; * and the brace preserve it.
    [[nodiscard]] int weight() const
    {
        int w = 0;
        for (const auto &l : labels_) {
            w += label_traits<L>::degree(l);
        }
        return w;
    }

    friend env_monomial operator*(const env_monomial &a, const env_monomial &b)
    {
        env_monomial r;
        r.labels_.reserve(a.labels_.size() + b.labels_.size());
        std::merge(a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end(),
                   std::back_inserter(r.labels_));
        return r;
    }

    // Labels joined by '.', "1" for the unit.
    [[nodiscard]] std::string to_string() const
    {
        if (labels_.empty()) {
            return "1";
        }
        std::string s;
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) {
                s += '.';
            }
            s += label_traits<L>::to_string(labels_[i]);
        }
        return s;
    }

    friend auto operator<=>(const env_monomial &, const env_monomial &) = default;
    friend bool operator==(const env_monomial &, const env_monomial &) = default;

private:
    std::vector<L> labels_;
};

template <typename L>
using env_element = linear_combination<env_monomial<L>>;

// Ordered word x_1 (x) .. (x) x_n of the tensor algebra over N.
template <typename L>
struct tensor_word
{
    std::vector<L> letters;

    friend auto operator<=>(const tensor_word &, const tensor_word &) = default;
    friend bool operator==(const tensor_word &, const tensor_word &) = default;
};

template <typename L>
using tensor_combination = linear_combination<tensor_word<L>>;

template <typename L>
using env_pair = std::pair<env_monomial<L>, env_monomial<L>>;

// Element of Q[N] (x) Q[N].
template <typename L>
using env_tensor = linear_combination<env_pair<L>>;

template <typename L>
env_element<L> unit()
{
    return env_element<L>(env_monomial<L>{});
}

// N inside Q[N] as the polynomials of degree one.
template <typename L>
env_element<L> embed(const linear_combination<L> &a)
{
    env_element<L> r;
    for (const auto &[l, c] : a) {
        r.add(env_monomial<L>({l}), c);
    }
    return r;
}

template <typename L>
env_element<L> embed(const L &l)
{
    return env_element<L>(env_monomial<L>({l}));
}

// Degree one part, read back in N.
template <typename L>
linear_combination<L> linear_part(const env_element<L> &e)
{
    linear_combination<L> r;
    for (const auto &[m, c] : e) {
        if (m.length() == 1) {
            r.add(m.labels().front(), c);
        }
    }
    return r;
}

template <typename L>
env_element<L> polynomial_part(const env_element<L> &e, int length)
{
    return e.filter([length](const env_monomial<L> &m) { return m.length() == length; });
}

// Keep the monomials of weight at most cap; cap < 0 keeps everything.
template <typename L>
env_element<L> truncate(const env_element<L> &e, int cap)
{
    if (cap < 0) {
        return e;
    }
    return e.filter([cap](const env_monomial<L> &m) { return m.weight() <= cap; });
}

// The commutative product of Q[N].
template <typename L>
env_element<L> odot(const env_element<L> &a, const env_element<L> &b, int cap = -1)
{
    env_element<L> r;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            if (cap >= 0 && ma.weight() + mb.weight() > cap) {
                continue;
            }
            r.add(ma * mb, ca * cb);
        }
    }
    return r;
}

// w{z_1..z_k} on labels, extended multilinearly.
template <typename L>
linear_combination<L> brace(const L &w, const std::vector<L> &zs)
{
    return label_traits<L>::brace(w, zs);
}

// [a, b] = a{b} - b{a}, the Lie bracket of N.
template <typename L>
linear_combination<L> bracket(const L &a, const L &b)
{
    return brace(a, std::vector<L>{b}) - brace(b, std::vector<L>{a});
}

namespace detail
{

// Sum over I_1 u I_2 = zs of w[idx]{z_I1} . (w[idx+1..] * z_I2).
template <typename L>
env_element<L> star_rec(const std::vector<L> &w, std::size_t idx, const std::vector<L> &zs)
{
    if (idx == w.size()) {
        return env_element<L>(env_monomial<L>(zs));
    }
    env_element<L> r;
    combinatorics::for_each_subset(static_cast<int>(zs.size()), [&](const std::vector<int> &in,
                                                                      const std::vector<int> &out) {
        std::vector<L> taken;
        std::vector<L> left;
        for (int i : in) {
            taken.push_back(zs[static_cast<std::size_t>(i)]);
        }
        for (int i : out) {
            left.push_back(zs[static_cast<std::size_t>(i)]);
        }
        auto head = embed(brace(w[idx], taken));
        if (head.empty()) {
            return;
        }
        r += odot(head, star_rec(w, idx + 1, left));
    });
    return r;
}

} // namespace detail

template <typename L>
env_element<L> star(const env_monomial<L> &w, const env_monomial<L> &z)
{
    return detail::star_rec(w.labels(), 0, z.labels());
}

// The product *, dropping products of weight above cap (cap < 0: none).
template <typename L>
env_element<L> star(const env_element<L> &a, const env_element<L> &b, int cap = -1)
{
    env_element<L> r;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            if (cap >= 0 && ma.weight() + mb.weight() > cap) {
                continue;
            }
            r.add_scaled(star(ma, mb), ca * cb);
        }
    }
    return r;
}

// z *op w = w * z.
template <typename L>
env_element<L> star_op(const env_element<L> &z, const env_element<L> &w, int cap = -1)
{
    return star(w, z, cap);
}

// x_1 * .. * x_n for labels x_i.
template <typename L>
env_element<L> star_word(const std::vector<L> &word, int cap = -1)
{
    env_element<L> r = unit<L>();
    for (const auto &l : word) {
        r = star(r, embed(l), cap);
    }
    return r;
}

// Unshuffle coproduct: each label goes left or right.
template <typename L>
env_tensor<L> coproduct(const env_monomial<L> &m)
{
    env_tensor<L> r;
    const auto &ls = m.labels();
    combinatorics::for_each_subset(static_cast<int>(ls.size()), [&](const std::vector<int> &in,
                                                                      const std::vector<int> &out) {
        std::vector<L> a;
        std::vector<L> b;
        for (int i : in) {
            a.push_back(ls[static_cast<std::size_t>(i)]);
        }
        for (int i : out) {
            b.push_back(ls[static_cast<std::size_t>(i)]);
        }
        r.add({env_monomial<L>(std::move(a)), env_monomial<L>(std::move(b))}, 1);
    });
    return r;
}

template <typename L>
env_tensor<L> coproduct(const env_element<L> &e)
{
    env_tensor<L> r;
    for (const auto &[m, c] : e) {
        r.add_scaled(coproduct(m), c);
    }
    return r;
}

// (a (x) b)(c (x) d) = (a*c) (x) (b*d).
template <typename L>
env_tensor<L> tensor_star(const env_tensor<L> &x, const env_tensor<L> &y)
{
    env_tensor<L> r;
    for (const auto &[p, cp] : x) {
        for (const auto &[q, cq] : y) {
            auto left = star(p.first, q.first);
            auto right = star(p.second, q.second);
            for (const auto &[ml, cl] : left) {
                for (const auto &[mr, cr] : right) {
                    r.add({ml, mr}, cp * cq * cl * cr);
                }
            }
        }
    }
    return r;
}

namespace detail
{

// sum_{k >= 0} coeff(k) a^k under prod, truncated at weight cap. The weight of
// every monomial of a must be positive so the sum is finite.
template <typename L, typename Coeff, typename Prod>
env_element<L> power_series(const env_element<L> &a, int cap, Coeff &&coeff, Prod &&prod)
{
    for (const auto &[m, c] : a) {
        if (m.weight() <= 0) {
            throw std::invalid_argument("power series of an element with a constant term");
        }
    }
    env_element<L> r;
    env_element<L> pw = unit<L>();
    for (int k = 0; k <= cap && !pw.empty(); ++k) {
        r.add_scaled(pw, coeff(k));
        pw = prod(pw, a, cap);
    }
    return r;
}

inline rational exp_coefficient(int k)
{
    return make_rational(1, factorial(k));
}

inline rational log_coefficient(int k)
{
    return k == 0 ? rational(0) : make_rational(sign_power(k - 1), k);
}

} // namespace detail

template <typename L>
env_element<L> exp_star(const env_element<L> &a, int cap)
{
    return detail::power_series(a, cap, detail::exp_coefficient,
                                [](const auto &u, const auto &v, int c) { return star(u, v, c); });
}

template <typename L>
env_element<L> exp_odot(const env_element<L> &a, int cap)
{
    return detail::power_series(a, cap, detail::exp_coefficient,
                                [](const auto &u, const auto &v, int c) { return odot(u, v, c); });
}

// log(1 + h) for a with constant term 1.
template <typename L>
env_element<L> log_star(const env_element<L> &a, int cap)
{
    auto h = a - unit<L>();
    if (h.coefficient(env_monomial<L>{}) != 0) {
        throw std::invalid_argument("log_star: constant term must be 1");
    }
    return detail::power_series(h, cap, detail::log_coefficient,
                                [](const auto &u, const auto &v, int c) { return star(u, v, c); });
}

template <typename L>
env_element<L> log_odot(const env_element<L> &a, int cap)
{
    auto h = a - unit<L>();
    if (h.coefficient(env_monomial<L>{}) != 0) {
        throw std::invalid_argument("log_odot: constant term must be 1");
    }
    return detail::power_series(h, cap, detail::log_coefficient,
                                [](const auto &u, const auto &v, int c) { return odot(u, v, c); });
}

// exp of N through the enveloping algebra: log^odot(exp^*(a)).
template <typename L>
linear_combination<L> exp_prelie(const linear_combination<L> &a, int cap)
{
    auto e = log_odot(exp_star(embed(a), cap), cap);
    return linear_part(e);
}

// log of N through the enveloping algebra: log_*(exp_odot(a)).
template <typename L>
linear_combination<L> log_prelie(const linear_combination<L> &a, int cap)
{
    auto e = log_star(exp_odot(embed(a), cap), cap);
    return linear_part(e);
}

// x^{<I} = (..(x_i1 < x_i2) ..) < x_ik for i1 < .. < ik.
template <typename L>
linear_combination<L> left_bracketed(const std::vector<L> &word, const combinatorics::block &b)
{
    linear_combination<L> r(word[static_cast<std::size_t>(b.front())]);
    for (std::size_t j = 1; j < b.size(); ++j) {
        const L &next = word[static_cast<std::size_t>(b[j])];
        linear_combination<L> s;
        for (const auto &[l, c] : r) {
            s.add_scaled(brace(l, std::vector<L>{next}), c);
        }
        r = std::move(s);
    }
    return r;
}

// pbw^-1(x_1 (x) .. (x) x_n) as iterated * products.
template <typename L>
env_element<L> pbw_prelie_inv(const tensor_word<L> &w)
{
    return star_word(w.letters);
}

// The same through set partitions ordered by minima: sum of x^{<I_1} . .. . x^{<I_k}.
template <typename L>
env_element<L> pbw_prelie_inv_blocks(const tensor_word<L> &w)
{
    env_element<L> r;
    combinatorics::for_each_set_partition(static_cast<int>(w.letters.size()),
                                          [&](const combinatorics::block_list &blocks) {
                                              env_element<L> term = unit<L>();
                                              for (const auto &b : blocks) {
                                                  term = odot(term, embed(left_bracketed(w.letters, b)));
                                              }
                                              r += term;
                                          });
    return r;
}

template <typename L>
env_element<L> pbw_prelie_inv(const tensor_combination<L> &t)
{
    env_element<L> r;
    for (const auto &[w, c] : t) {
        r.add_scaled(pbw_prelie_inv(w), c);
    }
    return r;
}

// Inverse of pbw^-1, solved degree by degree: the top polynomial part of
// pbw^-1(x_1 (x) .. (x) x_n) is x_1 . .. . x_n. Words come out sorted.
template <typename L>
tensor_combination<L> pbw_prelie(const env_element<L> &e)
{
    tensor_combination<L> r;
    env_element<L> rest = e;
    while (!rest.empty()) {
        auto top = std::max_element(rest.begin(), rest.end(), [](const auto &a, const auto &b) {
            return a.first.length() < b.first.length();
        });
        tensor_word<L> w{top->first.labels()};
        rational c = top->second;
        r.add(w, c);
        rest.add_scaled(pbw_prelie_inv(w), -c);
    }
    return r;
}

// Rewrite a word into sorted words in U(N) = T(N)/(x(x)y - y(x)x - [x,y]).
template <typename L>
tensor_combination<L> straighten(const tensor_word<L> &w)
{
    const auto &ls = w.letters;
    std::size_t k = 0;
    while (k + 1 < ls.size() && !(ls[k + 1] < ls[k])) {
        ++k;
    }
    if (k + 1 >= ls.size()) {
        return tensor_combination<L>(w);
    }
    auto swapped = ls;
    std::swap(swapped[k], swapped[k + 1]);
    tensor_combination<L> r = straighten(tensor_word<L>{swapped});
    for (const auto &[l, c] : bracket(ls[k], ls[k + 1])) {
        std::vector<L> shorter(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
        shorter.push_back(l);
        shorter.insert(shorter.end(), ls.begin() + static_cast<std::ptrdiff_t>(k + 2), ls.end());
        r.add_scaled(straighten(tensor_word<L>{std::move(shorter)}), c);
    }
    return r;
}

// Symmetrization x_1 . .. . x_n -> 1/n! sum_sigma x_sigma(1) * .. * x_sigma(n).
template <typename L>
env_element<L> pbw_classical(const env_monomial<L> &m)
{
    auto labels = m.labels();
    env_element<L> r;
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        std::vector<L> w;
        for (auto i : order) {
            w.push_back(labels[i]);
        }
        r += star_word(w);
    } while (std::next_permutation(order.begin(), order.end()));
    r *= make_rational(1, factorial(static_cast<long>(labels.size())));
    return r;
}

template <typename L>
env_element<L> pbw_classical(const env_element<L> &e)
{
    env_element<L> r;
    for (const auto &[m, c] : e) {
        r.add_scaled(pbw_classical(m), c);
    }
    return r;
}

// n-th canonical projection: sum_{k >= n} s(k,n)/k! times the sum over ordered
// set partitions into k blocks of x^{.I_1} * .. * x^{.I_k}.
template <typename L>
env_element<L> canonical_projection(int n, const env_monomial<L> &m)
{
    const auto &ls = m.labels();
    const int len = m.length();
    env_element<L> r;
    if (len == 0) {
        return n == 0 ? unit<L>() : r;
    }
    for (int k = std::max(n, 1); k <= len; ++k) {
        rational s = make_rational(combinatorics::stirling_first(k, n), factorial(k));
        if (s == 0) {
            continue;
        }
        env_element<L> sum;
        combinatorics::for_each_ordered_set_partition(len, k, [&](const combinatorics::block_list &blocks) {
            env_element<L> term = unit<L>();
            for (const auto &b : blocks) {
                std::vector<L> part;
                for (int i : b) {
                    part.push_back(ls[static_cast<std::size_t>(i)]);
                }
                term = star(term, env_element<L>(env_monomial<L>(std::move(part))));
            }
            sum += term;
        });
        r.add_scaled(sum, s);
    }
    return r;
}

template <typename L>
env_element<L> canonical_projection(int n, const env_element<L> &e)
{
    env_element<L> r;
    for (const auto &[m, c] : e) {
        r.add_scaled(canonical_projection(n, m), c);
    }
    return r;
}

// Multi-generator labels a^{[g]}_j and helpers.
inline monomial var(int generator, int order)
{
    return monomial({novikov::variable{generator, order}});
}

// a^{[i]} * .. * a^{[1]} expanded over set partitions ordered by minima: a
// block x_1 < .. < x_h contributes sum_{w in K_h} c_w a^{[x_1]}_{w_1-1} .. a^{[x_h]}_{w_h-1}.
inline env_element<monomial> generator_product_catalan(int i)
{
    env_element<monomial> r;
    combinatorics::for_each_set_partition(i, [&](const combinatorics::block_list &blocks) {
        env_element<monomial> term = unit<monomial>();
        for (const auto &b : blocks) {
            linear_combination<monomial> factor;
            const int h = static_cast<int>(b.size());
            for (const auto &w : combinatorics::enumerate_catalan_words(h)) {
                std::vector<novikov::variable> vars;
                for (int r2 = 0; r2 < h; ++r2) {
                    vars.push_back({b[static_cast<std::size_t>(r2)] + 1, w.at(r2 + 1) - 1});
                }
                factor.add(monomial(std::move(vars)), rational(w.coefficient()));
            }
            term = odot(term, embed(factor));
        }
        r += term;
    });
    return r;
}

// a^{[i]} * .. * a^{[1]} by direct multiplication.
inline env_element<monomial> generator_product(int i)
{
    std::vector<monomial> word;
    for (int g = i; g >= 1; --g) {
        word.push_back(monomial::generator(g));
    }
    return star_word(word);
}

// eta(f_1..f_i) = (f_1 d) o .. o (f_{i-1} d)(f_i).
inline diff_poly eta_iterated(const std::vector<diff_poly> &f)
{
    if (f.empty()) {
        throw std::invalid_argument("eta: at least one argument required");
    }
    diff_poly g = f.back();
    for (std::size_t j = f.size() - 1; j-- > 0;) {
        g = novikov::multiply(f[j], novikov::derivative(g));
    }
    return g;
}

// sum over phi in Inc(i) of prod_k d^{|phi^-1(k)|} f_k.
inline diff_poly eta_inc(const std::vector<diff_poly> &f)
{
    const int i = static_cast<int>(f.size());
    diff_poly r;
    for (const auto &phi : combinatorics::enumerate_inc(i)) {
        const auto w = phi.multiplicity_word();
        diff_poly term(monomial{});
        for (int k = 1; k <= i; ++k) {
            term = novikov::multiply(term, novikov::derivative(f[static_cast<std::size_t>(k - 1)], w.at(k)));
        }
        r += term;
    }
    return r;
}

// sum over w in K_i of c_w prod_j d^{w_j} f_j.
inline diff_poly eta_catalan(const std::vector<diff_poly> &f)
{
    const int i = static_cast<int>(f.size());
    diff_poly r;
    for (const auto &w : combinatorics::enumerate_catalan_words(i)) {
        diff_poly term(monomial{});
        for (int k = 1; k <= i; ++k) {
            term = novikov::multiply(term, novikov::derivative(f[static_cast<std::size_t>(k - 1)], w.at(k)));
        }
        r.add_scaled(term, rational(w.coefficient()));
    }
    return r;
}

// sum over decreasing trees on [i] of prod_v d^{fertility(v)} f_v.
inline diff_poly eta_trees(const std::vector<diff_poly> &f)
{
    const int i = static_cast<int>(f.size());
    diff_poly r;
    for (const auto &t : trees::enumerate_decreasing_trees(i)) {
        diff_poly term(monomial{});
        for (int v = 1; v <= i; ++v) {
            term = novikov::multiply(term, novikov::derivative(f[static_cast<std::size_t>(v - 1)], t.fertility(v)));
        }
        r += term;
    }
    return r;
}

// Linear part of f_i * .. * f_1 in Q[N].
inline diff_poly eta_star(const std::vector<diff_poly> &f)
{
    env_element<monomial> r = unit<monomial>();
    for (std::size_t j = f.size(); j-- > 0;) {
        r = star(r, embed(f[j]));
    }
    return linear_part(r);
}

} // namespace novalg::enveloping

#endif
