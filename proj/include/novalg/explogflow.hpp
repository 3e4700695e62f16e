#ifndef NOVALG_EXPLOGFLOW_HPP
#define NOVALG_EXPLOGFLOW_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics.hpp>
#include <novalg/enveloping.hpp>
#include <novalg/linear_combination.hpp>
#include <novalg/novikov.hpp>
#include <novalg/trees.hpp>

// Exponential, logarithm and flow of the generator x = x_(0) of the free
// Novikov algebra. Series are truncated by the degree |p|+1 of x_p.
namespace novalg::explogflow
{

using combinatorics::partition;
using novikov::element;

// Polynomial sum_k c_k binom(t,k) with integer coefficients; every
// integer-valued polynomial has this form.
class binomial_poly
{
public:
    binomial_poly() = default;
    explicit binomial_poly(std::vector<integer> coeffs) : c_(std::move(coeffs))
    {
        trim();
    }

    static binomial_poly binom(int k)
    {
        std::vector<integer> c(static_cast<std::size_t>(k + 1), 0);
        c.back() = 1;
        return binomial_poly(std::move(c));
    }
    static binomial_poly constant(const integer &a)
    {
        return binomial_poly({a});
    }

    // The polynomial of degree < values.size() through (j, values[j]), by
    // forward differences at 0.
    static binomial_poly from_values(std::vector<integer> values)
    {
        std::vector<integer> c;
        while (!values.empty()) {
            c.push_back(values.front());
            for (std::size_t j = 0; j + 1 < values.size(); ++j) {
                values[j] = values[j + 1] - values[j];
            }
            values.pop_back();
        }
        return binomial_poly(std::move(c));
    }

    [[nodiscard]] const std::vector<integer> &coefficients() const noexcept
    {
        return c_;
    }
    [[nodiscard]] integer coefficient(int k) const
    {
        return k >= 0 && static_cast<std::size_t>(k) < c_.size() ? c_[static_cast<std::size_t>(k)] : integer(0);
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

    [[nodiscard]] rational operator()(const rational &t) const
    {
        rational r = 0;
        rational b = 1; // binom(t, k)
        for (std::size_t k = 0; k < c_.size(); ++k) {
            r += b * c_[k];
            b = b * (t - static_cast<long>(k)) / static_cast<long>(k + 1);
        }
        return r;
    }
    [[nodiscard]] integer operator()(long t) const
    {
        return to_integer((*this)(rational(t)));
    }

    // Delta p(t) = p(t+1) - p(t); binom(t,k) -> binom(t,k-1).
    [[nodiscard]] binomial_poly delta() const
    {
        if (c_.empty()) {
            return {};
        }
        return binomial_poly(std::vector<integer>(c_.begin() + 1, c_.end()));
    }

    // sum_{tau=0}^{t-1} p(tau); binom(t,k) -> binom(t,k+1), vanishing at 0.
    [[nodiscard]] binomial_poly indefinite_sum() const
    {
        if (c_.empty()) {
            return {};
        }
        std::vector<integer> c{0};
        c.insert(c.end(), c_.begin(), c_.end());
        return binomial_poly(std::move(c));
    }

    // Coefficients of t^0, t^1, .. through binom(t,k) = sum_j s(k,j) t^j / k!.
    [[nodiscard]] std::vector<rational> monomial_coefficients() const
    {
        std::vector<rational> m(c_.size(), rational(0));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) {
                continue;
            }
            rational scale = make_rational(c_[k], factorial(static_cast<long>(k)));
            for (std::size_t j = 0; j <= k; ++j) {
                m[j] += scale * combinatorics::stirling_first(static_cast<int>(k), static_cast<int>(j));
            }
        }
        while (!m.empty() && m.back() == 0) {
            m.pop_back();
        }
        return m;
    }

    // p'(0) = sum_{k >= 1} c_k (-1)^{k-1} / k.
    [[nodiscard]] rational derivative_at_zero() const
    {
        rational r = 0;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            r += make_rational(c_[k] * sign_power(static_cast<long>(k) - 1), static_cast<long>(k));
        }
        return r;
    }

    binomial_poly &operator+=(const binomial_poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), 0);
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }
    friend binomial_poly operator+(binomial_poly a, const binomial_poly &b)
    {
        a += b;
        return a;
    }
    friend binomial_poly operator*(const integer &s, binomial_poly a)
    {
        for (auto &c : a.c_) {
            c *= s;
        }
        a.trim();
        return a;
    }
    // Product by evaluation at 0..deg and forward differences.
    friend binomial_poly operator*(const binomial_poly &a, const binomial_poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        const int deg = a.degree() + b.degree();
        std::vector<integer> values;
        for (long t = 0; t <= deg; ++t) {
            values.push_back(a(t) * b(t));
        }
        return from_values(std::move(values));
    }
    friend bool operator==(const binomial_poly &, const binomial_poly &) = default;

    // "c_k*C(t,k) + .." from the top degree down; "0" when zero.
    [[nodiscard]] std::string to_string() const
    {
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += c_[k] < 0 ? " - " : " + ";
            } else if (c_[k] < 0) {
                s += "-";
            }
            integer a = abs(c_[k]);
            s += a.get_str() + "*C(t," + std::to_string(k) + ")";
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<integer> c_;
};

// ---------------------------------------------------------------------------
// Exponential: coefficient of x_p is N_p / (|p|+1)!.

inline integer np_leib(const partition &p)
{
    auto counts = combinatorics::leib_fiber_counts(p.size());
    auto it = counts.find(p);
    return it == counts.end() ? integer(0) : it->second;
}

inline integer np_lehmer(const partition &p)
{
    auto counts = combinatorics::lehmer_fiber_counts(p.size());
    auto it = counts.find(p);
    return it == counts.end() ? integer(0) : it->second;
}

inline integer np_closed(const partition &p)
{
    return to_integer(combinatorics::np_closed_formula(p));
}

namespace detail
{

template <typename F>
element exp_from_counts(int cap, F &&counts_of_size)
{
    element r;
    for (int n = 0; n + 1 <= cap; ++n) {
        for (const auto &[p, count] : counts_of_size(n)) {
            r.add(p, make_rational(count, factorial(n + 1)));
        }
    }
    return r;
}

} // namespace detail

// exp(x) through the fibers of Theta_n on Leib(n).
inline element exp_coefficients_leib(int cap)
{
    return detail::exp_from_counts(cap, [](int n) { return combinatorics::leib_fiber_counts(n); });
}

// exp(x) through the Lehmer statistic L on S_n.
inline element exp_coefficients_lehmer(int cap)
{
    return detail::exp_from_counts(cap, [](int n) { return combinatorics::lehmer_fiber_counts(n); });
}

// exp(x) through the inclusion-exclusion closed formula.
inline element exp_coefficients_closed(int cap)
{
    return detail::exp_from_counts(cap, [](int n) {
        std::map<partition, integer> counts;
        for (const auto &p : combinatorics::enumerate_partitions(n)) {
            counts[p] = np_closed(p);
        }
        return counts;
    });
}

// ---------------------------------------------------------------------------
// The coefficients C_{p,p'}.

// A matrix of M(p,p'): first row a_1, second row a_2, both of length |p'|+1.
struct chain_matrix
{
    std::vector<int> top;
    std::vector<int> bottom;

    [[nodiscard]] integer weight() const
    {
        integer w = 1;
        for (std::size_t i = 0; i < top.size(); ++i) {
            w *= binomial(top[i], bottom[i]);
        }
        return w;
    }
};

// M(p,p'), listed with the first row in lexicographically decreasing order.
inline std::vector<chain_matrix> chain_matrices(const partition &p, const partition &p_prime)
{
    std::vector<chain_matrix> out;
    if (!combinatorics::admissible(p_prime, p)) {
        return out;
    }
    const int width = p_prime.size() + 1;
    std::vector<int> bottom(static_cast<std::size_t>(width), 0);
    std::copy(p_prime.parts().begin(), p_prime.parts().end(), bottom.begin());
    // Remaining multiplicities of the first-row values, zeros included.
    std::map<int, int, std::greater<>> pool;
    for (int v : p.parts()) {
        ++pool[v];
    }
    pool[0] += width - p.length();
    std::vector<int> top(static_cast<std::size_t>(width), 0);
    auto rec = [&](auto &&self, int col) -> void {
        if (col == width) {
            out.push_back({top, bottom});
            return;
        }
        for (auto &[v, left] : pool) {
            if (left == 0 || v < bottom[static_cast<std::size_t>(col)]) {
                continue;
            }
            --left;
            top[static_cast<std::size_t>(col)] = v;
            self(self, col + 1);
            ++left;
        }
    };
    rec(rec, 0);
    return out;
}

// C_{p,p'} as the weighted count of M(p,p'); 0 unless p' <_a p.
inline integer c_coefficient(const partition &p, const partition &p_prime)
{
    integer c = 0;
    for (const auto &m : chain_matrices(p, p_prime)) {
        c += m.weight();
    }
    return c;
}

// C_{p,p'} from its definition: the coefficient of k!/p! x_p in x_{p'}{x^k}/p'!,
// read off the differential monomial realization.
inline integer c_coefficient_brace(const partition &p, const partition &p_prime)
{
    const int k = p.size() - p_prime.size();
    if (k < 1) {
        return 0;
    }
    element braced = novikov::brace(element(p_prime), std::vector<element>(static_cast<std::size_t>(k), novikov::x()));
    rational c = braced.coefficient(p) * rational(p.factorial()) /
                 (rational(factorial(k)) * rational(p_prime.factorial()));
    return to_integer(c);
}

// Single-cell rule for |p| = |p'|+1: removing a part 1 gives |p|-l(p)+1,
// lowering a part j >= 2 to j-1 gives j (n_{j-1}+1), n_{j-1} the
// multiplicity of j-1 in p.
inline integer c_coefficient_single_cell(const partition &p, const partition &p_prime)
{
    if (p.size() != p_prime.size() + 1) {
        throw std::invalid_argument("single-cell rule needs |p| = |p'| + 1");
    }
    if (!combinatorics::partition_less(p_prime, p)) {
        return 0;
    }
    if (p_prime.length() < p.length()) {
        return p.size() - p.length() + 1;
    }
    for (int i = 0; i < p.length(); ++i) {
        if (p[static_cast<std::size_t>(i)] != p_prime[static_cast<std::size_t>(i)]) {
            const int j = p[static_cast<std::size_t>(i)];
            return j * (p.multiplicity(j - 1) + 1);
        }
    }
    throw std::logic_error("single-cell rule: no differing cell");
}

// All p' with p' <_a p, in increasing order.
inline std::vector<partition> admissible_predecessors(const partition &p)
{
    std::vector<partition> out;
    for (int s = 0; s < p.size(); ++s) {
        for (const auto &q : combinatorics::enumerate_partitions(s)) {
            if (combinatorics::admissible(q, p)) {
                out.push_back(q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Factorizations x_p = x_{k-1} x_{q_1} .. x_{q_k} of the flow difference
// equation: extract one part k of p, split the other parts among k
// unordered factors, empty factors standing for x_(0).
struct factorization
{
    int k = 0;
    std::vector<partition> factors; // sorted decreasingly, k of them
    integer weight;                 // k! / prod i_j!, i_j the repetitions

    // (q, i) pairs in decreasing order of q.
    [[nodiscard]] std::vector<std::pair<partition, int>> grouped() const
    {
        std::vector<std::pair<partition, int>> g;
        for (const auto &q : factors) {
            if (!g.empty() && g.back().first == q) {
                ++g.back().second;
            } else {
                g.emplace_back(q, 1);
            }
        }
        return g;
    }
};

inline std::vector<factorization> factorizations(const partition &p)
{
    std::vector<factorization> out;
    std::vector<int> values = p.parts();
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int k : values) {
        std::vector<int> rest = p.parts();
        rest.erase(std::find(rest.begin(), rest.end(), k));
        std::set<std::vector<partition>, std::greater<>> seen;
        combinatorics::for_each_set_partition(static_cast<int>(rest.size()), [&](const combinatorics::block_list &bl) {
            if (static_cast<int>(bl.size()) > k) {
                return;
            }
            std::vector<partition> f;
            for (const auto &b : bl) {
                std::vector<int> parts;
                for (int i : b) {
                    parts.push_back(rest[static_cast<std::size_t>(i)]);
                }
                f.push_back(partition::from_multiset(std::move(parts)));
            }
            f.resize(static_cast<std::size_t>(k));
            std::sort(f.begin(), f.end(), std::greater<>{});
            seen.insert(std::move(f));
        });
        for (const auto &f : seen) {
            factorization fz{k, f, 0};
            std::vector<long> reps;
            for (const auto &[q, i] : fz.grouped()) {
                reps.push_back(i);
            }
            fz.weight = multinomial(reps);
            out.push_back(std::move(fz));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Memo tables for C_{p,p'}, n_{p,k} and the flow polynomials. A session is
// meant for one thread; share results, not sessions.
class flow_session
{
public:
    integer c(const partition &p, const partition &p_prime)
    {
        auto key = std::make_pair(p, p_prime);
        auto it = c_.find(key);
        if (it != c_.end()) {
            return it->second;
        }
        integer v = c_coefficient(p, p_prime);
        c_.emplace(std::move(key), v);
        return v;
    }

    const std::vector<partition> &predecessors(const partition &p)
    {
        auto it = pred_.find(p);
        if (it == pred_.end()) {
            it = pred_.emplace(p, admissible_predecessors(p)).first;
        }
        return it->second;
    }

    // n_{p,k} through n_{p,1} = [p = (0)], n_{p,k+1} = sum_{p' <_a p} C_{p,p'} n_{p',k},
    // i.e. the sum over admissible chains (0) = p_0 <_a .. <_a p_{k-1} = p.
    integer n(const partition &p, int k)
    {
        if (k < 1) {
            throw std::invalid_argument("n_{p,k} needs k >= 1");
        }
        if (k == 1) {
            return p.is_zero() ? 1 : 0;
        }
        if (k > p.size() + 1) {
            return 0;
        }
        auto key = std::make_pair(p, k);
        auto it = n_.find(key);
        if (it != n_.end()) {
            return it->second;
        }
        integer v = 0;
        for (const auto &q : predecessors(p)) {
            integer nq = n(q, k - 1);
            if (nq != 0) {
                v += c(p, q) * nq;
            }
        }
        n_.emplace(std::move(key), v);
        return v;
    }

    // Q_p(t) = sum_{k=1}^{|p|+1} n_{p,k} binom(t,k).
    binomial_poly flow(const partition &p)
    {
        auto it = flow_.find(p);
        if (it != flow_.end()) {
            return it->second;
        }
        std::vector<integer> coeffs{0};
        for (int k = 1; k <= p.size() + 1; ++k) {
            coeffs.push_back(n(p, k));
        }
        binomial_poly q(std::move(coeffs));
        flow_.emplace(p, q);
        return q;
    }

    // Delta Q_p = sum_{p' <_a p} C_{p,p'} Q_{p'}, Q_p(0) = 0, Delta Q_(0) = 1.
    binomial_poly flow_by_predecessors(const partition &p)
    {
        auto it = rec2_.find(p);
        if (it != rec2_.end()) {
            return it->second;
        }
        binomial_poly d;
        if (p.is_zero()) {
            d = binomial_poly::constant(1);
        }
        for (const auto &q : predecessors(p)) {
            d += c(p, q) * flow_by_predecessors(q);
        }
        auto q = d.indefinite_sum();
        rec2_.emplace(p, q);
        return q;
    }

    // Delta Q_p = sum over factorizations of k!/prod i_j! prod Q_{q_j}^{i_j},
    // Q_p(0) = 0, Delta Q_(0) = 1.
    binomial_poly flow_by_factorizations(const partition &p)
    {
        auto it = rec1_.find(p);
        if (it != rec1_.end()) {
            return it->second;
        }
        binomial_poly d;
        if (p.is_zero()) {
            d = binomial_poly::constant(1);
        }
        for (const auto &fz : factorizations(p)) {
            binomial_poly term = binomial_poly::constant(fz.weight);
            for (const auto &q : fz.factors) {
                term = term * flow_by_factorizations(q);
            }
            d += term;
        }
        auto q = d.indefinite_sum();
        rec1_.emplace(p, q);
        return q;
    }

    // Coefficient of x_p in log(x): Q_p'(0) / p!.
    rational log_coefficient(const partition &p)
    {
        return flow(p).derivative_at_zero() / rational(p.factorial());
    }

private:
    std::map<std::pair<partition, partition>, integer> c_;
    std::map<partition, std::vector<partition>> pred_;
    std::map<std::pair<partition, int>, integer> n_;
    std::map<partition, binomial_poly> flow_;
    std::map<partition, binomial_poly> rec1_;
    std::map<partition, binomial_poly> rec2_;
};

// n_{p,k} through the tableaux: n_{p,1} = [p = (0)] and
// n_{p,k+1} = sum_{s in T_{p,k}} prod_h C_{s<=h, s<=h-1}.
inline integer n_coefficient_tableaux(const partition &p, int k, flow_session &session)
{
    if (k < 1) {
        throw std::invalid_argument("n_{p,k} needs k >= 1");
    }
    if (k == 1) {
        return p.is_zero() ? 1 : 0;
    }
    integer total = 0;
    for (const auto &s : combinatorics::enumerate_tableaux(p, k - 1)) {
        integer prod = 1;
        partition below;
        for (int h = 1; h < k && prod != 0; ++h) {
            partition cur = s.sub_shape(h);
            prod *= session.c(cur, below);
            below = cur;
        }
        total += prod;
    }
    return total;
}

// n_{p,k} = #{(T, l) : T planar, Psi(T) = p, l : V(T) -> [k] surjective and
// strictly monotone}.
inline integer n_coefficient_planar(const partition &p, int k)
{
    const int vertices = p.size() + 1;
    if (k < 1 || k > vertices) {
        return 0;
    }
    integer total = 0;
    for (const auto &t : trees::enumerate_planar_trees(vertices)) {
        if (trees::psi(t) == p) {
            total += trees::strict_order_counts(t)[static_cast<std::size_t>(k - 1)];
        }
    }
    return total;
}

// n_{p,i+1} = p! [x_p] sum_{k_1+..+k_i = |p|, k_j >= 1} (..(x{x^k_1})..){x^k_i} / prod k_j!,
// for every p with |p|+1 <= cap. Key (p, i+1).
inline std::map<std::pair<partition, int>, integer> n_table_braces(int cap)
{
    std::map<std::pair<partition, int>, integer> table;
    if (cap < 1) {
        return table;
    }
    // level[d] = degree-d part of the i-fold sum.
    std::vector<element> level(static_cast<std::size_t>(cap + 1));
    level[1] = novikov::x();
    for (int i = 0;; ++i) {
        bool any = false;
        for (int d = 1; d <= cap; ++d) {
            for (const auto &[p, c] : level[static_cast<std::size_t>(d)]) {
                table[{p, i + 1}] = to_integer(c * rational(p.factorial()));
                any = true;
            }
        }
        if (!any) {
            return table;
        }
        std::vector<element> next(static_cast<std::size_t>(cap + 1));
        for (int d = 1; d <= cap; ++d) {
            const auto &src = level[static_cast<std::size_t>(d)];
            if (src.empty()) {
                continue;
            }
            for (int k = 1; d + k <= cap; ++k) {
                std::vector<element> args(static_cast<std::size_t>(k), novikov::x());
                next[static_cast<std::size_t>(d + k)].add_scaled(novikov::brace(src, args),
                                                                   make_rational(1, factorial(k)));
            }
        }
        level = std::move(next);
    }
}

// N_p = n_{p,|p|+1} / p!.
inline integer np_tableaux(const partition &p, flow_session &session)
{
    return to_integer(rational(session.n(p, p.size() + 1)) / rational(p.factorial()));
}

// N_p over maximal chains, i.e. standard tableaux, with the single-cell rule.
inline integer np_single_cell(const partition &p)
{
    if (p.is_zero()) {
        return 1;
    }
    integer total = 0;
    for (const auto &s : combinatorics::enumerate_standard_tableaux(p)) {
        integer prod = 1;
        partition below;
        for (int h = 1; h <= p.size(); ++h) {
            partition cur = s.sub_shape(h);
            prod *= c_coefficient_single_cell(cur, below);
            below = cur;
        }
        total += prod;
    }
    return to_integer(rational(total) / rational(p.factorial()));
}

// Q_p(n) = #{(T, l) : T planar, Psi(T) = p, l : V(T) -> [n] strictly monotone}.
inline integer flow_value_planar(const partition &p, long n)
{
    integer total = 0;
    for (const auto &t : trees::enumerate_planar_trees(p.size() + 1)) {
        if (trees::psi(t) == p) {
            total += trees::strict_monotone_count(t, static_cast<int>(n));
        }
    }
    return total;
}

// Q_p interpolated from the planar counts at 0..|p|+1.
inline binomial_poly flow_by_planar_counts(const partition &p)
{
    std::vector<integer> values;
    for (long n = 0; n <= p.size() + 1; ++n) {
        values.push_back(flow_value_planar(p, n));
    }
    return binomial_poly::from_values(std::move(values));
}

// ---------------------------------------------------------------------------
// Series.

// exp(x) with the coefficient of x_p equal to N_p/(|p|+1)!, N_p = n_{p,|p|+1}/p!.
inline element exp_coefficients_tableaux(int cap, flow_session &session)
{
    element r;
    for (const auto &p : combinatorics::enumerate_partitions_up_to(cap - 1)) {
        r.add(p, make_rational(np_tableaux(p, session), factorial(p.size() + 1)));
    }
    return r;
}

// log(x) = sum_p (sum_i (-1)^{i-1}/i n_{p,i}) x_p / p!.
inline element log_coefficients(int cap, flow_session &session)
{
    element r;
    for (const auto &p : combinatorics::enumerate_partitions_up_to(cap - 1)) {
        r.add(p, session.log_coefficient(p));
    }
    return r;
}

// Q(t) = sum_p Q_p(t) x_p / p!, evaluated at t.
inline element flow_series(const rational &t, int cap, flow_session &session)
{
    element r;
    for (const auto &p : combinatorics::enumerate_partitions_up_to(cap - 1)) {
        r.add(p, session.flow(p)(t) / rational(p.factorial()));
    }
    return r;
}

// v (.) w = w + v{exp^odot(w)}.
inline element circled_product(const element &v, const element &w, int cap)
{
    return novikov::circled(v, w, cap);
}

// The same group law read in the enveloping algebra:
// log^odot(exp^odot(v) * exp^odot(w)).
inline element circled_product_hopf(const element &v, const element &w, int cap)
{
    using namespace enveloping;
    auto g = star(exp_odot(embed(v), cap), exp_odot(embed(w), cap), cap);
    return linear_part(log_odot(g, cap));
}

} // namespace novalg::explogflow

#endif
