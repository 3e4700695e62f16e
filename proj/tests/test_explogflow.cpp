#include <gtest/gtest.h>

#include <string>
#include <vector>

#include <novalg/enveloping.hpp>
#include <novalg/explogflow.hpp>
#include <novalg/reference_tables.hpp>

namespace
{

using namespace novalg;
using namespace novalg::explogflow;
using combinatorics::enumerate_partitions_up_to;
using combinatorics::parse_partition;

TEST(BinomialPoly, Arithmetic)
{
    auto p = binomial_poly({0, 3, -2, 5});
    for (long t = -3; t <= 6; ++t) {
        rational direct = 3 * rational(t) - 2 * rational(binomial(t, 2)) + 5 * rational(binomial(t, 3));
        if (t < 0) {
            // binom(t,k) for negative t: the falling factorial over k!.
            direct = 3 * rational(t) - 2 * make_rational(falling_factorial(t, 2), 2) +
                     5 * make_rational(falling_factorial(t, 3), 6);
        }
        EXPECT_EQ(p(rational(t)), direct) << t;
        EXPECT_EQ(rational(p.delta()(t)), p(rational(t + 1)) - p(rational(t)));
    }
    EXPECT_EQ(p.indefinite_sum().delta(), p);
    EXPECT_EQ(p.indefinite_sum()(0L), 0);
    auto q = binomial_poly({1, 0, 2});
    auto pq = p * q;
    for (long t = -2; t <= 8; ++t) {
        EXPECT_EQ(pq(t), p(t) * q(t));
    }
    auto m = p.monomial_coefficients();
    for (long t = -2; t <= 5; ++t) {
        rational v = 0;
        rational pw = 1;
        for (const auto &c : m) {
            v += c * pw;
            pw *= t;
        }
        EXPECT_EQ(v, p(rational(t)));
    }
    EXPECT_EQ(binomial_poly::binom(2).monomial_coefficients(),
              (std::vector<rational>{0, rational(-1, 2), rational(1, 2)}));
    EXPECT_EQ(binomial_poly::binom(3).to_string(), "1*C(t,3)");
}

TEST(Exp, ThreeCountsAgree)
{
    const int cap = 8;
    auto leib = exp_coefficients_leib(cap);
    EXPECT_EQ(exp_coefficients_lehmer(cap), leib);
    EXPECT_EQ(exp_coefficients_closed(cap), leib);
    flow_session s;
    EXPECT_EQ(exp_coefficients_tableaux(cap, s), leib);
    for (const auto &p : enumerate_partitions_up_to(cap - 1)) {
        EXPECT_EQ(np_single_cell(p), np_leib(p)) << p.to_string();
        EXPECT_EQ(combinatorics::count_nonconsecutive_set_partitions(p), np_leib(p)) << p.to_string();
    }
    EXPECT_EQ(novikov::exp_series(novikov::x(), 7), exp_coefficients_leib(7));
    EXPECT_EQ(novikov::psi_linear(trees::tree_exponential(7)), exp_coefficients_leib(7));
}

TEST(Exp, LowDegreeAndLehmerExample)
{
    element e2 = novikov::x() + rational(1, 2) * element(partition{1});
    EXPECT_EQ(exp_coefficients_leib(2), e2);
    element e3 = e2 + rational(1, 6) * (element(partition{1, 1}) + element(partition{2}));
    EXPECT_EQ(exp_coefficients_leib(3), e3);
    EXPECT_EQ(exp_coefficients_leib(1), novikov::x());
    auto sigma = combinatorics::parse_permutation("362857194");
    EXPECT_EQ(combinatorics::lehmer_partition(sigma), (partition{3, 2, 2, 2}));
}

TEST(Coefficients, ReferenceValues)
{
    for (const auto &v : reference::c_values()) {
        auto p = parse_partition(v.p);
        auto q = parse_partition(v.p_prime);
        EXPECT_EQ(c_coefficient(p, q), v.value) << v.p << " " << v.p_prime;
        EXPECT_EQ(c_coefficient_brace(p, q), v.value) << v.p << " " << v.p_prime;
    }
    auto ms = chain_matrices(partition{2, 2, 1}, partition{2, 1});
    ASSERT_EQ(ms.size(), 4U);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        EXPECT_EQ(ms[i].top, reference::m_221_21_top_rows()[i]);
        EXPECT_EQ(ms[i].bottom, (std::vector<int>{2, 1, 0, 0}));
    }
    EXPECT_EQ(c_coefficient(partition{1}, partition{}), 1);
}

TEST(Coefficients, MatricesMatchBraceDefinition)
{
    auto all = enumerate_partitions_up_to(6);
    for (const auto &p : all) {
        for (const auto &q : all) {
            if (q.size() >= p.size()) {
                continue;
            }
            auto c = c_coefficient(p, q);
            EXPECT_EQ(c, c_coefficient_brace(p, q)) << p.to_string() << " " << q.to_string();
            if (!combinatorics::admissible(q, p)) {
                EXPECT_EQ(c, 0);
            }
        }
    }
}

TEST(Coefficients, SingleCellRule)
{
    EXPECT_EQ(c_coefficient_single_cell(partition{1}, partition{}), 1);
    EXPECT_EQ(c_coefficient_single_cell(partition{2}, partition{1}), 2);
    EXPECT_THROW(c_coefficient_single_cell(partition{2, 1}, partition{1}), std::invalid_argument);
    int pairs = 0;
    for (const auto &p : enumerate_partitions_up_to(7)) {
        if (p.is_zero()) {
            continue;
        }
        for (const auto &q : combinatorics::enumerate_partitions(p.size() - 1)) {
            if (combinatorics::admissible(q, p)) {
                EXPECT_EQ(c_coefficient_single_cell(p, q), c_coefficient(p, q)) << p.to_string() << q.to_string();
                ++pairs;
            }
        }
    }
    EXPECT_GT(pairs, 50);
}

TEST(Coefficients, ReferenceNValuesAndTableaux)
{
    flow_session s;
    for (const auto &v : reference::n_values()) {
        auto p = parse_partition(v.p);
        EXPECT_EQ(s.n(p, v.k), v.value) << v.p << " " << v.k;
        EXPECT_EQ(n_coefficient_tableaux(p, v.k, s), v.value) << v.p << " " << v.k;
    }
    EXPECT_EQ(s.n(partition{1}, 2), 1);
    for (const auto &l : reference::tableau_lists()) {
        std::vector<std::string> got;
        for (const auto &t : combinatorics::enumerate_tableaux(parse_partition(l.p), l.k)) {
            got.push_back(t.to_string());
        }
        EXPECT_EQ(got, l.tableaux) << l.p << " " << l.k;
    }
}

TEST(Coefficients, FourRoutesForN)
{
    const int max_size = 6;
    flow_session s;
    auto braces = n_table_braces(max_size + 1);
    for (const auto &p : enumerate_partitions_up_to(max_size)) {
        for (int k = 1; k <= p.size() + 2; ++k) {
            auto chains = s.n(p, k);
            EXPECT_EQ(n_coefficient_tableaux(p, k, s), chains) << p.to_string() << " " << k;
            EXPECT_EQ(n_coefficient_planar(p, k), chains) << p.to_string() << " " << k;
            auto it = braces.find({p, k});
            EXPECT_EQ(it == braces.end() ? integer(0) : it->second, chains) << p.to_string() << " " << k;
            EXPECT_GE(chains, 0);
        }
        EXPECT_EQ(np_tableaux(p, s), np_leib(p)) << p.to_string();
    }
}

TEST(Log, ReferenceValues)
{
    flow_session s;
    element low;
    for (const auto &t : reference::log_low_degree()) {
        low.add(parse_partition(t.p), parse_rational(t.coefficient));
    }
    EXPECT_EQ(log_coefficients(3, s), low);
    EXPECT_EQ(s.log_coefficient(partition{2, 1, 1}) * 2, parse_rational(reference::log_211_half()));
    rational manual = make_rational(22, 5) - make_rational(17, 4) + make_rational(1, 3);
    EXPECT_EQ(manual, parse_rational(reference::log_211_half()));
}

TEST(Log, RoutesAgree)
{
    const int cap = 6;
    flow_session s;
    auto assembled = log_coefficients(cap, s);
    EXPECT_EQ(novikov::log_series(novikov::x(), cap), assembled);
    EXPECT_EQ(enveloping::log_prelie(novikov::x(), cap), assembled);
    EXPECT_EQ(novikov::psi_linear(trees::tree_logarithm(cap)), assembled);
    EXPECT_EQ(novikov::exp_series(assembled, cap), novikov::x());
    EXPECT_EQ(novikov::log_series(exp_coefficients_leib(cap), cap), novikov::x());
}

TEST(Flow, GoldenTables)
{
    flow_session s;
    for (const auto &e : reference::flow_table()) {
        auto p = parse_partition(e.partition);
        auto q = s.flow(p);
        std::vector<integer> expected{0};
        for (int c : e.binomial) {
            expected.push_back(c);
        }
        EXPECT_EQ(q, binomial_poly(expected)) << e.partition;
        std::vector<rational> mono;
        for (const auto &c : e.monomial) {
            mono.push_back(parse_rational(c));
        }
        EXPECT_EQ(q.monomial_coefficients(), mono) << e.partition;
    }
}

TEST(Flow, RecursionIdentities)
{
    flow_session s;
    for (const auto &e : reference::flow_table()) {
        auto p = parse_partition(e.partition);
        auto delta = s.flow(p).delta();
        binomial_poly by_products = binomial_poly::constant(e.delta_constant);
        for (const auto &term : e.by_factorizations) {
            binomial_poly prod = binomial_poly::constant(term.coefficient);
            for (const auto &f : term.factors) {
                prod = prod * s.flow(parse_partition(f));
            }
            by_products += prod;
        }
        binomial_poly by_preds = binomial_poly::constant(e.delta_constant);
        for (const auto &term : e.by_predecessors) {
            by_preds += integer(term.coefficient) * s.flow(parse_partition(term.predecessor));
        }
        EXPECT_EQ(by_products, delta) << e.partition;
        EXPECT_EQ(by_preds, delta) << e.partition;
        // The recursions enumerate exactly the displayed terms.
        std::vector<std::pair<int, std::string>> preds;
        for (const auto &q : admissible_predecessors(p)) {
            auto c = c_coefficient(p, q);
            if (c != 0) {
                preds.emplace_back(static_cast<int>(c.get_si()), q.to_string());
            }
        }
        std::vector<std::pair<int, std::string>> shown;
        for (const auto &t : e.by_predecessors) {
            shown.emplace_back(t.coefficient, t.predecessor);
        }
        std::sort(preds.begin(), preds.end());
        std::sort(shown.begin(), shown.end());
        EXPECT_EQ(preds, shown) << e.partition;
    }
}

std::vector<std::pair<int, std::vector<std::string>>> as_rows(const std::vector<factorization> &fs)
{
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    for (const auto &f : fs) {
        std::vector<std::string> names;
        for (const auto &q : f.factors) {
            names.push_back(q.to_string());
        }
        rows.emplace_back(static_cast<int>(f.weight.get_si()), names);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

TEST(Flow, FactorizationsMatchDisplayedSums)
{
    std::vector<std::pair<int, std::vector<std::string>>> shown;
    for (const auto &t : reference::flow_321_factorizations()) {
        shown.emplace_back(t.coefficient, t.factors);
    }
    std::sort(shown.begin(), shown.end());
    EXPECT_EQ(as_rows(factorizations(partition{3, 2, 1})), shown);
    for (const auto &e : reference::flow_table()) {
        std::vector<std::pair<int, std::vector<std::string>>> rows;
        for (const auto &t : e.by_factorizations) {
            rows.emplace_back(t.coefficient, t.factors);
        }
        std::sort(rows.begin(), rows.end());
        EXPECT_EQ(as_rows(factorizations(parse_partition(e.partition))), rows) << e.partition;
    }
}

TEST(Flow, FourRoutesAgree)
{
    flow_session s;
    for (const auto &p : enumerate_partitions_up_to(6)) {
        auto q = s.flow(p);
        EXPECT_EQ(s.flow_by_predecessors(p), q) << p.to_string();
        EXPECT_EQ(s.flow_by_factorizations(p), q) << p.to_string();
        if (p.size() <= 5) {
            EXPECT_EQ(flow_by_planar_counts(p), q) << p.to_string();
            for (long n = 0; n <= p.size() + 2; ++n) {
                EXPECT_EQ(flow_value_planar(p, n), q(n)) << p.to_string() << " " << n;
            }
        }
        EXPECT_EQ(q(0L), 0);
        EXPECT_EQ(q(1L), p.is_zero() ? 1 : 0);
        EXPECT_EQ(q.derivative_at_zero(), s.log_coefficient(p) * rational(p.factorial()));
    }
}

TEST(Flow, IntegerPointsAreIteratedProducts)
{
    const int cap = 6;
    flow_session s;
    element power = novikov::x();
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(flow_series(n, cap, s), power) << n;
        power = circled_product(power, novikov::x(), cap);
    }
    EXPECT_EQ(flow_series(0, cap, s), element{});
}

TEST(Flow, GroupLaw)
{
    const int cap = 5;
    flow_session s;
    for (int t = 0; t <= 4; ++t) {
        for (int u = 0; u <= 4; ++u) {
            auto lhs = circled_product(flow_series(t, cap, s), flow_series(u, cap, s), cap);
            EXPECT_EQ(lhs, flow_series(t + u, cap, s)) << t << " " << u;
        }
    }
    // Rational times too: the law is polynomial in (t, u).
    auto half = flow_series(rational(1, 2), cap, s);
    EXPECT_EQ(circled_product(half, half, cap), novikov::x());
}

TEST(Circled, ProductExamples)
{
    auto x = novikov::x();
    EXPECT_EQ(circled_product(x, x, 2), rational(2) * x + element(partition{1}));
    EXPECT_EQ(circled_product(x, element{}, 5), x);
    EXPECT_EQ(circled_product(element{}, x, 5), x);
    auto xx = circled_product(x, x, 4);
    EXPECT_EQ(circled_product(xx, x, 4), circled_product(x, xx, 4));
    auto v = x + rational(3, 2) * element(partition{1});
    auto w = rational(-1) * x + element(partition{1, 1});
    EXPECT_EQ(circled_product_hopf(v, w, 4), circled_product(v, w, 4));
}

} // namespace
