#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <novalg/combinatorics.hpp>
#include <novalg/novikov.hpp>
#include <novalg/trees.hpp>

using namespace novalg;
using namespace novalg::novikov;
using novalg::combinatorics::enumerate_partitions;
using novalg::combinatorics::partition;

namespace
{

element xp(std::initializer_list<int> parts)
{
    return element(partition(std::vector<int>(parts)));
}

// Random combination of basis vectors of degree in [lo, hi].
element random_element(std::mt19937 &rng, int lo, int hi)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    element r;
    for (int d = lo; d <= hi; ++d) {
        for (const auto &p : enumerate_partitions(d - 1)) {
            r.add(p, coeff(rng));
        }
    }
    return r;
}

// Random weight -1 polynomial in several generators with few factors.
diff_poly random_multi(std::mt19937 &rng, int generators, int max_factors)
{
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> gen(0, generators - 1);
    std::uniform_int_distribution<int> nf(1, max_factors);
    diff_poly r;
    for (int t = 0; t < 3; ++t) {
        int k = nf(rng);
        // Orders summing to -1: start from all -1 and move k-1 units around.
        std::vector<variable> f(static_cast<std::size_t>(k));
        for (auto &v : f) {
            v = {gen(rng), -1};
        }
        std::uniform_int_distribution<int> pick(0, k - 1);
        for (int u = 0; u < k - 1; ++u) {
            ++f[static_cast<std::size_t>(pick(rng))].order;
        }
        r.add(monomial(std::move(f)), coeff(rng));
    }
    return r;
}

// Weight -1 monomials of one generator with n+1 factors, by direct search.
int count_weight_minus_one(int factors)
{
    int count = 0;
    auto rec = [&](auto &&self, int left, int min_order, int sum) -> void {
        if (left == 0) {
            count += sum == -1 ? 1 : 0;
            return;
        }
        for (int o = min_order; sum + o + (left - 1) * o <= -1 && o <= factors; ++o) {
            self(self, left - 1, o, sum + o);
        }
    };
    rec(rec, factors, -1, 0);
    return count;
}

} // namespace

TEST(Novikov, BasicProducts)
{
    EXPECT_EQ(prelie_product(x(), x()), xp({1}));
    EXPECT_EQ(prelie_product(prelie_product(x(), x()), x()), xp({1, 1}) + xp({2}));
    EXPECT_EQ(brace(x(), {}), x());
    EXPECT_EQ(brace(x(), {x(), x()}), xp({2}));
    EXPECT_EQ(left_product(xp({1}), x()), prelie_product(x(), xp({1})));
}

TEST(Novikov, Identities)
{
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_element(rng, 1, 2);
        auto b = random_element(rng, 1, 2);
        auto c = random_element(rng, 1, 2);
        auto assoc = [](const element &u, const element &v, const element &w) {
            return prelie_product(prelie_product(u, v), w) - prelie_product(u, prelie_product(v, w));
        };
        EXPECT_EQ(assoc(a, b, c), assoc(a, c, b));
        EXPECT_EQ(prelie_product(a, prelie_product(b, c)), prelie_product(b, prelie_product(a, c)));
        // The opposite product is left pre-Lie and left Novikov.
        auto lassoc = [](const element &u, const element &v, const element &w) {
            return left_product(u, left_product(v, w)) - left_product(left_product(u, v), w);
        };
        EXPECT_EQ(lassoc(a, b, c), lassoc(b, a, c));
        EXPECT_EQ(left_product(left_product(a, b), c), left_product(left_product(a, c), b));
    }
}

TEST(Novikov, BraceTwoWays)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        auto v = to_diff_poly(random_element(rng, 1, 3));
        for (int arity = 0; arity <= 3; ++arity) {
            std::vector<diff_poly> ws;
            for (int k = 0; k < arity; ++k) {
                ws.push_back(to_diff_poly(random_element(rng, 1, 2)));
            }
            EXPECT_EQ(brace(v, ws), brace_recursive(v, ws));
        }
    }
    for (int trial = 0; trial < 15; ++trial) {
        auto v = random_multi(rng, 3, 3);
        std::vector<diff_poly> ws{random_multi(rng, 3, 2), random_multi(rng, 3, 2), random_multi(rng, 3, 2)};
        EXPECT_EQ(brace(v, ws), brace_recursive(v, ws));
        for (const auto &[m, c] : brace(v, ws)) {
            EXPECT_EQ(m.weight(), -1);
        }
    }
}

TEST(Novikov, PartitionBasis)
{
    for (int n = 0; n <= 8; ++n) {
        auto ps = enumerate_partitions(n);
        EXPECT_EQ(static_cast<int>(ps.size()), count_weight_minus_one(n + 1)) << n;
        for (const auto &p : ps) {
            auto m = partition_monomial(p);
            EXPECT_EQ(m.degree(), n + 1);
            EXPECT_EQ(m.weight(), -1);
            EXPECT_EQ(monomial_partition(m), p);
        }
    }
    EXPECT_THROW(monomial_partition(monomial({variable{0, 0}})), std::invalid_argument);
    // The product respects the grading N_m < N_n in N_{m+n}.
    std::mt19937 rng(3);
    auto a = random_element(rng, 2, 2);
    auto b = random_element(rng, 3, 3);
    for (const auto &[p, c] : prelie_product(a, b)) {
        EXPECT_EQ(degree(p), 5);
    }
}

TEST(Novikov, Rho)
{
    auto t = trees::parse_tree("x{x{x,x,x},x{x}}");
    EXPECT_EQ(rho(t), monomial({{0, 0}, {0, 1}, {0, 2}, {0, -1}, {0, -1}, {0, -1}, {0, -1}}));
    EXPECT_EQ(rho(trees::rooted_tree()), monomial::generator());
    for (int n = 1; n <= 6; ++n) {
        for (const auto &s : trees::enumerate_rooted_trees(n)) {
            EXPECT_EQ(rho(s), partition_monomial(trees::psi(s)));
        }
    }
}

TEST(Novikov, PsiIsMorphism)
{
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (const auto &t : trees::enumerate_rooted_trees(n)) {
                for (const auto &s : trees::enumerate_rooted_trees(m)) {
                    auto lhs = psi_linear(trees::graft(t, s));
                    auto rhs = prelie_product(element(trees::psi(t)), element(trees::psi(s)));
                    EXPECT_EQ(lhs, rhs);
                }
            }
        }
    }
    EXPECT_EQ(psi_linear(trees::tree_exponential(5)), exp_series(x(), 5));
}

TEST(Novikov, LogSeries)
{
    auto lg = log_series(x(), 3);
    element expected = x();
    expected.add(partition{1}, rational(-1, 2));
    expected.add(partition{1, 1}, rational(1, 3));
    expected.add(partition{2}, rational(1, 12));
    EXPECT_EQ(lg, expected);
    EXPECT_EQ(psi_linear(trees::tree_logarithm(6)), log_series(x(), 6));
}

TEST(Novikov, ExpLogInverse)
{
    const int cap = 6;
    EXPECT_EQ(log_series(exp_series(x(), cap), cap), x());
    EXPECT_EQ(exp_series(log_series(x(), cap), cap), x());
    std::mt19937 rng(11);
    auto y = random_element(rng, 1, 2);
    EXPECT_EQ(log_series(exp_series(y, cap), cap), y);
}

TEST(Novikov, CircledProduct)
{
    element two_x = x() + x();
    EXPECT_EQ(circled(x(), x(), 2), two_x + xp({1}));
    EXPECT_EQ(circled(x(), element(), 5), x());
    EXPECT_EQ(circled(element(), x(), 5), x());
    const int cap = 4;
    EXPECT_EQ(circled(circled(x(), x(), cap), x(), cap), circled(x(), circled(x(), x(), cap), cap));
    std::mt19937 rng(5);
    auto a = random_element(rng, 1, 2);
    auto b = random_element(rng, 1, 2);
    auto c = random_element(rng, 1, 1);
    EXPECT_EQ(circled(circled(a, b, cap), c, cap), circled(a, circled(b, c, cap), cap));
    // Transported group law: exp(s L) (*) exp(t L) = exp((s+t) L) with L = log(x).
    auto lx = log_series(x(), cap);
    auto flow = [&](int t) { return exp_series(element(lx) * rational(t), cap); };
    EXPECT_EQ(circled(flow(1), flow(2), cap), flow(3));
    EXPECT_EQ(flow(1), x());
}
