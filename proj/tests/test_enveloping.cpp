#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <novalg/enveloping.hpp>
#include <novalg/novikov.hpp>

namespace
{

using namespace novalg;
using namespace novalg::enveloping;
using combinatorics::parse_partition;

using one_gen = env_element<partition>;
using multi_gen = env_element<monomial>;

monomial gen(int g)
{
    return monomial::generator(g);
}

// Non-recursive definition: every z_j goes to one of the n braces or stays.
template <typename L>
env_element<L> star_by_assignment(const env_monomial<L> &w, const env_monomial<L> &z)
{
    const auto &ws = w.labels();
    const auto &zs = z.labels();
    const int n = static_cast<int>(ws.size());
    env_element<L> r;
    combinatorics::for_each_function(static_cast<int>(zs.size()), n + 1, [&](const std::vector<int> &slot) {
        env_element<L> term = unit<L>();
        std::vector<L> rest;
        for (int j = 0; j <= n; ++j) {
            std::vector<L> taken;
            for (std::size_t t = 0; t < zs.size(); ++t) {
                if (slot[t] == j) {
                    taken.push_back(zs[t]);
                }
            }
            if (j == n) {
                rest = taken;
            } else {
                term = odot(term, embed(brace(ws[static_cast<std::size_t>(j)], taken)));
            }
        }
        r += odot(term, env_element<L>(env_monomial<L>(rest)));
    });
    return r;
}

partition random_partition(std::mt19937 &rng, int max_size)
{
    std::uniform_int_distribution<int> size(0, max_size);
    auto all = combinatorics::enumerate_partitions(size(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

one_gen random_element(std::mt19937 &rng, int terms, int max_len)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> len(0, max_len);
    one_gen r;
    for (int t = 0; t < terms; ++t) {
        std::vector<partition> labels;
        for (int k = len(rng); k > 0; --k) {
            labels.push_back(random_partition(rng, 2));
        }
        r.add(env_monomial<partition>(labels), coeff(rng));
    }
    return r;
}

TEST(Enveloping, NineTermExample)
{
    env_monomial<monomial> w({gen(1), gen(2)});
    env_monomial<monomial> z({gen(3), gen(4)});
    auto p = star(w, z);
    EXPECT_EQ(p.size(), 9U);
    for (const auto &[m, c] : p) {
        EXPECT_EQ(c, 1);
    }
    EXPECT_EQ(p, star_by_assignment(w, z));
    // w1{z1 z2} . w2 is among the terms: z1 z2 d^2(w1) . w2.
    monomial braced({novikov::variable{1, 1}, novikov::variable{3, -1}, novikov::variable{4, -1}});
    EXPECT_EQ(p.coefficient(env_monomial<monomial>({braced, gen(2)})), 1);
}

TEST(Enveloping, RecursiveProductMatchesAssignments)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<partition> a;
        std::vector<partition> b;
        for (int k = trial % 3 + 1; k > 0; --k) {
            a.push_back(random_partition(rng, 2));
        }
        for (int k = trial % 4; k > 0; --k) {
            b.push_back(random_partition(rng, 2));
        }
        env_monomial<partition> w(a);
        env_monomial<partition> z(b);
        EXPECT_EQ(star(w, z), star_by_assignment(w, z));
    }
}

TEST(Enveloping, CommutatorIsBracket)
{
    for (int g = 1; g <= 3; ++g) {
        for (int h = 1; h <= 3; ++h) {
            monomial x = gen(g) * var(g + 3, 0);
            monomial y = gen(h);
            auto lhs = star(embed(x), embed(y)) - star(embed(y), embed(x));
            EXPECT_EQ(lhs, embed(bracket(x, y)));
        }
    }
    auto x = partition{};
    auto y = parse_partition("(1)");
    EXPECT_EQ(star(embed(x), embed(y)) - star(embed(y), embed(x)), embed(bracket(x, y)));
}

TEST(Enveloping, AssociativeWithUnit)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_element(rng, 2, 2);
        auto b = random_element(rng, 2, 2);
        auto c = random_element(rng, 2, 2);
        EXPECT_EQ(star(star(a, b), c), star(a, star(b, c)));
        EXPECT_EQ(star(a, unit<partition>()), a);
        EXPECT_EQ(star(unit<partition>(), a), a);
    }
}

TEST(Enveloping, CoproductIsMultiplicative)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_element(rng, 2, 2);
        auto b = random_element(rng, 2, 2);
        EXPECT_EQ(coproduct(star(a, b)), tensor_star(coproduct(a), coproduct(b)));
    }
}

TEST(Enveloping, EtaFourRoutes)
{
    for (int i = 1; i <= 6; ++i) {
        std::vector<diff_poly> f;
        for (int g = 1; g <= i; ++g) {
            f.emplace_back(gen(g));
        }
        auto direct = eta_iterated(f);
        EXPECT_EQ(eta_inc(f), direct) << i;
        EXPECT_EQ(eta_catalan(f), direct) << i;
        EXPECT_EQ(eta_trees(f), direct) << i;
        EXPECT_EQ(eta_star(f), direct) << i;
        rational total = 0;
        for (const auto &[m, c] : direct) {
            total += c;
        }
        EXPECT_EQ(total, factorial(i - 1)) << i;
    }
    // Non-generic arguments: sums and products of variables.
    std::vector<diff_poly> f{diff_poly(gen(1)) + diff_poly(var(2, 0)), diff_poly(gen(2) * gen(1)),
                             diff_poly(var(1, 1)) - diff_poly(gen(3))};
    EXPECT_EQ(eta_catalan(f), eta_iterated(f));
    EXPECT_EQ(eta_trees(f), eta_iterated(f));
    EXPECT_EQ(eta_star(f), eta_iterated(f));
}

TEST(Enveloping, EtaCatalanCoefficient)
{
    // Word 0002013: f_1 f_2 f_3 f''_4 f_5 f'_6 f'''_7 with coefficient 9.
    std::vector<diff_poly> f;
    for (int g = 1; g <= 7; ++g) {
        f.emplace_back(gen(g));
    }
    auto w = combinatorics::parse_catalan_word("0002013");
    std::vector<novikov::variable> vars;
    for (int j = 1; j <= 7; ++j) {
        vars.push_back({j, w.at(j) - 1});
    }
    EXPECT_EQ(eta_iterated(f).coefficient(monomial(vars)), 9);
    EXPECT_EQ(eta_iterated(f).size(), combinatorics::enumerate_catalan_words(7).size());
}

TEST(Enveloping, GeneratorProductExpansion)
{
    for (int i = 1; i <= 5; ++i) {
        EXPECT_EQ(generator_product_catalan(i), generator_product(i)) << i;
    }
}

TEST(Enveloping, PbwInverseTwoRoutes)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        tensor_word<partition> w;
        for (int k = trial % 4 + 1; k > 0; --k) {
            w.letters.push_back(random_partition(rng, 2));
        }
        EXPECT_EQ(pbw_prelie_inv(w), pbw_prelie_inv_blocks(w));
    }
    tensor_word<monomial> abc{{gen(1), gen(2), gen(3), gen(4)}};
    EXPECT_EQ(pbw_prelie_inv(abc), pbw_prelie_inv_blocks(abc));
}

TEST(Enveloping, PbwRoundTripAgainstStraightening)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        tensor_word<partition> w;
        for (int k = trial % 4 + 1; k > 0; --k) {
            w.letters.push_back(random_partition(rng, 2));
        }
        auto straight = straighten(w);
        EXPECT_EQ(pbw_prelie(pbw_prelie_inv(w)), straight);
        EXPECT_EQ(pbw_prelie_inv(straight), pbw_prelie_inv(w));
    }
}

TEST(Enveloping, ClassicalPbwExamples)
{
    auto x = gen(1);
    auto y = gen(2);
    auto xy = env_element<monomial>(env_monomial<monomial>({x, y}));
    auto xb = embed(brace(x, std::vector<monomial>{y}));
    auto yb = embed(brace(y, std::vector<monomial>{x}));
    EXPECT_EQ(pbw_classical(xy), xy + rational(1, 2) * (xb + yb));
    EXPECT_EQ(pbw_classical(star(embed(x), embed(y))), xy + rational(1, 2) * (rational(3) * xb + yb));

    auto e1 = canonical_projection(1, xy);
    auto e2 = canonical_projection(2, xy);
    EXPECT_EQ(e1, rational(-1, 2) * (xb + yb));
    EXPECT_EQ(e2, rational(1, 2) * (star(embed(x), embed(y)) + star(embed(y), embed(x))));
    EXPECT_EQ(e1 + e2, xy);
}

TEST(Enveloping, CanonicalProjectionsAreOrthogonalIdempotents)
{
    std::vector<env_monomial<monomial>> samples{
        env_monomial<monomial>({gen(1), gen(2), gen(3)}),
        env_monomial<monomial>({gen(1), gen(1), var(2, 0) * gen(2)}),
        env_monomial<monomial>({gen(1), gen(2), gen(3), gen(4)}),
    };
    for (const auto &m : samples) {
        const int len = m.length();
        env_element<monomial> total;
        for (int n = 1; n <= len; ++n) {
            auto en = canonical_projection(n, m);
            total += en;
            for (int k = 1; k <= len; ++k) {
                auto ekn = canonical_projection(k, en);
                EXPECT_EQ(ekn, k == n ? en : env_element<monomial>{}) << m.to_string() << " " << n << " " << k;
            }
        }
        EXPECT_EQ(total, env_element<monomial>(m));
        for (int n = 1; n <= len; ++n) {
            // pbw of a degree n polynomial lies in the n-th component.
            auto image = pbw_classical(m);
            EXPECT_EQ(canonical_projection(n, image), n == len ? image : env_element<monomial>{});
        }
    }
}

TEST(Enveloping, ExpLogThroughTheEnvelopingAlgebra)
{
    const int cap = 6;
    EXPECT_EQ(exp_prelie(novikov::x(), cap), novikov::exp_series(novikov::x(), cap));
    EXPECT_EQ(log_prelie(novikov::x(), cap), novikov::log_series(novikov::x(), cap));
    // log_* of a group-like element equals its first canonical projection.
    auto g = exp_odot(embed(novikov::x()), cap);
    EXPECT_EQ(log_star(g, cap), canonical_projection(1, g));
    // Mutual inverses on a degree one element.
    auto a = embed(novikov::x() + rational(2) * novikov::element(parse_partition("(1)")));
    EXPECT_EQ(log_star(exp_star(a, cap), cap), a);
    EXPECT_EQ(log_odot(exp_odot(a, cap), cap), a);
}

} // namespace
