#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <novalg/combinatorics.hpp>

using namespace novalg;
using namespace novalg::combinatorics;

namespace
{

std::vector<std::string> words_as_strings(const std::vector<catalan_word> &ws)
{
    std::vector<std::string> out;
    for (const auto &w : ws) {
        out.push_back(w.to_string());
    }
    return out;
}

// Partition numbers by the coin-change recursion, independent of the enumerator.
std::vector<long> partition_numbers(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m) {
            p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
        }
    }
    return p;
}

// All words in {0..i-1}^i, filtered by the defining inequalities.
std::vector<std::vector<int>> brute_catalan_words(int i)
{
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(i), 0);
    while (true) {
        int sum = 0;
        bool ok = true;
        for (int j = 1; j <= i && ok; ++j) {
            sum += w[static_cast<std::size_t>(j - 1)];
            ok = (j < i) ? sum <= j - 1 : sum == i - 1;
        }
        if (ok) {
            out.push_back(w);
        }
        int k = i - 1;
        while (k >= 0 && w[static_cast<std::size_t>(k)] == i - 1) {
            w[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) {
            return out;
        }
        ++w[static_cast<std::size_t>(k)];
    }
}

int count_cycles(const std::vector<int> &w)
{
    std::vector<bool> seen(w.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        ++cycles;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(w[x] - 1)) {
            seen[x] = true;
        }
    }
    return cycles;
}

binary_tree figure_tree()
{
    auto x = binary_tree::leaf();
    auto a = binary_tree::join(x, binary_tree::join(binary_tree::join(x, x), x));
    auto b = binary_tree::join(binary_tree::join(x, x), binary_tree::join(x, x));
    return binary_tree::join(a, b);
}

} // namespace

TEST(Partitions, SmallLists)
{
    EXPECT_EQ(enumerate_partitions(0), std::vector<partition>{partition{}});
    std::vector<partition> four{partition{4}, partition{3, 1}, partition{2, 2}, partition{2, 1, 1},
                                partition{1, 1, 1, 1}};
    EXPECT_EQ(enumerate_partitions(4), four);
    std::vector<partition> five_two{partition{4, 1}, partition{3, 2}};
    EXPECT_EQ(enumerate_partitions(5, 2), five_two);
}

TEST(Partitions, CountsMatchCoinChange)
{
    auto p = partition_numbers(14);
    for (int n = 0; n <= 14; ++n) {
        EXPECT_EQ(static_cast<long>(enumerate_partitions(n).size()), p[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(Partitions, OrderAndParsing)
{
    EXPECT_FALSE(partition_less(partition{2, 1}, partition{2, 1}));
    EXPECT_TRUE(partition_less(partition{2}, partition{2, 1}));
    EXPECT_FALSE(partition_less(partition{3}, partition{2, 2}));
    EXPECT_TRUE(admissible(partition{}, partition{1}));
    EXPECT_FALSE(admissible(partition{1}, partition{1, 1, 1}));
    EXPECT_TRUE(admissible(partition{2, 1}, partition{2, 2, 1}));
    EXPECT_EQ(parse_partition("(3,2,1)"), (partition{3, 2, 1}));
    EXPECT_EQ(parse_partition("3 2 1"), (partition{3, 2, 1}));
    EXPECT_EQ(parse_partition("0"), partition{});
    EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
    EXPECT_EQ((partition{2, 2, 1}).factorial(), 4);
    EXPECT_EQ((partition{2, 2, 1}).symmetry_factor(), 2);
    EXPECT_EQ((partition{1, 1, 1}).symmetry_factor(), 6);
}

TEST(Catalan, PublishedLists)
{
    EXPECT_EQ(words_as_strings(enumerate_catalan_words(1)), std::vector<std::string>{"0"});
    EXPECT_EQ(words_as_strings(enumerate_catalan_words(3)), (std::vector<std::string>{"002", "011"}));
    EXPECT_EQ(words_as_strings(enumerate_catalan_words(4)),
              (std::vector<std::string>{"0003", "0012", "0021", "0102", "0111"}));
    std::vector<std::string> k5{"00004", "00013", "00022", "00031", "00103", "00112", "00121",
                                "00202", "00211", "01003", "01012", "01021", "01102", "01111"};
    EXPECT_EQ(words_as_strings(enumerate_catalan_words(5)), k5);
}

TEST(Catalan, CountsAndBruteForce)
{
    for (int i = 1; i <= 11; ++i) {
        EXPECT_EQ(integer(static_cast<long>(enumerate_catalan_words(i).size())), catalan_number(i - 1));
    }
    for (int i = 1; i <= 7; ++i) {
        std::vector<std::vector<int>> ours;
        for (const auto &w : enumerate_catalan_words(i)) {
            ours.push_back(w.letters());
        }
        EXPECT_EQ(ours, brute_catalan_words(i));
    }
}

TEST(Catalan, Coefficients)
{
    EXPECT_EQ(parse_catalan_word("0002013").coefficient(), 9);
    EXPECT_EQ(parse_catalan_word("0002013").auxiliary(), (std::vector<int>{0, 1, 2, 1, 2, 2, 0}));
    EXPECT_EQ(parse_catalan_word("002").coefficient(), 1);
    EXPECT_EQ(parse_catalan_word("011").coefficient(), 1);
    for (int i = 1; i <= 9; ++i) {
        std::vector<int> w(static_cast<std::size_t>(i), 0);
        w.back() = i - 1;
        EXPECT_EQ(catalan_word(w).coefficient(), 1);
    }
    EXPECT_THROW(catalan_word({1, 0}), std::invalid_argument);
    EXPECT_THROW(catalan_word({0, 0}), std::invalid_argument);
}

TEST(Catalan, IncFibersHaveSizeCw)
{
    for (int i = 1; i <= 7; ++i) {
        auto inc = enumerate_inc(i);
        integer expected_size = 1;
        for (int k = 1; k < i; ++k) {
            expected_size *= (i - k);
        }
        EXPECT_EQ(integer(static_cast<long>(inc.size())), expected_size);
        std::map<catalan_word, integer> fibers;
        for (const auto &phi : inc) {
            fibers[phi.multiplicity_word()] += 1;
        }
        auto words = enumerate_catalan_words(i);
        EXPECT_EQ(fibers.size(), words.size());
        for (const auto &w : words) {
            EXPECT_EQ(fibers[w], w.coefficient()) << w.to_string();
        }
    }
}

TEST(Catalan, MagmaJoinFactor)
{
    EXPECT_EQ(magma_join(parse_catalan_word("0"), parse_catalan_word("0")).to_string(), "01");
    EXPECT_EQ(magma_join(parse_catalan_word("01"), parse_catalan_word("0")).to_string(), "011");
    EXPECT_EQ(magma_join(parse_catalan_word("0"), parse_catalan_word("01")).to_string(), "002");
    auto [u, v] = magma_factor(parse_catalan_word("0012"));
    EXPECT_EQ(u.to_string(), "0");
    EXPECT_EQ(v.to_string(), "011");
    EXPECT_THROW(magma_factor(parse_catalan_word("0")), std::invalid_argument);
    for (int a = 1; a <= 9; ++a) {
        for (int b = 1; a + b <= 10; ++b) {
            for (const auto &x : enumerate_catalan_words(a)) {
                for (const auto &y : enumerate_catalan_words(b)) {
                    auto [fx, fy] = magma_factor(magma_join(x, y));
                    ASSERT_EQ(fx, x);
                    ASSERT_EQ(fy, y);
                }
            }
        }
    }
    for (int i = 2; i <= 10; ++i) {
        for (const auto &w : enumerate_catalan_words(i)) {
            int splits = 0;
            for (int j = 1; j < i; ++j) {
                std::vector<int> u(w.letters().begin(), w.letters().begin() + j);
                std::vector<int> v(w.letters().begin() + j, w.letters().end());
                --v.back();
                try {
                    if (magma_join(catalan_word(u), catalan_word(v)) == w) {
                        ++splits;
                    }
                } catch (const std::invalid_argument &) {
                }
            }
            ASSERT_EQ(splits, 1) << w.to_string();
        }
    }
}

TEST(Catalan, BinaryTreeBijection)
{
    EXPECT_EQ(binary_tree_word(binary_tree::leaf()).to_string(), "0");
    EXPECT_EQ(binary_tree_word(figure_tree()).to_string(), "00120103");
    for (int i = 1; i <= 7; ++i) {
        std::set<catalan_word> seen;
        for (const auto &t : enumerate_binary_trees(i)) {
            auto w = binary_tree_word(t);
            EXPECT_EQ(word_binary_tree(w), t);
            seen.insert(w);
        }
        EXPECT_EQ(seen.size(), enumerate_catalan_words(i).size());
    }
}

TEST(Catalan, CanonicalRepresentative)
{
    EXPECT_EQ(canonical_inc_representative(parse_catalan_word("01")).values(), std::vector<int>{2});
    auto fig = canonical_inc_representative(parse_catalan_word("00120103"));
    EXPECT_EQ(fig.values(), (std::vector<int>{4, 3, 4, 8, 6, 8, 8}));
    EXPECT_EQ(binary_tree_inc(figure_tree()).values(), (std::vector<int>{4, 3, 4, 8, 6, 8, 8}));
    for (int i = 1; i <= 7; ++i) {
        std::map<catalan_word, inc_map> lex_max;
        for (const auto &phi : enumerate_inc(i)) {
            auto w = phi.multiplicity_word();
            auto it = lex_max.find(w);
            if (it == lex_max.end()) {
                lex_max.emplace(w, phi);
            } else if (it->second < phi) {
                it->second = phi;
            }
        }
        for (const auto &w : enumerate_catalan_words(i)) {
            auto c = canonical_inc_representative(w);
            EXPECT_EQ(c.multiplicity_word(), w);
            EXPECT_EQ(c, lex_max.at(w)) << w.to_string();
            EXPECT_EQ(binary_tree_inc(word_binary_tree(w)), c) << w.to_string();
        }
    }
}

TEST(Lehmer, WorkedExamples)
{
    struct row
    {
        const char *sigma;
        const char *code;
        partition p;
    };
    std::vector<row> rows{{"362857194", "241422010", partition{3, 2, 2, 2}},
                          {"812374596", "700030010", partition{6, 1, 1, 1}},
                          {"648327915", "535212200", partition{3, 2, 2, 1, 1}}};
    for (const auto &r : rows) {
        auto s = parse_permutation(r.sigma);
        EXPECT_EQ(lehmer(s).to_string(), r.code);
        EXPECT_EQ(lehmer_partition(s), r.p);
    }
    auto id = parse_permutation("12345");
    EXPECT_EQ(lehmer(id).to_string(), "00000");
    EXPECT_EQ(lehmer_partition(id), partition{5});
}

TEST(Lehmer, Bijections)
{
    for (int n = 0; n <= 7; ++n) {
        auto leib = enumerate_leib(n);
        EXPECT_EQ(integer(static_cast<long>(leib.size())), factorial(n));
        std::set<lehmer_code> codes;
        for (const auto &phi : leib) {
            auto c = leib_code(phi);
            EXPECT_EQ(leib_from_code(c), phi);
            codes.insert(c);
        }
        EXPECT_EQ(codes.size(), leib.size());
        std::set<lehmer_code> codes_from_perms;
        for (const auto &s : enumerate_permutations(n)) {
            auto c = lehmer(s);
            EXPECT_EQ(permutation_from_lehmer(c), s);
            codes_from_perms.insert(c);
        }
        EXPECT_EQ(codes, codes_from_perms);
        EXPECT_EQ(leib_fiber_counts(n), lehmer_fiber_counts(n));
    }
    EXPECT_EQ(leib_partition(subexceedent_fn({1})), partition{1});
    EXPECT_EQ(leib_partition(subexceedent_fn({1, 1})), partition{2});
    EXPECT_EQ(leib_partition(subexceedent_fn({1, 2})), (partition{1, 1}));
}

TEST(Lehmer, DescentSets)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto &s : enumerate_permutations(n)) {
            EXPECT_EQ(descent_set(s), descent_set(lehmer(s)));
        }
    }
}

TEST(Lehmer, StirlingAndEulerian)
{
    EXPECT_EQ(stirling_first(2, 1), -1);
    EXPECT_EQ(stirling_first(2, 2), 1);
    for (int j = 0; j <= 8; ++j) {
        EXPECT_EQ(stirling_first(j, j), 1);
    }
    // |s(j,i)| counts permutations with i cycles, sign (-1)^(j-i).
    for (int j = 1; j <= 6; ++j) {
        std::vector<integer> by_cycles(static_cast<std::size_t>(j + 1), 0);
        for (const auto &s : enumerate_permutations(j)) {
            by_cycles[static_cast<std::size_t>(count_cycles(s.word()))] += 1;
        }
        for (int i = 0; i <= j; ++i) {
            EXPECT_EQ(stirling_first(j, i), sign_power(j - i) * by_cycles[static_cast<std::size_t>(i)]);
        }
    }
    for (int n = 1; n <= 7; ++n) {
        std::vector<integer> by_descents(static_cast<std::size_t>(n), 0);
        for (const auto &s : enumerate_permutations(n)) {
            by_descents[descent_set(s).size()] += 1;
        }
        for (int k = 0; k < n; ++k) {
            EXPECT_EQ(eulerian(n, k), by_descents[static_cast<std::size_t>(k)]);
        }
    }
}

TEST(FiberCounts, FourRoutesAgree)
{
    EXPECT_EQ(count_nonconsecutive_set_partitions(partition{1}), 1);
    EXPECT_EQ(count_nonconsecutive_set_partitions(partition{1, 1}), 1);
    EXPECT_EQ(count_nonconsecutive_set_partitions(partition{2}), 1);
    EXPECT_EQ(np_closed_formula(partition{1, 1}), 1);
    EXPECT_EQ(np_closed_formula(partition{1}), 1);
    for (int n = 1; n <= 7; ++n) {
        auto leib = leib_fiber_counts(n);
        auto leh = lehmer_fiber_counts(n);
        for (const auto &p : enumerate_partitions(n)) {
            rational closed = np_closed_formula(p);
            EXPECT_EQ(closed, rational(leh[p])) << p.to_string();
            EXPECT_EQ(leib[p], leh[p]) << p.to_string();
            EXPECT_EQ(count_nonconsecutive_set_partitions(p), leh[p]) << p.to_string();
        }
    }
}

TEST(FiberCounts, TwoPartFormula)
{
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= a; ++b) {
            partition p{a, b};
            integer rhs = multinomial({a + 1, b + 1}) - 2 * multinomial({a, b});
            EXPECT_EQ(np_closed_formula(p) * rational(p.symmetry_factor()), rational(rhs));
        }
    }
}

TEST(FiberCounts, EulerianIdentity)
{
    for (int n = 1; n <= 8; ++n) {
        auto counts = lehmer_fiber_counts(n);
        for (int k = 1; k <= n; ++k) {
            integer total = 0;
            for (const auto &p : enumerate_partitions(n, k)) {
                total += counts[p];
            }
            EXPECT_EQ(total, eulerian(n, k - 1)) << n << "," << k;
        }
    }
}

TEST(Tableaux, WorkedExamples)
{
    auto t2 = enumerate_tableaux(partition{2, 1, 1}, 2);
    ASSERT_EQ(t2.size(), 1U);
    EXPECT_EQ(t2[0].to_string(), "1 1 / 2 / 2");
    EXPECT_EQ(enumerate_tableaux(partition{2, 1, 1}, 4).size(), 3U);
    EXPECT_EQ(enumerate_tableaux(partition{2, 2}, 3).size(), 4U);
}

TEST(Tableaux, StandardAndSemistandard)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto &p : enumerate_partitions(n)) {
            auto all = enumerate_tableaux(p, n);
            std::sort(all.begin(), all.end());
            EXPECT_EQ(all, enumerate_standard_tableaux(p)) << p.to_string();
            // Hook length formula.
            integer hooks = 1;
            for (int r = 0; r < p.length(); ++r) {
                for (int c = 0; c < p[static_cast<std::size_t>(r)]; ++c) {
                    int below = 0;
                    for (int r2 = r + 1; r2 < p.length() && p[static_cast<std::size_t>(r2)] > c; ++r2) {
                        ++below;
                    }
                    hooks *= p[static_cast<std::size_t>(r)] - c + below;
                }
            }
            EXPECT_EQ(integer(static_cast<long>(all.size())), factorial(n) / hooks);
        }
    }
    for (int n = 1; n <= 5; ++n) {
        for (const auto &p : enumerate_partitions(n)) {
            for (int k = 1; k <= n; ++k) {
                auto t = enumerate_tableaux(p, k);
                std::set<tableau> tset(t.begin(), t.end());
                for (const auto &s : enumerate_semistandard_tableaux(p, k)) {
                    EXPECT_TRUE(s.semistandard());
                    EXPECT_TRUE(tset.count(s)) << s.to_string();
                }
                for (const auto &x : t) {
                    EXPECT_TRUE(x.weakly_increasing());
                    EXPECT_EQ(x.max_label(), k);
                }
            }
        }
    }
}
