#ifndef NOVALG_VERIFY_HPP
#define NOVALG_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <novalg/combinatorics.hpp>
#include <novalg/diffop.hpp>
#include <novalg/enveloping.hpp>
#include <novalg/explogflow.hpp>
#include <novalg/novikov.hpp>
#include <novalg/reference_tables.hpp>
#include <novalg/trees.hpp>

// Named verification suites, one per acceptance criterion. Each check counts
// its comparisons and keeps the first mismatch as its detail.
namespace novalg::verify
{

struct check_result
{
    std::string check;
    bool pass = true;
    std::string detail;
};

class tally
{
public:
    explicit tally(std::string name) : name_(std::move(name)) {}

    bool expect(bool ok, const std::string &where)
    {
        ++total_;
        if (!ok) {
            ++failed_;
            if (first_failure_.empty()) {
                first_failure_ = where;
            }
        }
        return ok;
    }

    template <typename A, typename B>
    bool equal(const A &a, const B &b, const std::string &where)
    {
        return expect(a == b, where);
    }

    [[nodiscard]] check_result result() const
    {
        check_result r{name_, failed_ == 0 && total_ > 0, {}};
        if (total_ == 0) {
            r.detail = "no comparisons made";
        } else if (failed_ == 0) {
            r.detail = std::to_string(total_) + " comparisons exact";
        } else {
            r.detail = std::to_string(failed_) + " of " + std::to_string(total_) + " failed, first at " +
                       first_failure_;
        }
        return r;
    }

private:
    std::string name_;
    long total_ = 0;
    long failed_ = 0;
    std::string first_failure_;
};

using suite_output = std::vector<check_result>;

namespace detail
{

using combinatorics::enumerate_partitions;
using combinatorics::enumerate_partitions_up_to;
using combinatorics::parse_partition;
using combinatorics::partition;
using explogflow::binomial_poly;

inline std::vector<std::string> word_strings(const std::vector<combinatorics::catalan_word> &ws)
{
    std::vector<std::string> out;
    for (const auto &w : ws) {
        out.push_back(w.to_string());
    }
    return out;
}

inline binomial_poly from_reference_binomial(const std::vector<int> &cs)
{
    std::vector<integer> v{0};
    for (int c : cs) {
        v.emplace_back(c);
    }
    return binomial_poly(v);
}

// The eight-leaf tree ((x,((x,x),x)),((x,x),(x,x))).
inline combinatorics::binary_tree figure_binary_tree()
{
    using combinatorics::binary_tree;
    auto x = binary_tree::leaf();
    auto a = binary_tree::join(x, binary_tree::join(binary_tree::join(x, x), x));
    auto b = binary_tree::join(binary_tree::join(x, x), binary_tree::join(x, x));
    return binary_tree::join(a, b);
}

// 1: every tabulated Q_p in both bases, and the table covers |p| <= 5.
inline suite_output golden_flow(std::uint32_t)
{
    explogflow::flow_session s;
    tally binom("binomial basis");
    tally mono("monomial basis");
    tally cover("table covers |p| <= 5");
    std::set<partition> seen;
    for (const auto &e : reference::flow_table()) {
        auto p = parse_partition(e.partition);
        seen.insert(p);
        auto q = s.flow(p);
        binom.equal(q, from_reference_binomial(e.binomial), e.partition);
        std::vector<rational> m;
        for (const auto &c : e.monomial) {
            m.push_back(parse_rational(c));
        }
        mono.equal(q.monomial_coefficients(), m, e.partition);
    }
    auto all = enumerate_partitions_up_to(5);
    cover.equal(seen, std::set<partition>(all.begin(), all.end()), "partition set");
    return {binom.result(), mono.result(), cover.result()};
}

// 2: both displayed forms of Delta Q_p, and the enumerations that produce them.
inline suite_output flow_recursions(std::uint32_t)
{
    explogflow::flow_session s;
    tally prod("product form identities");
    tally pred("transition form identities");
    tally terms("enumerated terms equal displayed terms");
    using row = std::pair<int, std::vector<std::string>>;
    auto sorted_rows = [](const std::vector<explogflow::factorization> &fs) {
        std::vector<row> rows;
        for (const auto &f : fs) {
            std::vector<std::string> names;
            for (const auto &q : f.factors) {
                names.push_back(q.to_string());
            }
            rows.emplace_back(static_cast<int>(f.weight.get_si()), names);
        }
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    for (const auto &e : reference::flow_table()) {
        auto p = parse_partition(e.partition);
        auto delta = s.flow(p).delta();
        binomial_poly by_products = binomial_poly::constant(e.delta_constant);
        std::vector<row> shown_products;
        for (const auto &t : e.by_factorizations) {
            binomial_poly term = binomial_poly::constant(t.coefficient);
            for (const auto &f : t.factors) {
                term = term * s.flow(parse_partition(f));
            }
            by_products += term;
            shown_products.emplace_back(t.coefficient, t.factors);
        }
        prod.equal(by_products, delta, e.partition);
        binomial_poly by_preds = binomial_poly::constant(e.delta_constant);
        std::vector<std::pair<int, std::string>> shown_preds;
        for (const auto &t : e.by_predecessors) {
            by_preds += integer(t.coefficient) * s.flow(parse_partition(t.predecessor));
            shown_preds.emplace_back(t.coefficient, t.predecessor);
        }
        pred.equal(by_preds, delta, e.partition);

        std::sort(shown_products.begin(), shown_products.end());
        terms.equal(sorted_rows(explogflow::factorizations(p)), shown_products, e.partition + " factorizations");
        std::vector<std::pair<int, std::string>> got_preds;
        for (const auto &q : explogflow::admissible_predecessors(p)) {
            auto c = explogflow::c_coefficient(p, q);
            if (c != 0) {
                got_preds.emplace_back(static_cast<int>(c.get_si()), q.to_string());
            }
        }
        std::sort(got_preds.begin(), got_preds.end());
        std::sort(shown_preds.begin(), shown_preds.end());
        terms.equal(got_preds, shown_preds, e.partition + " predecessors");
    }
    std::vector<row> shown321;
    for (const auto &t : reference::flow_321_factorizations()) {
        shown321.emplace_back(t.coefficient, t.factors);
    }
    std::sort(shown321.begin(), shown321.end());
    terms.equal(sorted_rows(explogflow::factorizations(partition{3, 2, 1})), shown321, "(3,2,1) factorizations");
    return {prod.result(), pred.result(), terms.result()};
}

// 3: n_{(2,1,1),k} for k = 2..5, its tableaux, and the log coefficient 29/60.
inline suite_output worked_n_log(std::uint32_t)
{
    explogflow::flow_session s;
    tally n("n_{(2,1,1),k} by chains and tableaux");
    tally tabs("T_{(2,1,1),k} listings");
    tally lg("log coefficients");
    for (const auto &v : reference::n_values()) {
        if (v.p != "(2,1,1)") {
            continue;
        }
        auto p = parse_partition(v.p);
        std::string where = "k=" + std::to_string(v.k);
        n.equal(s.n(p, v.k), integer(v.value), where + " chains");
        n.equal(explogflow::n_coefficient_tableaux(p, v.k, s), integer(v.value), where + " tableaux");
    }
    for (const auto &l : reference::tableau_lists()) {
        if (l.p != "(2,1,1)") {
            continue;
        }
        std::vector<std::string> got;
        for (const auto &t : combinatorics::enumerate_tableaux(parse_partition(l.p), l.k)) {
            got.push_back(t.to_string());
        }
        tabs.equal(got, l.tableaux, "k=" + std::to_string(l.k));
    }
    lg.equal(s.log_coefficient(partition{2, 1, 1}) * 2, parse_rational(reference::log_211_half()), "x_(2,1,1)/2");
    // The same value from the tabulated n_{(2,1,1),k}: sum_k (-1)^{k-1} n_k / k.
    rational from_n = 0;
    for (const auto &v : reference::n_values()) {
        if (v.p == "(2,1,1)") {
            from_n += rational(sign_power(v.k - 1) * v.value, v.k);
        }
    }
    lg.equal(from_n, parse_rational(reference::log_211_half()), "alternating sum of tabulated n");
    novikov::element low;
    for (const auto &t : reference::log_low_degree()) {
        low.add(parse_partition(t.p), parse_rational(t.coefficient));
    }
    lg.equal(explogflow::log_coefficients(3, s), low, "degree <= 3");
    return {n.result(), tabs.result(), lg.result()};
}

// 4: Q_{(2,2)}, its n-values and tableaux, and C via exactly four matrices.
inline suite_output worked_flow_c(std::uint32_t)
{
    explogflow::flow_session s;
    tally q("Q_(2,2) binomial coefficients");
    tally n("n_{(2,2),k} and T_{(2,2),k}");
    tally c("C coefficients and M((2,2,1),(2,1))");
    q.equal(s.flow(partition{2, 2}), binomial_poly({0, 0, 0, 4, 18, 16}), "(2,2)");
    for (const auto &v : reference::n_values()) {
        if (v.p == "(2,2)") {
            n.equal(s.n(partition{2, 2}, v.k), integer(v.value), "k=" + std::to_string(v.k));
        }
    }
    for (const auto &l : reference::tableau_lists()) {
        if (l.p == "(2,2)") {
            std::vector<std::string> got;
            for (const auto &t : combinatorics::enumerate_tableaux(partition{2, 2}, l.k)) {
                got.push_back(t.to_string());
            }
            n.equal(got, l.tableaux, "tableaux k=" + std::to_string(l.k));
        }
    }
    auto ms = explogflow::chain_matrices(partition{2, 2, 1}, partition{2, 1});
    c.equal(ms.size(), std::size_t{4}, "matrix count");
    integer weight_sum = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        weight_sum += ms[i].weight();
        if (i < reference::m_221_21_top_rows().size()) {
            c.equal(ms[i].top, reference::m_221_21_top_rows()[i], "matrix " + std::to_string(i + 1) + " top row");
        }
        c.equal(ms[i].bottom, std::vector<int>{2, 1, 0, 0}, "matrix " + std::to_string(i + 1) + " bottom row");
    }
    c.equal(weight_sum, integer(6), "sum of matrix weights");
    for (const auto &v : reference::c_values()) {
        auto p = parse_partition(v.p);
        auto pp = parse_partition(v.p_prime);
        c.equal(explogflow::c_coefficient(p, pp), integer(v.value), "C" + v.p + v.p_prime + " matrices");
        c.equal(explogflow::c_coefficient_brace(p, pp), integer(v.value), "C" + v.p + v.p_prime + " braces");
    }
    return {q.result(), n.result(), c.result()};
}

// 5: Catalan words, c_w, and the figure tree.
inline suite_output catalan(std::uint32_t)
{
    tally lists("K_3, K_4, K_5 lists");
    tally counts("|K_{i+1}| = Catalan(i), i <= 10");
    tally coeff("c_0002013 = 9");
    tally fig("figure tree word and Inc values");
    const auto &ref = reference::catalan_lists();
    for (std::size_t j = 0; j < ref.size(); ++j) {
        const int i = static_cast<int>(j) + 3;
        lists.equal(word_strings(combinatorics::enumerate_catalan_words(i)), ref[j], "K_" + std::to_string(i));
    }
    for (int i = 0; i <= 10; ++i) {
        const auto size = integer(static_cast<long>(combinatorics::enumerate_catalan_words(i + 1).size()));
        counts.equal(size, combinatorics::catalan_number(i), "i=" + std::to_string(i));
        counts.equal(integer(static_cast<long>(combinatorics::enumerate_binary_trees(i + 1).size())),
                     combinatorics::catalan_number(i), "binary trees i=" + std::to_string(i));
    }
    const auto ex = reference::catalan_example();
    const auto w = combinatorics::parse_catalan_word(ex.word);
    coeff.equal(w.coefficient(), integer(ex.coefficient), "formula");
    // Independently: the fiber of the multiplicity word over Inc(7).
    integer fiber = 0;
    for (const auto &phi : combinatorics::enumerate_inc(w.length())) {
        if (phi.multiplicity_word() == w) {
            fiber += 1;
        }
    }
    coeff.equal(fiber, integer(ex.coefficient), "Inc fiber");
    const auto fd = reference::figure_tree();
    const auto t = figure_binary_tree();
    fig.equal(combinatorics::binary_tree_word(t).to_string(), fd.word, "word");
    fig.equal(combinatorics::canonical_inc_representative(combinatorics::parse_catalan_word(fd.word)).values(),
              fd.inc_values, "canonical representative of the word");
    fig.equal(combinatorics::binary_tree_inc(t).values(), fd.inc_values, "leaf walk of the tree");
    return {lists.result(), counts.result(), coeff.result(), fig.result()};
}

// 6: Lehmer examples and the Eulerian identity.
inline suite_output lehmer(std::uint32_t)
{
    tally ex("worked permutations");
    tally eul("sum of N_p over l(p) = k is Eulerian, n <= 8");
    for (const auto &r : reference::lehmer_examples()) {
        auto s = combinatorics::parse_permutation(r.permutation);
        ex.equal(combinatorics::lehmer(s).to_string(), r.code, r.permutation + " code");
        ex.equal(combinatorics::lehmer_partition(s), parse_partition(r.partition), r.permutation + " partition");
    }
    for (int n = 1; n <= 8; ++n) {
        auto counts = combinatorics::lehmer_fiber_counts(n);
        for (int k = 1; k <= n; ++k) {
            integer total = 0;
            for (const auto &p : enumerate_partitions(n, k)) {
                total += counts[p];
            }
            eul.equal(total, combinatorics::eulerian(n, k - 1), "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return {ex.result(), eul.result()};
}

// 7: independent routes to the same quantities.
inline suite_output oracles(std::uint32_t)
{
    suite_output out;
    {
        tally t("N_p: closed, Lehmer, Leib, set partitions, |p| <= 7");
        for (int n = 1; n <= 7; ++n) {
            auto leib = combinatorics::leib_fiber_counts(n);
            auto leh = combinatorics::lehmer_fiber_counts(n);
            for (const auto &p : enumerate_partitions(n)) {
                const auto name = p.to_string();
                t.equal(combinatorics::np_closed_formula(p), rational(leh[p]), name + " closed");
                t.equal(leib[p], leh[p], name + " Leib");
                t.equal(combinatorics::count_nonconsecutive_set_partitions(p), leh[p], name + " set partitions");
            }
        }
        out.push_back(t.result());
    }
    {
        tally t("eta: composition, K-words, decreasing trees, i <= 6");
        for (int i = 1; i <= 6; ++i) {
            std::vector<novikov::diff_poly> f;
            for (int g = 1; g <= i; ++g) {
                f.emplace_back(novikov::monomial::generator(g));
            }
            auto direct = enveloping::eta_iterated(f);
            t.equal(enveloping::eta_catalan(f), direct, "K-words i=" + std::to_string(i));
            t.equal(enveloping::eta_trees(f), direct, "trees i=" + std::to_string(i));
            t.equal(enveloping::eta_inc(f), direct, "Inc i=" + std::to_string(i));
        }
        out.push_back(t.result());
    }
    explogflow::flow_session s;
    {
        tally t("n_{p,k}: chains, tableaux, planar trees, |p| <= 6");
        auto braces = explogflow::n_table_braces(7);
        for (const auto &p : enumerate_partitions_up_to(6)) {
            for (int k = 1; k <= p.size() + 2; ++k) {
                const auto where = p.to_string() + " k=" + std::to_string(k);
                auto chains = s.n(p, k);
                t.equal(explogflow::n_coefficient_tableaux(p, k, s), chains, where + " tableaux");
                t.equal(explogflow::n_coefficient_planar(p, k), chains, where + " planar");
                auto it = braces.find({p, k});
                t.equal(it == braces.end() ? integer(0) : it->second, chains, where + " braces");
            }
        }
        out.push_back(t.result());
    }
    {
        tally t("Q_p: assembly, both recursions, planar counts at n <= |p|+2, |p| <= 5");
        for (const auto &p : enumerate_partitions_up_to(5)) {
            auto q = s.flow(p);
            const auto name = p.to_string();
            t.equal(s.flow_by_predecessors(p), q, name + " transitions");
            t.equal(s.flow_by_factorizations(p), q, name + " products");
            for (long n = 0; n <= p.size() + 2; ++n) {
                t.equal(rational(explogflow::flow_value_planar(p, n)), q(rational(n)),
                        name + " n=" + std::to_string(n));
            }
        }
        out.push_back(t.result());
    }
    {
        tally t("log: assembly, brace sum, Hopf route; exp o log = log o exp = id, degree <= 6");
        const int cap = 6;
        auto assembled = explogflow::log_coefficients(cap, s);
        t.equal(novikov::log_series(novikov::x(), cap), assembled, "brace sum");
        t.equal(enveloping::log_prelie(novikov::x(), cap), assembled, "Hopf route");
        t.equal(novikov::psi_linear(trees::tree_logarithm(cap)), assembled, "tree series");
        t.equal(novikov::exp_series(assembled, cap), novikov::x(), "exp o log");
        t.equal(novikov::log_series(explogflow::exp_coefficients_leib(cap), cap), novikov::x(), "log o exp");
        t.equal(enveloping::exp_prelie(novikov::x(), cap), explogflow::exp_coefficients_leib(cap), "exp Hopf route");
        out.push_back(t.result());
    }
    return out;
}

// Label over generators 1..3: one or two variables of order -1 or 0.
inline novikov::monomial random_label(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> ord(-1, 0);
    std::uniform_int_distribution<int> len(1, 2);
    std::vector<novikov::variable> vs;
    for (int k = len(rng); k > 0; --k) {
        vs.push_back({gen(rng), ord(rng)});
    }
    return novikov::monomial(std::move(vs));
}

// Sum of up to two monomials of total degree <= 4 (length <= 2, labels of
// degree <= 2).
inline enveloping::env_element<novikov::monomial> random_env(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> len(0, 2);
    enveloping::env_element<novikov::monomial> r;
    for (int t = 0; t < 2; ++t) {
        std::vector<novikov::monomial> ls;
        for (int k = len(rng); k > 0; --k) {
            ls.push_back(random_label(rng));
        }
        r.add(enveloping::env_monomial<novikov::monomial>(ls), coeff(rng));
    }
    return r;
}

// 8: Hopf and PBW structure on random elements over three generators.
inline suite_output hopf_pbw(std::uint32_t seed)
{
    using namespace enveloping;
    using env = env_element<novikov::monomial>;
    std::mt19937 rng(seed);
    tally assoc("* associative and unital");
    tally delta("coproduct multiplicative");
    tally round("pbw_prelie roundtrip");
    tally proj("canonical projections complete orthogonal idempotents");
    tally example("pbw(x.y) = x.y + (x{y} + y{x})/2");
    for (int trial = 0; trial < 10; ++trial) {
        const auto where = "trial " + std::to_string(trial);
        env a = random_env(rng);
        env b = random_env(rng);
        env c = random_env(rng);
        assoc.equal(star(star(a, b), c), star(a, star(b, c)), where);
        assoc.equal(star(a, unit<novikov::monomial>()), a, where + " right unit");
        assoc.equal(star(unit<novikov::monomial>(), a), a, where + " left unit");
        delta.equal(coproduct(star(a, b)), tensor_star(coproduct(a), coproduct(b)), where);
    }
    for (int trial = 0; trial < 12; ++trial) {
        tensor_word<novikov::monomial> w;
        for (int k = trial % 4 + 1; k > 0; --k) {
            w.letters.push_back(novikov::monomial::generator(1 + static_cast<int>(rng() % 3)));
        }
        if (trial % 2 == 1) {
            w.letters.front() = random_label(rng);
        }
        const auto where = "trial " + std::to_string(trial);
        auto inv = pbw_prelie_inv(w);
        round.equal(pbw_prelie(inv), straighten(w), where + " pbw o pbw^-1");
        round.equal(pbw_prelie_inv(pbw_prelie(inv)), inv, where + " pbw^-1 o pbw");
        round.equal(pbw_prelie_inv_blocks(w), inv, where + " block formula");
    }
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<novikov::monomial> ls;
        for (int k = 2 + trial % 3; k > 0; --k) {
            ls.push_back(trial < 3 ? novikov::monomial::generator(1 + static_cast<int>(rng() % 3)) : random_label(rng));
        }
        env_monomial<novikov::monomial> m(ls);
        const int len = m.length();
        env total;
        for (int n = 1; n <= len; ++n) {
            auto en = canonical_projection(n, m);
            total += en;
            for (int k = 1; k <= len; ++k) {
                proj.equal(canonical_projection(k, en), k == n ? en : env{},
                           m.to_string() + " e" + std::to_string(k) + "e" + std::to_string(n));
            }
        }
        proj.equal(total, env(m), m.to_string() + " completeness");
    }
    for (int g = 1; g <= 3; ++g) {
        for (int h = 1; h <= 3; ++h) {
            const auto x = novikov::monomial::generator(g);
            const auto y = h == g ? random_label(rng) : novikov::monomial::generator(h);
            env xy(env_monomial<novikov::monomial>({x, y}));
            env xb = embed(brace(x, std::vector<novikov::monomial>{y}));
            env yb = embed(brace(y, std::vector<novikov::monomial>{x}));
            example.equal(pbw_classical(xy), xy + rational(1, 2) * (xb + yb), "g=" + std::to_string(g) + " h=" + std::to_string(h));
        }
    }
    return {assoc.result(), delta.result(), round.result(), proj.result(), example.result()};
}

// 9: operator identities over Q[u] with random polynomials of degree <= 3.
inline suite_output operators(std::uint32_t seed)
{
    using namespace diffop;
    std::mt19937 rng(seed);
    tally leib("Leibniz normal form, i <= 5");
    tally pbw("PBW decomposition, m <= 4");
    tally two("m = 2 identity");
    auto polys = [&](int count) {
        std::vector<dpoly> f;
        for (int j = 0; j < count; ++j) {
            f.push_back(random_dpoly(rng, 3));
        }
        return f;
    };
    for (int i = 1; i <= 5; ++i) {
        for (int trial = 0; trial < 4; ++trial) {
            auto f = polys(i);
            leib.expect(verify_leibniz_normal_form(f), "i=" + std::to_string(i));
            if (i >= 2) {
                // eta realized on polynomials is the operator applied to f_i.
                std::vector<novikov::diff_poly> gens;
                for (int g = 1; g <= i; ++g) {
                    gens.emplace_back(novikov::monomial::generator(g));
                }
                std::vector<dpoly> head(f.begin(), f.end() - 1);
                leib.equal(substitute(enveloping::eta_catalan(gens), f), ev_apply(compose_first_order(head), f.back()),
                           "eta i=" + std::to_string(i));
            }
        }
    }
    for (int m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 3; ++trial) {
            pbw.expect(verify_pbw_decomposition(polys(m)), "m=" + std::to_string(m));
        }
    }
    for (int trial = 0; trial < 4; ++trial) {
        auto xy = polys(2);
        const dpoly &x = xy[0];
        const dpoly &y = xy[1];
        fdiff e1 = rational(-1, 2) * fdiff(1, x * y.derivative() + y * x.derivative());
        fdiff e2 = rational(1, 2) * (star(first_order(x), first_order(y)) + star(first_order(y), first_order(x)));
        const auto where = "x=" + x.to_string() + " y=" + y.to_string();
        two.equal(e1 + e2, fdiff(2, x * y), where + " sum");
        two.equal(pbw_component(1, xy), e1, where + " first component");
        two.equal(pbw_component(2, xy), e2, where + " second component");
    }
    return {leib.result(), pbw.result(), two.result()};
}

// 10: exhaustive bijection checks.
inline suite_output bijections(std::uint32_t)
{
    tally gam("Gamma bijective and Psi o Phi o Gamma = L, n <= 6");
    tally example("Gamma(35412)");
    tally magma("magma unique factorization, i <= 10");
    tally round("Leib code and binary tree roundtrips");
    for (int n = 0; n <= 6; ++n) {
        std::set<trees::labeled_tree> image;
        for (const auto &s : combinatorics::enumerate_permutations(n)) {
            auto t = trees::gamma(s);
            const auto where = "n=" + std::to_string(n);
            gam.expect(t.increasing(), where + " increasing");
            gam.equal(trees::gamma_inverse(t), s, where + " inverse");
            gam.equal(trees::psi(t.shape()), combinatorics::lehmer_partition(s), where + " diagram");
            image.insert(t);
        }
        auto all = trees::enumerate_increasing_trees(n + 1);
        gam.equal(image, std::set<trees::labeled_tree>(all.begin(), all.end()), "n=" + std::to_string(n) + " onto");
    }
    auto g = trees::gamma(combinatorics::parse_permutation("35412"));
    example.equal(g.to_string(), reference::gamma_example_tree(), "tree");
    example.equal(trees::gamma_inverse(g), combinatorics::parse_permutation("35412"), "inverse");

    for (int i = 2; i <= 10; ++i) {
        for (const auto &w : combinatorics::enumerate_catalan_words(i)) {
            auto [u, v] = combinatorics::magma_factor(w);
            magma.equal(combinatorics::magma_join(u, v), w, w.to_string() + " factor then join");
            int splits = 0;
            for (int j = 1; j < i; ++j) {
                std::vector<int> a(w.letters().begin(), w.letters().begin() + j);
                std::vector<int> b(w.letters().begin() + j, w.letters().end());
                --b.back();
                try {
                    if (combinatorics::magma_join(combinatorics::catalan_word(a), combinatorics::catalan_word(b)) == w) {
                        ++splits;
                    }
                } catch (const std::invalid_argument &) {
                }
            }
            magma.equal(splits, 1, w.to_string() + " split count");
        }
    }
    for (int n = 0; n <= 7; ++n) {
        std::set<combinatorics::lehmer_code> codes;
        auto leib = combinatorics::enumerate_leib(n);
        for (const auto &phi : leib) {
            auto c = combinatorics::leib_code(phi);
            round.equal(combinatorics::leib_from_code(c), phi, "Leib n=" + std::to_string(n));
            codes.insert(c);
        }
        round.equal(codes.size(), leib.size(), "Leib codes distinct n=" + std::to_string(n));
    }
    for (int i = 1; i <= 7; ++i) {
        for (const auto &t : combinatorics::enumerate_binary_trees(i)) {
            auto w = combinatorics::binary_tree_word(t);
            round.equal(combinatorics::word_binary_tree(w), t, "binary tree leaves=" + std::to_string(i));
        }
    }
    return {gam.result(), example.result(), magma.result(), round.result()};
}

} // namespace detail

struct suite
{
    std::string name;
    int criterion;
    std::string summary;
    std::function<suite_output(std::uint32_t)> run;
};

inline constexpr std::uint32_t default_seed = 20240901;

inline const std::vector<suite> &suites()
{
    static const std::vector<suite> all{
        {"golden-flow", 1, "tabulated flow polynomials in both bases", detail::golden_flow},
        {"flow-recursions", 2, "tabulated recursion identities for the flow", detail::flow_recursions},
        {"worked-n-log", 3, "n_{(2,1,1),k} and the logarithm coefficient 29/60", detail::worked_n_log},
        {"worked-flow-c", 4, "Q_(2,2) and C_{(2,2,1),(2,1)} from four matrices", detail::worked_flow_c},
        {"catalan", 5, "Catalan words, c_w and the figure tree", detail::catalan},
        {"lehmer", 6, "Lehmer examples and the Eulerian identity", detail::lehmer},
        {"oracles", 7, "independent routes agree", detail::oracles},
        {"hopf-pbw", 8, "Hopf and PBW structure of the enveloping algebra", detail::hopf_pbw},
        {"operators", 9, "Leibniz normal form and PBW decomposition of operators", detail::operators},
        {"bijections", 10, "Gamma, magma factorization and code roundtrips", detail::bijections},
    };
    return all;
}

inline const suite &find_suite(const std::string &name)
{
    for (const auto &s : suites()) {
        if (s.name == name || std::to_string(s.criterion) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

// Runs one suite, or all of them for "all"; check names are prefixed by the
// suite name.
inline suite_output run(const std::string &name, std::uint32_t seed = default_seed)
{
    suite_output out;
    for (const auto &s : suites()) {
        if (name != "all" && s.name != name && std::to_string(s.criterion) != name) {
            continue;
        }
        for (auto r : s.run(seed)) {
            r.check = s.name + ": " + r.check;
            out.push_back(std::move(r));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return out;
}

inline bool all_passed(const suite_output &out)
{
    return std::all_of(out.begin(), out.end(), [](const check_result &r) { return r.pass; });
}

} // namespace novalg::verify

#endif
