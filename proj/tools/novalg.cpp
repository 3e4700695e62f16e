#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <novalg/combinatorics.hpp>
#include <novalg/enveloping.hpp>
#include <novalg/explogflow.hpp>
#include <novalg/novikov.hpp>
#include <novalg/verify.hpp>

namespace
{

using namespace novalg;
using combinatorics::partition;
using json = nlohmann::ordered_json;

constexpr int exit_usage = 1;
constexpr int exit_verification = 2;

struct usage_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Rationals always as "n/d" in lowest terms; the sign sits on the numerator.
std::string rat(const rational &q)
{
    rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Integers as JSON numbers while they fit, decimal strings beyond.
json int_value(const integer &z)
{
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

// The zero partition is written [0], as in x_(0).
json partition_json(const partition &p)
{
    if (p.is_zero()) {
        return json::array({0});
    }
    return p.parts();
}

struct table
{
    std::vector<std::string> columns;
    std::vector<json> rows;
};

std::string plain(const json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string s;
        for (const auto &x : v) {
            if (!s.empty()) {
                s += " ";
            }
            s += plain(x);
        }
        return s;
    }
    return v.dump();
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

std::string latex_escape(const std::string &s)
{
    std::string r;
    for (char c : s) {
        switch (c) {
        case '_':
        case '{':
        case '}':
        case '&':
        case '%':
        case '$':
        case '#':
            r += '\\';
            r += c;
            break;
        case '^':
            r += "\\^{}";
            break;
        case '~':
            r += "\\~{}";
            break;
        case '\\':
            r += "\\textbackslash{}";
            break;
        default:
            r += c;
        }
    }
    return r;
}

void emit(const table &t, const std::string &format, std::ostream &out)
{
    if (format == "json") {
        for (const auto &r : t.rows) {
            out << r.dump() << "\n";
        }
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            out << (i ? "," : "") << csv_field(t.columns[i]);
        }
        out << "\n";
        for (const auto &r : t.rows) {
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                out << (i ? "," : "") << csv_field(plain(r.at(t.columns[i])));
            }
            out << "\n";
        }
        return;
    }
    out << "\\begin{tabular}{" << std::string(t.columns.size(), 'l') << "}\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? " & " : "") << latex_escape(t.columns[i]);
    }
    out << " \\\\\n\\hline\n";
    for (const auto &r : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            out << (i ? " & " : "") << "\\texttt{" << latex_escape(plain(r.at(t.columns[i]))) << "}";
        }
        out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
}

void guard_size(int size, int guard, const std::string &what)
{
    if (size > guard) {
        throw usage_error(what + " " + std::to_string(size) + " exceeds the guard " + std::to_string(guard) +
                          " (raise --guard to allow it)");
    }
}

partition parse_partition_arg(const std::string &text)
{
    try {
        return combinatorics::parse_partition(text);
    } catch (const std::exception &e) {
        throw usage_error("cannot parse partition '" + text + "': " + e.what());
    }
}

// Partitions of degree at most max_degree, i.e. |p| <= max_degree - 1.
std::vector<partition> partitions_of_degree(int max_degree)
{
    return combinatorics::enumerate_partitions_up_to(max_degree - 1);
}

// N_p through the tableau count; the closed formula sums over all set
// partitions of the parts and is far slower near the size guard.
table run_exp(int max_degree)
{
    table t{{"partition", "N", "coeff"}, {}};
    explogflow::flow_session s;
    for (const auto &p : partitions_of_degree(max_degree)) {
        const integer n = explogflow::np_tableaux(p, s);
        t.rows.push_back(json{{"partition", partition_json(p)},
                              {"N", n.get_str()},
                              {"coeff", rat(make_rational(n, factorial(p.size() + 1)))}});
    }
    return t;
}

table run_log(int max_degree)
{
    table t{{"partition", "n", "coeff"}, {}};
    explogflow::flow_session s;
    for (const auto &p : partitions_of_degree(max_degree)) {
        json n = json::array();
        for (int k = 1; k <= p.size() + 1; ++k) {
            n.push_back(int_value(s.n(p, k)));
        }
        t.rows.push_back(json{{"partition", partition_json(p)}, {"n", n}, {"coeff", rat(s.log_coefficient(p))}});
    }
    return t;
}

table flow_rows(const std::vector<partition> &ps, explogflow::flow_session &s)
{
    table t{{"partition", "binom", "monomial"}, {}};
    for (const auto &p : ps) {
        auto q = s.flow(p);
        json binom = json::array();
        for (int k = 1; k <= p.size() + 1; ++k) {
            binom.push_back(int_value(q.coefficient(k)));
        }
        json mono = json::array();
        for (const auto &c : q.monomial_coefficients()) {
            mono.push_back(rat(c));
        }
        t.rows.push_back(json{{"partition", partition_json(p)}, {"binom", binom}, {"monomial", mono}});
    }
    return t;
}

std::string q_name(const partition &p)
{
    return "Q_{" + p.to_string() + "}";
}

// c*term with the sign folded into the separator; c = 1 is omitted.
void latex_term(std::string &s, const rational &c, const std::string &term)
{
    if (c == 0) {
        return;
    }
    rational a = abs(c);
    if (s.empty()) {
        s += c < 0 ? "-" : "";
    } else {
        s += c < 0 ? "-" : "+";
    }
    std::string mag;
    if (a.get_den() == 1) {
        mag = a == 1 && !term.empty() ? "" : a.get_num().get_str();
    } else {
        mag = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    s += mag + term;
}

std::string latex_monomial(const std::vector<rational> &cs)
{
    std::string s;
    for (std::size_t k = cs.size(); k-- > 0;) {
        std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^{" + std::to_string(k) + "}");
        latex_term(s, cs[k], power);
    }
    return s.empty() ? "0" : s;
}

std::string latex_binomial(const explogflow::binomial_poly &q)
{
    std::string s;
    for (int k = q.degree(); k >= 0; --k) {
        std::string b = k == 0 ? "" : "\\binom{t}{" + std::to_string(k) + "}";
        latex_term(s, rational(q.coefficient(k)), b);
    }
    return s.empty() ? "0" : s;
}

// Larger size first, then reverse lexicographic: the listing order of the tables.
bool listed_before(const partition &a, const partition &b)
{
    if (a.size() != b.size()) {
        return a.size() > b.size();
    }
    return b.parts() < a.parts();
}

// Delta Q_p as products of flows, then as a combination of predecessors, both
// ordered by leading factor; the second form is dropped when it prints
// identically.
std::string latex_recursion(const partition &p, explogflow::flow_session &s)
{
    if (p.is_zero()) {
        return "\\Delta " + q_name(p) + " = 1";
    }
    auto fs = explogflow::factorizations(p);
    std::sort(fs.begin(), fs.end(), [](const explogflow::factorization &a, const explogflow::factorization &b) {
        return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                            listed_before);
    });
    std::string products;
    for (const auto &f : fs) {
        std::string term;
        for (const auto &[q, i] : f.grouped()) {
            term += q_name(q) + (i > 1 ? "^{" + std::to_string(i) + "}" : "");
        }
        latex_term(products, rational(f.weight), term);
    }
    auto preds = s.predecessors(p);
    std::sort(preds.begin(), preds.end(), listed_before);
    std::string transitions;
    for (const auto &q : preds) {
        latex_term(transitions, rational(s.c(p, q)), q_name(q));
    }
    std::string line = "\\Delta " + q_name(p) + " = " + products;
    if (transitions != products) {
        line += " = " + transitions;
    }
    return line;
}

void emit_flow_latex(const std::vector<partition> &ps, explogflow::flow_session &s, std::ostream &out)
{
    for (const auto &p : ps) {
        out << "\\[" << latex_recursion(p, s) << "\\]\n";
    }
    for (const auto &p : ps) {
        auto q = s.flow(p);
        out << "\\[" << q_name(p) << " = " << latex_monomial(q.monomial_coefficients()) << " = " << latex_binomial(q)
            << "\\]\n";
    }
}

table run_pbw(int letters)
{
    table t{{"term", "coeff"}, {}};
    for (const auto &[m, c] : enveloping::generator_product_catalan(letters)) {
        t.rows.push_back(json{{"term", m.to_string()}, {"coeff", rat(c)}});
    }
    return t;
}

table run_pbw_classical(const std::vector<int> &gens)
{
    table t{{"n", "term", "coeff"}, {}};
    std::vector<novikov::monomial> labels;
    for (int g : gens) {
        if (g < 1) {
            throw usage_error("generator indices start at 1");
        }
        labels.push_back(novikov::monomial::generator(g));
    }
    enveloping::env_monomial<novikov::monomial> m(labels);
    for (int n = 1; n <= m.length(); ++n) {
        for (const auto &[term, c] : enveloping::canonical_projection(n, m)) {
            t.rows.push_back(json{{"n", n}, {"term", term.to_string()}, {"coeff", rat(c)}});
        }
    }
    return t;
}

table run_eta(int letters)
{
    table t{{"word", "coeff", "term"}, {}};
    for (const auto &w : combinatorics::enumerate_catalan_words(letters)) {
        std::string term;
        for (int j = 1; j <= letters; ++j) {
            if (!term.empty()) {
                term += " ";
            }
            term += "f" + std::to_string(j);
            if (w.at(j) > 0) {
                term += "^(" + std::to_string(w.at(j)) + ")";
            }
        }
        t.rows.push_back(json{{"word", w.to_string()}, {"coeff", w.coefficient().get_str()}, {"term", term}});
    }
    return t;
}

table run_catalan(int i)
{
    table t{{"word", "c", "d", "factorization", "tree", "inc"}, {}};
    for (const auto &w : combinatorics::enumerate_catalan_words(i)) {
        std::string fact;
        if (i >= 2) {
            auto [u, v] = combinatorics::magma_factor(w);
            fact = u.to_string() + "|" + v.to_string();
        }
        t.rows.push_back(json{{"word", w.to_string()},
                              {"c", w.coefficient().get_str()},
                              {"d", w.auxiliary()},
                              {"factorization", fact},
                              {"tree", combinatorics::word_binary_tree(w).to_string()},
                              {"inc", combinatorics::canonical_inc_representative(w).values()}});
    }
    return t;
}

table run_tableaux(const partition &p, int k)
{
    table t{{"tableau"}, {}};
    for (const auto &x : combinatorics::enumerate_tableaux(p, k)) {
        t.rows.push_back(json{{"tableau", x.to_string()}});
    }
    return t;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations with the pre-Lie exponential, logarithm and flow in free Novikov algebras"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint32_t seed = verify::default_seed;
    int max_degree = 5;
    int guard = 12;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
    app.add_option("--seed", seed, "Seed for the random property checks");
    app.add_option("--max-degree", max_degree, "Largest degree |p|+1 of x_p")->check(CLI::PositiveNumber);
    app.add_option("--guard", guard, "Largest |p| accepted")->check(CLI::NonNegativeNumber);

    auto *exp = app.add_subcommand("exp", "Coefficients N_p of the pre-Lie exponential of x");
    auto *log = app.add_subcommand("log", "n_{p,k} and the coefficients of the pre-Lie logarithm of x");

    auto *flow = app.add_subcommand("flow", "Flow polynomials Q_p(t) in the binomial and monomial bases");
    std::string flow_partition;
    int max_size = -1;
    bool flow_latex = false;
    auto *flow_p = flow->add_option("--partition", flow_partition, "A single partition, e.g. 2,2");
    flow->add_option("--max-size", max_size, "All partitions with |p| up to this size")->excludes(flow_p);
    flow->add_flag("--latex", flow_latex, "Two-basis layout with both recursions");

    auto *pbw = app.add_subcommand("pbw", "Pre-Lie PBW expansion or canonical projections");
    int pbw_letters = 0;
    bool classical = false;
    std::vector<int> monomial;
    pbw->add_option("--letters", pbw_letters, "Expand a^[i] * .. * a^[1] for i letters")->check(CLI::Range(1, 6));
    pbw->add_flag("--classical", classical, "Canonical projections of a symmetric monomial");
    pbw->add_option("--monomial", monomial, "Generator indices of the monomial, e.g. 1,2,2")->delimiter(',');

    auto *eta = app.add_subcommand("eta", "Catalan word expansion of (f1 d) o .. o (f_{i-1} d)(f_i)");
    int eta_letters = 0;
    eta->add_option("--letters", eta_letters, "Number of functions")->required()->check(CLI::Range(1, 10));

    auto *cat = app.add_subcommand("catalan", "Catalan words K_i with c_w, d(w), factorization, tree, Inc");
    int cat_i = 0;
    cat->add_option("--i", cat_i, "Word length")->required()->check(CLI::Range(1, 12));

    auto *tab = app.add_subcommand("tableaux", "Tableaux T_{p,k}");
    std::string tab_partition;
    int tab_k = 0;
    tab->add_option("--partition", tab_partition, "Shape")->required();
    tab->add_option("--k", tab_k, "Largest label")->required()->check(CLI::PositiveNumber);

    auto *ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    std::vector<std::string> suite_names{"all"};
    for (const auto &s : verify::suites()) {
        suite_names.push_back(s.name);
        suite_names.push_back(std::to_string(s.criterion));
    }
    ver->add_option("--suite", suite, "Suite name or criterion number")->check(CLI::IsMember(suite_names));

    for (auto *sub : {exp, log, flow, pbw, eta, cat, tab, ver}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        table t;
        if (exp->parsed() || log->parsed()) {
            guard_size(max_degree - 1, guard, "|p|");
            t = exp->parsed() ? run_exp(max_degree) : run_log(max_degree);
        } else if (flow->parsed()) {
            std::vector<partition> ps;
            if (!flow_partition.empty()) {
                ps.push_back(parse_partition_arg(flow_partition));
                guard_size(ps.front().size(), guard, "|p|");
            } else {
                const int n = max_size >= 0 ? max_size : max_degree - 1;
                guard_size(n, guard, "|p|");
                ps = combinatorics::enumerate_partitions_up_to(n);
            }
            explogflow::flow_session s;
            if (flow_latex || format == "latex") {
                emit_flow_latex(ps, s, std::cout);
                return 0;
            }
            t = flow_rows(ps, s);
        } else if (pbw->parsed()) {
            if (classical) {
                if (monomial.empty()) {
                    throw usage_error("--classical needs --monomial");
                }
                guard_size(static_cast<int>(monomial.size()), 6, "monomial length");
                t = run_pbw_classical(monomial);
            } else {
                if (pbw_letters < 1) {
                    throw usage_error("pbw needs --letters or --classical --monomial");
                }
                t = run_pbw(pbw_letters);
            }
        } else if (eta->parsed()) {
            t = run_eta(eta_letters);
        } else if (cat->parsed()) {
            t = run_catalan(cat_i);
        } else if (tab->parsed()) {
            auto p = parse_partition_arg(tab_partition);
            guard_size(p.size(), guard, "|p|");
            t = run_tableaux(p, tab_k);
        } else if (ver->parsed()) {
            auto results = verify::run(suite, seed);
            t.columns = {"check", "status", "detail"};
            for (const auto &r : results) {
                t.rows.push_back(json{{"check", r.check}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
            }
            emit(t, format, std::cout);
            return verify::all_passed(results) ? 0 : exit_verification;
        }
        emit(t, format, std::cout);
        return 0;
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
