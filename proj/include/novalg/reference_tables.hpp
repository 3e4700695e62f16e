#ifndef NOVALG_REFERENCE_TABLES_HPP
#define NOVALG_REFERENCE_TABLES_HPP

#include <string>
#include <vector>

// Published values used as golden data. Partitions are written "(3,1)",
// rationals "p/q"; nothing here is computed.
namespace novalg::reference
{

// c * Q_{q_1} .. Q_{q_r}.
struct flow_product
{
    int coefficient;
    std::vector<std::string> factors;
};

// c * Q_{p'}.
struct flow_transition
{
    int coefficient;
    std::string predecessor;
};

struct flow_entry
{
    std::string partition;
    // Delta Q_p as a sum of products of flows; constant 1 for p = (0).
    std::vector<flow_product> by_factorizations;
    // Delta Q_p as a combination of flows of smaller partitions.
    std::vector<flow_transition> by_predecessors;
    int delta_constant;
    // Q_p in the basis binom(t,1), .., binom(t,|p|+1).
    std::vector<int> binomial;
    // Q_p in the basis t^0, t^1, .., t^{|p|+1}.
    std::vector<std::string> monomial;
};

inline const std::vector<flow_entry> &flow_table()
{
    static const std::vector<flow_entry> table{
        {"(0)", {}, {}, 1, {1}, {"0", "1"}},
        {"(1)", {{1, {"(0)"}}}, {{1, "(0)"}}, 0, {0, 1}, {"0", "-1/2", "1/2"}},
        {"(2)", {{1, {"(0)", "(0)"}}}, {{2, "(1)"}, {1, "(0)"}}, 0, {0, 1, 2}, {"0", "1/6", "-1/2", "1/3"}},
        {"(1,1)", {{1, {"(1)"}}}, {{1, "(1)"}}, 0, {0, 0, 1}, {"0", "1/3", "-1/2", "1/6"}},
        {"(3)",
         {{1, {"(0)", "(0)", "(0)"}}},
         {{3, "(2)"}, {3, "(1)"}, {1, "(0)"}},
         0,
         {0, 1, 6, 6},
         {"0", "0", "1/4", "-1/2", "1/4"}},
        {"(2,1)",
         {{1, {"(2)"}}, {2, {"(1)", "(0)"}}},
         {{2, "(2)"}, {4, "(1,1)"}, {3, "(1)"}},
         0,
         {0, 0, 5, 8},
         {"0", "-1/3", "7/6", "-7/6", "1/3"}},
        {"(1,1,1)", {{1, {"(1,1)"}}}, {{1, "(1,1)"}}, 0, {0, 0, 0, 1}, {"0", "-1/4", "11/24", "-1/4", "1/24"}},
        {"(4)",
         {{1, {"(0)", "(0)", "(0)", "(0)"}}},
         {{4, "(3)"}, {6, "(2)"}, {4, "(1)"}, {1, "(0)"}},
         0,
         {0, 1, 14, 36, 24},
         {"0", "-1/30", "0", "1/3", "-1/2", "1/5"}},
        {"(3,1)",
         {{1, {"(3)"}}, {3, {"(1)", "(0)", "(0)"}}},
         {{3, "(3)"}, {3, "(2,1)"}, {6, "(2)"}, {6, "(1,1)"}, {4, "(1)"}},
         0,
         {0, 0, 13, 51, 42},
         {"0", "-1/60", "-5/8", "5/3", "-11/8", "7/20"}},
        {"(2,2)",
         {{2, {"(2)", "(0)"}}},
         {{2, "(2,1)"}, {2, "(2)"}, {4, "(1,1)"}, {2, "(1)"}},
         0,
         {0, 0, 4, 18, 16},
         {"0", "1/30", "-5/12", "5/6", "-7/12", "2/15"}},
        {"(2,1,1)",
         {{1, {"(2,1)"}}, {2, {"(1,1)", "(0)"}}, {1, {"(1)", "(1)"}}},
         {{2, "(2,1)"}, {6, "(1,1,1)"}, {1, "(2)"}, {5, "(1,1)"}},
         0,
         {0, 0, 1, 17, 22},
         {"0", "29/60", "-15/8", "7/3", "-9/8", "11/60"}},
        {"(1,1,1,1)",
         {{1, {"(1,1,1)"}}},
         {{1, "(1,1,1)"}},
         0,
         {0, 0, 0, 0, 1},
         {"0", "1/5", "-5/12", "7/24", "-1/12", "1/120"}},
        {"(5)",
         {{1, {"(0)", "(0)", "(0)", "(0)", "(0)"}}},
         {{5, "(4)"}, {10, "(3)"}, {10, "(2)"}, {5, "(1)"}, {1, "(0)"}},
         0,
         {0, 1, 30, 150, 240, 120},
         {"0", "0", "-1/12", "0", "5/12", "-1/2", "1/6"}},
        {"(4,1)",
         {{1, {"(4)"}}, {4, {"(1)", "(0)", "(0)", "(0)"}}},
         {{4, "(4)"}, {4, "(3,1)"}, {12, "(3)"}, {6, "(2,1)"}, {12, "(2)"}, {8, "(1,1)"}, {5, "(1)"}},
         0,
         {0, 0, 33, 242, 468, 264},
         {"0", "1/10", "-7/60", "-1", "9/4", "-8/5", "11/30"}},
        {"(3,2)",
         {{2, {"(3)", "(0)"}}, {3, {"(2)", "(0)", "(0)"}}},
         {{2, "(3,1)"}, {6, "(2,2)"}, {3, "(3)"}, {9, "(2,1)"}, {8, "(2)"}, {12, "(1,1)"}, {5, "(1)"}},
         0,
         {0, 0, 16, 141, 300, 180},
         {"0", "1/12", "1/8", "-4/3", "17/8", "-5/4", "1/4"}},
        {"(3,1,1)",
         {{1, {"(3,1)"}}, {3, {"(1,1)", "(0)", "(0)"}}, {3, {"(1)", "(1)", "(0)"}}},
         {{3, "(3,1)"}, {3, "(2,1,1)"}, {3, "(3)"}, {6, "(2,1)"}, {9, "(1,1,1)"}, {3, "(2)"}, {7, "(1,1)"}},
         0,
         {0, 0, 6, 103, 279, 192},
         {"0", "1/20", "41/40", "-27/8", "89/24", "-67/40", "4/15"}},
        {"(2,2,1)",
         {{1, {"(2,2)"}}, {2, {"(2,1)", "(0)"}}, {2, {"(2)", "(1)"}}},
         {{3, "(2,2)"}, {4, "(2,1,1)"}, {6, "(2,1)"}, {12, "(1,1,1)"}, {2, "(2)"}, {8, "(1,1)"}},
         0,
         {0, 0, 2, 58, 182, 136},
         {"0", "-1/10", "271/180", "-43/12", "119/36", "-79/60", "17/90"}},
        {"(2,1,1,1)",
         {{1, {"(2,1,1)"}}, {2, {"(1,1,1)", "(0)"}}, {2, {"(1,1)", "(1)"}}},
         {{2, "(2,1,1)"}, {8, "(1,1,1,1)"}, {1, "(2,1)"}, {7, "(1,1,1)"}},
         0,
         {0, 0, 0, 7, 49, 52},
         {"0", "-37/60", "929/360", "-89/24", "169/72", "-27/40", "13/180"}},
        {"(1,1,1,1,1)",
         {{1, {"(1,1,1,1)"}}},
         {{1, "(1,1,1,1)"}},
         0,
         {0, 0, 0, 0, 0, 1},
         {"0", "-1/6", "137/360", "-5/16", "17/144", "-1/48", "1/720"}},
    };
    return table;
}

// Delta Q_(3,2,1) by factorizations.
inline const std::vector<flow_product> &flow_321_factorizations()
{
    static const std::vector<flow_product> terms{{1, {"(3,2)"}},
                                                 {2, {"(3,1)", "(0)"}},
                                                 {2, {"(3)", "(1)"}},
                                                 {3, {"(2,1)", "(0)", "(0)"}},
                                                 {6, {"(2)", "(1)", "(0)"}}};
    return terms;
}

struct c_value
{
    std::string p;
    std::string p_prime;
    int value;
};

// Values of C_{p,p'} used in the worked computations of n_{p,k}.
inline const std::vector<c_value> &c_values()
{
    static const std::vector<c_value> values{
        {"(2,2,1)", "(2,1)", 6}, {"(2,1,1)", "(2,1)", 2},   {"(2,1)", "(2)", 2},    {"(2)", "(1)", 2},
        {"(2,1)", "(1,1)", 4},   {"(1,1)", "(1)", 1},       {"(2,1,1)", "(1,1,1)", 6}, {"(1,1,1)", "(1,1)", 1},
        {"(2,1)", "(1)", 3},     {"(2,1,1)", "(2)", 1},     {"(2,1,1)", "(1,1)", 5}, {"(2,2)", "(2,1)", 2},
        {"(2,2)", "(2)", 2},     {"(2,2)", "(1,1)", 4},     {"(2,2)", "(1)", 2},
    };
    return values;
}

// The four matrices of M((2,2,1),(2,1)); first row, the second is 2 1 0 0.
inline const std::vector<std::vector<int>> &m_221_21_top_rows()
{
    static const std::vector<std::vector<int>> rows{{2, 2, 1, 0}, {2, 2, 0, 1}, {2, 1, 2, 0}, {2, 1, 0, 2}};
    return rows;
}

struct n_value
{
    std::string p;
    int k;
    int value;
};

inline const std::vector<n_value> &n_values()
{
    static const std::vector<n_value> values{
        {"(2,1,1)", 5, 22}, {"(2,1,1)", 4, 17}, {"(2,1,1)", 3, 1}, {"(2,1,1)", 2, 0},
        {"(2,2)", 5, 16},   {"(2,2)", 4, 18},   {"(2,2)", 3, 4},   {"(2,2)", 2, 0},
    };
    return values;
}

// Coefficient of x_(2,1,1)/2 in the logarithm.
inline std::string log_211_half()
{
    return "29/60";
}

// log(x) = x - 1/2 x_(1) + 1/3 x_(1,1) + 1/12 x_(2) + degree >= 4.
struct series_term
{
    std::string p;
    std::string coefficient;
};

inline const std::vector<series_term> &log_low_degree()
{
    static const std::vector<series_term> terms{{"(0)", "1"}, {"(1)", "-1/2"}, {"(1,1)", "1/3"}, {"(2)", "1/12"}};
    return terms;
}

// Tableaux T_{p,k}, rows joined by " / ".
struct tableau_list
{
    std::string p;
    int k;
    std::vector<std::string> tableaux;
};

inline const std::vector<tableau_list> &tableau_lists()
{
    static const std::vector<tableau_list> lists{
        {"(2,1,1)", 4, {"1 2 / 3 / 4", "1 3 / 2 / 4", "1 4 / 2 / 3"}},
        {"(2,1,1)", 3, {"1 1 / 2 / 3", "1 2 / 2 / 3", "1 2 / 3 / 3", "1 3 / 2 / 3"}},
        {"(2,1,1)", 2, {"1 1 / 2 / 2"}},
        {"(2,1,1)", 1, {}},
        {"(2,2)", 4, {"1 2 / 3 4", "1 3 / 2 4"}},
        {"(2,2)", 3, {"1 1 / 2 3", "1 2 / 2 3", "1 2 / 3 3", "1 3 / 2 3"}},
        {"(2,2)", 2, {"1 1 / 2 2", "1 2 / 2 2"}},
        {"(2,2)", 1, {}},
    };
    return lists;
}

// The Catalan word lists K_3, K_4, K_5.
inline const std::vector<std::vector<std::string>> &catalan_lists()
{
    static const std::vector<std::vector<std::string>> lists{
        {"002", "011"},
        {"0003", "0012", "0021", "0102", "0111"},
        {"00004", "00013", "00022", "00031", "00103", "00112", "00121", "00202", "00211", "01003", "01012", "01021",
         "01102", "01111"},
    };
    return lists;
}

// Coefficient c_w of the word 0002013.
struct catalan_coefficient
{
    std::string word;
    int coefficient;
};

inline catalan_coefficient catalan_example()
{
    return {"0002013", 9};
}

// The eight-leaf tree ((x,((x,x),x)),((x,x),(x,x))), its word and the
// canonical Inc values of that word.
struct figure_tree_data
{
    std::string word;
    std::vector<int> inc_values;
};

inline figure_tree_data figure_tree()
{
    return {"00120103", {4, 3, 4, 8, 6, 8, 8}};
}

struct lehmer_example
{
    std::string permutation;
    std::string code;
    std::string partition;
};

inline const std::vector<lehmer_example> &lehmer_examples()
{
    static const std::vector<lehmer_example> rows{{"362857194", "241422010", "(3,2,2,2)"},
                                                  {"812374596", "700030010", "(6,1,1,1)"},
                                                  {"648327915", "535212200", "(3,2,2,1,1)"}};
    return rows;
}

// Gamma(35412) as a labeled tree.
inline std::string gamma_example_tree()
{
    return "1{2,3{4{6},5}}";
}

} // namespace novalg::reference

#endif
