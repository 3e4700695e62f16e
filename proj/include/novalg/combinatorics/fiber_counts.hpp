#ifndef NOVALG_COMBINATORICS_FIBER_COUNTS_HPP
#define NOVALG_COMBINATORICS_FIBER_COUNTS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <novalg/arith.hpp>
#include <novalg/combinatorics/lehmer.hpp>
#include <novalg/combinatorics/partition.hpp>
#include <novalg/combinatorics/set_partitions.hpp>

namespace novalg::combinatorics
{

// #{phi in Leib(n) : Theta_n(phi) = p} for every p of n.
inline std::map<partition, integer> leib_fiber_counts(int n)
{
    std::map<partition, integer> counts;
    for (const auto &phi : enumerate_leib(n)) {
        counts[leib_partition(phi)] += 1;
    }
    return counts;
}

// #{sigma in S_n : L(sigma) = p} for every p of n.
inline std::map<partition, integer> lehmer_fiber_counts(int n)
{
    std::map<partition, integer> counts;
    for (const auto &sigma : enumerate_permutations(n)) {
        counts[lehmer_partition(sigma)] += 1;
    }
    return counts;
}

namespace detail
{

struct nonconsecutive_search
{
    int total = 0;
    std::map<int, int> unopened; // block size -> how many blocks still to open
    std::vector<int> open_room;  // free slots per opened block
    integer count = 0;

    void run(int e, bool prev_was_min)
    {
        if (e > total) {
            count += 1;
            return;
        }
        // Index access: the recursion appends to open_room.
        for (std::size_t b = 0; b < open_room.size(); ++b) {
            if (open_room[b] > 0) {
                --open_room[b];
                run(e + 1, false);
                ++open_room[b];
            }
        }
        if (prev_was_min) {
            return;
        }
        for (auto &[size, left] : unopened) {
            if (left == 0) {
                continue;
            }
            --left;
            open_room.push_back(size - 1);
            run(e + 1, true);
            open_room.pop_back();
            ++left;
        }
    }
};

} // namespace detail

// Set partitions of [n+k] into blocks of sizes p_1+1,..,p_k+1 in which no two
// block minima are consecutive integers.
inline integer count_nonconsecutive_set_partitions(const partition &p)
{
    detail::nonconsecutive_search s;
    s.total = p.size() + p.length();
    for (int part : p.parts()) {
        s.unopened[part + 1] += 1;
    }
    if (s.total == 0) {
        return 1;
    }
    s.run(1, false);
    return s.count;
}

// Inclusion-exclusion over set partitions I_1,..,I_h of the part indices.
inline rational np_closed_formula(const partition &p)
{
    const int k = p.length();
    if (k == 0) {
        return 1;
    }
    integer total = 0;
    for_each_set_partition(k, [&](const block_list &blocks) {
        const long h = static_cast<long>(blocks.size());
        integer term = ((k + h) % 2 == 0) ? 1 : -1;
        std::vector<long> outer;
        for (const auto &b : blocks) {
            std::vector<long> inner;
            long pi = 0;
            for (int idx : b) {
                inner.push_back(p[static_cast<std::size_t>(idx)]);
                pi += p[static_cast<std::size_t>(idx)];
            }
            term *= factorial(static_cast<long>(b.size()));
            term *= multinomial(inner);
            outer.push_back(pi + 1);
        }
        term *= multinomial(outer);
        total += term;
    });
    return make_rational(total, p.symmetry_factor());
}

} // namespace novalg::combinatorics

#endif
