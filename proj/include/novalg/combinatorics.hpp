#ifndef NOVALG_COMBINATORICS_HPP
#define NOVALG_COMBINATORICS_HPP

#include <novalg/combinatorics/catalan.hpp>
#include <novalg/combinatorics/fiber_counts.hpp>
#include <novalg/combinatorics/lehmer.hpp>
#include <novalg/combinatorics/partition.hpp>
#include <novalg/combinatorics/set_partitions.hpp>
#include <novalg/combinatorics/tableaux.hpp>

#endif
