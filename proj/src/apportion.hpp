#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nzhexmap {

// Category weights for one unit. Counts may be raw counts or proportions;
// the allocation is scale-invariant either way.
struct CategoryCounts {
    std::vector<std::string> labels;
    std::vector<double> counts;
};

struct Allocation {
    std::vector<unsigned> seats;  // sums to the requested seat total
};

// Webster/Sainte-Laguë highest averages: award seats one at a time to the
// category maximizing count/(2s+1), s = seats held so far. Ties go to the
// larger raw count, then to the smaller input index. Quotients are compared
// by exact cross-multiplication when every count is an integer, and with a
// relative tolerance of 1e-12 otherwise.
//
// Rejects empty, negative, non-finite and all-zero counts, and seats < 1.
Allocation sainte_lague(std::span<const double> counts, unsigned seats);
Allocation sainte_lague(const CategoryCounts& c, unsigned seats);

// Six-slot assignment for one hex: slot k holds the index of the category
// painting triangle k. Each category fills a contiguous run of slots, in
// input order ([3,2,1,0] seats -> 0,0,0,1,1,2).
std::array<std::size_t, 6> tri_slots(std::span<const double> counts);

// Per-unit slot labels: sainte_lague with seats=6, each label repeated
// `seats` times in input-label order. All units must share one label set.
// Errors are annotated with the offending unit id.
std::map<std::string, std::array<std::string, 6>> tri_alloc(
    const std::vector<std::pair<std::string, CategoryCounts>>& units);

}  // namespace nzhexmap
