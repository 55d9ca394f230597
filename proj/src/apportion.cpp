#include "apportion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace nzhexmap {

namespace {

constexpr double kQuotientRelTol = 1e-12;
constexpr double kMaxExactCount = 9007199254740992.0;  // 2^53

void check_counts(std::span<const double> counts)
{
    if (counts.empty())
        throw std::invalid_argument("counts must not be empty");
    bool any_positive = false;
    for (double v : counts) {
        if (!std::isfinite(v))
            throw std::invalid_argument("counts must be finite");
        if (v < 0.0)
            throw std::invalid_argument("counts must be nonnegative");
        if (v > 0.0)
            any_positive = true;
    }
    if (!any_positive)
        throw std::invalid_argument("counts must not be all zero");
}

bool all_integral(std::span<const double> counts)
{
    return std::all_of(counts.begin(), counts.end(), [](double v) {
        return v <= kMaxExactCount && std::floor(v) == v;
    });
}

// Compares counts[a]/(2 seats[a]+1) against counts[b]/(2 seats[b]+1);
// returns <0, 0, >0. Exact for the integral path; the real path treats
// quotients within 1e-12 relative distance as tied so platform rounding
// cannot flip a tie.
int compare_quotients(std::span<const double> counts, std::span<const unsigned> seats,
                      std::size_t a, std::size_t b, bool exact)
{
    if (exact) {
        using int128 = __int128;
        const int128 lhs = static_cast<int128>(counts[a]) * (2 * static_cast<int128>(seats[b]) + 1);
        const int128 rhs = static_cast<int128>(counts[b]) * (2 * static_cast<int128>(seats[a]) + 1);
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }
    const double qa = counts[a] / (2.0 * seats[a] + 1.0);
    const double qb = counts[b] / (2.0 * seats[b] + 1.0);
    if (std::abs(qa - qb) <= kQuotientRelTol * std::max(std::abs(qa), std::abs(qb)))
        return 0;
    return qa < qb ? -1 : 1;
}

}  // namespace

Allocation sainte_lague(std::span<const double> counts, unsigned seats)
{
    check_counts(counts);
    if (seats < 1)
        throw std::invalid_argument("seat total must be at least 1");

    const bool exact = all_integral(counts);
    std::vector<unsigned> held(counts.size(), 0);
    for (unsigned round = 0; round < seats; ++round) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < counts.size(); ++i) {
            const int cmp = compare_quotients(counts, held, i, best, exact);
            if (cmp > 0 || (cmp == 0 && counts[i] > counts[best]))
                best = i;  // equal count keeps the smaller index
        }
        ++held[best];
    }
    return {std::move(held)};
}

Allocation sainte_lague(const CategoryCounts& c, unsigned seats)
{
    if (c.labels.size() != c.counts.size())
        throw std::invalid_argument("labels and counts must have equal length");
    std::set<std::string> seen(c.labels.begin(), c.labels.end());
    if (seen.size() != c.labels.size())
        throw std::invalid_argument("category labels must be unique");
    return sainte_lague(std::span<const double>(c.counts), seats);
}

std::array<std::size_t, 6> tri_slots(std::span<const double> counts)
{
    const Allocation a = sainte_lague(counts, 6);
    std::array<std::size_t, 6> slots{};
    std::size_t slot = 0;
    for (std::size_t i = 0; i < a.seats.size(); ++i)
        for (unsigned s = 0; s < a.seats[i]; ++s)
            slots[slot++] = i;
    return slots;
}

std::map<std::string, std::array<std::string, 6>> tri_alloc(
    const std::vector<std::pair<std::string, CategoryCounts>>& units)
{
    std::map<std::string, std::array<std::string, 6>> out;
    const std::vector<std::string>* labels = nullptr;
    for (const auto& [id, cc] : units) {
        if (labels == nullptr)
            labels = &units.front().second.labels;
        else if (cc.labels != *labels)
            throw std::invalid_argument("unit '" + id + "': category labels differ between units");
        try {
            if (cc.labels.size() != cc.counts.size())
                throw std::invalid_argument("labels and counts must have equal length");
            std::set<std::string> seen(cc.labels.begin(), cc.labels.end());
            if (seen.size() != cc.labels.size())
                throw std::invalid_argument("category labels must be unique");
            const auto slots = tri_slots(cc.counts);
            std::array<std::string, 6> named;
            for (int k = 0; k < 6; ++k)
                named[k] = cc.labels[slots[k]];
            out[id] = std::move(named);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("unit '" + id + "': " + e.what());
        }
    }
    return out;
}

}  // namespace nzhexmap
