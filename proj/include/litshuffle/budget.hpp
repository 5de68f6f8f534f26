#pragma once

#include <cstdint>

#include "litshuffle/errors.hpp"

namespace litshuffle {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Work meter for the worst-case-exponential enumerations. Every intermediate
/// tuple or replay step charges one node; exceeding the limit aborts with an
/// explicit diagnostic instead of silently running forever.
struct NodeBudget {
    std::uint64_t limit = kDefaultNodeBudget;
    std::uint64_t used = 0;

    void charge(std::uint64_t nodes = 1) {
        used += nodes;
        if (used > limit)
            raise(Errc::budget_exceeded,
                  "node budget exceeded (" + std::to_string(limit) +
                      " nodes); raise --node-budget to continue");
    }
};

} // namespace litshuffle
