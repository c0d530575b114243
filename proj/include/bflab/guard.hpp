#pragma once

// Cost guards. Every Theta(N^2)-or-worse counter declares its pair-evaluation
// cost before running; a guard rejects work above the budget unless forced.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bflab {

class CostGuardError : public std::runtime_error {
public:
    CostGuardError(std::uint64_t cost, std::uint64_t budget, std::string_view what)
        : std::runtime_error("cost guard: " + std::string(what) + " declares " +
                             std::to_string(cost) + " pair evaluations, budget " +
                             std::to_string(budget) + " (use --force to override)"),
          declared_cost(cost),
          budget(budget) {}

    std::uint64_t declared_cost;
    std::uint64_t budget;
};

struct CostGuard {
    std::uint64_t budget = 1'000'000'000ull;
    bool force = false;

    void check(std::uint64_t cost, std::string_view what) const {
        if (!force && cost > budget) throw CostGuardError(cost, budget, what);
    }
};

}  // namespace bflab
