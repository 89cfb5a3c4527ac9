#ifndef EA_ACCEPTANCE_HPP
#define EA_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace ea::acc {

/// Outcome of one acceptance item.
struct ItemResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string details;  // check counts on success, first witness on failure
};

// Runs the full acceptance suite; the seed drives every randomized item.
// `on_item`, when given, is invoked right after each item finishes.
std::vector<ItemResult> run_acceptance(
    unsigned seed = 0,
    const std::function<void(const ItemResult&)>& on_item = {});

} // namespace ea::acc

#endif
