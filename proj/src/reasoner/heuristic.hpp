#ifndef SEMNET_REASONER_HEURISTIC_HPP
#define SEMNET_REASONER_HEURISTIC_HPP

#include <string>
#include <vector>

#include "core/model.hpp"

namespace semnet {

struct HeuristicConfig {
    double keyword_threshold = 0.9;
    std::vector<std::string> compared_attributes = {"context", "difficulty"};
};

// Conjectures isAlternativeTo between object pairs of identical
// classification, near-identical keywords and equal compared attributes.
// Facts are added with provenance Heuristic, mirrors included.
Repository heuristic_seed(const Repository& repo, const HeuristicConfig& config = {});

// The pairs themselves, for report and recount purposes.
std::vector<std::pair<std::string, std::string>> heuristic_pairs(const Repository& repo,
                                                                 const HeuristicConfig& config);

} // namespace semnet

#endif
