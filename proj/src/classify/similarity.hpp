#ifndef SEMNET_CLASSIFY_SIMILARITY_HPP
#define SEMNET_CLASSIFY_SIMILARITY_HPP

#include <set>
#include <string>

namespace semnet {

/// Jaccard coefficient |a ∩ b| / |a ∪ b|; 0 when both sets are empty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

} // namespace semnet

#endif
