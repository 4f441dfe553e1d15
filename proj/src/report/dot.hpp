#ifndef SEMNET_REPORT_DOT_HPP
#define SEMNET_REPORT_DOT_HPP

#include <string>

#include "core/model.hpp"

namespace semnet::report {

struct DotOptions {
    // Emit one edge per inverse pair (canonical orientation) and one per
    // symmetric unordered pair.
    bool dedup_mirrors = true;
};

// Deterministic directed graph: one node per object (label = title), one
// labeled edge per fact. Symmetric relations render with dir=none,
// incorrectness facts in red.
std::string export_dot(const Repository& repo, const DotOptions& options = {});

} // namespace semnet::report

#endif
