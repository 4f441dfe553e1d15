#ifndef SEMNET_REPORT_CONSISTENCY_HPP
#define SEMNET_REPORT_CONSISTENCY_HPP

#include <string>
#include <vector>

#include "core/model.hpp"

namespace semnet::report {

struct ConsistencyFinding {
    Fact fact;
    std::string chain; // rendered derivation, root cause included
};

struct ConsistencyReport {
    std::vector<ConsistencyFinding> findings;

    bool clean() const { return findings.empty(); }
};

ConsistencyReport consistency_report(const Repository& repo);

std::string consistency_report_text(const ConsistencyReport& report);
std::string consistency_report_json(const ConsistencyReport& report);

} // namespace semnet::report

#endif
