#include "report/consistency.hpp"

#include <sstream>

#include <json.hpp>

#include "reasoner/engine.hpp"

namespace semnet::report {

using nlohmann::json;

ConsistencyReport consistency_report(const Repository& repo) {
    ConsistencyReport report;
    for (const auto& fact : check_consistency(repo)) {
        // Root-cause trace: the finding's premises expanded against the
        // repository's derivations.
        Repository scratch = repo;
        scratch.add_fact_raw(fact);
        std::string chain = render_derivation(scratch, fact);
        report.findings.push_back(ConsistencyFinding{fact, std::move(chain)});
    }
    return report;
}

std::string consistency_report_text(const ConsistencyReport& report) {
    std::ostringstream out;
    if (report.clean()) {
        out << "consistent: no incorrectness facts derivable\n";
        return out.str();
    }
    out << report.findings.size() << " finding(s):\n";
    for (const auto& finding : report.findings) out << finding.chain;
    return out.str();
}

std::string consistency_report_json(const ConsistencyReport& report) {
    json doc = json::object();
    json findings = json::array();
    for (const auto& finding : report.findings) {
        json f = json::object();
        f["fact"] = finding.fact.key();
        f["relation"] = std::string(relation_name(finding.fact.relation));
        f["subject"] = finding.fact.subject;
        f["object"] = finding.fact.object;
        if (finding.fact.derivation) {
            f["rule"] = finding.fact.derivation->rule_id;
            f["premises"] = finding.fact.derivation->premises;
        }
        f["chain"] = finding.chain;
        findings.push_back(std::move(f));
    }
    doc["findings"] = std::move(findings);
    doc["consistent"] = report.clean();
    return doc.dump(2) + "\n";
}

} // namespace semnet::report
