#include "reasoner/heuristic.hpp"

#include "classify/similarity.hpp"

namespace semnet {

namespace {

bool attributes_match(const ELearningObject& a, const ELearningObject& b,
                      const std::vector<std::string>& keys) {
    for (const auto& key : keys) {
        auto ia = a.attributes.find(key);
        auto ib = b.attributes.find(key);
        const std::string& va = ia == a.attributes.end() ? std::string() : ia->second;
        const std::string& vb = ib == b.attributes.end() ? std::string() : ib->second;
        if (va != vb) return false;
    }
    return true;
}

} // namespace

std::vector<std::pair<std::string, std::string>> heuristic_pairs(const Repository& repo,
                                                                 const HeuristicConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto& objects = repo.objects();
    for (auto it = objects.begin(); it != objects.end(); ++it) {
        for (auto jt = std::next(it); jt != objects.end(); ++jt) {
            const auto& a = it->second;
            const auto& b = jt->second;
            if (a.classifications != b.classifications) continue;
            if (jaccard(a.keywords, b.keywords) < config.keyword_threshold) continue;
            if (!attributes_match(a, b, config.compared_attributes)) continue;
            out.emplace_back(it->first, jt->first);
        }
    }
    return out;
}

Repository heuristic_seed(const Repository& repo, const HeuristicConfig& config) {
    Repository out = repo;
    for (const auto& [left, right] : heuristic_pairs(repo, config)) {
        Fact fact;
        fact.subject = left;
        fact.relation = Relation::IsAlternativeTo;
        fact.object = right;
        fact.provenance = Provenance::Heuristic;
        out.add_fact(std::move(fact));
    }
    return out;
}

} // namespace semnet
