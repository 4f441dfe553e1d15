#include "core/relation.hpp"

#include <unordered_map>

#include "support/error.hpp"

namespace semnet {

namespace {

struct RelationRow {
    std::string_view name;
    RelationTraits traits;
};

// Fixed algebra table. Inverse pairs are mutual; symmetric relations point
// at themselves. The canonical flag marks the orientation kept when a
// consumer wants one edge per pair.
constexpr RelationRow kTable[kRelationCount] = {
    {"hasPart",                {Relation::IsPartOf,           false, true,  true}},
    {"isPartOf",               {Relation::HasPart,            false, true,  false}},
    {"hasVersion",             {Relation::IsVersionOf,        false, false, true}},
    {"isVersionOf",            {Relation::HasVersion,         false, false, false}},
    {"isFormatOf",             {Relation::IsFormatOf,         true,  false, true}},
    {"references",             {Relation::IsReferencedBy,     false, false, true}},
    {"isReferencedBy",         {Relation::References,         false, false, false}},
    {"isBasedOn",              {Relation::IsBasisFor,         false, false, true}},
    {"isBasisFor",             {Relation::IsBasedOn,          false, false, false}},
    {"requires",               {Relation::IsRequiredBy,       false, true,  true}},
    {"isRequiredBy",           {Relation::Requires,           false, true,  false}},
    {"isNarrowerThan",         {Relation::IsBroaderThan,      false, true,  false}},
    {"isBroaderThan",          {Relation::IsNarrowerThan,     false, true,  true}},
    {"isAlternativeTo",        {Relation::IsAlternativeTo,    true,  true,  true}},
    {"illustrates",            {Relation::IsIllustratedBy,    false, false, true}},
    {"isIllustratedBy",        {Relation::Illustrates,        false, false, false}},
    {"isLessSpecificThan",     {Relation::IsMoreSpecificThan, false, true,  false}},
    {"isMoreSpecificThan",     {Relation::IsLessSpecificThan, false, true,  true}},
    {"incorrectPart",          {Relation::IncorrectPart,          true, false, true}},
    {"incorrectFormatVersion", {Relation::IncorrectFormatVersion, true, false, true}},
};

} // namespace

const RelationTraits& relation_traits(Relation r) {
    return kTable[static_cast<int>(r)].traits;
}

std::string_view relation_name(Relation r) {
    return kTable[static_cast<int>(r)].name;
}

std::optional<Relation> try_relation_from_name(std::string_view name) {
    static const std::unordered_map<std::string_view, Relation> index = [] {
        std::unordered_map<std::string_view, Relation> m;
        for (int i = 0; i < kRelationCount; ++i)
            m.emplace(kTable[i].name, static_cast<Relation>(i));
        return m;
    }();
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

Relation relation_from_name(std::string_view name) {
    auto r = try_relation_from_name(name);
    if (!r)
        throw Error(ErrorCode::UnknownRelation,
                    "unknown relation name: " + std::string(name));
    return *r;
}

bool is_incorrectness(Relation r) {
    return r == Relation::IncorrectPart || r == Relation::IncorrectFormatVersion;
}

const std::array<Relation, kRelationCount>& all_relations() {
    static const auto relations = [] {
        std::array<Relation, kRelationCount> a{};
        for (int i = 0; i < kRelationCount; ++i) a[i] = static_cast<Relation>(i);
        return a;
    }();
    return relations;
}

} // namespace semnet
