#ifndef SEMNET_CORE_RELATION_HPP
#define SEMNET_CORE_RELATION_HPP

#include <array>
#include <optional>
#include <string_view>

namespace semnet {

// The extended LOM relation vocabulary: 18 educational relations plus the
// two incorrectness relations used by consistency monitoring.
enum class Relation {
    HasPart,
    IsPartOf,
    HasVersion,
    IsVersionOf,
    IsFormatOf,
    References,
    IsReferencedBy,
    IsBasedOn,
    IsBasisFor,
    Requires,
    IsRequiredBy,
    IsNarrowerThan,
    IsBroaderThan,
    IsAlternativeTo,
    Illustrates,
    IsIllustratedBy,
    IsLessSpecificThan,
    IsMoreSpecificThan,
    IncorrectPart,
    IncorrectFormatVersion,
};

inline constexpr int kRelationCount = 20;

// Per-relation algebraic properties. Every relation is symmetric or has an
// inverse partner, so a mirrored fact can always be materialized.
struct RelationTraits {
    Relation inverse;      // self for symmetric relations
    bool symmetric;
    bool transitive;
    bool canonical;        // preferred member of an inverse pair (export dedup)
};

const RelationTraits& relation_traits(Relation r);

std::string_view relation_name(Relation r);

// Name lookup; throws Error{UnknownRelation} for anything off the table.
Relation relation_from_name(std::string_view name);

std::optional<Relation> try_relation_from_name(std::string_view name);

inline Relation inverse_of(Relation r) { return relation_traits(r).inverse; }
inline bool is_symmetric(Relation r) { return relation_traits(r).symmetric; }
inline bool is_transitive(Relation r) { return relation_traits(r).transitive; }

// Incorrectness relations live in the regular fact set but are
// distinguished by name for reporting and rule stratification.
bool is_incorrectness(Relation r);

// All relations in enum order.
const std::array<Relation, kRelationCount>& all_relations();

} // namespace semnet

#endif
