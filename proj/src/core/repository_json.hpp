#ifndef SEMNET_CORE_REPOSITORY_JSON_HPP
#define SEMNET_CORE_REPOSITORY_JSON_HPP

#include <string>

#include "core/model.hpp"

namespace semnet {

// Repository interchange: UTF-8 JSON with top-level "taxonomy", "objects"
// and "relations". Unknown keys are ignored; unknown relation names are a
// load error. Serialization is canonical (sorted keys, sorted lists), so
// load-then-save is a projection with a byte-stable fixpoint.

Repository repository_from_json(const std::string& text);
Repository load_repository(const std::string& path);

std::string repository_to_json(const Repository& repo);
void save_repository(const Repository& repo, const std::string& path);

// Shared file helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace semnet

#endif
