#include "core/repository_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support/error.hpp"

namespace semnet {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw Error(ErrorCode::ParseError, "malformed JSON in " + what);
    return doc;
}

std::string require_string(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key) || !obj.at(key).is_string())
        throw Error(ErrorCode::ParseError,
                    ctx + ": missing or non-string field '" + key + "'");
    return obj.at(key).get<std::string>();
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write file: " + path);
    out << content;
    if (!out)
        throw Error(ErrorCode::IoError, "short write to file: " + path);
}

Repository repository_from_json(const std::string& text) {
    json doc = parse_json(text, "repository");
    if (!doc.is_object())
        throw Error(ErrorCode::ParseError, "repository document must be a JSON object");

    Repository repo;

    if (doc.contains("taxonomy")) {
        Taxonomy taxonomy;
        for (const auto& node : doc.at("taxonomy")) {
            std::string id = require_string(node, "id", "taxonomy node");
            std::string label = node.value("label", id);
            std::optional<std::string> parent;
            if (node.contains("parent") && node.at("parent").is_string())
                parent = node.at("parent").get<std::string>();
            taxonomy.add_node(id, std::move(label), std::move(parent));
        }
        repo.set_taxonomy(std::move(taxonomy));
    }

    if (doc.contains("objects")) {
        for (const auto& entry : doc.at("objects")) {
            ELearningObject obj;
            obj.id = require_string(entry, "id", "object");
            obj.title = entry.value("title", "");
            obj.author = entry.value("author", "");
            if (entry.contains("keywords"))
                for (const auto& k : entry.at("keywords"))
                    obj.keywords.insert(k.get<std::string>());
            if (entry.contains("classifications"))
                for (const auto& c : entry.at("classifications"))
                    obj.classifications.insert(c.get<std::string>());
            if (entry.contains("attributes"))
                for (const auto& [k, v] : entry.at("attributes").items())
                    obj.attributes[k] = v.is_string() ? v.get<std::string>() : v.dump();
            if (entry.contains("children"))
                for (const auto& c : entry.at("children"))
                    obj.children.push_back(c.get<std::string>());
            repo.add_object(std::move(obj));
        }
    }

    if (doc.contains("relations")) {
        for (const auto& entry : doc.at("relations")) {
            Fact fact;
            fact.subject = require_string(entry, "from", "relation");
            fact.relation = relation_from_name(require_string(entry, "type", "relation"));
            fact.object = require_string(entry, "to", "relation");
            fact.provenance = entry.contains("provenance")
                                  ? provenance_from_name(entry.at("provenance").get<std::string>())
                                  : Provenance::Asserted;
            if (entry.contains("derivation")) {
                const auto& d = entry.at("derivation");
                Derivation der;
                der.rule_id = d.value("rule", "");
                if (d.contains("premises"))
                    for (const auto& p : d.at("premises"))
                        der.premises.push_back(p.get<std::string>());
                fact.derivation = std::move(der);
            }
            // Mirrors from canonical files land here verbatim; the closure
            // pass below only fills in what a hand-written file left out.
            repo.add_fact_raw(std::move(fact));
        }
    }

    repo.close_under_inversion();
    repo.validate();
    return repo;
}

Repository load_repository(const std::string& path) {
    return repository_from_json(read_file(path));
}

std::string repository_to_json(const Repository& repo) {
    json doc = json::object();

    json taxonomy = json::array();
    for (const auto& [id, node] : repo.taxonomy().nodes()) {
        json n = json::object();
        n["id"] = id;
        n["label"] = node.label;
        if (node.parent) n["parent"] = *node.parent;
        taxonomy.push_back(std::move(n));
    }
    doc["taxonomy"] = std::move(taxonomy);

    json objects = json::array();
    for (const auto& [id, obj] : repo.objects()) {
        json o = json::object();
        o["id"] = id;
        if (!obj.title.empty()) o["title"] = obj.title;
        if (!obj.author.empty()) o["author"] = obj.author;
        if (!obj.keywords.empty())
            o["keywords"] = json(std::vector<std::string>(obj.keywords.begin(),
                                                          obj.keywords.end()));
        if (!obj.classifications.empty())
            o["classifications"] = json(std::vector<std::string>(
                obj.classifications.begin(), obj.classifications.end()));
        if (!obj.attributes.empty()) {
            json attrs = json::object();
            for (const auto& [k, v] : obj.attributes) attrs[k] = v;
            o["attributes"] = std::move(attrs);
        }
        if (!obj.children.empty()) o["children"] = obj.children;
        objects.push_back(std::move(o));
    }
    doc["objects"] = std::move(objects);

    json relations = json::array();
    for (const auto& fact : repo.facts()) {
        json f = json::object();
        f["from"] = fact.subject;
        f["type"] = std::string(relation_name(fact.relation));
        f["to"] = fact.object;
        f["provenance"] = std::string(provenance_name(fact.provenance));
        if (fact.derivation) {
            json d = json::object();
            d["rule"] = fact.derivation->rule_id;
            d["premises"] = fact.derivation->premises;
            f["derivation"] = std::move(d);
        }
        relations.push_back(std::move(f));
    }
    doc["relations"] = std::move(relations);

    return doc.dump(2) + "\n";
}

void save_repository(const Repository& repo, const std::string& path) {
    write_file(path, repository_to_json(repo));
}

} // namespace semnet
