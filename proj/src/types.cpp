#include "ptr/types.hpp"

#include <nlohmann/json.hpp>

#include "ptr/common.hpp"

namespace ptr {

const std::string& ProcessStep::attr(const std::string& name) const {
    static const std::string empty;
    auto it = attrs.find(name);
    return it == attrs.end() ? empty : it->second;
}

int TokenDictionary::add(const std::string& token) {
    auto it = index.find(token);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(tokens.size());
    tokens.push_back(token);
    index.emplace(token, id);
    return id;
}

int TokenDictionary::lookup(const std::string& token) const {
    auto it = index.find(token);
    return it == index.end() ? -1 : it->second;
}

std::string TokenDictionary::to_json() const {
    nlohmann::json j = tokens;
    return j.dump(2) + "\n";
}

TokenDictionary TokenDictionary::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw DataError("dictionary JSON must be an array of token strings");
    TokenDictionary d;
    for (const auto& e : j) {
        if (!e.is_string()) throw DataError("dictionary JSON must contain only strings");
        std::string tok = e.get<std::string>();
        if (d.index.count(tok)) throw DataError("duplicate token in dictionary: " + tok);
        d.add(tok);
    }
    return d;
}

std::string TokenDictionary::content_hash() const { return hash_hex(to_json()); }

}  // namespace ptr
