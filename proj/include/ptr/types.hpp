#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace ptr {

// One MES record: which equipment/recipe/... touched the wafer, and when.
struct ProcessStep {
    std::string wafer_id;
    int step_index = 0;          // 1-based, contiguous within a wafer
    std::int64_t timestamp = 0;  // epoch seconds
    std::map<std::string, std::string> attrs;

    const std::string& attr(const std::string& name) const;
};

struct Trajectory {
    std::string wafer_id;
    std::vector<ProcessStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
};

struct LabeledRecord {
    Trajectory trajectory;
    double defect_density = 0.0;
    bool heldout = false;
};

struct LabeledDataset {
    std::vector<LabeledRecord> records;
    std::size_t dropped_unlabeled = 0;  // trajectories without a label
    std::size_t unused_labels = 0;      // labels without a trajectory

    std::size_t size() const { return records.size(); }
};

struct Token {
    std::string text;

    bool operator==(const Token& o) const { return text == o.text; }
};

// Attribute names in token order. Default: the five required attributes,
// extras appended alphabetically.
using TokenSchema = std::vector<std::string>;

inline const std::vector<std::string>& required_attributes() {
    static const std::vector<std::string> req = {"eqp", "recipe", "tool_type", "photo_layer",
                                                 "route"};
    return req;
}

struct TokenDictionary {
    std::vector<std::string> tokens;  // first-occurrence order
    std::unordered_map<std::string, int> index;

    int size() const { return static_cast<int>(tokens.size()); }
    int add(const std::string& token);          // returns index, inserting if new
    int lookup(const std::string& token) const; // -1 if absent

    std::string to_json() const;  // plain JSON array of token strings
    static TokenDictionary from_json(const std::string& text);
    std::string content_hash() const;  // hash of the canonical JSON export
};

}  // namespace ptr
