#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptr/types.hpp"

namespace ptr {

enum class ParseMode { Strict, Lenient };

struct ParseStats {
    std::size_t malformed_skipped = 0;   // rows dropped (lenient)
    std::size_t missing_values = 0;      // empty required-attribute cells accepted
    std::size_t nonmonotone_timestamps = 0;
    std::size_t reindexed_wafers = 0;    // step_index gaps/duplicates repaired

    std::size_t warnings() const {
        return malformed_skipped + missing_values + nonmonotone_timestamps + reindexed_wafers;
    }
};

struct ParseResult {
    std::vector<Trajectory> trajectories;  // wafer first-occurrence order
    TokenSchema schema;                    // required attrs + extras (alphabetical)
    ParseStats stats;
};

ParseResult parse_history(const std::string& path, ParseMode mode);
ParseResult parse_history_text(const std::string& text, ParseMode mode);

// Canonical serialization of trajectories back to the history CSV format.
// Timestamps are written as integer epoch seconds.
std::string write_history(const std::vector<Trajectory>& trajectories, const TokenSchema& schema);

// Token text: attribute values joined with '|' in schema order, with '\'
// and '|' occurring inside values escaped so the mapping stays injective.
std::string escape_attr_value(const std::string& value);
Token build_token(const ProcessStep& step, const TokenSchema& schema);

TokenDictionary build_dictionary(const std::vector<Trajectory>& trajectories,
                                 const TokenSchema& schema);

LabeledDataset attach_labels(const std::vector<Trajectory>& trajectories,
                             const std::string& label_csv_text);
LabeledDataset attach_labels_file(const std::vector<Trajectory>& trajectories,
                                  const std::string& label_path);

std::string write_labels(const LabeledDataset& dataset);

// Lot id for holdout stratification: wafer_id prefix before the first '_',
// or the whole id when there is none (singleton lot).
std::string lot_of(const std::string& wafer_id);

// Wafer-level holdout with whole lots kept together. Deterministic in
// (fraction, seed, dataset order).
void assign_split(LabeledDataset& dataset, double holdout_fraction, std::uint64_t seed);

}  // namespace ptr
