#pragma once

// JSON serialization.  All emitters produce byte-stable text: object keys
// are alphabetical and arrays follow the canonical object order.

#include <string>
#include <vector>

#include "angulator/model.hpp"
#include "angulator/pairs.hpp"
#include "angulator/report.hpp"
#include "angulator/subfactor.hpp"

namespace angulator {

// How a model was specified, echoed into serialized output.
struct ModelDescriptor {
    enum class Kind { TypeA, Fixture, File };
    Kind kind = Kind::TypeA;
    ModelParams params{};  // TypeA
    std::string name;      // fixture name or file path
};

// Explicit model file format: {"d": INT, "objects": [STR...],
// "ext": [[BOOL...]...], "shift": [INT...]}.
HomModel explicit_model_from_json(const std::string& text);
HomModel load_model_file(const std::string& path);
std::string explicit_model_to_json(const HomModel& model);

// {"model": ..., "ordered_pairs": [{"class": STR, "core": [...],
//  "x": [...], "y": [...]}...]} with diagonals in dash form.
std::string pair_list_to_json(const ModelDescriptor& desc, const NcCalculus& calc,
                              const std::vector<WeakCotorsionPair>& pairs, int indent = 2);

// {"counterexample": null|{...}, "instances_checked": INT, "passed": BOOL,
//  "theorem": STR}.
std::string report_to_json(const CheckReport& report, int indent = 2);

std::string subfactor_to_json(const ModelDescriptor& desc, const SubfactorModel& sub, int indent = 2);

// Small helpers for the command line adapter.
std::string model_descriptor_to_json(const ModelDescriptor& desc, int indent = 2);
std::string labels_to_json(const std::vector<std::string>& labels, int indent = 2);
std::string set_result_to_json(const ModelDescriptor& desc, const char* result_key,
                               const std::vector<std::string>& input,
                               const std::vector<std::string>& output, int indent = 2);
std::string scalar_result_to_json(const ModelDescriptor& desc, const char* result_key,
                                  const std::vector<std::string>& input,
                                  const std::string& value, int indent = 2);

} // namespace angulator
