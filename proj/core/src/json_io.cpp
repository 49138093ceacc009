#include "angulator/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace angulator {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) {
    return j.dump(indent) + "\n";
}

json descriptor_json(const ModelDescriptor& desc) {
    json j = json::object();
    switch (desc.kind) {
    case ModelDescriptor::Kind::TypeA:
        j["n"] = desc.params.n;
        j["d"] = desc.params.d;
        break;
    case ModelDescriptor::Kind::Fixture:
        j["fixture"] = desc.name;
        break;
    case ModelDescriptor::Kind::File:
        j["file"] = desc.name;
        break;
    }
    return j;
}

json labels_json(const std::vector<std::string>& labels) {
    json j = json::array();
    for (const std::string& s : labels) j.push_back(s);
    return j;
}

} // namespace

HomModel explicit_model_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(ParseError::Kind::Malformed, "model file is not valid JSON");
    if (!j.is_object() || !j.contains("d") || !j.contains("objects") || !j.contains("ext") ||
        !j.contains("shift"))
        throw ParseError(ParseError::Kind::Malformed,
                         "model file needs the keys d, objects, ext, shift");
    try {
        std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
        std::vector<std::vector<bool>> ext = j.at("ext").get<std::vector<std::vector<bool>>>();
        std::vector<int> shift = j.at("shift").get<std::vector<int>>();
        int d = j.at("d").get<int>();
        return HomModel::explicit_model(std::move(objects), std::move(ext), std::move(shift), d);
    } catch (const json::exception& e) {
        throw ParseError(ParseError::Kind::Malformed, std::string("model file: ") + e.what());
    }
}

HomModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open model file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return explicit_model_from_json(buffer.str());
}

std::string explicit_model_to_json(const HomModel& model) {
    if (model.is_type_a())
        throw DomainError("only explicit models serialize to the model file format");
    json j;
    j["d"] = model.d();
    json objects = json::array(), ext = json::array(), shift = json::array();
    for (int i = 0; i < model.size(); ++i) {
        objects.push_back(model.label(i));
        json row = json::array();
        for (int k = 0; k < model.size(); ++k) row.push_back(model.ext(i, k));
        ext.push_back(std::move(row));
        shift.push_back(model.shift_index(i, 1));
    }
    j["objects"] = std::move(objects);
    j["ext"] = std::move(ext);
    j["shift"] = std::move(shift);
    return dump(j, 2);
}

std::string pair_list_to_json(const ModelDescriptor& desc, const NcCalculus& calc,
                              const std::vector<WeakCotorsionPair>& pairs, int indent) {
    json j;
    j["model"] = descriptor_json(desc);
    json list = json::array();
    for (const WeakCotorsionPair& p : pairs) {
        json entry;
        entry["x"] = labels_json(calc.labels_of(p.x));
        entry["y"] = labels_json(calc.labels_of(p.y));
        entry["core"] = labels_json(calc.labels_of(p.core));
        entry["class"] = p.x == p.y ? to_string(calc.classify_self_pair(p.x)) : "Mixed";
        list.push_back(std::move(entry));
    }
    j["ordered_pairs"] = std::move(list);
    return dump(j, indent);
}

std::string report_to_json(const CheckReport& report, int indent) {
    json j;
    j["theorem"] = report.theorem;
    j["instances_checked"] = report.instances_checked;
    j["passed"] = report.passed;
    if (report.counterexample.empty()) {
        j["counterexample"] = nullptr;
    } else {
        json ce = json::object();
        for (const auto& [key, value] : report.counterexample) ce[key] = value;
        j["counterexample"] = std::move(ce);
    }
    return dump(j, indent);
}

std::string subfactor_to_json(const ModelDescriptor& desc, const SubfactorModel& sub, int indent) {
    json j;
    j["parent"] = descriptor_json(desc);
    j["dset"] = labels_json(sub.parent_calc().labels_of(sub.dset()));
    json cells = json::array();
    for (const auto& cell : sub.cells()) cells.push_back(cell);
    j["cells"] = std::move(cells);
    json objects = json::array();
    for (const SubfactorObject& obj : sub.objects()) {
        json entry;
        entry["parent"] = sub.parent_model().label(obj.parent_index);
        entry["cell"] = obj.cell;
        entry["local"] = format_diagonal(obj.local);
        objects.push_back(std::move(entry));
    }
    j["objects"] = std::move(objects);
    return dump(j, indent);
}

std::string model_descriptor_to_json(const ModelDescriptor& desc, int indent) {
    return dump(descriptor_json(desc), indent);
}

std::string labels_to_json(const std::vector<std::string>& labels, int indent) {
    return dump(labels_json(labels), indent);
}

std::string set_result_to_json(const ModelDescriptor& desc, const char* result_key,
                               const std::vector<std::string>& input,
                               const std::vector<std::string>& output, int indent) {
    json j;
    j["model"] = descriptor_json(desc);
    j["set"] = labels_json(input);
    j[result_key] = labels_json(output);
    return dump(j, indent);
}

std::string scalar_result_to_json(const ModelDescriptor& desc, const char* result_key,
                                  const std::vector<std::string>& input,
                                  const std::string& value, int indent) {
    json j;
    j["model"] = descriptor_json(desc);
    j["set"] = labels_json(input);
    j[result_key] = value;
    return dump(j, indent);
}

} // namespace angulator
