#include "containlab/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace containlab {

namespace {

using Json = nlohmann::ordered_json;

Json record_json(const VerdictRecord& rec) {
    Json out;
    out["config"] = rec.config;
    out["field"] = rec.field;
    out["N"] = rec.N;
    out["m"] = rec.m;
    out["r"] = rec.r;
    out["j"] = rec.j;
    out["holds"] = rec.holds ? Json(*rec.holds) : Json(nullptr);
    out["witness_degree"] = rec.witness_degree ? Json(*rec.witness_degree) : Json(nullptr);
    out["witness"] = rec.witness ? Json(*rec.witness) : Json(nullptr);
    out["guarantees"] = rec.guarantees;
    out["elapsed_ms"] = rec.elapsed_ms;
    out["status"] = rec.status;
    return out;
}

VerdictRecord json_record(const Json& in) {
    VerdictRecord rec;
    rec.config = in.at("config").get<std::string>();
    rec.field = in.at("field").get<std::string>();
    rec.N = in.at("N").get<unsigned>();
    rec.m = in.at("m").get<unsigned>();
    rec.r = in.at("r").get<unsigned>();
    rec.j = in.at("j").get<unsigned>();
    if (!in.at("holds").is_null()) rec.holds = in.at("holds").get<bool>();
    if (!in.at("witness_degree").is_null())
        rec.witness_degree = in.at("witness_degree").get<unsigned>();
    if (!in.at("witness").is_null()) rec.witness = in.at("witness").get<std::string>();
    rec.guarantees = in.at("guarantees").get<std::vector<std::string>>();
    rec.elapsed_ms = in.at("elapsed_ms").get<std::uint64_t>();
    rec.status = in.at("status").get<std::string>();
    return rec;
}

}  // namespace

VerdictRecord to_record(const ContainmentVerdict& v) {
    VerdictRecord rec;
    rec.config = v.config;
    rec.field = v.field;
    rec.N = v.N;
    rec.m = v.m;
    rec.r = v.r;
    rec.j = v.j;
    rec.holds = v.holds;
    rec.witness_degree = v.witness_degree;
    if (v.witness) rec.witness = v.witness->to_string();
    rec.guarantees = v.guarantees;
    rec.elapsed_ms = v.elapsed_ms;
    rec.status =
        v.status == ContainmentVerdict::Status::Decided ? "ok" : "budget-exceeded";
    return rec;
}

std::string record_to_json(const VerdictRecord& rec) {
    return record_json(rec).dump();
}

VerdictRecord record_from_json(const std::string& line) {
    Json in = Json::parse(line);
    return json_record(in);
}

std::string report_to_jsonl(const std::vector<VerdictRecord>& records) {
    std::string out;
    for (const auto& rec : records) {
        out += record_to_json(rec);
        out += '\n';
    }
    return out;
}

std::vector<VerdictRecord> report_from_jsonl(const std::string& text) {
    std::vector<VerdictRecord> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        records.push_back(record_from_json(line));
    }
    return records;
}

std::string manifest_to_json(const RunManifest& manifest) {
    Json out;
    out["artifact_version"] = manifest.artifact_version;
    out["command_line"] = manifest.command_line;
    out["budgets"] = {{"timeout_secs", manifest.timeout_secs},
                      {"max_pairs", manifest.max_pairs}};
    out["seed"] = manifest.seed ? Json(*manifest.seed) : Json(nullptr);
    Json results = Json::array();
    for (const auto& rec : manifest.results) results.push_back(record_json(rec));
    out["results"] = std::move(results);
    return out.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    Json in = Json::parse(text);
    RunManifest manifest;
    manifest.artifact_version = in.at("artifact_version").get<std::string>();
    manifest.command_line = in.at("command_line").get<std::string>();
    manifest.timeout_secs = in.at("budgets").at("timeout_secs").get<double>();
    manifest.max_pairs = in.at("budgets").at("max_pairs").get<std::uint64_t>();
    if (!in.at("seed").is_null()) manifest.seed = in.at("seed").get<std::uint64_t>();
    for (const auto& rec : in.at("results")) manifest.results.push_back(json_record(rec));
    return manifest;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContainLabError("cannot open for writing: " + path);
    out << content;
    if (!out) throw ContainLabError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContainLabError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace containlab
