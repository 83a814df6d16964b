#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "containlab/containment.hpp"

namespace containlab {

inline constexpr const char* kArtifactVersion = "containlab 0.1.0";

// Flat text mirror of a ContainmentVerdict: exactly the fields of the
// line-delimited report format, one object per check.
struct VerdictRecord {
    std::string config;
    std::string field;
    unsigned N = 0;
    unsigned m = 0;
    unsigned r = 0;
    unsigned j = 0;
    std::optional<bool> holds;  // absent when the budget ran out
    std::optional<unsigned> witness_degree;
    std::optional<std::string> witness;
    std::vector<std::string> guarantees;
    std::uint64_t elapsed_ms = 0;
    std::string status;  // "ok" or "budget-exceeded"

    bool operator==(const VerdictRecord&) const = default;
};

VerdictRecord to_record(const ContainmentVerdict& v);

// One JSON object on one line, fields in the documented order.
std::string record_to_json(const VerdictRecord& rec);
VerdictRecord record_from_json(const std::string& line);

// One record per line, trailing newline after each.
std::string report_to_jsonl(const std::vector<VerdictRecord>& records);
std::vector<VerdictRecord> report_from_jsonl(const std::string& text);

// Everything needed to re-run a batch and compare: command line, budgets,
// seed, artifact version, per-check results.
struct RunManifest {
    std::string command_line;
    double timeout_secs = 0;
    std::uint64_t max_pairs = 0;
    std::optional<std::uint64_t> seed;
    std::string artifact_version = kArtifactVersion;
    std::vector<VerdictRecord> results;

    bool operator==(const RunManifest&) const = default;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace containlab
