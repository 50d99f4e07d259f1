#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace witt {

struct StageRecord {
    std::string name;
    std::string status = "skipped"; // pass | fail | skipped
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<std::pair<std::string, std::string>> digests;
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::string> axioms_used;
    std::string failure; // first violation, when status == fail
    long long wall_ms = 0;
};

// Machine-readable trace of the uniqueness pipeline: one record per stage,
// overall verdict pass iff every stage passed.
struct Certificate {
    std::string toolchain;
    std::vector<std::string> notes;
    std::vector<StageRecord> stages;

    bool pass() const;
    const StageRecord* stage(const std::string& name) const;
};

struct PipelineConfig {
    unsigned threads = 1;
    int only_stage = 0; // 0 = all stages, otherwise run just that stage (1..7)
    std::string cache_dir; // empty = no caching
    bool corrupt_tensor_hook = false; // test hook: damages the stage-2 comparison
};

Certificate run_pipeline(const PipelineConfig& config = {});

enum class ReportFormat { Text, Json };

// Text: computed tables side by side with the published values. Json: stable
// schema, byte-reproducible for identical certificates.
std::string render_report(const Certificate& c, ReportFormat format);

// JSON round-trip for `witt-uniq report <certificate.json>`.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

} // namespace witt
