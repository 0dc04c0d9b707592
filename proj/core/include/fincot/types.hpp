#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincot/error.hpp"

namespace fincot {

// Samples with a quality score below this never enter the final dataset.
inline constexpr int kQualityAdmissionThreshold = 8;

enum class Provenance { seed, q2a, a2q, t2q };

std::string_view to_string(Provenance p);
Result<Provenance> provenance_from_string(std::string_view s);

enum class SegmentKind { original, reflection, rewrite };

std::string_view to_string(SegmentKind k);
Result<SegmentKind> segment_kind_from_string(std::string_view s);

struct TraceSegment {
    SegmentKind kind;
    std::string text;

    bool operator==(const TraceSegment&) const = default;
};

// Ordered reasoning segments. After the leading original segment the
// kinds alternate reflection, rewrite, reflection, rewrite, ...
struct CoTTrace {
    std::vector<TraceSegment> segments;

    bool empty() const { return segments.empty(); }

    // Segment texts joined with newlines; the unit reasoning-length
    // statistics are computed over.
    std::string joined() const;

    bool operator==(const CoTTrace&) const = default;
};

struct QAPair {
    std::string id;
    std::string question;
    std::string gold_answer;
    std::string source;
    Provenance provenance = Provenance::seed;
    std::string language = "en";

    bool operator==(const QAPair&) const = default;
};

struct Solution {
    CoTTrace trace;
    std::string final_answer;

    bool operator==(const Solution&) const = default;
};

enum class Ability {
    language,
    reasoning,
    knowledge,
    mathematics,
    code,
    instruction_following,
    agents,
};

std::string_view to_string(Ability a);
Result<Ability> ability_from_string(std::string_view s);

struct MetadataRecord {
    std::string content;
    Ability ability = Ability::knowledge;
    int complexity = 1;
    int quality = 1;
    std::string language = "en";
    std::vector<std::string> task_path;

    bool operator==(const MetadataRecord&) const = default;
};

// The unit of the emitted dataset. Metadata is absent until the
// annotation stage runs.
struct Sample {
    QAPair qa;
    Solution solution;
    std::optional<MetadataRecord> metadata;

    bool operator==(const Sample&) const = default;
};

}  // namespace fincot
