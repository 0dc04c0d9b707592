#include "fincot/validate.hpp"

#include <unordered_set>

#include "fincot/text.hpp"

namespace fincot {
namespace {

void append(std::vector<Violation>& out, std::string field, std::string message) {
    out.push_back(Violation{std::move(field), std::move(message)});
}

}  // namespace

std::vector<Violation> validate_qa(const QAPair& qa) {
    std::vector<Violation> v;
    if (qa.id.empty()) append(v, "qa.id", "empty id");
    if (text::is_blank(qa.question)) append(v, "qa.question", "empty after whitespace normalization");
    if (text::is_blank(qa.gold_answer)) append(v, "qa.gold_answer", "empty after whitespace normalization");
    return v;
}

std::vector<Violation> validate_trace(const CoTTrace& trace) {
    std::vector<Violation> v;
    for (std::size_t i = 0; i < trace.segments.size(); ++i) {
        if (trace.segments[i].text.empty()) {
            append(v, "trace.segments[" + std::to_string(i) + "]", "empty segment text");
        }
    }
    if (trace.segments.size() > 1) {
        if (trace.segments[0].kind != SegmentKind::original) {
            append(v, "trace.segments[0]", "first segment must be original");
        }
        for (std::size_t i = 1; i < trace.segments.size(); ++i) {
            SegmentKind want = (i % 2 == 1) ? SegmentKind::reflection : SegmentKind::rewrite;
            if (trace.segments[i].kind != want) {
                append(v, "trace.segments", "alternation broken at index " + std::to_string(i));
            }
        }
    }
    return v;
}

std::vector<Violation> validate_solution(const Solution& solution) {
    std::vector<Violation> v = validate_trace(solution.trace);
    if (solution.final_answer.empty()) append(v, "solution.final_answer", "empty final answer");
    return v;
}

std::vector<Violation> validate_metadata(const MetadataRecord& metadata) {
    std::vector<Violation> v;
    if (metadata.content.empty()) append(v, "metadata.content", "empty content label");
    if (metadata.complexity < 1 || metadata.complexity > 10) {
        append(v, "metadata.complexity", "complexity " + std::to_string(metadata.complexity) + " outside [1,10]");
    }
    if (metadata.quality < 1 || metadata.quality > 10) {
        append(v, "metadata.quality", "quality " + std::to_string(metadata.quality) + " outside [1,10]");
    }
    if (metadata.language.empty()) append(v, "metadata.language", "empty language code");
    if (metadata.task_path.empty()) {
        append(v, "metadata.task_path", "task path must have depth >= 1");
    }
    for (std::size_t i = 0; i < metadata.task_path.size(); ++i) {
        if (text::is_blank(metadata.task_path[i])) {
            append(v, "metadata.task_path[" + std::to_string(i) + "]", "empty task label");
        }
    }
    return v;
}

std::vector<Violation> validate_sample(const Sample& sample) {
    std::vector<Violation> v = validate_qa(sample.qa);
    for (auto& x : validate_solution(sample.solution)) v.push_back(std::move(x));
    if (sample.metadata.has_value()) {
        for (auto& x : validate_metadata(*sample.metadata)) v.push_back(std::move(x));
        if (sample.metadata->quality >= 1 && sample.metadata->quality <= 10 &&
            sample.metadata->quality < kQualityAdmissionThreshold) {
            append(v, "metadata.quality",
                   "quality below admission threshold " + std::to_string(kQualityAdmissionThreshold));
        }
    } else {
        append(v, "metadata", "absent");
    }
    return v;
}

std::vector<Violation> validate_unique_ids(std::span<const Sample> samples) {
    std::vector<Violation> v;
    std::unordered_set<std::string> seen;
    for (const auto& s : samples) {
        if (!seen.insert(s.qa.id).second) {
            append(v, "qa.id", "duplicate id '" + s.qa.id + "'");
        }
    }
    return v;
}

}  // namespace fincot
