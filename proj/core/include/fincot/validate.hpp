#pragma once

#include <span>
#include <string>
#include <vector>

#include "fincot/types.hpp"

namespace fincot {

struct Violation {
    std::string field;
    std::string message;

    bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate_qa(const QAPair& qa);
std::vector<Violation> validate_trace(const CoTTrace& trace);
std::vector<Violation> validate_solution(const Solution& solution);
std::vector<Violation> validate_metadata(const MetadataRecord& metadata);

// Pure and deterministic; returns every invariant violation, including
// the dataset admission rule (quality >= 8). Empty result means ok.
std::vector<Violation> validate_sample(const Sample& sample);

// Dataset-level rule: ids must be unique.
std::vector<Violation> validate_unique_ids(std::span<const Sample> samples);

}  // namespace fincot
