#include "fincot/types.hpp"

namespace fincot {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::seed: return "SEED";
        case Provenance::q2a: return "Q2A";
        case Provenance::a2q: return "A2Q";
        case Provenance::t2q: return "T2Q";
    }
    return "SEED";
}

Result<Provenance> provenance_from_string(std::string_view s) {
    if (s == "SEED") return Provenance::seed;
    if (s == "Q2A") return Provenance::q2a;
    if (s == "A2Q") return Provenance::a2q;
    if (s == "T2Q") return Provenance::t2q;
    return make_error(Errc::parse_error, "unknown provenance '" + std::string(s) + "'");
}

std::string_view to_string(SegmentKind k) {
    switch (k) {
        case SegmentKind::original: return "original";
        case SegmentKind::reflection: return "reflection";
        case SegmentKind::rewrite: return "rewrite";
    }
    return "original";
}

Result<SegmentKind> segment_kind_from_string(std::string_view s) {
    if (s == "original") return SegmentKind::original;
    if (s == "reflection") return SegmentKind::reflection;
    if (s == "rewrite") return SegmentKind::rewrite;
    return make_error(Errc::parse_error, "unknown segment kind '" + std::string(s) + "'");
}

std::string CoTTrace::joined() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) out += '\n';
        out += segments[i].text;
    }
    return out;
}

std::string_view to_string(Ability a) {
    switch (a) {
        case Ability::language: return "language";
        case Ability::reasoning: return "reasoning";
        case Ability::knowledge: return "knowledge";
        case Ability::mathematics: return "mathematics";
        case Ability::code: return "code";
        case Ability::instruction_following: return "instruction_following";
        case Ability::agents: return "agents";
    }
    return "knowledge";
}

Result<Ability> ability_from_string(std::string_view s) {
    if (s == "language") return Ability::language;
    if (s == "reasoning") return Ability::reasoning;
    if (s == "knowledge") return Ability::knowledge;
    if (s == "mathematics") return Ability::mathematics;
    if (s == "code") return Ability::code;
    if (s == "instruction_following") return Ability::instruction_following;
    if (s == "agents") return Ability::agents;
    return make_error(Errc::parse_error, "unknown ability '" + std::string(s) + "'");
}

}  // namespace fincot
