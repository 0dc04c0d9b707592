#include "fincot/error.hpp"

namespace fincot {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::exhausted: return "EXHAUSTED";
        case Errc::malformed: return "MALFORMED";
        case Errc::timeout: return "TIMEOUT";
        case Errc::unreadable_source: return "UNREADABLE_SOURCE";
        case Errc::unknown_format: return "UNKNOWN_FORMAT";
        case Errc::empty_input: return "EMPTY_INPUT";
        case Errc::all_failed: return "ALL_FAILED";
        case Errc::no_correct_candidate: return "NO_CORRECT_CANDIDATE";
        case Errc::verification_unavailable: return "VERIFICATION_UNAVAILABLE";
        case Errc::malformed_annotation: return "MALFORMED_ANNOTATION";
        case Errc::invalid_sample: return "INVALID_SAMPLE";
        case Errc::parse_error: return "PARSE_ERROR";
        case Errc::io_error: return "IO_ERROR";
        case Errc::insufficient: return "INSUFFICIENT";
        case Errc::judge_unavailable: return "JUDGE_UNAVAILABLE";
        case Errc::config_invalid: return "CONFIG_INVALID";
        case Errc::stage_failed: return "STAGE_FAILED";
        case Errc::template_error: return "TEMPLATE_ERROR";
        case Errc::precondition_violated: return "PRECONDITION_VIOLATED";
    }
    return "UNKNOWN";
}

}  // namespace fincot
