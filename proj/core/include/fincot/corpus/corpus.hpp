#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fincot/error.hpp"
#include "fincot/types.hpp"

namespace fincot::corpus {

enum class SourceFormat { jsonl, dsv };

Result<SourceFormat> source_format_from_string(std::string_view s);

struct SourceSpec {
    std::string name;
    std::string path;
    SourceFormat format = SourceFormat::jsonl;
    // JSONL: top-level keys. DSV: header names, or 0-based column
    // indices written as digits.
    std::string question_field = "question";
    std::string answer_field = "answer";
    char delimiter = '\t';
    bool has_header = true;
    std::string language = "en";
};

struct DropRecord {
    std::string source;
    std::size_t line;  // 1-based input line
    std::string reason;
};

struct IngestResult {
    std::vector<QAPair> pairs;
    std::vector<DropRecord> dropped;
    std::size_t rows_read = 0;
};

// Reads a seed source into validated QAPairs with ids
// "<source>:<counter>" and provenance SEED. Blank question/answer rows
// are dropped and recorded, not fatal.
Result<IngestResult> ingest(const SourceSpec& spec);

struct DedupeResult {
    std::vector<QAPair> kept;
    std::vector<QAPair> dropped;
};

// Keeps the first occurrence per normalized-question key, in input
// order. Answers are ignored for the key.
DedupeResult dedupe(const std::vector<QAPair>& pairs);

struct DecontaminationOptions {
    std::size_t ngram = 8;
    double threshold = 0.8;
    // Questions whose CJK character ratio reaches this use code-point
    // n-grams instead of word n-grams.
    double cjk_ratio_threshold = 0.3;
};

struct RemovalRecord {
    std::string id;
    std::size_t test_index;
    double overlap;
    std::string rule;  // "exact" or "ngram"
};

struct DecontaminationResult {
    std::vector<QAPair> kept;
    std::vector<QAPair> removed;
    std::vector<RemovalRecord> records;
};

// Removes pairs whose normalized question exactly matches a test
// question or whose n-gram overlap ratio with any test question
// reaches the threshold. Overlap ratio = |grams(q) ∩ grams(t)| /
// |grams(q)| over distinct grams.
Result<DecontaminationResult> decontaminate(const std::vector<QAPair>& pairs,
                                            const std::vector<std::string>& test_questions,
                                            const DecontaminationOptions& options = {});

struct SourceRow {
    std::string source;
    double avg_question_len = 0.0;
    double avg_reasoning_len = 0.0;
    double avg_answer_len = 0.0;
    std::size_t sample_count = 0;
    double proportion = 0.0;
};

struct CorpusStats {
    std::vector<SourceRow> rows;  // first-appearance order of sources
    std::size_t total_count = 0;
};

using LengthFn = std::function<double(std::string_view)>;

// Default length unit: Unicode code points.
LengthFn default_length_fn();

Result<CorpusStats> corpus_stats(const std::vector<Sample>& samples, LengthFn length_fn = {});

}  // namespace fincot::corpus
