#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fincot/error.hpp"

namespace fincot {

// One skipped/failed item. Serialized as a JSON Lines audit entry.
struct AuditRecord {
    std::string item_id;
    std::string op;      // e.g. "a2q", "sample_cots"
    std::string stage;   // e.g. "question_generation", "verification"
    std::string cause;
    std::map<std::string, std::string> detail;

    bool operator==(const AuditRecord&) const = default;
};

std::string audit_to_json_line(const AuditRecord& record);

// Append-only JSONL sink; safe to share across workers.
class AuditLog {
public:
    AuditLog() = default;

    void add(AuditRecord record);
    void add_all(const std::vector<AuditRecord>& records);

    std::vector<AuditRecord> records() const;
    std::size_t size() const;

    Result<void> write(const std::filesystem::path& path) const;

private:
    mutable std::mutex mutex_;
    std::vector<AuditRecord> records_;
};

}  // namespace fincot
