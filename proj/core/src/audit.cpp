#include "fincot/audit.hpp"

#include <nlohmann/json.hpp>

#include "fincot/util/jsonl.hpp"

namespace fincot {

std::string audit_to_json_line(const AuditRecord& record) {
    nlohmann::ordered_json j;
    j["item_id"] = record.item_id;
    j["op"] = record.op;
    j["stage"] = record.stage;
    j["cause"] = record.cause;
    if (!record.detail.empty()) {
        nlohmann::ordered_json d;
        for (const auto& [k, v] : record.detail) d[k] = v;
        j["detail"] = d;
    }
    return j.dump();
}

void AuditLog::add(AuditRecord record) {
    std::lock_guard lock(mutex_);
    records_.push_back(std::move(record));
}

void AuditLog::add_all(const std::vector<AuditRecord>& records) {
    std::lock_guard lock(mutex_);
    records_.insert(records_.end(), records.begin(), records.end());
}

std::vector<AuditRecord> AuditLog::records() const {
    std::lock_guard lock(mutex_);
    return records_;
}

std::size_t AuditLog::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

Result<void> AuditLog::write(const std::filesystem::path& path) const {
    std::string content;
    {
        std::lock_guard lock(mutex_);
        for (const auto& r : records_) {
            content += audit_to_json_line(r);
            content += '\n';
        }
    }
    return util::write_file_atomic(path, content);
}

}  // namespace fincot
