#include "zpc/scan_report.hpp"

#include <json.hpp>

namespace zpc {

void ScanReport::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

std::string ScanReport::metadata_json() const {
    nlohmann::json j(metadata);
    return j.dump();
}

}  // namespace zpc
