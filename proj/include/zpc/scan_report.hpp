#pragma once

#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace zpc {

// 17 significant digits: round-trips any double.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Tabular scan output plus a single metadata record describing the run
// (configuration, zero-set provenance, recorded constants).  Cells are
// preformatted so CSV emission is byte-stable for identical inputs.
struct ScanReport {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    // Flat key/value metadata; emitted as one JSON line with sorted keys and
    // no timestamps, so identical runs give identical bytes.
    std::map<std::string, std::string> metadata;

    void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

    void write_csv(std::ostream& out) const;
    std::string metadata_json() const;
};

}  // namespace zpc
