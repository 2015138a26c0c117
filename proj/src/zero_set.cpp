#include "zpc/zero_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "zpc/errors.hpp"

namespace zpc {

std::int64_t n_of_t(const ZeroSet& zs, double T) {
    if (!(T > 0.0)) throw DomainError("n_of_t: T must be positive");
    if (T > zs.t_max)
        throw DomainError("n_of_t: height " + std::to_string(T) +
                          " exceeds certified t_max " + std::to_string(zs.t_max));
    return std::upper_bound(zs.gammas.begin(), zs.gammas.end(), T) - zs.gammas.begin();
}

double n_formula(double T) {
    if (!(T >= 3.0)) throw DomainError("n_formula: requires T >= 3");
    const double r = T / (2.0 * std::numbers::pi);
    return r * std::log(r) - r;
}

void validate_zero_set(const ZeroSet& zs) {
    double prev = 13.0;
    for (double g : zs.gammas) {
        if (!(g > prev))
            throw DomainError("ZeroSet: ordinates must be strictly increasing and > 13");
        prev = g;
    }
    if (!(zs.precision > 0.0)) throw DomainError("ZeroSet: precision must be positive");
    if (zs.source == ZeroSource::computed && zs.precision > 1e-6)
        throw DomainError("ZeroSet: computed sets require precision <= 1e-6");
    if (!zs.gammas.empty() && zs.gammas.back() > zs.t_max)
        throw DomainError("ZeroSet: ordinate above t_max");
    // Counting-formula consistency at integer heights and at t_max.
    auto check_at = [&zs](double T) {
        const auto count = std::upper_bound(zs.gammas.begin(), zs.gammas.end(), T) -
                           zs.gammas.begin();
        const double expected = n_formula(T) + 7.0 / 8.0;
        if (std::abs(static_cast<double>(count) - expected) > 2.0 * std::log(T))
            throw DomainError("ZeroSet: count at T=" + std::to_string(T) +
                              " inconsistent with the counting formula");
    };
    if (zs.t_max >= 15.0) {
        for (double T = 15.0; T <= std::floor(zs.t_max); T += 1.0) check_at(T);
        check_at(zs.t_max);
    }
}

ScanReport density_report(const ZeroSet& zs) {
    if (!(zs.t_max >= 20.0)) throw DomainError("density_report: requires t_max >= 20");
    ScanReport rep;
    rep.columns = {"T", "count", "log_T", "ratio"};
    double max_ratio = 0.0;
    std::int64_t max_ratio_T = 0;
    const auto limit = static_cast<std::int64_t>(std::floor(zs.t_max)) - 1;
    for (std::int64_t T = 1; T <= limit; ++T) {
        const auto lo = std::upper_bound(zs.gammas.begin(), zs.gammas.end(),
                                         static_cast<double>(T));
        const auto hi = std::upper_bound(zs.gammas.begin(), zs.gammas.end(),
                                         static_cast<double>(T + 1));
        const auto count = static_cast<std::int64_t>(hi - lo);
        if (count == 0) continue;
        const double logT = std::log(static_cast<double>(T));
        const double ratio = static_cast<double>(count) / logT;
        if (ratio > max_ratio) {
            max_ratio = ratio;
            max_ratio_T = T;
        }
        rep.add_row({std::to_string(T), std::to_string(count), format_g17(logT),
                     format_g17(ratio)});
    }
    rep.metadata["max_ratio"] = format_g17(max_ratio);
    rep.metadata["max_ratio_T"] = std::to_string(max_ratio_T);
    rep.metadata["t_max"] = format_g17(zs.t_max);
    return rep;
}

ZeroSet ingest_zeros(std::istream& in, double precision) {
    ZeroSet zs;
    zs.source = ZeroSource::ingested;
    zs.precision = precision;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const char* begin = line.c_str() + first;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(v) || v <= 0.0)
            throw ParseError("ingest_zeros: not a positive decimal: '" + line + "'",
                             line_no);
        while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
        if (*end != '\0')
            throw ParseError("ingest_zeros: trailing garbage: '" + line + "'", line_no);
        if (!zs.gammas.empty()) {
            if (v < zs.gammas.back())
                throw DomainError("ingest_zeros: ordering violation at line " +
                                  std::to_string(line_no));
            if (v == zs.gammas.back()) continue;  // collapse exact duplicates
        }
        zs.gammas.push_back(v);
    }
    zs.t_max = zs.gammas.empty() ? 0.0 : zs.gammas.back();
    return zs;
}

namespace {

void put_u64_le(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void put_f64_le(std::ostream& out, double v) {
    put_u64_le(out, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t get_u64_le(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw DomainError("zero cache: truncated file");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

double get_f64_le(std::istream& in) { return std::bit_cast<double>(get_u64_le(in)); }

}  // namespace

void write_cache(const ZeroSet& zs, std::ostream& out) {
    out.write("ZPC1", 4);
    put_u64_le(out, zs.gammas.size());
    for (double g : zs.gammas) put_f64_le(out, g);
    put_f64_le(out, zs.t_max);
    put_f64_le(out, zs.precision);
}

ZeroSet read_cache(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "ZPC1", 4) != 0)
        throw DomainError("zero cache: bad magic (expected ZPC1)");
    const std::uint64_t n = get_u64_le(in);
    ZeroSet zs;
    zs.source = ZeroSource::ingested;
    zs.gammas.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) zs.gammas[i] = get_f64_le(in);
    zs.t_max = get_f64_le(in);
    zs.precision = get_f64_le(in);
    for (std::uint64_t i = 1; i < n; ++i)
        if (!(zs.gammas[i] > zs.gammas[i - 1]))
            throw DomainError("zero cache: ordinates not strictly increasing");
    return zs;
}

}  // namespace zpc
