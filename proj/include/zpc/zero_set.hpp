#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zpc/scan_report.hpp"

namespace zpc {

enum class ZeroSource { computed, ingested };

// Ordered positive ordinates gamma of zeta zeros (RH assumed: rho = 1/2 +
// i*gamma).  Immutable after construction; all query operations are pure and
// safe to share across threads.
//
// `precision` bounds the per-ordinate location error of the roots of Z that
// the set stores.  For computed sets this is the refinement tolerance of the
// bisection; the model error of the Z evaluator itself (see hardy_z) is a
// separate, documented limit.
struct ZeroSet {
    std::vector<double> gammas;  // strictly increasing, each > 13
    double t_max = 0.0;          // completeness certified up to this height
    ZeroSource source = ZeroSource::ingested;
    double precision = 1e-9;

    std::size_t size() const { return gammas.size(); }
};

// Count of ordinates <= T.  Requires 0 < T <= zs.t_max (height-exceeded
// otherwise: completeness beyond t_max is not certified).
std::int64_t n_of_t(const ZeroSet& zs, double T);

// Smooth main term of the Riemann-von Mangoldt count:
//   (T/2pi) log(T/2pi) - T/2pi,   T >= 3.
// The step count tracks n_formula(T) + 7/8 within O(log T).
double n_formula(double T);

// Checks the structural invariants (monotone, > 13, precision bounds) and
// the counting-formula consistency |N(T) - (n_formula(T) + 7/8)| <= 2 log T
// at every integer height and at t_max.  Throws DomainError on violation.
void validate_zero_set(const ZeroSet& zs);

// Unit-interval density rows (T, N(T+1)-N(T), log T, ratio) for integer T;
// empty unit intervals are skipped (they carry no density information).
// Requires zs.t_max >= 20.  Records the max ratio in the metadata.
ScanReport density_report(const ZeroSet& zs);

// --- text ingestion (published zero-table convention) ---------------------
// One decimal ordinate per line, ascending; '#' starts a comment line; blank
// lines ignored.  Exact duplicates are collapsed.  Throws ParseError with the
// offending line number, or DomainError on an ordering violation.
ZeroSet ingest_zeros(std::istream& in, double precision = 1e-9);

// --- binary cache ----------------------------------------------------------
// Magic "ZPC1", then u64 LE count, count f64 LE ordinates ascending, f64 LE
// t_max, f64 LE precision.  Round-trips bit-exactly.
void write_cache(const ZeroSet& zs, std::ostream& out);
ZeroSet read_cache(std::istream& in);

}  // namespace zpc
