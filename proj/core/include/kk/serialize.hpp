#pragma once

// Stable machine-readable output: a JSON rendering of every report type and
// the kk-pointset v1 text format. All integers and rationals are decimal
// strings (rationals as "numerator/denominator", the "/" always present);
// booleans stay booleans. Rendering is deterministic: insertion-ordered
// keys, no timestamps, elapsed times never serialized.

#include "kk/bounds.hpp"
#include "kk/construction.hpp"
#include "kk/oracle.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kk {

using Json = nlohmann::ordered_json;

Json to_json(const Params& p);
Json to_json(const QReport& r);
Json to_json(const RangeReport& r);
Json to_json(const CoverPlan& plan);
Json to_json(const ChainReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const std::vector<SpectrumCount>& counts);

// Analytic spectrum with its class structure and the pair total.
Json spectrum_to_json(std::uint64_t k, const std::vector<SpectrumEntry>& entries);

// dump(2) plus a trailing newline; byte-identical across runs.
std::string render_json(const Json& j);

// Thrown for any malformed or inconsistent kk-pointset v1 input.
class PointsetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// kk-pointset v1: header "kk-pointset v1 k=<k> m=<m> w=<wSize> n=<count>",
// then one line per point in enumeration order, lowercase hex, the
// least-significant hex digit carrying bit 0, zero-padded to ceil(w/4)
// digits.
void write_pointset(std::ostream& os, const PointSet& ps);
void write_pointset_file(const std::string& path, const PointSet& ps);

// Re-reads and fully validates: header consistency with the derived
// parameters, per-line popcount = 4k^2, count = C(m,2k)/2, and that every
// line is the cross set of the canonical block it determines, in ascending
// enumeration order.
PointSet read_pointset(std::istream& is);
PointSet read_pointset_file(const std::string& path);

}  // namespace kk
