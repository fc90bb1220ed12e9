#include "kk/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace kk {

namespace {

std::string u64(std::uint64_t v) { return std::to_string(v); }

Json optional_int(const std::optional<ExactInt>& v) {
  return v ? Json(v->str()) : Json(nullptr);
}

}  // namespace

Json to_json(const Params& p) {
  Json j;
  j["type"] = "params";
  j["k"] = u64(p.k);
  j["m"] = u64(p.m);
  j["w-size"] = u64(p.w_size);
  j["d"] = u64(p.d);
  if (p.prime_power) {
    Json w;
    w["base"] = u64(p.prime_power->base);
    w["exponent"] = u64(p.prime_power->exponent);
    j["prime-power"] = std::move(w);
  } else {
    j["prime-power"] = nullptr;
  }
  return j;
}

Json to_json(const QReport& r) {
  Json j;
  j["type"] = "q-report";
  j["k"] = u64(r.k);
  j["q"] = to_fraction(r.q);
  j["decimal"] = r.decimal;
  Json formulas;
  for (std::size_t i = 0; i < kQFormulaNames.size(); ++i) {
    formulas[kQFormulaNames[i]] = to_fraction(r.formula_values[i]);
  }
  j["formulas"] = std::move(formulas);
  j["lower"] = to_fraction(r.lower);
  j["upper"] = to_fraction(r.upper);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const RangeReport& r) {
  Json j;
  j["type"] = "range-report";
  j["k"] = u64(r.k);
  j["d"] = u64(r.d);
  j["q"] = to_fraction(r.q);
  j["is-counterexample"] = r.is_counterexample;
  j["d-low"] = optional_int(r.d_low);
  j["d-high"] = optional_int(r.d_high);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const CoverPlan& plan) {
  Json j;
  j["type"] = "cover-plan";
  j["target-dim"] = u64(plan.target_dim);
  j["chosen-k"] = plan.chosen_k ? Json(u64(*plan.chosen_k)) : Json(nullptr);
  if (plan.certifying_range) {
    Json range;
    range["low"] = plan.certifying_range->first.str();
    range["high"] = plan.certifying_range->second.str();
    j["certifying-range"] = std::move(range);
  } else {
    j["certifying-range"] = nullptr;
  }
  return j;
}

Json to_json(const ChainReport& r) {
  Json j;
  j["type"] = "chain-report";
  j["k-max"] = u64(r.k_max);
  j["start-dim"] = u64(r.start_dim);
  Json ks = Json::array();
  for (std::uint64_t k : r.ks) ks.push_back(u64(k));
  j["ks"] = std::move(ks);
  j["pass"] = r.pass;
  Json links = Json::array();
  for (const ChainLink& link : r.links) {
    Json o;
    o["k"] = u64(link.k);
    o["next-k"] = u64(link.next_k);
    o["next-low"] = link.next_low.str();
    o["certificate"] = link.certificate;
    o["certified-high"] = link.certified_high.str();
    o["ok"] = link.ok;
    links.push_back(std::move(o));
  }
  j["links"] = std::move(links);
  Json ratios = Json::array();
  for (const DoublingRatioCheck& check : r.ratio_checks) {
    Json o;
    o["k"] = u64(check.k);
    o["increased"] = check.increased;
    ratios.push_back(std::move(o));
  }
  j["ratio-checks"] = std::move(ratios);
  j["summary"] = r.summary;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["type"] = "verification-report";
  j["suite"] = r.suite;
  j["k"] = u64(r.k);
  j["pass"] = r.pass;
  Json counters;
  for (const auto& [name, value] : r.counters) counters[name] = value;
  j["counters"] = std::move(counters);
  j["witnesses"] = r.witnesses;
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const std::vector<SpectrumCount>& counts) {
  Json arr = Json::array();
  for (const SpectrumCount& c : counts) {
    Json o;
    o["dist-sq"] = u64(c.dist_sq);
    o["count"] = u64(c.count);
    arr.push_back(std::move(o));
  }
  return arr;
}

Json spectrum_to_json(std::uint64_t k, const std::vector<SpectrumEntry>& entries) {
  Json j;
  j["type"] = "spectrum";
  j["k"] = u64(k);
  Json arr = Json::array();
  ExactInt total = 0;
  for (const SpectrumEntry& e : entries) {
    Json o;
    o["p-low"] = u64(e.p_low);
    o["p-high"] = u64(e.p_high);
    o["dist-sq"] = u64(e.dist_sq);
    o["count"] = e.count.str();
    arr.push_back(std::move(o));
    total += e.count;
  }
  j["entries"] = std::move(arr);
  j["total"] = total.str();
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

std::size_t hex_width(std::uint64_t w_size) {
  return static_cast<std::size_t>((w_size + 3) / 4);
}

std::string encode_point(const CrossVector& v) {
  const std::size_t width = hex_width(v.bit_count());
  std::vector<unsigned> nibble(width, 0);
  for (std::size_t b = 0; b < v.bit_count(); ++b) {
    if (v.test(b)) nibble[b / 4] |= 1u << (b % 4);
  }
  std::string line(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    line[width - 1 - i] = kHexDigits[nibble[i]];
  }
  return line;
}

CrossVector decode_point(const std::string& line, std::uint64_t w_size,
                         std::size_t lineno) {
  const std::string where = "line " + std::to_string(lineno);
  const std::size_t width = hex_width(w_size);
  if (line.size() != width) {
    throw PointsetError(where + ": expected " + std::to_string(width) +
                        " hex digits, got " + std::to_string(line.size()));
  }
  CrossVector v(w_size);
  for (std::size_t i = 0; i < width; ++i) {
    const char c = line[width - 1 - i];
    unsigned value = 0;
    if (c >= '0' && c <= '9') {
      value = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      value = static_cast<unsigned>(c - 'a') + 10;
    } else {
      throw PointsetError(where + ": invalid hex digit '" + std::string(1, c) + "'");
    }
    for (unsigned bit = 0; bit < 4; ++bit) {
      if (!((value >> bit) & 1)) continue;
      const std::size_t pos = i * 4 + bit;
      if (pos >= w_size) {
        throw PointsetError(where + ": bit " + std::to_string(pos) +
                            " set beyond wSize=" + std::to_string(w_size));
      }
      v.set(pos);
    }
  }
  return v;
}

std::uint64_t parse_header_field(const std::string& token, const std::string& prefix) {
  if (token.size() <= prefix.size() || token.compare(0, prefix.size(), prefix) != 0) {
    throw PointsetError("malformed header field, expected " + prefix + "<integer>");
  }
  const char* first = token.data() + prefix.size();
  const char* last = token.data() + token.size();
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw PointsetError("malformed header field " + token);
  }
  return out;
}

}  // namespace

void write_pointset(std::ostream& os, const PointSet& ps) {
  if (ps.blocks.size() != ps.points.size()) {
    throw std::invalid_argument("write_pointset: blocks/points size mismatch");
  }
  os << "kk-pointset v1 k=" << ps.params.k << " m=" << ps.params.m
     << " w=" << ps.params.w_size << " n=" << ps.points.size() << "\n";
  for (const CrossVector& v : ps.points) os << encode_point(v) << "\n";
}

void write_pointset_file(const std::string& path, const PointSet& ps) {
  std::ofstream os(path);
  if (!os) throw PointsetError("cannot open for writing: " + path);
  write_pointset(os, ps);
  os.flush();
  if (!os) throw PointsetError("write failed: " + path);
}

PointSet read_pointset(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw PointsetError("missing header line");
  std::istringstream tokens(header);
  std::vector<std::string> fields;
  for (std::string t; tokens >> t;) fields.push_back(t);
  if (fields.size() != 6 || fields[0] != "kk-pointset" || fields[1] != "v1") {
    throw PointsetError("bad header, expected \"kk-pointset v1 k=.. m=.. w=.. n=..\"");
  }
  const std::uint64_t k = parse_header_field(fields[2], "k=");
  const std::uint64_t m = parse_header_field(fields[3], "m=");
  const std::uint64_t w = parse_header_field(fields[4], "w=");
  const std::uint64_t n = parse_header_field(fields[5], "n=");

  Params params;
  try {
    params = make_params(k);
  } catch (const std::exception& e) {
    throw PointsetError(std::string("bad k in header: ") + e.what());
  }
  if (params.m > 64) throw PointsetError("k too large for block enumeration");
  if (m != params.m) {
    throw PointsetError("header m=" + std::to_string(m) + " inconsistent, want 4k=" +
                        std::to_string(params.m));
  }
  if (w != params.w_size) {
    throw PointsetError("header w=" + std::to_string(w) + " inconsistent, want C(m,2)=" +
                        std::to_string(params.w_size));
  }
  const ExactInt n_expect = div_exact(binomial(params.m, 2 * k), 2);
  if (ExactInt(n) != n_expect) {
    throw PointsetError("header n=" + std::to_string(n) + " != C(m,2k)/2 = " +
                        n_expect.str());
  }

  PointSet ps;
  ps.params = params;
  ps.blocks.reserve(n);
  ps.points.reserve(n);
  const std::uint64_t point_size = 4 * k * k;
  Block prev{0};
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::size_t lineno = static_cast<std::size_t>(i) + 2;
    std::string line;
    if (!std::getline(is, line)) {
      throw PointsetError("unexpected end of file: got " + std::to_string(i) +
                          " of " + std::to_string(n) + " points");
    }
    CrossVector v = decode_point(line, w, lineno);
    if (v.popcount() != point_size) {
      throw PointsetError("line " + std::to_string(lineno) + ": popcount " +
                          std::to_string(v.popcount()) + " != 4k^2 = " +
                          std::to_string(point_size));
    }
    // The canonical block behind a cross set: element 1 is inside, and x is
    // inside exactly when the pair {1,x} is absent.
    Block b{1};
    for (unsigned x = 2; x <= params.m; ++x) {
      if (!v.test(pair_index(1, x, params))) b.bits |= std::uint64_t{1} << (x - 1);
    }
    if (block_size(b) != 2 * k || !(cross_set(b, params) == v)) {
      throw PointsetError("line " + std::to_string(lineno) +
                          ": bits are not the cross set of any canonical block");
    }
    if (i > 0 && !(prev < b)) {
      throw PointsetError("line " + std::to_string(lineno) +
                          ": points out of enumeration order");
    }
    prev = b;
    ps.blocks.push_back(b);
    ps.points.push_back(std::move(v));
  }
  for (std::string extra; std::getline(is, extra);) {
    if (!extra.empty()) {
      throw PointsetError("trailing data after the last point: \"" + extra + "\"");
    }
  }
  return ps;
}

PointSet read_pointset_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw PointsetError("cannot open: " + path);
  return read_pointset(is);
}

}  // namespace kk
