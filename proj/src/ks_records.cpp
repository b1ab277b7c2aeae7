#include "cybord/ks_records.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace cybord::toric {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument(std::string("expected integer for ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

bool blank_or_comment(std::string_view s) {
  for (char c : s) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

KSRecord parse_ks_header(const std::string& line) {
  auto tok = split_ws(line);
  if (tok.size() < 3) throw std::invalid_argument("header too short");
  KSRecord r;
  std::int64_t dim = to_int(tok[0], "ambient dimension");
  std::int64_t count = to_int(tok[1], "vertex count");
  if (dim < 1 || dim > 64) throw std::invalid_argument("ambient dimension out of range");
  if (count < 1 || count > 100000) throw std::invalid_argument("vertex count out of range");
  r.ambient_dim = static_cast<int>(dim);
  r.vertex_count = static_cast<int>(count);

  std::size_t i = 2;
  auto point_pair = [&](std::string_view prefix, const char* what) {
    auto first = to_int(tok[i].substr(prefix.size()), what);
    if (i + 1 >= tok.size()) throw std::invalid_argument(std::string("missing second field of ") + what);
    auto second = to_int(tok[i + 1], what);
    i += 2;
    return std::make_pair(first, second);
  };
  if (i < tok.size() && tok[i].starts_with("M:")) r.m_points = point_pair("M:", "M");
  if (i < tok.size() && tok[i].starts_with("N:")) r.n_points = point_pair("N:", "N");
  if (i >= tok.size() || !tok[i].starts_with("H:")) throw std::invalid_argument("missing H field");
  {
    auto body = tok[i].substr(2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("H field must be H:<h11>,<h21>");
    r.h11 = to_int(body.substr(0, comma), "h11");
    r.h21 = to_int(body.substr(comma + 1), "h21");
    if (r.h11 < 1 || r.h21 < 0) throw std::invalid_argument("Hodge numbers out of range");
    ++i;
  }
  if (i < tok.size()) {
    auto t = tok[i];
    if (t.size() < 3 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("malformed chi field");
    r.chi = to_int(t.substr(1, t.size() - 2), "chi");
    ++i;
  }
  if (i != tok.size()) throw std::invalid_argument("unexpected token '" + std::string(tok[i]) + "'");
  return r;
}

bool KSReader::read_line(std::string& line) {
  if (pending_) {
    line = std::move(*pending_);
    pending_.reset();
    return true;
  }
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  return true;
}

std::optional<KSItem> KSReader::next() {
  std::string line;
  for (;;) {
    if (!read_line(line)) return std::nullopt;
    if (blank_or_comment(line)) continue;
    const std::size_t header_line = line_no_;
    KSRecord rec;
    try {
      rec = parse_ks_header(line);
    } catch (const std::invalid_argument& e) {
      // After a bad header, stay quiet until the next line that parses.
      if (resyncing_) continue;
      resyncing_ = true;
      return KSParseError{header_line, e.what(), line};
    }
    resyncing_ = false;
    rec.line = header_line;

    for (int row = 0; row < rec.ambient_dim; ++row) {
      std::string body;
      if (!read_line(body)) {
        return KSParseError{line_no_, "unexpected end of input inside vertex block", ""};
      }
      std::vector<std::int64_t> values;
      try {
        for (auto tok : split_ws(body)) values.push_back(to_int(tok, "vertex coordinate"));
      } catch (const std::invalid_argument&) {
        values.clear();
      }
      if (static_cast<int>(values.size()) != rec.vertex_count) {
        pending_ = body;
        resyncing_ = true;
        return KSParseError{line_no_, "vertex block row " + std::to_string(row + 1) + ": expected " +
                                          std::to_string(rec.vertex_count) + " integers",
                            body};
      }
      rec.matrix.push_back(std::move(values));
    }

    if (!rec.consistent() && strict_) {
      return KSParseError{header_line,
                          "chi = " + std::to_string(*rec.chi) + " but 2(h11 - h21) = " +
                              std::to_string(2 * (rec.h11 - rec.h21)),
                          line};
    }
    return rec;
  }
}

std::string serialize_ks(const KSRecord& r) {
  std::ostringstream out;
  out << r.ambient_dim << ' ' << r.vertex_count;
  if (r.m_points) out << "  M:" << r.m_points->first << ' ' << r.m_points->second;
  if (r.n_points) out << " N:" << r.n_points->first << ' ' << r.n_points->second;
  out << " H:" << r.h11 << ',' << r.h21;
  if (r.chi) out << " [" << *r.chi << ']';
  out << '\n';
  for (const auto& row : r.matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_ndjson(const KSRecord& r) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = r.ambient_dim;
  j["vertex_count"] = r.vertex_count;
  j["h11"] = r.h11;
  j["h21"] = r.h21;
  j["chi"] = r.chi ? nlohmann::ordered_json(*r.chi) : nlohmann::ordered_json(nullptr);
  j["consistent"] = r.consistent();
  return j.dump();
}

bool has_hodge_difference(const KSRecord& r, int target) { return r.h11 - r.h21 == target; }

std::vector<KSRecord> filter_chi(std::span<const KSRecord> records, int target) {
  std::vector<KSRecord> out;
  for (const auto& r : records) {
    if (has_hodge_difference(r, target)) out.push_back(r);
  }
  return out;
}

void RangeReport::add(const KSRecord& r) {
  for (RangeSide* side : {&plus, &minus}) {
    if (!has_hodge_difference(r, side->target)) continue;
    ++side->count;
    side->achieved.insert(r.h11);
    if (r.h11 < side->claimed_min || r.h11 > side->claimed_max) side->flagged.emplace_back(r.line, r.h11);
  }
}

RangeReport h11_range_report(std::span<const KSRecord> records) {
  RangeReport report;
  for (const auto& r : records) report.add(r);
  return report;
}

}  // namespace cybord::toric
