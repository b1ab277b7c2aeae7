// Streaming reader for reflexive-polytope list records in the header format
//
//   <ambient_dim> <vertex_count> [M:<int> <int>] [N:<int> <int>] H:<h11>,<h21> [[<chi>]]
//
// followed by ambient_dim rows of vertex_count integers (vertex matrix,
// one vertex per column). Blank lines and lines starting with '#' are
// ignored between records.
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cybord::toric {

struct KSRecord {
  int ambient_dim = 0;
  int vertex_count = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> m_points;  // M:<points> <vertices>
  std::optional<std::pair<std::int64_t, std::int64_t>> n_points;  // N:<points> <vertices>
  std::int64_t h11 = 0;
  std::int64_t h21 = 0;
  std::optional<std::int64_t> chi;
  std::vector<std::vector<std::int64_t>> matrix;
  std::size_t line = 0;  // header line, 1-based; not part of record identity

  /// chi absent, or chi = 2 (h11 - h21).
  bool consistent() const { return !chi || *chi == 2 * (h11 - h21); }

  friend bool operator==(const KSRecord& a, const KSRecord& b) {
    return a.ambient_dim == b.ambient_dim && a.vertex_count == b.vertex_count &&
           a.m_points == b.m_points && a.n_points == b.n_points && a.h11 == b.h11 && a.h21 == b.h21 &&
           a.chi == b.chi && a.matrix == b.matrix;
  }
};

struct KSParseError {
  std::size_t line = 0;
  std::string message;
  std::string text;
};

using KSItem = std::variant<KSRecord, KSParseError>;

class KSReader {
 public:
  /// In strict mode a chi-inconsistent record becomes a KSParseError;
  /// otherwise it is returned with consistent() == false.
  explicit KSReader(std::istream& in, bool strict = false) : in_(in), strict_(strict) {}

  /// Next record or positioned error; nullopt at end of input.
  std::optional<KSItem> next();

 private:
  bool read_line(std::string& line);

  std::istream& in_;
  bool strict_;
  std::size_t line_no_ = 0;
  std::optional<std::string> pending_;
  bool resyncing_ = false;
};

/// Parses a single header line; throws std::invalid_argument with a
/// message on malformed input.
KSRecord parse_ks_header(const std::string& line);

/// Header plus matrix rows, each terminated by '\n'.
std::string serialize_ks(const KSRecord& r);

/// One-line JSON object: ambient_dim, vertex_count, h11, h21, chi, consistent.
std::string to_ndjson(const KSRecord& r);

bool has_hodge_difference(const KSRecord& r, int target);

std::vector<KSRecord> filter_chi(std::span<const KSRecord> records, int target);

struct RangeSide {
  int target = 0;
  std::int64_t claimed_min = 0;
  std::int64_t claimed_max = 0;
  std::set<std::int64_t> achieved;
  std::vector<std::pair<std::size_t, std::int64_t>> flagged;  // (line, h11)
  std::size_t count = 0;
};

struct RangeReport {
  RangeSide plus{+1, 16, 90, {}, {}, 0};
  RangeSide minus{-1, 15, 89, {}, {}, 0};

  void add(const KSRecord& r);
  bool clean() const { return plus.flagged.empty() && minus.flagged.empty(); }
};

RangeReport h11_range_report(std::span<const KSRecord> records);

}  // namespace cybord::toric
