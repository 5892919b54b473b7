#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kstab/invariants.hpp"
#include <json.hpp>

namespace kstab {

/// Expected destabilizer; `Either` accepts whichever horizontal divisor the
/// computation finds, as long as the construction is K-unstable.
enum class ExpectedDestabilizer { ZeroSection, InfinitySection, Either };

using Expectation = std::variant<std::monostate, Rational, ExpectedDestabilizer>;

struct CatalogEntry {
  std::string name;
  unsigned n = 0;
  Rational r;
  Rational l;
  Rational vol_v{1};
  Expectation expected;
  std::size_t line = 0;  // line of the opening [entry] header

  Construction construction() const { return {n, r, l, vol_v}; }
};

class CatalogParseError : public std::runtime_error {
 public:
  CatalogParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the key-value catalog format (see docs/catalog-format.md).
/// Throws CatalogParseError with 1-based line and column.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::string& path);

struct EntryResult {
  CatalogEntry entry;
  InvariantReport report;
  bool pass = true;
  std::string mismatch;  // empty when pass
};

/// Evaluates every entry (concurrently); results keep catalog order.
std::vector<EntryResult> run_catalog(const std::vector<CatalogEntry>& entries);

EntryResult evaluate_entry(const CatalogEntry& entry);

/// {kind, a?, destabilizer?, beta?}
nlohmann::ordered_json classification_json(const Classification& c);

/// {name, n, r, l, vol_v, vol_y, s_v0, s_vinf, beta_v0, beta_vinf,
///  classification, pass}
nlohmann::ordered_json entry_json(const std::string& name, const Construction& c,
                                  const InvariantReport& report, bool pass);

nlohmann::ordered_json report_json(const std::vector<EntryResult>& results);

/// One-line human summary, e.g. "reduces-to-pair a=11/56".
std::string describe(const Classification& c);

}  // namespace kstab
