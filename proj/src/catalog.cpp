#include "kstab/catalog.hpp"

#include <fstream>
#include <future>
#include <set>

namespace kstab {

namespace {

constexpr std::string_view kWhitespace = " \t\r";

std::size_t first_non_space(std::string_view s, std::size_t from = 0) {
  const auto pos = s.find_first_not_of(kWhitespace, from);
  return pos == std::string_view::npos ? s.size() : pos;
}

std::string_view trim_right(std::string_view s) {
  const auto pos = s.find_last_not_of(kWhitespace);
  return pos == std::string_view::npos ? std::string_view() : s.substr(0, pos + 1);
}

ExpectedDestabilizer parse_destabilizer(std::string_view v) {
  if (v == "either") return ExpectedDestabilizer::Either;
  switch (parse_horizontal_divisor(v)) {
    case HorizontalDivisor::ZeroSection: return ExpectedDestabilizer::ZeroSection;
    case HorizontalDivisor::InfinitySection: return ExpectedDestabilizer::InfinitySection;
  }
  return ExpectedDestabilizer::Either;
}

unsigned parse_dimension(std::string_view v) {
  if (v.empty() || v.size() > 6 || v.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a small nonnegative integer: '" + std::string(v) + "'");
  }
  return static_cast<unsigned>(std::stoul(std::string(v)));
}

struct PendingEntry {
  CatalogEntry entry;
  std::set<std::string, std::less<>> seen;
};

void finish(std::optional<PendingEntry>& pending, std::vector<CatalogEntry>& out) {
  if (!pending) return;
  const CatalogEntry& e = pending->entry;
  for (const char* key : {"name", "n", "r", "l"}) {
    if (!pending->seen.contains(key)) {
      throw CatalogParseError(e.line, 1, "entry is missing required key '" + std::string(key) + "'");
    }
  }
  try {
    (void)e.construction();
  } catch (const std::invalid_argument& ex) {
    throw CatalogParseError(e.line, 1, "entry '" + e.name + "': " + ex.what());
  }
  out.push_back(e);
  pending.reset();
}

}  // namespace

CatalogParseError::CatalogParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::optional<PendingEntry> pending;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_right(raw);
    const std::size_t start = first_non_space(line);
    if (start == line.size() || line[start] == '#') continue;

    if (line.substr(start) == "[entry]") {
      finish(pending, out);
      pending.emplace();
      pending->entry.line = line_no;
      continue;
    }
    if (line[start] == '[') {
      throw CatalogParseError(line_no, start + 1, "unknown section header (expected [entry])");
    }
    if (!pending) {
      throw CatalogParseError(line_no, start + 1, "key outside of an [entry] block");
    }

    const auto eq = line.find('=', start);
    if (eq == std::string_view::npos) {
      throw CatalogParseError(line_no, start + 1, "expected 'key = value'");
    }
    const std::string_view key = trim_right(line.substr(start, eq - start));
    const std::size_t value_col = first_non_space(line, eq + 1);
    const std::string_view value = line.substr(value_col);
    if (value.empty()) throw CatalogParseError(line_no, eq + 2, "empty value for '" + std::string(key) + "'");
    if (pending->seen.contains(key)) {
      throw CatalogParseError(line_no, start + 1, "duplicate key '" + std::string(key) + "'");
    }

    CatalogEntry& e = pending->entry;
    try {
      if (key == "name") {
        e.name = std::string(value);
      } else if (key == "n") {
        e.n = parse_dimension(value);
      } else if (key == "r") {
        e.r = Rational::parse(value);
      } else if (key == "l") {
        e.l = Rational::parse(value);
      } else if (key == "vol_v") {
        e.vol_v = Rational::parse(value);
      } else if (key == "expect_a") {
        if (pending->seen.contains("expect_destabilizer")) {
          throw std::invalid_argument("expect_a and expect_destabilizer are exclusive");
        }
        e.expected = Rational::parse(value);
      } else if (key == "expect_destabilizer") {
        if (pending->seen.contains("expect_a")) {
          throw std::invalid_argument("expect_a and expect_destabilizer are exclusive");
        }
        e.expected = parse_destabilizer(value);
      } else {
        throw CatalogParseError(line_no, start + 1, "unknown key '" + std::string(key) + "'");
      }
    } catch (const std::invalid_argument& ex) {
      throw CatalogParseError(line_no, value_col + 1, ex.what());
    }
    pending->seen.emplace(key);
  }
  finish(pending, out);
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog '" + path + "'");
  return parse_catalog(in);
}

EntryResult evaluate_entry(const CatalogEntry& entry) {
  EntryResult result{entry, report(entry.construction()), true, {}};
  const Classification& got = result.report.classification;
  if (const auto* want_a = std::get_if<Rational>(&entry.expected)) {
    const auto* pair = std::get_if<ReducesToPair>(&got);
    if (pair == nullptr) {
      result.pass = false;
      result.mismatch = "expected reduces-to-pair a=" + want_a->str() + ", got " + describe(got);
    } else if (pair->a != *want_a) {
      result.pass = false;
      result.mismatch = pair->a.str() + " ≠ " + want_a->str();
    }
  } else if (const auto* want_d = std::get_if<ExpectedDestabilizer>(&entry.expected)) {
    const auto* unstable = std::get_if<KUnstable>(&got);
    if (unstable == nullptr) {
      result.pass = false;
      result.mismatch = "expected k-unstable, got " + describe(got);
    } else if (*want_d != ExpectedDestabilizer::Either) {
      const HorizontalDivisor want = *want_d == ExpectedDestabilizer::ZeroSection
                                         ? HorizontalDivisor::ZeroSection
                                         : HorizontalDivisor::InfinitySection;
      if (unstable->destabilizer != want) {
        result.pass = false;
        result.mismatch = std::string(to_string(unstable->destabilizer)) + " ≠ " +
                          std::string(to_string(want));
      }
    }
  }
  return result;
}

std::vector<EntryResult> run_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<std::future<EntryResult>> jobs;
  jobs.reserve(entries.size());
  for (const CatalogEntry& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e] { return evaluate_entry(e); }));
  }
  std::vector<EntryResult> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

std::string describe(const Classification& c) {
  if (const auto* pair = std::get_if<ReducesToPair>(&c)) {
    return "reduces-to-pair a=" + pair->a.str();
  }
  const auto& u = std::get<KUnstable>(c);
  return "k-unstable destabilizer=" + std::string(to_string(u.destabilizer)) +
         " beta=" + u.beta.str();
}

nlohmann::ordered_json classification_json(const Classification& c) {
  nlohmann::ordered_json j;
  if (const auto* pair = std::get_if<ReducesToPair>(&c)) {
    j["kind"] = "reduces-to-pair";
    j["a"] = pair->a.str();
  } else {
    const auto& u = std::get<KUnstable>(c);
    j["kind"] = "k-unstable";
    j["destabilizer"] = std::string(to_string(u.destabilizer));
    j["beta"] = u.beta.str();
  }
  return j;
}

nlohmann::ordered_json entry_json(const std::string& name, const Construction& c,
                                  const InvariantReport& report, bool pass) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["n"] = c.n();
  j["r"] = c.r().str();
  j["l"] = c.l().str();
  j["vol_v"] = c.vol_v().str();
  j["vol_y"] = report.vol_y.str();
  j["s_v0"] = report.s_v0.str();
  j["s_vinf"] = report.s_vinf.str();
  j["beta_v0"] = report.beta_v0.str();
  j["beta_vinf"] = report.beta_vinf.str();
  j["classification"] = classification_json(report.classification);
  j["pass"] = pass;
  return j;
}

nlohmann::ordered_json report_json(const std::vector<EntryResult>& results) {
  nlohmann::ordered_json doc;
  doc["entries"] = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    doc["entries"].push_back(entry_json(r.entry.name, r.entry.construction(), r.report, r.pass));
    passed += r.pass ? 1 : 0;
  }
  doc["passed"] = passed;
  doc["failed"] = results.size() - passed;
  return doc;
}

}  // namespace kstab
