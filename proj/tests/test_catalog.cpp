#include <doctest.h>

#include <set>
#include <sstream>

#include "kstab/catalog.hpp"
#include "kstab/cli.hpp"

using kstab::CatalogEntry;
using kstab::CatalogParseError;
using kstab::ExpectedDestabilizer;
using kstab::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<CatalogEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return kstab::parse_catalog(in);
}

// Parses `text` expecting failure; returns the reported (line, column).
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const CatalogParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a parse error for:\n" << text);
  return {0, 0};
}

const char* kFamily42 =
    "[entry]\n"
    "name = family-4.2\n"
    "n = 3\n"
    "r = 2\n"
    "l = 2\n"
    "vol_v = 8\n";

}  // namespace

TEST_CASE("parse a well-formed catalog") {
  const auto entries = parse(
      "# leading comment\n"
      "\n"
      "[entry]\n"
      "name = family-3.9\n"
      "n = 3\n"
      "r = 3/2\n"
      "l = 2\n"
      "  vol_v =   9   \n"
      "expect_a = 9/52\n"
      "[entry]\n"
      "name=family-3.14\n"
      "n=3\n"
      "r=3\n"
      "l=3\n"
      "expect_destabilizer = infinity-section\n"
      "[entry]\n"
      "name = plain\n"
      "n = 2\n"
      "r = 5/4\n"
      "l = 0\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "family-3.9");
  CHECK(entries[0].r == q("3/2"));
  CHECK(entries[0].vol_v == Rational(9));
  CHECK(entries[0].line == 3);
  CHECK(std::get<Rational>(entries[0].expected) == q("9/52"));
  CHECK(std::get<ExpectedDestabilizer>(entries[1].expected) ==
        ExpectedDestabilizer::InfinitySection);
  CHECK(entries[1].vol_v == Rational(1));
  CHECK(std::holds_alternative<std::monostate>(entries[2].expected));
}

TEST_CASE("empty catalog") {
  CHECK(parse("").empty());
  CHECK(parse("# nothing here\n\n   \n").empty());
  const auto results = kstab::run_catalog({});
  CHECK(results.empty());
  const auto doc = kstab::report_json(results);
  CHECK(doc["entries"].empty());
  CHECK(doc["passed"] == 0);
  CHECK(doc["failed"] == 0);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(error_at("name = x\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("[entries]\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("[entry]\nname x\n") == std::pair<std::size_t, std::size_t>{2, 1});
  // value column points at the bad rational
  CHECK(error_at("[entry]\nname = a\nr = 3/0\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(error_at("[entry]\nname = a\n  r =  x\n") == std::pair<std::size_t, std::size_t>{3, 8});
  CHECK(error_at("[entry]\nname = a\nn = -3\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(error_at(std::string(kFamily42) + "r = 3\n") == std::pair<std::size_t, std::size_t>{7, 1});
  CHECK(error_at(std::string(kFamily42) + "colour = red\n") ==
        std::pair<std::size_t, std::size_t>{7, 1});
  CHECK(error_at(std::string(kFamily42) + "expect_a = 1/2\nexpect_destabilizer = either\n").first ==
        8);
  CHECK(error_at(std::string(kFamily42) + "expect_destabilizer = middle\n").first == 7);
  CHECK(error_at("[entry]\nname = a\nn = 3\nl = 2\n") == std::pair<std::size_t, std::size_t>{1, 1});
  // inadmissible parameters are reported at the entry header
  CHECK(error_at("# c\n[entry]\nname = a\nn = 3\nr = 2\nl = 3\n") ==
        std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("[entry]\nname = a\nn = 3\nr = 1\nl = 0\n").first == 1);

  try {
    (void)parse(std::string(kFamily42) + "colour = red\n");
  } catch (const CatalogParseError& e) {
    CHECK(std::string(e.what()) == "7:1: unknown key 'colour'");
  }
}

TEST_CASE("evaluate entries") {
  auto entries = parse(std::string(kFamily42) + "expect_a = 11/56\n");
  REQUIRE(entries.size() == 1);
  CHECK(kstab::evaluate_entry(entries[0]).pass);

  entries[0].expected = q("1/2");
  const auto wrong = kstab::evaluate_entry(entries[0]);
  CHECK_FALSE(wrong.pass);
  CHECK(wrong.mismatch == "11/56 ≠ 1/2");

  entries[0].expected = ExpectedDestabilizer::Either;
  CHECK_FALSE(kstab::evaluate_entry(entries[0]).pass);

  entries[0].expected = std::monostate{};
  CHECK(kstab::evaluate_entry(entries[0]).pass);

  CatalogEntry unstable{"3.14", 3, q("3"), q("3"), q("9"), ExpectedDestabilizer::ZeroSection, 1};
  const auto r = kstab::evaluate_entry(unstable);
  CHECK_FALSE(r.pass);
  CHECK(r.mismatch == "infinity-section ≠ zero-section");
  unstable.expected = ExpectedDestabilizer::Either;
  CHECK(kstab::evaluate_entry(unstable).pass);
  unstable.expected = q("1/5");
  CHECK_FALSE(kstab::evaluate_entry(unstable).pass);
}

TEST_CASE("shipped default catalog passes") {
  const auto entries = kstab::load_catalog(kstab::cli::default_catalog_path());
  CHECK(entries.size() >= 9);
  std::set<std::string> names;
  for (const auto& r : kstab::run_catalog(entries)) {
    CAPTURE(r.entry.name);
    CHECK(r.pass);
    CHECK(names.insert(r.entry.name).second);
  }
  for (const char* want : {"family-3.9", "family-3.19", "family-4.2", "quartic-fourfold",
                           "family-3.14", "bundle-p2", "bundle-p3"}) {
    CHECK(names.contains(want));
  }
}

TEST_CASE("results keep catalog order and are deterministic") {
  const auto entries = kstab::load_catalog(kstab::cli::default_catalog_path());
  const std::string first = kstab::report_json(kstab::run_catalog(entries)).dump();
  for (int i = 0; i < 3; ++i) {
    CHECK(kstab::report_json(kstab::run_catalog(entries)).dump() == first);
  }
  const auto results = kstab::run_catalog(entries);
  for (std::size_t i = 0; i < entries.size(); ++i) CHECK(results[i].entry.name == entries[i].name);
}

TEST_CASE("JSON rationals round-trip exactly") {
  const auto entries = kstab::load_catalog(kstab::cli::default_catalog_path());
  const auto doc = nlohmann::ordered_json::parse(kstab::report_json(kstab::run_catalog(entries)).dump());
  REQUIRE(doc["entries"].size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = doc["entries"][i];
    const auto rep = kstab::report(entries[i].construction());
    CHECK(Rational::parse(e["r"].get<std::string>()) == entries[i].r);
    CHECK(Rational::parse(e["l"].get<std::string>()) == entries[i].l);
    CHECK(Rational::parse(e["vol_y"].get<std::string>()) == rep.vol_y);
    CHECK(Rational::parse(e["s_v0"].get<std::string>()) == rep.s_v0);
    CHECK(Rational::parse(e["beta_vinf"].get<std::string>()) == rep.beta_vinf);
    const auto keys = std::vector<std::string>{"name", "n", "r", "l", "vol_v", "vol_y", "s_v0",
                                               "s_vinf", "beta_v0", "beta_vinf", "classification",
                                               "pass"};
    std::size_t k = 0;
    for (auto it = e.begin(); it != e.end(); ++it, ++k) CHECK(it.key() == keys.at(k));
  }
}
