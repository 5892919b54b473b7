#include "kstab/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "kstab/catalog.hpp"
#include "kstab/invariants.hpp"
#include "kstab/refinement.hpp"

namespace kstab::cli {

namespace {

struct Options {
  bool json = false;
  bool quiet = false;

  unsigned dim = 0;
  std::string index;
  std::string l;
  std::string vol_v = "1";

  std::string catalog_path;

  std::string base;
  std::vector<unsigned> ms;
};

// Thrown for bad user input; mapped to kInvalidInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(flag + ": " + e.what());
  }
}

Construction make_construction(unsigned n, const Rational& r, const Rational& l,
                               const Rational& vol_v) {
  try {
    return Construction(n, r, l, vol_v);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

HilbertFunction parse_base(const std::string& spec) {
  if (spec == "p1xp1") return hilbert_p1xp1();
  // ps:<s>:<d>
  unsigned s = 0;
  unsigned d = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "ps:%u:%u%c", &s, &d, &tail) != 2 || s == 0 || d == 0) {
    throw InputError("--base: expected ps:<s>:<d> with s, d >= 1, or p1xp1; got '" + spec + "'");
  }
  return hilbert_projective_space(s, d);
}

int cmd_coeff(const Options& o, std::ostream& out) {
  const Rational r = parse_flag("--index", o.index);
  Rational a;
  try {
    a = coefficient_a(o.dim, r);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.json) {
    nlohmann::ordered_json j;
    j["n"] = o.dim;
    j["r"] = r.str();
    j["a"] = a.str();
    j["decimal"] = a.to_decimal(12);
    out << j.dump(2) << '\n';
  } else if (!o.quiet) {
    out << a.str() << "  (" << a.to_decimal(12) << ")\n";
  }
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Construction c = make_construction(o.dim, parse_flag("--index", o.index),
                                           parse_flag("--l", o.l), parse_flag("--vol-v", o.vol_v));
  const InvariantReport rep = report(c);
  if (o.json) {
    out << entry_json("query", c, rep, true).dump(2) << '\n';
  } else if (!o.quiet) {
    out << "construction    " << c << '\n'
        << "vol_y           " << rep.vol_y << '\n'
        << "s_v0            " << rep.s_v0 << '\n'
        << "s_vinf          " << rep.s_vinf << '\n'
        << "beta_v0         " << rep.beta_v0 << '\n'
        << "beta_vinf       " << rep.beta_vinf << '\n'
        << "classification  " << describe(rep.classification) << '\n';
  }
  return kOk;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string path = o.catalog_path.empty() ? default_catalog_path() : o.catalog_path;
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(path);
  } catch (const CatalogParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::vector<EntryResult> results = run_catalog(entries);
  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const EntryResult& r) { return r.pass; });

  if (o.json) {
    out << report_json(results).dump(2) << '\n';
  } else {
    for (const EntryResult& r : results) {
      if (o.quiet && r.pass) continue;
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << r.entry.name << ' '
          << describe(r.report.classification);
      if (!r.pass) out << "  mismatch: " << r.mismatch;
      out << '\n';
    }
    if (!o.quiet) {
      const auto passed = std::count_if(results.begin(), results.end(),
                                        [](const EntryResult& r) { return r.pass; });
      out << passed << "/" << results.size() << " entries passed\n";
    }
  }
  if (!all_pass && o.json) {
    for (const EntryResult& r : results) {
      if (!r.pass) err << "mismatch in " << r.entry.name << ": " << r.mismatch << '\n';
    }
  }
  return all_pass ? kOk : kMismatch;
}

int cmd_refine(const Options& o, std::ostream& out) {
  const Construction c =
      make_construction(o.dim, parse_flag("--index", o.index), Rational(2), Rational(1));
  const HilbertFunction h = parse_base(o.base);
  std::vector<ConvergenceRow> rows;
  try {
    rows = convergence_table(c, h, o.ms);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const Rational limit = coefficient_a(c.n(), c.r());
  if (o.json) {
    nlohmann::ordered_json j;
    j["n"] = c.n();
    j["r"] = c.r().str();
    j["base"] = h.description;
    j["limit"] = limit.str();
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json jr;
      jr["m"] = row.m;
      jr["a_m"] = row.a_m.str();
      jr["error"] = row.error.str();
      j["rows"].push_back(jr);
    }
    out << j.dump(2) << '\n';
  } else if (!o.quiet) {
    out << "# base " << h.description << ", limit a(" << c.n() << ", " << c.r() << ") = " << limit
        << '\n';
    for (const auto& row : rows) {
      std::ostringstream err_text;
      err_text << std::scientific << std::setprecision(6) << row.error.to_double();
      out << row.m << ", " << row.a_m << ", " << err_text.str() << '\n';
    }
  }
  return kOk;
}

}  // namespace

std::string default_catalog_path() {
#ifdef KSTAB_DEFAULT_CATALOG
  return KSTAB_DEFAULT_CATALOG;
#else
  return "data/default_catalog.kv";
#endif
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact K-stability invariants of blow-ups of P^1-bundles over Fano bases", "kstab"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit structured JSON output");
  app.add_flag("--quiet", o.quiet, "Suppress non-essential text output");

  auto* coeff = app.add_subcommand("coeff", "Print the pair coefficient a(n, r)");
  coeff->add_option("--dim", o.dim, "Dimension n of Y")->required();
  coeff->add_option("--index", o.index, "Index r as p/q")->required();

  auto* inv = app.add_subcommand("invariants", "Volumes, S and beta invariants, classification");
  inv->add_option("--dim", o.dim, "Dimension n of Y")->required();
  inv->add_option("--index", o.index, "Index r as p/q")->required();
  inv->add_option("--l", o.l, "B ~ l L, as p/q")->required();
  inv->add_option("--vol-v", o.vol_v, "(-K_V)^{n-1} as p/q")->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "Run a catalog of constructions with expectations");
  cat->add_option("path", o.catalog_path, "Catalog file (default: shipped catalog)");

  auto* refine = app.add_subcommand("refine", "Finite-m refinement coefficients a_m at l = 2");
  refine->add_option("--dim", o.dim, "Dimension n of Y")->required();
  refine->add_option("--index", o.index, "Index r as p/q")->required();
  refine->add_option("--base", o.base, "ps:<s>:<d> or p1xp1")->required();
  refine->add_option("--m", o.ms, "Comma-separated list of m")->required()->delimiter(',');

  for (auto* sub : {coeff, inv, cat, refine}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (coeff->parsed()) return cmd_coeff(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (cat->parsed()) return cmd_catalog(o, out, err);
    if (refine->parsed()) return cmd_refine(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace kstab::cli
