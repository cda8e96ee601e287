#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specjump/error.hpp"
#include "specjump/multiplier.hpp"
#include "specjump/parse.hpp"
#include "specjump/resolution_json.hpp"
#include "specjump/resolver.hpp"
#include "specjump/spectrum.hpp"

namespace specjump::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json };

struct RunConfiguration {
  std::string command;
  std::optional<std::string> poly;
  std::optional<std::string> resdata;
  Format format = Format::Table;
  int max_blowups = 64;
  int max_factor_degree = kDefaultMaxFactorDegree;
  unsigned oracle_cutoff = 64;
  bool no_oracle = false;
};

// Single-line JSON with ", " and ": " separators.
void write_json(std::ostream& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ", ";
        first = false;
        out << Json(key).dump() << ": ";
        write_json(out, value);
      }
      out << '}';
      break;
    }
    case Json::value_t::array: {
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out << ", ";
        write_json(out, j[i]);
      }
      out << ']';
      break;
    }
    default:
      out << j.dump();
  }
}

void emit(std::ostream& out, const Json& j) {
  write_json(out, j);
  out << '\n';
}

// Left-aligned columns separated by two spaces.
void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

ResolutionData load_input(const RunConfiguration& config) {
  if (config.poly) {
    ResolverLimits limits;
    limits.max_blowups = config.max_blowups;
    limits.max_factor_degree = config.max_factor_degree;
    return resolve_germ(parse_poly(*config.poly), limits);
  }
  return load_resolution(*config.resdata);
}

int cmd_resolve(const RunConfiguration& config, const ResolutionData& data, std::ostream& out) {
  if (config.format == Format::Json) {
    out << resolution_to_json(data);
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"component", "kind", "m", "k", "self", "cluster"}};
  for (const auto& c : data.components()) {
    rows.push_back({c.id, std::string(to_string(c.kind)), std::to_string(c.m), std::to_string(c.k),
                    c.self_intersection ? std::to_string(*c.self_intersection) : "-",
                    std::to_string(c.cluster_degree)});
  }
  write_table(out, rows);
  out << '\n';
  std::vector<std::vector<std::string>> meets{{"a", "b", "points"}};
  for (const auto& [pair, points] : data.intersections()) {
    meets.push_back({pair.first, pair.second, std::to_string(points)});
  }
  write_table(out, meets);
  return kOk;
}

int cmd_lct(const RunConfiguration& config, const ResolutionData& data, std::ostream& out) {
  const Rational value = lct(data);
  if (config.format == Format::Json) {
    emit(out, Json{{"lct", value.str()}});
  } else {
    out << value << '\n';
  }
  return kOk;
}

int cmd_jumps(const RunConfiguration& config, const ResolutionData& data, std::ostream& out) {
  const auto candidates = candidate_alphas(data);
  if (config.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& alpha : candidates) {
      rows.push_back(Json{{"alpha", alpha.str()}, {"n", inner_jump_multiplicity(data, alpha)}});
    }
    emit(out, Json{{"lct", lct(data).str()}, {"candidates", std::move(rows)}});
    return kOk;
  }
  out << "lct " << lct(data) << "\n\n";
  std::vector<std::vector<std::string>> rows{{"alpha", "n_inner"}};
  for (const auto& alpha : candidates) {
    rows.push_back({alpha.str(), std::to_string(inner_jump_multiplicity(data, alpha))});
  }
  write_table(out, rows);
  return kOk;
}

int cmd_spectrum(const RunConfiguration& config, const ResolutionData& data, std::ostream& out) {
  const SpectrumTable table = spectrum_table(data);
  if (config.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& e : table.entries()) rows.push_back(Json{{"alpha", e.alpha.str()}, {"n", e.n}});
    emit(out, Json{{"spectrum", std::move(rows)}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"alpha", "n"}};
  for (const auto& e : table.entries()) rows.push_back({e.alpha.str(), std::to_string(e.n)});
  write_table(out, rows);
  return kOk;
}

int cmd_verify(const RunConfiguration& config, const ResolutionData& data, std::ostream& out) {
  VerifyOptions options;
  options.use_oracle = !config.no_oracle;
  options.oracle.max_cutoff = config.oracle_cutoff;
  const VerifyReport report = verify_theorem(data, options);

  if (config.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
      Json row{{"alpha", r.alpha.str()},
               {"inner", r.inner},
               {"stratum", r.stratum},
               {"stratum_open", r.stratum_expanded}};
      row["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
      if (!r.oracle_note.empty()) row["oracle_note"] = r.oracle_note;
      row["pass"] = r.pass;
      rows.push_back(std::move(row));
    }
    emit(out, Json{{"rows", std::move(rows)},
                   {"twist_convention", report.twist_convention},
                   {"passed", report.passed}});
  } else {
    std::vector<std::vector<std::string>> rows{
        {"alpha", "inner", "stratum", "stratum_open", "oracle", "status"}};
    for (const auto& r : report.rows) {
      rows.push_back({r.alpha.str(), std::to_string(r.inner), std::to_string(r.stratum),
                      std::to_string(r.stratum_expanded),
                      r.oracle ? std::to_string(*r.oracle) : r.oracle_note,
                      r.pass ? "pass" : "FAIL"});
    }
    write_table(out, rows);
    out << "\ntwist: " << report.twist_convention << '\n';
    out << "result: " << (report.passed ? "PASS" : "FAIL") << '\n';
  }
  return report.passed ? kOk : kMismatch;
}

void report_error(const RunConfiguration& config, std::string_view kind, const std::string& message,
                  std::ostream& out, std::ostream& err) {
  if (config.format == Format::Json) {
    emit(out, Json{{"error", Json{{"kind", kind}, {"message", message}}}});
  } else {
    err << "error (" << kind << "): " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfiguration config;
  CLI::App app{"Multiplier ideals and Hodge spectrum of plane-curve germs", "specjump"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
  const std::vector<std::pair<std::string, std::string>> commands{
      {"resolve", "Embedded resolution data of the germ"},
      {"lct", "Log canonical threshold"},
      {"jumps", "Candidate jumping numbers with inner jump multiplicities"},
      {"spectrum", "Hodge spectrum on (0,1] from the stratified sum"},
      {"verify", "Cross-check both formulas and the colength oracle"}};
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    auto* poly = sub->add_option("--poly", config.poly, "Germ f(x, y) at the origin");
    auto* resdata = sub->add_option("--resdata", config.resdata, "Resolution JSON file");
    poly->excludes(resdata);
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--max-blowups", config.max_blowups, "Blow-up cap")->check(CLI::PositiveNumber);
    sub->add_option("--max-factor-degree", config.max_factor_degree, "Largest factored degree")
        ->check(CLI::PositiveNumber);
    sub->add_option("--oracle-cutoff", config.oracle_cutoff, "Largest degree bound in the oracle")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-oracle", config.no_oracle, "Skip the colength oracle");
    sub->callback([&config, name = name] { config.command = name; });
  }

  // Pre-scan so parse failures can honour --format json.
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--format" && args[i + 1] == "json") config.format = Format::Json;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(config, "UsageError", e.what(), out, err);
    return kInputError;
  }
  if (!config.poly && !config.resdata) {
    report_error(config, "UsageError", "one of --poly or --resdata is required", out, err);
    return kInputError;
  }

  try {
    const ResolutionData data = load_input(config);
    if (config.command == "resolve") return cmd_resolve(config, data, out);
    if (config.command == "lct") return cmd_lct(config, data, out);
    if (config.command == "jumps") return cmd_jumps(config, data, out);
    if (config.command == "spectrum") return cmd_spectrum(config, data, out);
    return cmd_verify(config, data, out);
  } catch (const Error& e) {
    report_error(config, to_string(e.kind()), e.what(), out, err);
    return kInputError;
  }
}

}  // namespace specjump::cli
