#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covtype/bounds.hpp"
#include "covtype/complex.hpp"
#include "covtype/contractibility.hpp"
#include "covtype/cover.hpp"
#include "covtype/error.hpp"
#include "covtype/gallery.hpp"
#include "covtype/homology.hpp"
#include "covtype/json_io.hpp"
#include "covtype/search.hpp"

namespace covtype::cli {

using nlohmann::json;

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 64;
constexpr int data = 65;
constexpr int internal = 70;
}  // namespace exit_code

/// Bad flags, unknown subcommands and unparsable JSON.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline void emit(std::ostream& out, json payload) {
  payload["schema"] = 1;
  out << payload.dump(2) << '\n';
}

// Parses "key=value" with a nonnegative integer value.
inline std::uint64_t keyed_value(const std::string& text, const std::string& key) {
  const auto prefix = key + "=";
  if (text.rfind(prefix, 0) != 0) throw UsageError("expected " + key + "=<n>, got '" + text + "'");
  const auto digits = text.substr(prefix.size());
  if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("expected a nonnegative integer in '" + text + "'");
  }
  return std::stoull(digits);
}

// Wall-clock budget: the smaller of the flag and COVERTYPE_BUDGET_MS.
inline std::optional<std::chrono::milliseconds> budget(std::optional<long long> flag_ms) {
  std::optional<long long> ms = flag_ms;
  if (const char* env = std::getenv("COVERTYPE_BUDGET_MS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 0) throw UsageError("COVERTYPE_BUDGET_MS must be a nonnegative integer");
    ms = ms ? std::min(*ms, v) : v;
  }
  if (ms && *ms < 0) throw UsageError("--budget-ms must be nonnegative");
  if (!ms) return std::nullopt;
  return std::chrono::milliseconds(*ms);
}

inline ContractibilityOptions oracle_options(std::optional<std::chrono::milliseconds> b) {
  ContractibilityOptions o;
  if (b) o.deadline = std::chrono::steady_clock::now() + *b;
  return o;
}

inline json index_names(const Cover& c, const std::vector<std::size_t>& idx) {
  json a = json::array();
  for (auto i : idx) a.push_back(c[i].name);
  return a;
}

inline json entry_to_json(const GalleryEntry& e) {
  json j;
  j["name"] = e.name;
  j["complex"] = json_io::to_json(e.complex);
  j["cover"] = e.cover ? json_io::to_json(*e.cover) : json(nullptr);
  json ex;
  ex["betti_Q"] = e.expected.betti_q;
  ex["betti_Z2"] = e.expected.betti_z2;
  ex["cover_size"] = e.expected.cover_size;
  ex["verdict"] = to_string(e.expected.verdict);
  j["expected"] = ex;
  return j;
}

}  // namespace detail

/// Runs one subcommand; args excludes the program name. Returns the exit
/// code: 0 success, 1 and 2 verdict classes for verify-cover and search,
/// 64 usage errors, 65 invalid data, 70 internal errors.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good covers and covering type of finite simplicial complexes", "covtype"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input = "-";
  std::string field_text = "Q";
  unsigned jobs = 1;
  std::optional<long long> budget_ms;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON file, '-' for standard input")->capture_default_str();
  };

  auto* homology = app.add_subcommand("homology", "Betti numbers, Euler characteristic and H^1 cup products");
  add_input(homology);
  homology->add_option("--field", field_text, "Q or Zp")->capture_default_str();

  auto* cup = app.add_subcommand("cup", "Cup product table H^1 x H^1 -> H^2");
  add_input(cup);
  cup->add_option("--field", field_text, "Q or Zp")->capture_default_str();

  std::string surface_text;
  std::string bouquet_text;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the covering type");
  add_input(bounds);
  auto* surface_opt = bounds->add_option("--surface", surface_text, "closed surface: g=<genus> or q=<genus>");
  auto* bouquet_opt = bounds->add_option("--bouquet", bouquet_text, "bouquet of circles: h=<count>");
  surface_opt->excludes(bouquet_opt);

  auto* verify = app.add_subcommand("verify-cover", "Check that a cover is good");
  add_input(verify);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--budget-ms", budget_ms, "wall-clock budget for contractibility checks");

  auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a cover");
  add_input(nerve_cmd);

  std::string gallery_name;
  bool gallery_list = false;
  auto* gallery = app.add_subcommand("gallery", "Named complexes with good covers");
  gallery->add_option("name", gallery_name, "sphere-m, bouquet-h, torus-k7, rp2 or klein8");
  gallery->add_flag("--list", gallery_list, "list the available names");

  std::size_t max_size = 4;
  std::string universe_text;
  auto* search = app.add_subcommand("search", "Search for a smallest good cover of a fixed complex");
  add_input(search);
  search->add_option("--max-size", max_size, "largest cover size tried")->check(CLI::PositiveNumber)->capture_default_str();
  search->add_option("--universe", universe_text, "all, induced or facets");
  search->add_option("--budget-ms", budget_ms, "wall-clock budget");

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args[0];
    if (!known) {
      err << "covtype: unknown subcommand '" << args[0] << "'\n";
      return exit_code::usage;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "covtype: " << e.what() << '\n';
    return exit_code::usage;
  }

  try {
    if (homology->parsed()) {
      const auto field = FieldTag::parse(field_text);
      const auto k = json_io::extract_complex(detail::read_document(input, in));
      json j;
      j["field"] = field.name();
      j["betti"] = betti_numbers(k, field);
      j["euler"] = euler_characteristic(k);
      j["cup_h1_nonzero"] = cup_h1_nonzero(k, field);
      detail::emit(out, j);
      return exit_code::ok;
    }
    if (cup->parsed()) {
      const auto field = FieldTag::parse(field_text);
      const auto k = json_io::extract_complex(detail::read_document(input, in));
      const auto r = cup_product_h1(k, field);
      json j;
      j["field"] = field.name();
      j["h1_rank"] = r.h1_basis.size();
      j["h2_rank"] = r.h2_basis.size();
      j["nonzero"] = r.nonzero;
      json table = json::array();
      for (const auto& row : r.table) {
        json jr = json::array();
        for (const auto& entry : row) {
          json coords = json::array();
          for (const auto& c : entry) coords.push_back(c.str());
          jr.push_back(coords);
        }
        table.push_back(jr);
      }
      j["table"] = table;
      detail::emit(out, j);
      return exit_code::ok;
    }
    if (bounds->parsed()) {
      BoundReport r;
      json j;
      if (!surface_text.empty()) {
        const bool orientable = surface_text.rfind("g=", 0) == 0;
        const auto g = detail::keyed_value(surface_text, orientable ? "g" : "q");
        const auto s = orientable ? Surface::oriented(g) : Surface::non_oriented(g);
        r = surface_ct_bounds(s);
        j = json_io::to_json(r);
        j["surface"] = s.name();
        j["chromatic_number"] = chromatic_number(s);
      } else if (!bouquet_text.empty()) {
        r = bouquet_bounds(detail::keyed_value(bouquet_text, "h"));
        j = json_io::to_json(r);
      } else {
        r = combined_lower_bound(json_io::extract_complex(detail::read_document(input, in)));
        j = json_io::to_json(r);
      }
      detail::emit(out, j);
      return exit_code::ok;
    }
    if (verify->parsed()) {
      const auto cover = json_io::extract_cover(detail::read_document(input, in));
      GoodnessOptions opts;
      opts.jobs = jobs;
      opts.contractibility = detail::oracle_options(detail::budget(budget_ms));
      const auto report = verify_good_cover(cover, opts);
      json j;
      j["verdict"] = to_string(report.verdict);
      j["covers_ambient"] = report.covers_ambient;
      j["size"] = cover.size();
      json checks = json::array();
      for (const auto& c : report.checked_intersections) {
        json x;
        x["indices"] = c.indices;
        x["names"] = detail::index_names(cover, c.indices);
        x["status"] = to_string(c.status);
        x["detail"] = c.detail;
        checks.push_back(x);
      }
      j["intersections"] = checks;
      if (!report.good()) {
        j["witness"] = report.witness;
        j["witness_names"] = detail::index_names(cover, report.witness);
        j["reason"] = report.reason;
        err << "witness:";
        for (auto i : report.witness) err << ' ' << i;
        err << " (" << report.reason << ")\n";
      }
      detail::emit(out, j);
      if (report.verdict == GoodnessVerdict::Good) return 0;
      return report.verdict == GoodnessVerdict::NotGood ? 1 : 2;
    }
    if (nerve_cmd->parsed()) {
      const auto cover = json_io::extract_cover(detail::read_document(input, in));
      detail::emit(out, json_io::to_json(nerve(cover)));
      return exit_code::ok;
    }
    if (gallery->parsed()) {
      if (gallery_list) {
        json j;
        j["names"] = gallery_names();
        detail::emit(out, j);
        return exit_code::ok;
      }
      if (gallery_name.empty()) throw UsageError("gallery needs a name or --list");
      GalleryEntry e;
      try {
        e = gallery_entry(gallery_name);
      } catch (const PreconditionError& ex) {
        throw UsageError(ex.what());
      }
      detail::emit(out, detail::entry_to_json(e));
      return exit_code::ok;
    }
    if (search->parsed()) {
      const auto k = json_io::extract_complex(detail::read_document(input, in));
      SearchConfig config;
      config.max_cover_size = max_size;
      if (!universe_text.empty()) {
        try {
          config.universe = parse_universe(universe_text);
        } catch (const PreconditionError& ex) {
          throw UsageError(ex.what());
        }
      }
      config.time_budget = detail::budget(budget_ms);
      const auto o = strict_ct_search(k, config);
      json j;
      j["strict"] = true;
      j["universe"] = to_string(o.universe);
      j["exhaustive"] = o.exhaustive;
      j["candidates"] = o.candidates;
      j["explored"] = o.explored;
      j["max_size"] = max_size;
      int code = 2;
      if (const auto* f = std::get_if<FoundGoodCover>(&o.verdict)) {
        j["verdict"] = "found";
        j["size"] = f->cover.size();
        j["cover"] = json_io::to_json(f->cover);
        code = 0;
      } else if (const auto* n = std::get_if<NoGoodCoverUpTo>(&o.verdict)) {
        j["verdict"] = "none";
        j["no_good_cover_up_to"] = n->size;
        code = 1;
      } else {
        j["verdict"] = "inconclusive";
        j["reason"] = std::get<Inconclusive>(o.verdict).reason;
      }
      detail::emit(out, j);
      return code;
    }
  } catch (const UsageError& e) {
    err << "covtype: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const Error& e) {
    err << "covtype: " << e.what() << '\n';
    return exit_code::data;
  } catch (const std::exception& e) {
    err << "covtype: internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
  err << "covtype: no subcommand\n";
  return exit_code::usage;
}

}  // namespace covtype::cli
