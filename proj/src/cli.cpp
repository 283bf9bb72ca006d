#include "oddspectra/cli.hpp"

#include "oddspectra/claims.hpp"
#include "oddspectra/drg.hpp"
#include "oddspectra/exact_linalg.hpp"
#include "oddspectra/graph_io.hpp"
#include "oddspectra/symmetry.hpp"

#include <CLI11.hpp>

#include <bit>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace oddspectra {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KRange {
  int first = 0, last = 0;
};

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return value;
}

/// "a..b" inclusive, or a single "a".
KRange parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto first = parse_int(std::string_view(text).substr(0, dots));
  const auto last = dots == std::string::npos ? first : parse_int(std::string_view(text).substr(dots + 2));
  if (!first || !last) throw UsageError("bad k or k-range '" + text + "', expected N or A..B");
  if (*first < 2) throw UsageError("k must be at least 2");
  return {*first, *last};
}

int single_k(const std::string& text) {
  const auto range = parse_k_range(text);
  if (range.first != range.last) throw UsageError("this command takes a single k");
  return range.first;
}

std::string family_name(const std::string& family, int k) {
  const auto ks = std::to_string(k);
  if (family == "odd") return "O_" + ks;
  if (family == "double-odd") return "2O_" + ks;
  return "F(2O_" + ks + ")";
}

Graph build_family(const std::string& family, int k) {
  if (family == "odd") return odd_graph(k);
  if (family == "double-odd") return double_odd_graph(k);
  return folded_double_odd(k);
}

std::string subset_text(std::uint32_t mask) {
  std::string s = "{";
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    if (s.size() > 1) s += ",";
    s += std::to_string(std::countr_zero(m) + 1);
  }
  return s + "}";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string graph_markdown(const Graph& g, const std::string& name) {
  std::ostringstream md;
  md << "# " << name << "\n\n" << g.order() << " vertices, " << g.edge_count() << " edges";
  if (const auto d = g.regular_degree()) md << ", " << *d << "-regular";
  md << "\n\n";
  if (const auto& labels = g.labels()) {
    md << "| vertex | subset | parity |\n|---|---|---|\n";
    for (Vertex v = 0; v < g.order(); ++v)
      md << "| " << v << " | " << subset_text((*labels)[v].subset) << " | " << int((*labels)[v].parity)
         << " |\n";
    md << "\n";
  }
  md << "```\n";
  for (const auto& [u, v] : g.edges()) md << u << " " << v << "\n";
  md << "```\n";
  return md.str();
}

void check_capacity(int k, int max_k) {
  if (k > max_k || k > kMaxOddGraphK)
    throw CapacityError("k = " + std::to_string(k) + " exceeds the limit " +
                        std::to_string(std::min(max_k, kMaxOddGraphK)) + " (raise it with --max-k)");
}

int cmd_construct(const std::string& family, const std::string& k_text, const std::string& format,
                  const std::string& path, std::ostream& out) {
  const int k = single_k(k_text);
  if (k > kMaxOddGraphK) throw CapacityError("constructors are limited to k <= " + std::to_string(kMaxOddGraphK));
  const Graph g = build_family(family, k);
  if (format == "json") emit(graph_to_json(g).dump(2) + "\n", path, out);
  else if (format == "edge-list") emit(graph_to_edge_list(g), path, out);
  else emit(graph_markdown(g, family_name(family, k)), path, out);
  return kExitOk;
}

int cmd_spectrum(const std::string& family, const std::string& k_text, int max_k, const std::string& format,
                 const std::string& path, std::ostream& out) {
  const int k = single_k(k_text);
  check_capacity(k, max_k);
  const Graph g = build_family(family, k);
  const Spectrum spec = integral_spectrum(g);
  if (format == "md") {
    std::ostringstream md;
    md << "# Spectrum of " << family_name(family, k) << "\n\n| eigenvalue | multiplicity |\n|---|---|\n";
    for (const auto& [lambda, m] : spec.pairs) md << "| " << lambda << " | " << m << " |\n";
    md << "\nresidual: " << spec.residual << "\n";
    emit(md.str(), path, out);
  } else {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [lambda, m] : spec.pairs) pairs.push_back({lambda, m});
    const nlohmann::json j{{"family", family}, {"k", k}, {"vertices", g.order()},
                           {"spectrum", pairs}, {"residual", spec.residual}};
    emit(j.dump(2) + "\n", path, out);
  }
  return spec.residual == 0 ? kExitOk : kExitRefuted;
}

int cmd_analyze(const std::string& family, const std::string& k_text, int max_k, const std::string& format,
                const std::string& path, std::ostream& out) {
  const int k = single_k(k_text);
  check_capacity(k, max_k);
  const Graph g = build_family(family, k);
  const auto dt = all_pairs_distances(g);
  nlohmann::json j{{"family", family},
                   {"k", k},
                   {"vertices", g.order()},
                   {"edges", g.edge_count()},
                   {"diameter", dt.diameter},
                   {"bipartite", is_bipartite(g)}};
  j["degree"] = g.regular_degree() ? nlohmann::json(*g.regular_degree()) : nlohmann::json(nullptr);
  const auto arr = intersection_array(g);
  if (const auto* a = std::get_if<IntersectionArray>(&arr)) j["intersection_array"] = to_string(*a);
  else j["intersection_array"] = nullptr;
  if (format == "md") {
    std::ostringstream md;
    md << "# " << family_name(family, k) << "\n\n";
    for (const auto& key : {"vertices", "edges", "degree", "diameter", "bipartite", "intersection_array"})
      md << "- " << key << ": " << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << "\n";
    emit(md.str(), path, out);
  } else {
    emit(j.dump(2) + "\n", path, out);
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& claim_args, const std::string& k_text, const HarnessConfig& config,
               unsigned jobs, const std::string& format, const std::string& path, std::ostream& out) {
  std::vector<ClaimId> ids;
  for (const auto& a : claim_args) {
    if (a == "all") {
      ids.assign(std::begin(kAllClaims), std::end(kAllClaims));
      continue;
    }
    const auto id = parse_claim_id(a);
    if (!id) throw UsageError("unknown claim id '" + a + "', expected C1..C9 or all");
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  const KRange range = parse_k_range(k_text);
  const auto reports = run_all(range.first, range.last, ids, config, jobs);

  const std::string json_text = reports_to_json(reports);
  const std::string md_text = reports_to_markdown(reports, config);
  if (!path.empty()) {
    // The JSON report goes to PATH and the markdown grid next to it.
    std::filesystem::path md_path(path);
    md_path.replace_extension(".md");
    if (md_path == std::filesystem::path(path)) md_path += ".md";
    emit(json_text, path, out);
    emit(md_text, md_path.string(), out);
  }
  out << (format == "json" ? json_text : md_text);
  return has_unexpected_refutation(reports, config) ? kExitRefuted : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd graphs, their bipartite doubles and folded doubles: construction, spectra, and claim checks",
               "oddspectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "oddspectra 1.0");

  const std::vector<std::string> families{"odd", "double-odd", "folded"};
  std::string family, k_text, path;
  std::string construct_format, spectrum_format, analyze_format, verify_format;
  int max_k = 5;

  auto* construct = app.add_subcommand("construct", "Write O_k, 2O_k or F(2O_k) in canonical vertex order");
  construct->add_option("family", family, "odd | double-odd | folded")->required()->check(CLI::IsMember(families));
  construct->add_option("--k", k_text, "k >= 2")->required();
  construct->add_option("--format", construct_format, "json | md | edge-list")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "md", "edge-list"}));
  construct->add_option("--out", path, "output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "Exact integer spectrum; exit 0 iff the spectrum is integral");
  spectrum->add_option("family", family, "odd | double-odd | folded")->required()->check(CLI::IsMember(families));
  spectrum->add_option("--k", k_text, "k >= 2")->required();
  spectrum->add_option("--max-k", max_k, "largest k accepted")->default_val(5);
  spectrum->add_option("--format", spectrum_format, "json | md")->default_val("json")->check(CLI::IsMember({"json", "md"}));
  spectrum->add_option("--out", path, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Order, size, diameter and intersection array");
  analyze->add_option("family", family, "odd | double-odd | folded")->required()->check(CLI::IsMember(families));
  analyze->add_option("--k", k_text, "k >= 2")->required();
  analyze->add_option("--max-k", max_k, "largest k accepted")->default_val(5);
  analyze->add_option("--format", analyze_format, "json | md")->default_val("json")->check(CLI::IsMember({"json", "md"}));
  analyze->add_option("--out", path, "output file (default stdout)");

  std::vector<std::string> claim_args;
  HarnessConfig config;
  bool no_allowlist = false;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run claims C1..C9 over a k-range");
  verify->add_option("claims", claim_args, "claim ids (C1..C9) or all")->required()->delimiter(',');
  verify->add_option("--k,--k-range", k_text, "k or inclusive range A..B")->required();
  verify->add_option("--max-k", config.max_k, "largest k for graph claims")->default_val(5);
  verify->add_option("--max-aut-n", config.max_aut_n, "largest graph for the full automorphism search")
      ->default_val(kDefaultAutomorphismLimit);
  verify->add_flag("--no-allowlist", no_allowlist, "treat known discrepancies as failures");
  verify->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "stdout format: md | json")
      ->default_val("md")
      ->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--out", path, "write the JSON report here and the markdown grid beside it");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(family, k_text, construct_format, path, out);
    if (spectrum->parsed()) return cmd_spectrum(family, k_text, max_k, spectrum_format, path, out);
    if (analyze->parsed()) return cmd_analyze(family, k_text, max_k, analyze_format, path, out);
    config.use_allowlist = !no_allowlist;
    return cmd_verify(claim_args, k_text, config, jobs, verify_format, path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  }
}

}  // namespace oddspectra
