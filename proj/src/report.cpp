#include "oddspectra/claims.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace oddspectra {

std::string reports_to_json(std::span<const ClaimReport> reports, bool include_runtime) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json entry{{"claim_id", to_string(r.id)},
                         {"k", r.k},
                         {"verdict", to_string(r.verdict)},
                         {"evidence", r.evidence}};
    if (include_runtime) entry["runtime_ms"] = r.runtime_ms;
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

std::string reports_to_markdown(std::span<const ClaimReport> reports, const HarnessConfig& config) {
  std::vector<int> ks;
  std::vector<ClaimId> ids;
  std::map<std::pair<ClaimId, int>, const ClaimReport*> cells;
  for (const auto& r : reports) {
    if (std::find(ks.begin(), ks.end(), r.k) == ks.end()) ks.push_back(r.k);
    if (std::find(ids.begin(), ids.end(), r.id) == ids.end()) ids.push_back(r.id);
    cells[{r.id, r.k}] = &r;
  }
  std::sort(ks.begin(), ks.end());
  std::sort(ids.begin(), ids.end());

  std::ostringstream md;
  md << "# Claim verification\n\n| claim | statement |";
  for (int k : ks) md << " k=" << k << " |";
  md << "\n|---|---|";
  for (std::size_t i = 0; i < ks.size(); ++i) md << "---|";
  md << "\n";

  std::size_t counts[3] = {0, 0, 0}, known = 0;
  for (ClaimId id : ids) {
    md << "| " << to_string(id) << " | " << claim_summary(id) << " |";
    for (int k : ks) {
      const auto it = cells.find({id, k});
      if (it == cells.end()) {
        md << " - |";
        continue;
      }
      const ClaimReport& r = *it->second;
      ++counts[static_cast<int>(r.verdict)];
      md << " " << to_string(r.verdict);
      if (is_known_discrepancy(r, config)) {
        md << " (known)";
        ++known;
      }
      md << " |";
    }
    md << "\n";
  }
  md << "\n" << reports.size() << " reports: " << counts[0] << " PASS, " << counts[1] << " REFUTED";
  if (known > 0) md << " (" << known << " known)";
  md << ", " << counts[2] << " UNVERIFIED.\n";

  bool header = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::pass) continue;
    if (!header) {
      md << "\n## Details\n\n";
      header = true;
    }
    md << "- " << to_string(r.id) << " at k=" << r.k << ", " << to_string(r.verdict) << ": `"
       << r.evidence.dump() << "`\n";
  }
  return md.str();
}

}  // namespace oddspectra
