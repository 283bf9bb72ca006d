#pragma once

// The claim harness: every claim about O_k, 2O_k and F(2O_k) bound to an
// executable check over k, with verdicts and structured evidence.

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddspectra {

enum class ClaimId { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9 };
inline constexpr ClaimId kAllClaims[] = {ClaimId::C1, ClaimId::C2, ClaimId::C3,
                                         ClaimId::C4, ClaimId::C5, ClaimId::C6,
                                         ClaimId::C7, ClaimId::C8, ClaimId::C9};

enum class Verdict { pass, refuted, unverified };

std::string to_string(ClaimId id);
std::string to_string(Verdict verdict);
/// "C1".."C9", case-insensitive.
std::optional<ClaimId> parse_claim_id(std::string_view text);
/// One-line description of what the claim asserts.
std::string claim_summary(ClaimId id);

struct ClaimReport {
  ClaimId id = ClaimId::C1;
  int k = 0;
  Verdict verdict = Verdict::unverified;
  nlohmann::json evidence;
  double runtime_ms = 0;
};

struct HarnessConfig {
  int max_k = 5;
  int matrix_max_k = 12;  ///< C5 only needs a 2k x 2k matrix
  std::size_t max_aut_n = 70;
  std::vector<std::pair<ClaimId, int>> known_discrepancies{{ClaimId::C7, 2}};
  bool use_allowlist = true;
};

/// Runs one claim at one k. Capacity limits give UNVERIFIED naming the
/// limit; k < 2 throws std::invalid_argument.
ClaimReport run_claim(ClaimId id, int k, const HarnessConfig& config = {});

/// Claims in `ids` over k = first..last, ordered claim first, then k. The
/// claims run on up to `jobs` threads; the order of the result is fixed.
std::vector<ClaimReport> run_all(int first, int last, std::span<const ClaimId> ids,
                                 const HarnessConfig& config = {}, unsigned jobs = 1);
std::vector<ClaimReport> run_all(int first, int last, const HarnessConfig& config = {});

/// REFUTED but listed in the config's allowlist (and the allowlist is on).
bool is_known_discrepancy(const ClaimReport& report, const HarnessConfig& config);
/// True iff some report is REFUTED and not a known discrepancy.
bool has_unexpected_refutation(std::span<const ClaimReport> reports, const HarnessConfig& config);

/// JSON array of reports. runtime_ms is left out unless asked for, so that
/// repeated runs produce identical bytes.
std::string reports_to_json(std::span<const ClaimReport> reports, bool include_runtime = false);
/// Claim x k grid of verdicts.
std::string reports_to_markdown(std::span<const ClaimReport> reports, const HarnessConfig& config);

}  // namespace oddspectra
