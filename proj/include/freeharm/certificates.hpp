#ifndef FREEHARM_CERTIFICATES_HPP
#define FREEHARM_CERTIFICATES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "freeharm/harmonic.hpp"
#include "freeharm/nonsym.hpp"
#include "freeharm/subharmonic.hpp"

namespace freeharm {

inline constexpr const char* kCertSchema = "freeharm-cert/1";

// Document builders. Every document carries {"schema": kCertSchema, "kind":
// ...} plus the input polynomial in canonical text, so a verifier can replay
// the claim from scratch. Exact payloads use [numerator, denominator] string
// pairs; only sampling reports contain floating point.
nlohmann::json psd_certificate_json(const GramRep& rep, const PsdOutcome& out);
nlohmann::json harmonic_psd_certificate_json(const HarmonicGramRep& rep,
                                             const PsdOutcome& out);
nlohmann::json decomposition_json(const FreePoly& input, const Decomposition& dec);
nlohmann::json nonsym_decomposition_json(
    const FreePoly& input,
    const std::vector<std::pair<AlphaTuple, Decomposition>>& parts,
    unsigned ell);
nlohmann::json subharmonic_json(const FreePoly& input, const SubharmonicResult& res);
nlohmann::json sample_report_json(const FreePoly& input, unsigned n, unsigned trials,
                                  std::uint64_t seed,
                                  const std::optional<SampleCounterexample>& ce);

// Replay a certificate document from scratch; throws std::invalid_argument
// with a reason when any claim fails to check out.
void verify_certificate(const nlohmann::json& doc);

// Replay a decomposition document (plain or per-pattern); throws
// std::invalid_argument when the contract or the re-expansion fails.
void verify_decomposition_doc(const nlohmann::json& doc);

}  // namespace freeharm

#endif
