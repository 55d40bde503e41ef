#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "speyer/exactnum.hpp"

namespace speyer {

inline constexpr int kReportSchema = 1;
inline constexpr std::string_view kToolVersion = "speyer 1.0.0";

// One verified claim instance. `params` values are exact-value strings so
// the record round-trips without loss.
struct ReportEntry {
    std::string claim;
    std::map<std::string, std::string> params;
    bool pass = false;
    bool experimental = false;  // recorded but never gates an exit code
    std::optional<std::string> witness;
};

struct VerificationReport {
    std::string version{kToolVersion};
    nlohmann::json config;  // echo of the math-relevant configuration
    std::vector<ReportEntry> entries;
};

// Serializations. The JSON and CSV forms are byte-deterministic for a given
// config and tool version; wall-clock timing appears only in the text form.
nlohmann::json report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);
std::string report_csv(const VerificationReport& r);

// Every non-experimental entry passed.
bool all_proven_pass(const VerificationReport& r);

// Writes one line per entry whose pass/hold status differs between the two
// report documents (also entries present on one side only) and returns the
// number of differences. The tool version is excluded from the comparison.
// Throws std::invalid_argument on documents that are not reports.
int report_diff(const nlohmann::json& a, const nlohmann::json& b, std::ostream& out);

class UniPoly;
class BiPoly;
struct RootIsolation;
struct GammaVector;

// JSON embeddings: coefficient arrays of exact rational strings, lowest
// exponent first; a bivariate polynomial nests its x-coefficients.
nlohmann::json poly_json(const UniPoly& p);
nlohmann::json poly_json(const BiPoly& p);
nlohmann::json rseq_json(const std::vector<Rational>& s);
nlohmann::json gamma_json(const GammaVector& gv);

// Array of {lo, hi, exact?} rational strings.
nlohmann::json isolation_json(const RootIsolation& iso);

}  // namespace speyer
