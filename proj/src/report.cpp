#include "speyer/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "speyer/gamma.hpp"
#include "speyer/poly.hpp"
#include "speyer/realroots.hpp"

namespace speyer {

namespace {

nlohmann::json entry_json(const ReportEntry& e) {
    nlohmann::json j;
    j["claim"] = e.claim;
    j["params"] = e.params;
    j["pass"] = e.pass;
    j["experimental"] = e.experimental;
    if (e.witness) j["witness"] = *e.witness;
    return j;
}

std::string params_key(const std::map<std::string, std::string>& params) {
    std::string key;
    for (const auto& [k, v] : params) key += k + "=" + v + ";";
    return key;
}

nlohmann::json summary_json(const VerificationReport& r) {
    int total = 0, passed = 0, exp_total = 0, exp_held = 0;
    for (const ReportEntry& e : r.entries) {
        if (e.experimental) {
            ++exp_total;
            if (e.pass) ++exp_held;
        } else {
            ++total;
            if (e.pass) ++passed;
        }
    }
    nlohmann::json j;
    j["total"] = total;
    j["passed"] = passed;
    j["failed"] = total - passed;
    j["experimental"] = exp_total;
    j["experimental_held"] = exp_held;
    return j;
}

}  // namespace

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["version"] = r.version;
    j["config"] = r.config;
    nlohmann::json entries = nlohmann::json::array();
    for (const ReportEntry& e : r.entries) entries.push_back(entry_json(e));
    j["entries"] = std::move(entries);
    j["summary"] = summary_json(r);
    return j;
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.version << "\nconfig: " << r.config.dump() << "\n";
    for (const ReportEntry& e : r.entries) {
        const char* tag = e.experimental ? (e.pass ? "HOLDS" : "FAILS")
                                         : (e.pass ? "PASS" : "FAIL");
        out << "[" << tag << "] " << e.claim;
        for (const auto& [k, v] : e.params) out << " " << k << "=" << v;
        if (e.witness) out << " witness=" << *e.witness;
        out << "\n";
    }
    const nlohmann::json s = summary_json(r);
    out << "summary: " << s["passed"] << "/" << s["total"] << " passed";
    if (s["experimental"].get<int>() > 0)
        out << ", experimental " << s["experimental_held"] << "/" << s["experimental"] << " held";
    out << "\n";
    return out.str();
}

std::string report_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "claim,params,pass,experimental,witness\n";
    for (const ReportEntry& e : r.entries) {
        out << e.claim << "," << params_key(e.params) << "," << (e.pass ? "true" : "false")
            << "," << (e.experimental ? "true" : "false") << ","
            << (e.witness ? *e.witness : "") << "\n";
    }
    return out.str();
}

bool all_proven_pass(const VerificationReport& r) {
    for (const ReportEntry& e : r.entries)
        if (!e.experimental && !e.pass) return false;
    return true;
}

int report_diff(const nlohmann::json& a, const nlohmann::json& b, std::ostream& out) {
    auto index = [](const nlohmann::json& doc) {
        if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
            throw std::invalid_argument("not a verification report (missing entries array)");
        std::map<std::string, bool> idx;
        for (const auto& e : doc["entries"]) {
            std::string key = e.at("claim").get<std::string>();
            if (e.contains("params"))
                for (const auto& [k, v] : e["params"].items())
                    key += " " + k + "=" + v.get<std::string>();
            idx[key] = e.at("pass").get<bool>();
        }
        return idx;
    };
    const auto ia = index(a), ib = index(b);
    int diffs = 0;
    for (const auto& [key, pass] : ia) {
        auto it = ib.find(key);
        if (it == ib.end()) {
            out << "removed: " << key << "\n";
            ++diffs;
        } else if (it->second != pass) {
            out << "changed: " << key << " " << (pass ? "pass" : "fail") << " -> "
                << (it->second ? "pass" : "fail") << "\n";
            ++diffs;
        }
    }
    for (const auto& [key, pass] : ib) {
        if (!ia.contains(key)) {
            out << "added: " << key << "\n";
            ++diffs;
        }
    }
    return diffs;
}

nlohmann::json poly_json(const UniPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

nlohmann::json poly_json(const BiPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const UniPoly& c : p.xcoeffs()) a.push_back(poly_json(c));
    return a;
}

nlohmann::json rseq_json(const std::vector<Rational>& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const Rational& v : s) a.push_back(to_string(v));
    return a;
}

nlohmann::json gamma_json(const GammaVector& gv) {
    nlohmann::json a = nlohmann::json::array();
    for (const UniPoly& g : gv.gammas) a.push_back(poly_json(g));
    return a;
}

nlohmann::json isolation_json(const RootIsolation& iso) {
    nlohmann::json a = nlohmann::json::array();
    for (const RootInterval& ri : iso.intervals) {
        nlohmann::json j{{"lo", to_string(ri.lo)}, {"hi", to_string(ri.hi)}};
        if (ri.exact) j["exact"] = to_string(*ri.exact);
        a.push_back(std::move(j));
    }
    return a;
}

}  // namespace speyer
