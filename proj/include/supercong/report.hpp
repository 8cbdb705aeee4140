#pragma once

// Report serialization: JSON, CSV (RFC 4180) and an aligned human-readable
// table, always ordered by (claim_id, p). Output is byte-identical across
// runs and worker counts: measured timings are emitted as 0 unless
// explicitly requested.

#include "claims.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace supercong {

enum class ReportFormat { Json, Csv, Table };

inline std::optional<ReportFormat> parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "table") return ReportFormat::Table;
    return std::nullopt;
}

namespace detail {

inline std::string fmt_ms(double ms, bool with_timings) {
    if (!with_timings) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

/// "" for rows that were never evaluated, "inf" for no detected residual.
inline std::string fmt_valuation(const VerificationReport& r) {
    if (!r.residual_valuation) return "";
    if (*r.residual_valuation == kValInfinity) return "inf";
    return std::to_string(*r.residual_valuation);
}

inline std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace detail

inline std::string serialize_report(const std::vector<VerificationReport>& reports,
                                    ReportFormat format, bool with_timings = false) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            os << "[\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const VerificationReport& r = reports[i];
                os << "  {";
                os << "\"claim_id\":" << detail::json_string(r.claim_id);
                os << ",\"p\":" << r.p;
                os << ",\"modulus\":" << detail::json_string(r.modulus.str());
                os << ",\"lhs_residue\":"
                   << (r.lhs_residue.empty() ? "null" : detail::json_string(r.lhs_residue));
                os << ",\"rhs_residue\":"
                   << (r.rhs_residue.empty() ? "null" : detail::json_string(r.rhs_residue));
                os << ",\"residual_valuation\":";
                if (!r.residual_valuation)
                    os << "null";
                else if (*r.residual_valuation == kValInfinity)
                    os << "\"inf\"";
                else
                    os << *r.residual_valuation;
                os << ",\"status\":" << detail::json_string(to_string(r.status));
                os << ",\"conjecture\":" << (r.conjecture ? "true" : "false");
                os << ",\"elapsed_ms\":" << detail::fmt_ms(r.elapsed_ms, with_timings);
                os << "}" << (i + 1 < reports.size() ? "," : "") << "\n";
            }
            os << "]\n";
            break;
        }
        case ReportFormat::Csv: {
            os << "claim_id,p,modulus,lhs_residue,rhs_residue,residual_valuation,status,conjecture,elapsed_ms\n";
            for (const VerificationReport& r : reports) {
                os << detail::csv_field(r.claim_id) << ',' << r.p << ',' << r.modulus.str() << ','
                   << detail::csv_field(r.lhs_residue) << ',' << detail::csv_field(r.rhs_residue) << ','
                   << detail::fmt_valuation(r) << ',' << to_string(r.status) << ','
                   << (r.conjecture ? "true" : "false") << ',' << detail::fmt_ms(r.elapsed_ms, with_timings)
                   << "\n";
            }
            break;
        }
        case ReportFormat::Table: {
            const std::vector<std::string> head = {"claim",  "p",      "modulus",    "lhs",
                                                   "rhs",    "v_p",    "status",     "conj",
                                                   "ms"};
            std::vector<std::vector<std::string>> rows;
            rows.push_back(head);
            for (const VerificationReport& r : reports) {
                rows.push_back({r.claim_id, std::to_string(r.p), r.modulus.str(),
                                r.lhs_residue.empty() ? "-" : r.lhs_residue,
                                r.rhs_residue.empty() ? "-" : r.rhs_residue,
                                r.residual_valuation ? detail::fmt_valuation(r) : "-",
                                to_string(r.status), r.conjecture ? "yes" : "no",
                                detail::fmt_ms(r.elapsed_ms, with_timings)});
            }
            std::vector<std::size_t> width(head.size(), 0);
            for (const auto& row : rows)
                for (std::size_t c = 0; c < row.size(); ++c)
                    width[c] = std::max(width[c], row[c].size());
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    os << row[c];
                    if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
                }
                os << "\n";
            }
            break;
        }
    }
    return os.str();
}

} // namespace supercong
