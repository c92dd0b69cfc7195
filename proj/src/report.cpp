#include "oscint/report.hpp"

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oscint/big_real.hpp"

namespace oscint {

namespace {

using ordered_json = nlohmann::ordered_json;

// "5.43E-26"-style rounding of a full-precision decimal string
std::string sig3_upper(const std::string& decimal) {
    if (decimal.empty()) return "-";
    std::string s = BigReal(decimal).to_string(3);
    for (char& ch : s)
        if (ch == 'e') ch = 'E';
    return s;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render_json(const std::vector<IntegralResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const IntegralResult& r : results) {
        ordered_json o;
        o["id"] = r.id;
        o["method"] = r.method;
        o["value"] = r.value;
        o["reference"] = r.reference;
        o["relative_error"] = r.relative_error;
        o["err_estimate"] = r.err_estimate;
        o["eval_count"] = r.eval_count;
        if (r.k_used >= 0) o["k_used"] = r.k_used;
        if (r.panels_used >= 0) o["panels_used"] = r.panels_used;
        if (r.scan_count >= 0) o["scan_count"] = r.scan_count;
        o["wall_time_ms"] = r.wall_time_ms;
        if (!r.error.empty()) o["error"] = r.error;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<IntegralResult> parse_json(const std::string& text) {
    ordered_json arr = ordered_json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("report: top-level JSON must be an array");
    std::vector<IntegralResult> results;
    results.reserve(arr.size());
    for (const auto& o : arr) {
        IntegralResult r;
        r.id = o.at("id").get<int>();
        r.method = o.at("method").get<std::string>();
        r.value = o.at("value").get<std::string>();
        r.reference = o.at("reference").get<std::string>();
        r.relative_error = o.at("relative_error").get<std::string>();
        r.err_estimate = o.at("err_estimate").get<std::string>();
        r.eval_count = o.at("eval_count").get<long>();
        r.k_used = o.value("k_used", -1);
        r.panels_used = o.value("panels_used", -1);
        r.scan_count = o.value("scan_count", -1L);
        r.wall_time_ms = o.at("wall_time_ms").get<long>();
        r.error = o.value("error", "");
        results.push_back(std::move(r));
    }
    return results;
}

std::string render_csv(const std::vector<IntegralResult>& results) {
    std::string out =
        "id,method,value,reference,relative_error,err_estimate,"
        "eval_count,k_used,panels_used,scan_count,wall_time_ms,error\r\n";
    for (const IntegralResult& r : results) {
        out += std::to_string(r.id);
        out += ',';
        out += csv_quote(r.method);
        out += ',';
        out += csv_quote(r.value);
        out += ',';
        out += csv_quote(r.reference);
        out += ',';
        out += csv_quote(r.relative_error);
        out += ',';
        out += csv_quote(r.err_estimate);
        out += ',';
        out += std::to_string(r.eval_count);
        out += ',';
        if (r.k_used >= 0) out += std::to_string(r.k_used);
        out += ',';
        if (r.panels_used >= 0) out += std::to_string(r.panels_used);
        out += ',';
        if (r.scan_count >= 0) out += std::to_string(r.scan_count);
        out += ',';
        out += std::to_string(r.wall_time_ms);
        out += ',';
        out += csv_quote(r.error);
        out += "\r\n";
    }
    return out;
}

std::string render_text(const std::vector<IntegralResult>& results) {
    std::ostringstream os;
    for (const IntegralResult& r : results) {
        os << "integral (" << r.id << ")  [" << r.method << "]\n";
        if (!r.error.empty()) {
            os << "  error          = " << r.error << "\n\n";
            continue;
        }
        os << "  value          = " << r.value << "\n";
        if (!r.reference.empty()) os << "  reference      = " << r.reference << "\n";
        if (!r.relative_error.empty()) os << "  relative_error = " << r.relative_error << "\n";
        os << "  err_estimate   = " << r.err_estimate << "\n";
        os << "  eval_count     = " << r.eval_count << "\n";
        if (r.k_used >= 0) os << "  k_used         = " << r.k_used << "\n";
        if (r.panels_used >= 0) os << "  panels_used    = " << r.panels_used << "\n";
        if (r.scan_count >= 0) os << "  scan_count     = " << r.scan_count << "\n";
        os << "  wall_time_ms   = " << r.wall_time_ms << "\n\n";
    }

    os << "summary\n";
    os << std::right << std::setw(4) << "id" << "  " << std::left << std::setw(15) << "method"
       << std::setw(16) << "rel. error" << std::setw(16) << "err. estimate" << std::setw(8)
       << "evals" << std::setw(10) << "k/panels" << "ms\n";
    for (const IntegralResult& r : results) {
        std::string kp = r.k_used >= 0        ? std::to_string(r.k_used)
                         : r.panels_used >= 0 ? std::to_string(r.panels_used)
                                              : "-";
        os << std::right << std::setw(4) << r.id << "  " << std::left << std::setw(15) << r.method
           << std::setw(16) << (r.error.empty() ? sig3_upper(r.relative_error) : "error")
           << std::setw(16) << (r.error.empty() ? sig3_upper(r.err_estimate) : "-") << std::setw(8)
           << r.eval_count << std::setw(10) << kp << r.wall_time_ms << "\n";
    }
    return os.str();
}

}  // namespace oscint
