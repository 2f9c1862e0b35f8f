#include "fht/report.hpp"

#include <charconv>
#include <ostream>

namespace fht {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_cplx(cplx v) {
    return fmt_double(v.real()) + "," + fmt_double(v.imag());
}

void Report::add(std::string check_id, std::string anchor, std::string inputs,
                 double residual, double tolerance) {
    CheckRecord r;
    r.check_id = std::move(check_id);
    r.anchor = std::move(anchor);
    r.inputs = std::move(inputs);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual < tolerance;
    rows.push_back(std::move(r));
}

bool Report::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

void Report::write_csv(std::ostream& os) const {
    os << "check_id,anchor,inputs,residual,tolerance,pass\n";
    for (const auto& r : rows) {
        os << r.check_id << ',' << r.anchor << ",\"" << r.inputs << "\","
           << fmt_double(r.residual) << ',' << fmt_double(r.tolerance) << ','
           << (r.pass ? "true" : "false") << '\n';
    }
}

namespace {
std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}
}  // namespace

void Report::write_jsonl(std::ostream& os) const {
    for (const auto& r : rows) {
        os << "{\"check_id\":\"" << json_escape(r.check_id)
           << "\",\"anchor\":\"" << json_escape(r.anchor)
           << "\",\"inputs\":\"" << json_escape(r.inputs)
           << "\",\"residual\":" << fmt_double(r.residual)
           << ",\"tolerance\":" << fmt_double(r.tolerance)
           << ",\"pass\":" << (r.pass ? "true" : "false") << "}\n";
    }
}

}  // namespace fht
