#include "unnlab/serialize.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

namespace unnlab {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

std::string join_nodes(const std::vector<int>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(nodes[i]);
    }
    return out;
}

} // namespace

void write_kv(std::ostream& out, const CheegerCertificate& cert) {
    out << "h_num=" << cert.h.num << "\n";
    out << "h_den=" << cert.h.den << "\n";
    out << "h=" << format_double(cert.h.value()) << "\n";
    out << "witness=" << join_nodes(cert.witness) << "\n";
}

void write_kv(std::ostream& out, const SpectralReport& report) {
    out << "lambda2=" << format_double(report.lambda2) << "\n";
    out << "h_lower=" << format_double(report.h_lower) << "\n";
    out << "h_upper=" << format_double(report.h_upper) << "\n";
    out << "connected=" << (report.connected ? "true" : "false") << "\n";
}

std::string to_json(const CheegerCertificate& cert) {
    nlohmann::json j;
    j["h_num"] = cert.h.num;
    j["h_den"] = cert.h.den;
    j["h"] = cert.h.value();
    j["witness"] = cert.witness;
    return j.dump();
}

std::string to_json(const SpectralReport& report) {
    nlohmann::json j;
    j["lambda2"] = report.lambda2;
    j["h_lower"] = report.h_lower;
    j["h_upper"] = report.h_upper;
    j["connected"] = report.connected;
    return j.dump();
}

} // namespace unnlab
