#include "ks/report.hpp"

#include <cstdio>

namespace ks {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::uint64_t h, std::string_view data) {
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::ordered_json value_json(const Value& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (double x : v.data()) out.push_back(format_real(x));
    return out;
}

}  // namespace

std::string value_to_string(const Value& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ',';
        s += format_real(v[i]);
    }
    return s + "]";
}

std::string fnv1a_hex(std::string_view data) { return hex(fnv1a(kFnvOffset, data)); }

Report::Report(std::string command) : command_(std::move(command)), hash_(fnv1a(kFnvOffset, command_)) {
    block_ = nlohmann::ordered_json::object();
    block_["command"] = command_;
}

void Report::digest(std::string_view part) {
    // Length prefix keeps ("ab","c") and ("a","bc") apart.
    hash_ = fnv1a(hash_, std::to_string(part.size()) + ":");
    hash_ = fnv1a(hash_, part);
}

void Report::line(const std::string& key, std::string text, nlohmann::ordered_json j) {
    lines_.emplace_back(key, std::move(text));
    block_[key] = std::move(j);
}

void Report::add(const std::string& key, const std::string& text) { line(key, text, text); }
void Report::add(const std::string& key, double x) { line(key, format_real(x), format_real(x)); }
void Report::add(const std::string& key, const Value& v) { line(key, value_to_string(v), value_json(v)); }
void Report::add(const std::string& key, bool b) { line(key, b ? "true" : "false", b); }
void Report::add_count(const std::string& key, std::size_t n) { line(key, std::to_string(n), n); }

std::string Report::render() const {
    std::string out = "command=" + command_ + "\n";
    const std::string digest = hex(hash_);
    out += "inputs_digest=" + digest + "\n";
    for (const auto& [k, v] : lines_) out += k + "=" + v + "\n";
    nlohmann::ordered_json block = block_;
    block["inputs_digest"] = digest;
    out += std::string(kReportSeparator) + "\n";
    out += block.dump(2) + "\n";
    return out;
}

}  // namespace ks
