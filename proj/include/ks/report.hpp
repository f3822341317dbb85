#pragma once

// Run reports: key=value lines, a separator, then a JSON block carrying the
// same data in structured form. Output depends only on the inputs.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ks/core.hpp"
#include "json.hpp"

namespace ks {

inline constexpr std::string_view kReportSeparator = "---";

/// "[v1,v2,...]" with shortest round-trip components.
std::string value_to_string(const Value& v);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

class Report {
public:
    explicit Report(std::string command);

    /// Feed bytes into the inputs digest (file contents and options).
    void digest(std::string_view part);

    void add(const std::string& key, const std::string& text);
    void add(const std::string& key, double x);
    void add(const std::string& key, const Value& v);
    void add(const std::string& key, bool b);
    void add_count(const std::string& key, std::size_t n);

    /// Structured-only data (not echoed as a key=value line).
    nlohmann::ordered_json& block() { return block_; }

    std::string render() const;

private:
    void line(const std::string& key, std::string text, nlohmann::ordered_json j);

    std::string command_;
    std::uint64_t hash_;
    std::vector<std::pair<std::string, std::string>> lines_;
    nlohmann::ordered_json block_;
};

}  // namespace ks
