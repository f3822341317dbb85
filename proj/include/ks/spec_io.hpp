#pragma once

// Text formats: JSON function specifications and the elementary-set grammar.
//
// Function spec:
//   {"domain": [a, b],
//    "codomain": {"kind": "vector" | "operator", "dim": n},
//    "max_degree": D,                                  (optional, default 8)
//    "pieces": [{"interval": [lo, hi], "coeffs": ...}, ...],
//    "nodes": [{"t": t, "value": ...}, ...]}
// Vector coeffs are coeffs[i][k] (component i, power k); operator coeffs are
// coeffs[i][j][k]. Node values are [v_i] or [[a_ij]]. Numbers may be JSON
// numbers or decimal strings. A grid point without a node takes the value of
// the adjacent pieces when they agree there exactly.
//
// Set expression: comma-separated interval literals such as
// "[0,0.25],(0.5,0.75)" or "[0.5]"; the empty string is the empty set.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ks/core.hpp"
#include "ks/funcspace.hpp"

namespace ks {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Whole-string decimal parse; ParseError on trailing garbage or non-finite values.
double parse_real(std::string_view text);

PiecewiseFunction parse_function_spec(std::string_view json_text);
PiecewiseFunction load_function_spec(const std::filesystem::path& path);

/// Numbers are written as shortest round-trip decimal strings, so parsing the
/// output reproduces the function bit for bit.
std::string serialize_function_spec(const PiecewiseFunction& f);
void save_function_spec(const PiecewiseFunction& f, const std::filesystem::path& path);

ElementarySet parse_set(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace ks
