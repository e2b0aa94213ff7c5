#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef CAYLEY_GOLDEN_DIR
#error "CAYLEY_GOLDEN_DIR must point at tests/golden"
#endif

namespace cayley::testing {

/// Golden file contents with all whitespace removed (the LaTeX goldens wrap
/// long lines).
inline std::string golden_compact(const std::string& name) {
    std::ifstream in(std::string(CAYLEY_GOLDEN_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string s = buffer.str();
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

} // namespace cayley::testing
