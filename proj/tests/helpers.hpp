#pragma once
// Shared test utilities: corpus access and small conveniences.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cerl/parser.hpp"

namespace testutil {

inline std::filesystem::path corpus_dir() { return CERL_CORPUS_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline cerl::ExprPtr parse_or_throw(const std::string& src) {
    auto r = cerl::parse_expr(src);
    if (const auto* err = std::get_if<cerl::ParseError>(&r))
        throw std::runtime_error(cerl::describe(*err));
    return std::get<cerl::ExprPtr>(r);
}

inline cerl::ExprPtr corpus_expr(const std::string& name) {
    return parse_or_throw(read_file(corpus_dir() / name));
}

inline std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry :
         std::filesystem::directory_iterator(corpus_dir()))
        if (entry.path().extension() == ".core") out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil
