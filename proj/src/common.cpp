#include "ptr/common.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ptr {

void warn(const std::string& msg) { std::cerr << "[warn] " << msg << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DataError("write failed: " + path);
}

bool file_exists(const std::string& path) { return std::filesystem::exists(path); }

}  // namespace ptr
