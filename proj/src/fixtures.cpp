#include "tqft/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tqft/error.hpp"

#ifndef TQFT_DATA_DIR
#define TQFT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

namespace tqft {

std::string data_dir()
{
    if (const char* env = std::getenv("TQFT_DATA_DIR"); env && *env) return env;
    return TQFT_DATA_DIR;
}

std::string fixture_path(const std::string& kind, const std::string& name)
{
    fs::path p = fs::path(data_dir()) / kind / (name + ".json");
    if (!fs::exists(p)) throw Error("unknown " + kind + " fixture '" + name + "'");
    return p.string();
}

std::vector<std::string> list_fixtures(const std::string& kind)
{
    std::vector<std::string> out;
    fs::path dir = fs::path(data_dir()) / kind;
    if (!fs::is_directory(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::string resolve_input(const std::string& kind, const std::string& token)
{
    if (fs::exists(token)) return token;
    return fixture_path(kind, token);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace tqft
