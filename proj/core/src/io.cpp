#include "tpp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tpp {

std::string partition_to_json(const PathPartition& q) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["n"] = q.num_vertices();
    auto paths = nlohmann::json::array();
    for (const Path& p : q.paths()) paths.push_back(p.v);
    j["paths"] = std::move(paths);
    return j.dump(2) + "\n";
}

PathPartition partition_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Path> paths;
    for (const auto& jp : j.at("paths"))
        paths.push_back(Path(jp.get<std::vector<int>>()));
    return PathPartition(n, std::move(paths));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << contents;
}

}  // namespace tpp
