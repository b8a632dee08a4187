#include "lvr/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace lvr {

using ordered_json = nlohmann::ordered_json;

std::string palette_tag_string(int tag) {
    if (tag >= 0) return "L" + std::to_string(tag);
    if (tag == RankedColouring::TAG_PHASE2) return "P2";
    if (tag == RankedColouring::TAG_SPLIT) return "S";
    return "?";
}

std::string colouring_json(const RankingResult& res) {
    ordered_json j;
    j["n"] = res.stats.n;
    j["ell"] = res.stats.ell;
    j["d"] = res.stats.d_supplied;
    j["delta"] = res.stats.delta;
    j["k"] = res.stats.k;
    j["M"] = res.stats.M;
    j["b"] = res.stats.b;
    j["q"] = res.stats.q;
    j["colours"] = res.colouring.colours;
    auto tags = ordered_json::array();
    for (int t : res.colouring.tags) tags.push_back(palette_tag_string(t));
    j["palette_tags"] = std::move(tags);
    j["counts"] = {{"phase1", res.stats.colours_phase1},
                   {"phase2", res.stats.colours_phase2},
                   {"split", res.stats.colours_split}};
    j["seed"] = res.stats.seed;
    return j.dump(2) + "\n";
}

RankedColouring read_colouring_file(const std::string& path, int expected_n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open colouring file: " + path);

    // Autodetect by the first non-space character.
    char first = 0;
    while (in.get(first) && (first == ' ' || first == '\n' || first == '\t' || first == '\r')) {
    }
    in.clear();
    in.seekg(0);

    std::vector<int> colours;
    if (first == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("bad colouring JSON: ") + e.what());
        }
        if (!j.contains("colours") || !j["colours"].is_array())
            throw input_error("colouring JSON lacks a \"colours\" array");
        for (const auto& c : j["colours"]) {
            if (!c.is_number_integer()) throw input_error("non-integer colour in JSON");
            colours.push_back(c.get<int>());
        }
    } else {
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            std::istringstream ss(line);
            long long c;
            std::string rest;
            if (!(ss >> c) || (ss >> rest))
                throw input_error("line " + std::to_string(line_no) +
                                  ": expected a single integer colour");
            colours.push_back(static_cast<int>(c));
        }
    }
    if (static_cast<int>(colours.size()) != expected_n)
        throw input_error("colouring has " + std::to_string(colours.size()) +
                          " entries but the graph has " + std::to_string(expected_n) +
                          " vertices");
    return RankedColouring::plain(std::move(colours));
}

std::string exact_result_json(const ExactResult& res) {
    ordered_json j;
    j["value"] = res.value;
    j["witness"] = res.witness.colours;
    j["nodes_explored"] = res.nodes_explored;
    j["exhaustive"] = res.exhaustive;
    return j.dump(2) + "\n";
}

std::string violations_json(const std::vector<Violation>& vs, const RankedColouring& col) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) {
        ordered_json item;
        item["path"] = v.path;
        auto colours = ordered_json::array();
        for (int x : v.path) colours.push_back(col.colours[x]);
        item["colours"] = std::move(colours);
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

}  // namespace lvr
