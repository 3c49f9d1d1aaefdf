#include "fourblocks/serialize.hpp"

#include <istream>
#include <sstream>

namespace fourblocks {

Json to_json(const SubdivisionWitness& w) {
    Json j;
    j["pattern"] = w.pattern.blocks();
    j["paths"] = Json::array();
    for (const auto& path : w.paths) {
        j["paths"].push_back(path);
    }
    j["junctions"] = w.junctions;
    return j;
}

namespace {

std::vector<Vertex> int_list(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
    }
    std::vector<Vertex> out;
    for (const auto& item : j) {
        if (!item.is_number_integer()) {
            throw FormatError(std::string(what) + " must hold integers");
        }
        out.push_back(item.get<Vertex>());
    }
    return out;
}

}  // namespace

SubdivisionWitness witness_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 3 || !j.contains("pattern") || !j.contains("paths") || !j.contains("junctions")) {
        throw FormatError("witness must be an object with exactly pattern, paths and junctions");
    }
    auto blocks = int_list(j["pattern"], "pattern");
    auto junctions = int_list(j["junctions"], "junctions");
    if (blocks.size() != 4 || junctions.size() != 4) {
        throw FormatError("pattern and junctions need four entries");
    }
    if (!j["paths"].is_array() || j["paths"].size() != 4) {
        throw FormatError("paths must hold four vertex lists");
    }
    SubdivisionWitness w;
    try {
        w.pattern = CyclePattern(blocks[0], blocks[1], blocks[2], blocks[3]);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    for (std::size_t i = 0; i < 4; ++i) {
        w.paths[i] = int_list(j["paths"][i], "path");
        w.junctions[i] = junctions[i];
    }
    return w;
}

Json to_json(const PipelineCertificate& cert) {
    Json j;
    if (const auto* ok = std::get_if<ColoringWithinBound>(&cert.outcome)) {
        j["outcome"] = "coloring";
        j["bound"] = ok->bound;
        j["colors"] = ok->coloring.colors();
    } else if (const auto* found = std::get_if<SubdivisionFound>(&cert.outcome)) {
        j["outcome"] = "subdivision";
        j["witness"] = to_json(found->witness);
    } else {
        const auto& unknown = std::get<Inconclusive>(cert.outcome);
        j["outcome"] = "inconclusive";
        j["stage"] = unknown.stage;
        j["reason"] = unknown.reason;
    }
    return j;
}

Json to_json(const PeelCertificate& cert) {
    Json j;
    const int k = std::max(cert.k1, cert.k3);
    if (const auto* c = std::get_if<Coloring>(&cert.outcome)) {
        j["outcome"] = "coloring";
        j["bound"] = 6 * k;
        j["colors"] = c->colors();
    } else {
        const auto& stall = std::get<StallCore>(cert.outcome);
        j["outcome"] = "stall";
        j["min_degree"] = stall.min_degree;
        j["core"] = stall.core;
        j["witness"] = stall.witness ? to_json(*stall.witness) : Json(nullptr);
    }
    return j;
}

Json to_json(const std::vector<ChordViolation>& violations) {
    Json j = Json::array();
    for (const auto& v : violations) {
        Json item;
        item["u"] = v.u;
        item["v"] = v.v;
        item["w"] = v.w;
        item["count"] = v.count;
        j.push_back(item);
    }
    return j;
}

std::vector<Vertex> read_vertex_list(std::istream& in) {
    std::vector<Vertex> out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::istringstream fields(hash == std::string::npos ? raw : raw.substr(0, hash));
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw ParseError(line_no, "expected a vertex id, got '" + token + "'");
            }
            out.push_back(value);
        }
    }
    return out;
}

}  // namespace fourblocks
