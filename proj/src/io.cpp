#include "minv/io.hpp"

#include <fstream>

namespace minv {

namespace {

[[noreturn]] void bad_input(const std::string& what) { fail(Err::ParseError, what); }

const Json& field_of(const Json& j) {
    if (!j.is_object() || !j.contains("field")) bad_input("missing \"field\" descriptor");
    return j.at("field");
}

} // namespace

Json matrix_to_json(const Matrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.ctx().to_string(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_array() || j.empty()) bad_input("matrix must be a non-empty array of rows");
    std::size_t rows = j.size();
    if (!j[0].is_array()) bad_input("matrix rows must be arrays");
    std::size_t cols = j[0].size();
    Matrix a(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) bad_input("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string()) bad_input("matrix entries must be strings");
            a.at(i, c) = F.parse_elem(j[i][c].get<std::string>());
        }
    }
    return a;
}

Json tuple_to_json(const MatTuple& x) {
    Json j;
    j["field"] = x.ctx().descriptor();
    j["n"] = x.n();
    j["m"] = x.m();
    Json mats = Json::array();
    for (const Matrix& a : x.mats()) mats.push_back(matrix_to_json(a));
    j["mats"] = std::move(mats);
    return j;
}

MatTuple tuple_from_json(const Json& j) {
    FieldCtx F = FieldCtx::parse(field_of(j).get<std::string>());
    if (!j.contains("mats") || !j.at("mats").is_array() || j.at("mats").empty())
        bad_input("tuple needs a non-empty \"mats\" array");
    std::vector<Matrix> mats;
    for (const Json& mj : j.at("mats")) mats.push_back(matrix_from_json(F, mj));
    MatTuple x(std::move(mats));
    if (j.contains("n") && j.at("n").get<std::size_t>() != x.n()) bad_input("declared n does not match matrices");
    if (j.contains("m") && j.at("m").get<std::size_t>() != x.m()) bad_input("declared m does not match matrices");
    return x;
}

Json variety_to_json(const PointVariety& X) {
    Json j;
    j["field"] = X.ctx().descriptor();
    j["n"] = X.n();
    j["m"] = X.m();
    j["label"] = X.label();
    Json pts = Json::array();
    for (const MatTuple& p : X.points()) {
        Json mats = Json::array();
        for (const Matrix& a : p.mats()) mats.push_back(matrix_to_json(a));
        pts.push_back(std::move(mats));
    }
    j["points"] = std::move(pts);
    return j;
}

PointVariety variety_from_json(const Json& j) {
    FieldCtx F = FieldCtx::parse(field_of(j).get<std::string>());
    if (!j.contains("points") || !j.at("points").is_array()) bad_input("variety needs a \"points\" array");
    std::vector<MatTuple> points;
    for (const Json& pj : j.at("points")) {
        if (!pj.is_array()) bad_input("each point is an array of matrices");
        std::vector<Matrix> mats;
        for (const Json& mj : pj) mats.push_back(matrix_from_json(F, mj));
        points.emplace_back(std::move(mats));
    }
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    return PointVariety::from_points(std::move(points), std::move(label));
}

Json mapspec_to_json(const FieldCtx& F, const RegularMapSpec& spec) {
    Json j;
    j["field"] = F.descriptor();
    j["source_m"] = spec.source_m;
    j["target_l"] = spec.target_l;
    Json images = Json::array();
    for (const TracePoly& f : spec.images) images.push_back(f.to_string());
    j["images"] = std::move(images);
    return j;
}

RegularMapSpec mapspec_from_json(const Json& j, FieldCtx* out_ctx) {
    FieldCtx F = FieldCtx::parse(field_of(j).get<std::string>());
    if (!j.contains("source_m") || !j.contains("images") || !j.at("images").is_array())
        bad_input("map spec needs \"source_m\" and \"images\"");
    std::vector<TracePoly> images;
    for (const Json& ij : j.at("images")) {
        if (!ij.is_string()) bad_input("images must be expression strings");
        images.push_back(parse_trace_poly(F, ij.get<std::string>()));
    }
    RegularMapSpec spec = RegularMapSpec::make(j.at("source_m").get<std::size_t>(), std::move(images));
    if (j.contains("target_l") && j.at("target_l").get<std::size_t>() != spec.target_l)
        bad_input("declared target_l does not match the image count");
    if (out_ctx) *out_ctx = F;
    return spec;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_input("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad_input(path + ": " + e.what());
    }
}

MatTuple load_tuple(const std::string& path) {
    try {
        return tuple_from_json(load_json(path));
    } catch (const nlohmann::json::exception& e) {
        bad_input(path + ": " + e.what());
    }
}

PointVariety load_variety(const std::string& path) {
    try {
        return variety_from_json(load_json(path));
    } catch (const nlohmann::json::exception& e) {
        bad_input(path + ": " + e.what());
    }
}

RegularMapSpec load_mapspec(const std::string& path, FieldCtx* out_ctx) {
    try {
        return mapspec_from_json(load_json(path), out_ctx);
    } catch (const nlohmann::json::exception& e) {
        bad_input(path + ": " + e.what());
    }
}

std::vector<std::tuple<std::uint32_t, Word, FieldElem>> fingerprint_entries_from_text(const FieldCtx& F,
                                                                                      const std::string& text) {
    std::vector<std::tuple<std::uint32_t, Word, FieldElem>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() != '(') bad_input("fingerprint line must start with '(': " + line);
        auto comma = line.find(',');
        auto close = line.find(')', comma);
        auto space = line.find(' ', close);
        if (comma == std::string::npos || close == std::string::npos || space == std::string::npos)
            bad_input("malformed fingerprint line: " + line);
        std::uint32_t s = static_cast<std::uint32_t>(std::stoul(line.substr(1, comma - 1)));
        NcPoly wp = parse_nc_poly(F, line.substr(comma + 1, close - comma - 1));
        if (wp.terms().size() != 1 || !wp.terms().begin()->second.is_one())
            bad_input("fingerprint index is not a single word: " + line);
        out.emplace_back(s, wp.terms().begin()->first, F.parse_elem(line.substr(space + 1)));
    }
    return out;
}

} // namespace minv
