// Copyright 2025-2026 The compatrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace compatrad {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3 &v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json &j) {
    if (!j.is_array() || j.size() != 3)
        throw Error(ErrorCode::parse_error, "expected a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json parse(const std::string &text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::parse_error, "malformed JSON");
    return j;
}

} // namespace

std::string povm_to_json(const QubitPOVM &povm) {
    json effects = json::array();
    for (const auto &e : povm.effects)
        effects.push_back({{"alpha", e.alpha}, {"eta", e.eta}, {"n", vec_to_json(e.n)}});
    return json{{"effects", effects}, {"planar", povm.planar}}.dump();
}

QubitPOVM povm_from_json(const std::string &text) {
    const json j = parse(text);
    if (!j.contains("effects") || !j["effects"].is_array())
        throw Error(ErrorCode::parse_error, "POVM JSON needs an \"effects\" array");
    std::vector<QubitEffect> effects;
    for (const auto &je : j["effects"]) {
        QubitEffect e;
        e.alpha = je.at("alpha").get<double>();
        e.eta = je.at("eta").get<double>();
        e.n = vec_from_json(je.at("n"));
        effects.push_back(e);
    }
    return make_povm(std::move(effects), j.value("planar", false));
}

std::string assemblage_to_json(const Assemblage &assemblage) {
    json settings = json::array();
    for (const auto &s : assemblage.settings)
        settings.push_back(vec_to_json(s));
    json entries = json::array();
    for (std::size_t x = 0; x < assemblage.entries.size(); ++x) {
        for (const Outcome a : {Outcome::plus, Outcome::minus}) {
            const auto &entry = assemblage.at(a, static_cast<int>(x));
            entries.push_back({{"outcome", a == Outcome::plus ? "+" : "-"},
                               {"setting", x},
                               {"weight", entry.weight},
                               {"bloch", vec_to_json(entry.bloch)}});
        }
    }
    return json{{"settings", settings}, {"entries", entries}}.dump();
}

Assemblage assemblage_from_json(const std::string &text) {
    const json j = parse(text);
    Assemblage assemblage;
    for (const auto &s : j.at("settings"))
        assemblage.settings.push_back(vec_from_json(s));
    assemblage.entries.resize(assemblage.settings.size());
    for (const auto &je : j.at("entries")) {
        const std::size_t x = je.at("setting").get<std::size_t>();
        if (x >= assemblage.entries.size())
            throw Error(ErrorCode::parse_error, "entry references unknown setting");
        const std::string outcome = je.at("outcome").get<std::string>();
        const int slot = outcome == "+" ? 0 : 1;
        assemblage.entries[x][slot] = {je.at("weight").get<double>(),
                                       vec_from_json(je.at("bloch"))};
    }
    return assemblage;
}

std::string lhs_model_to_json(const LHSModel &model) {
    json hidden = json::array();
    for (const auto &b : model.hidden_bloch)
        hidden.push_back(vec_to_json(b));
    json settings = json::array();
    for (const auto &s : model.settings)
        settings.push_back(vec_to_json(s));
    return json{{"p", model.p},
                {"hidden_bloch", hidden},
                {"settings", settings},
                {"response_plus", model.response_plus},
                {"response_minus", model.response_minus}}
        .dump();
}

LHSModel lhs_model_from_json(const std::string &text) {
    const json j = parse(text);
    LHSModel model;
    model.p = j.at("p").get<std::vector<double>>();
    for (const auto &b : j.at("hidden_bloch"))
        model.hidden_bloch.push_back(vec_from_json(b));
    for (const auto &s : j.at("settings"))
        model.settings.push_back(vec_from_json(s));
    model.response_plus = j.at("response_plus").get<std::vector<std::vector<double>>>();
    model.response_minus =
        j.at("response_minus").get<std::vector<std::vector<double>>>();
    return model;
}

std::string radius_result_to_json(const RadiusResult &result) {
    return json{{"value", result.value},
                {"witness_c0", result.witness_c0},
                {"witness_c", vec_to_json(result.witness_c)},
                {"method", radius_method_name(result.method)}}
        .dump();
}

std::string search_result_to_json(const SearchResult &result, int n, bool planar) {
    json history = json::array();
    for (const auto &[iter, radius] : result.history)
        history.push_back(json::array({iter, radius}));
    return json{{"seed", result.seed},
                {"n", n},
                {"planar", planar},
                {"best_radius", result.best_radius},
                {"best_povm", json::parse(povm_to_json(result.best_povm))},
                {"history", history}}
        .dump();
}

std::string settings_to_json(const std::vector<Vec3> &settings) {
    json arr = json::array();
    for (const auto &s : settings)
        arr.push_back(vec_to_json(s));
    return json{{"settings", arr}}.dump();
}

std::vector<Vec3> settings_from_json(const std::string &text) {
    const json j = parse(text);
    std::vector<Vec3> settings;
    for (const auto &s : j.at("settings"))
        settings.push_back(vec_from_json(s));
    return settings;
}

std::string validation_report_to_json(const ValidationReport &report) {
    json violations = json::array();
    for (const auto &[name, magnitude] : report.violations)
        violations.push_back({{"constraint", name}, {"magnitude", magnitude}});
    return json{{"valid", report.valid}, {"violations", violations}}.dump();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::parse_error, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::parse_error, "cannot write file: " + path);
    out << content;
}

} // namespace compatrad
