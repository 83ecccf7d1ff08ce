#include "vote/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace vote {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("JSON: rationals must be strings like \"p/q\"");
    return Rational::from_string(j.get<std::string>());
}

Shape shape_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("JSON: \"shape\" must be an array of integers");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("JSON: shape parts must be integers");
        parts.push_back(e.get<int>());
    }
    return Shape(std::move(parts));
}

json shape_to_json(const Shape& s) {
    return json(s.parts());
}

} // namespace

json rational_vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

Vec rational_vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("JSON: expected an array of rational strings");
    Vec out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

json profile_to_json(const Profile& p) {
    const TabloidSpace space(p.shape());
    json votes = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (p[i].is_zero()) continue;
        votes.push_back(json{{"tabloid", space[i].str()}, {"coeff", p[i].str()}});
    }
    return json{{"shape", shape_to_json(p.shape())}, {"votes", std::move(votes)}};
}

Profile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("votes"))
        throw std::invalid_argument("JSON: profile needs \"shape\" and \"votes\"");
    const Shape shape = shape_from_json(j.at("shape"));
    const TabloidSpace space(shape);
    Vec coeffs(space.size());
    if (!j.at("votes").is_array()) throw std::invalid_argument("JSON: \"votes\" must be an array");
    for (const auto& v : j.at("votes")) {
        if (!v.is_object() || !v.contains("tabloid") || !v.contains("coeff"))
            throw std::invalid_argument("JSON: each vote needs \"tabloid\" and \"coeff\"");
        const Tabloid t = Tabloid::parse(v.at("tabloid").get<std::string>());
        coeffs[space.index(t)] += rational_from_json(v.at("coeff"));
    }
    return Profile(shape, std::move(coeffs));
}

json targets_to_json(const Shape& shape, const std::vector<OutcomeTarget>& targets) {
    json arr = json::array();
    for (const auto& t : targets)
        arr.push_back(json{{"weights", rational_vec_to_json(t.weighting.weights)},
                           {"result", rational_vec_to_json(t.target)}});
    return json{{"shape", shape_to_json(shape)}, {"targets", std::move(arr)}};
}

std::pair<Shape, std::vector<OutcomeTarget>> targets_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("targets"))
        throw std::invalid_argument("JSON: targets file needs \"shape\" and \"targets\"");
    const Shape shape = shape_from_json(j.at("shape"));
    std::vector<OutcomeTarget> targets;
    for (const auto& t : j.at("targets")) {
        if (!t.is_object() || !t.contains("weights") || !t.contains("result"))
            throw std::invalid_argument("JSON: each target needs \"weights\" and \"result\"");
        targets.emplace_back(WeightingVector(shape, rational_vec_from_json(t.at("weights"))),
                             rational_vec_from_json(t.at("result")));
    }
    return {shape, std::move(targets)};
}

json rap_to_json(const RankedApprovalProfile& rap) {
    json out = json::array();
    for (const Profile& b : rap.blocks) out.push_back(profile_to_json(b));
    return out;
}

RankedApprovalProfile rap_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("JSON: ranked approval profile must be an array of profiles");
    std::vector<Profile> blocks;
    for (const auto& b : j) blocks.push_back(profile_from_json(b));
    return RankedApprovalProfile(std::move(blocks));
}

json pairs_vec_to_json(const Vec& pairs, int n) {
    const auto list = pair_list(n);
    if (pairs.size() != list.size()) throw std::invalid_argument("pairs_vec_to_json: wrong length");
    json out = json::object();
    for (std::size_t idx = 0; idx < list.size(); ++idx)
        out[std::to_string(list[idx].first) + ">" + std::to_string(list[idx].second)] = pairs[idx].str();
    return out;
}

Vec pairs_vec_from_json(const json& j, int n) {
    if (!j.is_object()) throw std::invalid_argument("JSON: pairs vector must be an object keyed \"i>j\"");
    Vec out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (const auto& [key, value] : j.items()) {
        const auto gt = key.find('>');
        if (gt == std::string::npos) throw std::invalid_argument("JSON: pairs keys look like \"i>j\"");
        const int i = std::stoi(key.substr(0, gt));
        const int jj = std::stoi(key.substr(gt + 1));
        out[pair_index(n, i, jj)] = rational_from_json(value);
    }
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

json ordinal_to_json(const OrdinalRanking& o) {
    json out = json::array();
    for (const auto& g : o.groups) out.push_back(json(g));
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace vote
