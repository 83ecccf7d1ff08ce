#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vote/construct.hpp"

namespace vote {

/*
 * JSON schemas. All numbers travel as exact rational strings "p/q" or "p";
 * no floating point appears anywhere in the interface.
 *
 *   profile:  {"shape":[2,1], "votes":[{"tabloid":"1 2|3","coeff":"5"}, ...]}
 *             omitted tabloids have coefficient 0
 *   targets:  {"shape":[...], "targets":[{"weights":[...], "result":[...]}, ...]}
 *   ranked approval profile: array of n-1 profile objects
 *   pairs vector: {"1>2":"5", ...}
 *   matrix: row-major array of arrays of rational strings
 */

nlohmann::json rational_vec_to_json(const Vec& v);
Vec rational_vec_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const Profile& p);
Profile profile_from_json(const nlohmann::json& j);

nlohmann::json targets_to_json(const Shape& shape, const std::vector<OutcomeTarget>& targets);
std::pair<Shape, std::vector<OutcomeTarget>> targets_from_json(const nlohmann::json& j);

nlohmann::json rap_to_json(const RankedApprovalProfile& rap);
RankedApprovalProfile rap_from_json(const nlohmann::json& j);

nlohmann::json pairs_vec_to_json(const Vec& pairs, int n);
Vec pairs_vec_from_json(const nlohmann::json& j, int n);

nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json ordinal_to_json(const OrdinalRanking& o);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace vote
