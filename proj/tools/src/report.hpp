#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agorum/agenda.hpp"
#include "agorum/safety.hpp"
#include "json.hpp"

namespace agorum::cli {

using json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data);

json formulas_json(const std::vector<Formula>& formulas);
json judgment_json(const JudgmentSet& j, const Agenda& agenda);
json profile_json(const Profile& profile);
json mi_subset_json(const MISubset& s, const Agenda& agenda);

}  // namespace agorum::cli
