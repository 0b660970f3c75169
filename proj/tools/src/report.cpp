#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "agorum/error.hpp"

namespace agorum::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::io, "SHA-256 digest failed");
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

json formulas_json(const std::vector<Formula>& formulas) {
  json out = json::array();
  for (const Formula& f : formulas) out.push_back(to_string(f));
  return out;
}

json judgment_json(const JudgmentSet& j, const Agenda& agenda) {
  return json{{"verdicts", j.to_string()}, {"formulas", formulas_json(formulas_of(j, agenda))}};
}

json profile_json(const Profile& profile) {
  json rows = json::array();
  for (const JudgmentSet& j : profile.agents()) rows.push_back(j.to_string());
  return rows;
}

json mi_subset_json(const MISubset& s, const Agenda& agenda) { return formulas_json(formulas_of(s, agenda)); }

}  // namespace agorum::cli
