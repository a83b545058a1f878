#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "urr/cert.hpp"

namespace urr {

inline constexpr int kBundleVersion = 1;

// Result of one task: an echo of what was asked, the outputs as canonical
// text, every certificate with the generators it refers to, and metadata.
struct Bundle {
  std::string task;
  std::vector<std::string> args;
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<CertRecord> certificates;
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const Bundle&, const Bundle&);
};

// Sorted keys and canonical polynomial text, so equal bundles give equal
// bytes.
std::string serialize_bundle(const Bundle& bundle);
// Throws VersionMismatch for an unknown format or version, Syntax for
// malformed JSON or polynomial text.
Bundle parse_bundle(std::string_view text);
Bundle load_bundle(const std::string& path);

nlohmann::json cert_to_json(const CertRecord& record);
CertRecord cert_from_json(const nlohmann::json& j);

struct CheckSummary {
  std::size_t total = 0;
  std::vector<std::string> invalid;  // labels of failing certificates
  bool all_valid() const noexcept { return invalid.empty(); }
};

CheckSummary check_bundle(const Bundle& bundle);

}  // namespace urr
