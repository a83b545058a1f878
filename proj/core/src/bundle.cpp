#include "urr/bundle.hpp"

#include <fstream>
#include <sstream>

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

namespace {

using nlohmann::json;

// Certificates may be long products; the checker should not trip the
// engine's default degree cap.
constexpr unsigned kCheckerDegreeCap = 4096;

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Syntax, std::string("bundle is missing \"") + key + "\"");
  return *it;
}

std::string text_of(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(ErrorKind::Syntax, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

Poly poly_of(const json& j, const char* key, const RingPtr& ring) {
  return parse_poly(text_of(j, key), ring);
}

}  // namespace

json cert_to_json(const CertRecord& record) {
  const Cert& c = record.cert;
  json gens = json::array();
  for (const auto& g : record.generators) gens.push_back(to_string(g));
  json cofactors = json::array();
  for (const auto& cf : c.cofactors) {
    cofactors.push_back({{"index", cf.index}, {"poly", to_string(cf.poly)}});
  }
  json point = nullptr;
  if (c.point) {
    point = json::array();
    for (const auto& v : *c.point) point.push_back(to_string(v));
  }
  return {{"label", record.label},
          {"ring", c.target.ring()->names()},
          {"generators", std::move(gens)},
          {"target", to_string(c.target)},
          {"unit", to_string(c.unit)},
          {"cofactors", std::move(cofactors)},
          {"point", std::move(point)}};
}

CertRecord cert_from_json(const json& j) {
  const json& names = field(j, "ring");
  if (!names.is_array()) fail(ErrorKind::Syntax, "\"ring\" must be a list of names");
  RingPtr ring = RingCtx::make(names.get<std::vector<std::string>>(), kCheckerDegreeCap);

  CertRecord out{text_of(j, "label"), {}, Cert{Poly(ring), Poly(ring), {}, std::nullopt}};
  for (const auto& g : field(j, "generators")) {
    if (!g.is_string()) fail(ErrorKind::Syntax, "generators must be strings");
    out.generators.push_back(parse_poly(g.get<std::string>(), ring));
  }
  out.cert.target = poly_of(j, "target", ring);
  out.cert.unit = poly_of(j, "unit", ring);
  for (const auto& cf : field(j, "cofactors")) {
    const json& index = field(cf, "index");
    if (!index.is_number_unsigned()) fail(ErrorKind::Syntax, "cofactor index must be natural");
    out.cert.cofactors.push_back(Cofactor{index.get<std::size_t>(), poly_of(cf, "poly", ring)});
  }
  const json& point = field(j, "point");
  if (!point.is_null()) {
    Point p;
    for (const auto& v : point) {
      if (!v.is_string()) fail(ErrorKind::Syntax, "point coordinates must be strings");
      p.push_back(parse_rat(v.get<std::string>()));
    }
    out.cert.point = std::move(p);
  }
  return out;
}

std::string serialize_bundle(const Bundle& bundle) {
  json certs = json::array();
  for (const auto& r : bundle.certificates) certs.push_back(cert_to_json(r));
  json j = {{"format", "urr-bundle"},
            {"version", kBundleVersion},
            {"task", {{"kind", bundle.task}, {"args", bundle.args}}},
            {"outputs", bundle.outputs},
            {"certificates", std::move(certs)},
            {"metadata", bundle.metadata}};
  return j.dump(2) + "\n";
}

Bundle parse_bundle(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  if (!j.is_object() || j.value("format", "") != "urr-bundle") {
    fail(ErrorKind::VersionMismatch, "not a urr bundle");
  }
  const json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kBundleVersion) {
    fail(ErrorKind::VersionMismatch, "unsupported bundle version " + version.dump());
  }
  Bundle out;
  const json& task = field(j, "task");
  out.task = text_of(task, "kind");
  out.args = field(task, "args").get<std::vector<std::string>>();
  out.outputs = field(j, "outputs");
  out.metadata = field(j, "metadata");
  for (const auto& c : field(j, "certificates")) out.certificates.push_back(cert_from_json(c));
  return out;
}

Bundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::PreconditionViolated, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bundle(buf.str());
}

bool operator==(const Bundle& a, const Bundle& b) {
  return serialize_bundle(a) == serialize_bundle(b);
}

CheckSummary check_bundle(const Bundle& bundle) {
  CheckSummary out;
  for (const auto& r : bundle.certificates) {
    ++out.total;
    if (!check_record(r)) out.invalid.push_back(r.label);
  }
  return out;
}

}  // namespace urr
