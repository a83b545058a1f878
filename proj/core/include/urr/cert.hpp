#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urr/poly.hpp"

namespace urr {

struct Cofactor {
  std::size_t index;  // position in the generator list of the context
  Poly poly;
};

// Cofactor identity  unit * target = sum_i cofactor_i * generator_{index_i}.
// With a point the unit must not vanish there (membership after localizing at
// the point); without one the unit must be exactly 1.
struct Cert {
  Poly target;
  Poly unit;
  std::vector<Cofactor> cofactors;
  std::optional<Point> point;

  static Cert trivial(const Poly& target);
};

// Replays the identity by plain polynomial arithmetic and evaluation.
bool check_certificate(const Cert& cert, std::span<const Poly> generators);

// A certificate together with the generators it refers to, as stored in
// result bundles.
struct CertRecord {
  std::string label;
  std::vector<Poly> generators;
  Cert cert;
};

bool check_record(const CertRecord& record);

}  // namespace urr
