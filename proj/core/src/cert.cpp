#include "urr/cert.hpp"

namespace urr {

Cert Cert::trivial(const Poly& target) {
  return Cert{target, Poly::constant(target.ring(), 1), {}, std::nullopt};
}

bool check_certificate(const Cert& cert, std::span<const Poly> generators) {
  const RingCtx& ring = *cert.target.ring();
  if (!cert.unit.ring()->same_as(ring)) return false;
  Poly rhs(cert.target.ring());
  for (const auto& c : cert.cofactors) {
    if (c.index >= generators.size()) return false;
    const Poly& g = generators[c.index];
    if (!g.ring()->same_as(ring) || !c.poly.ring()->same_as(ring)) return false;
    rhs += c.poly * g;
  }
  if (cert.unit * cert.target != rhs) return false;
  if (cert.point) {
    if (cert.point->size() != ring.arity()) return false;
    return cert.unit.evaluate(*cert.point) != 0;
  }
  return cert.unit == Poly::constant(cert.target.ring(), 1);
}

bool check_record(const CertRecord& record) {
  return check_certificate(record.cert, record.generators);
}

}  // namespace urr
