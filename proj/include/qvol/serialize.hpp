#pragma once

// External formats: JSON documents (rationals as "p/q" strings, terms in
// lexicographic exponent order), LaTeX in the usual zeta_q / pi notation, and
// plain text.

#include "qvol/qseries.hpp"
#include "qvol/super.hpp"
#include "qvol/volume_poly.hpp"

#include <json.hpp>

#include <string>

namespace qvol {

using Json = nlohmann::ordered_json;

Json to_json(const RingElem& a);
RingElem ring_from_json(const Json& j);

/// A volume together with the recursion instance that produced it.
struct VolumeDoc {
  Flavor flavor = Flavor::QClassical;
  unsigned g = 0;
  unsigned n = 1;
  VolumePoly poly{GenFamily::QZeta, 1};

  friend bool operator==(const VolumeDoc&, const VolumeDoc&) = default;
};

Json to_json(const VolumeDoc& v);
VolumeDoc volume_from_json(const Json& j);

/// Zero parts are omitted; parsing restores them.
Json to_json(const SuperSeries& s);
SuperSeries super_from_json(const Json& j);

Json to_json(const IdentityReport& r);
Json to_json(const OracleReport& r);
Json to_json(const TrendReport& r);

/// Canonical JSON text (2-space indent, trailing newline).
std::string dump(const Json& j);

std::string to_latex(const RingElem& a);
std::string to_latex(const VolumePoly& v);
std::string to_latex(const SuperSeries& s);

std::string to_text(const RingElem& a);
std::string to_text(const VolumePoly& v);
std::string to_text(const SuperSeries& s);

}  // namespace qvol
