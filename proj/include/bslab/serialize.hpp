#pragma once

#include <string>

#include "bslab/certify.hpp"
#include "bslab/closure.hpp"
#include "bslab/germ.hpp"

namespace bslab {

// Space description: {"z_vars":[...], "w_vars":[...], "J":["w^3"],
// "order":"grevlex"|"lex" (optional)}.
SpacePtr space_from_json(const std::string& text);
std::string space_to_json(const ThickenedSpace& space);

std::string jet_to_text(const JetElement& jet);
std::string jet_to_json(const JetElement& jet);

std::string operators_to_text(const ThickenedSpace& space);
std::string operators_to_json(const ThickenedSpace& space);

std::string size_report_to_text(const SizeReport& report);
std::string size_report_to_json(const SizeReport& report);

std::string facets_to_text(const NewtonPolyhedron& np, const RingPtr& ring);
std::string facets_to_json(const NewtonPolyhedron& np);

std::string certificate_to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const std::string& text, const RingPtr& ring);
std::string certificate_to_text(const MembershipCertificate& cert, const Ideal& ideal);

std::string search_result_to_text(const SearchResult& result);
std::string search_result_to_json(const SearchResult& result);

}  // namespace bslab
