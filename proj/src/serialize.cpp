#include "bslab/serialize.hpp"

#include <json.hpp>

#include <sstream>

#include "bslab/errors.hpp"

namespace bslab {

using Json = nlohmann::ordered_json;

namespace {

Json exponent_to_json(const Exponent& e) {
  Json a = Json::array();
  for (auto x : e) a.push_back(x);
  return a;
}

std::string w_monomial_text(const ThickenedSpace& space, const Exponent& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += space.ring()->var_name(space.w_var(i));
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s.empty() ? "1" : s;
}

std::string operator_text(const ThickenedSpace& space, const Exponent& alpha) {
  if (total_degree(alpha) == 0) return "1";
  std::string s = "d^" + std::to_string(total_degree(alpha)) + "/";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    s += "d" + space.ring()->var_name(space.w_var(i));
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s;
}

}  // namespace

SpacePtr space_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("space file: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("z_vars") || !j.contains("w_vars") || !j.contains("J"))
    throw DomainError("space file needs z_vars, w_vars and J");

  std::vector<std::string> names;
  for (const auto& v : j.at("z_vars")) names.push_back(v.get<std::string>());
  const std::size_t z_count = names.size();
  for (const auto& v : j.at("w_vars")) names.push_back(v.get<std::string>());
  const std::size_t w_count = names.size() - z_count;

  MonomialOrder order = MonomialOrder::Grevlex;
  if (j.contains("order")) {
    const std::string o = j.at("order").get<std::string>();
    if (o == "lex") order = MonomialOrder::Lex;
    else if (o != "grevlex") throw DomainError("unknown monomial order '" + o + "'");
  }
  RingPtr ring = AmbientRing::make(names, order);

  std::vector<Exponent> gens;
  for (const auto& t : j.at("J")) {
    Polynomial g = parse_polynomial(t.get<std::string>(), ring);
    if (!g.is_monomial()) throw DomainError("J generator must be a monomial");
    const Exponent& e = g.leading_monomial();
    Exponent we(w_count, 0);
    for (std::size_t i = 0; i < z_count; ++i)
      if (e[i] != 0) throw DomainError("J generator must involve only w-variables");
    for (std::size_t i = 0; i < w_count; ++i) we[i] = e[z_count + i];
    gens.push_back(std::move(we));
  }
  return ThickenedSpace::make(std::move(ring), z_count, std::move(gens));
}

std::string space_to_json(const ThickenedSpace& space) {
  Json j;
  j["z_vars"] = Json::array();
  for (std::size_t i = 0; i < space.z_count(); ++i)
    j["z_vars"].push_back(space.ring()->var_name(i));
  j["w_vars"] = Json::array();
  for (std::size_t i = 0; i < space.w_count(); ++i)
    j["w_vars"].push_back(space.ring()->var_name(space.w_var(i)));
  j["J"] = Json::array();
  for (const auto& g : space.j_generators()) j["J"].push_back(w_monomial_text(space, g));
  j["order"] = space.ring()->order() == MonomialOrder::Lex ? "lex" : "grevlex";
  return j.dump(2);
}

std::string jet_to_text(const JetElement& jet) {
  std::ostringstream out;
  for (const auto& alpha : jet.space->staircase()) {
    out << "w^(";
    for (std::size_t i = 0; i < alpha.size(); ++i) out << (i ? "," : "") << alpha[i];
    out << "): " << jet.coefficient(alpha).to_string() << "\n";
  }
  return out.str();
}

std::string jet_to_json(const JetElement& jet) {
  Json arr = Json::array();
  for (const auto& alpha : jet.space->staircase()) {
    Json rec;
    rec["alpha"] = exponent_to_json(alpha);
    rec["coeff"] = jet.coefficient(alpha).to_string();
    arr.push_back(std::move(rec));
  }
  Json j;
  j["schema"] = 1;
  j["jet"] = std::move(arr);
  return j.dump(2);
}

std::string operators_to_text(const ThickenedSpace& space) {
  std::ostringstream out;
  for (const auto& op : noetherian_set(space))
    out << "order " << op.order << ": " << operator_text(space, op.w_multi_order) << "\n";
  return out.str();
}

std::string operators_to_json(const ThickenedSpace& space) {
  Json arr = Json::array();
  for (const auto& op : noetherian_set(space)) {
    Json rec;
    rec["alpha"] = exponent_to_json(op.w_multi_order);
    rec["order"] = op.order;
    rec["operator"] = operator_text(space, op.w_multi_order);
    arr.push_back(std::move(rec));
  }
  Json j;
  j["schema"] = 1;
  j["operators"] = std::move(arr);
  return j.dump(2);
}

std::string size_report_to_text(const SizeReport& report) {
  std::ostringstream out;
  out << "graded size conditions (" << (report.exact ? "exact Newton-polyhedron test"
                                                     : "valuative evidence")
      << "), m=" << report.m << " rho=" << report.rho << " d=" << report.d
      << " l=" << report.l << "\n";
  out << "alpha      order  required  attained  slack     pass\n";
  for (const auto& r : report.records) {
    std::string alpha = "(";
    for (std::size_t i = 0; i < r.alpha.size(); ++i)
      alpha += (i ? "," : "") + std::to_string(r.alpha[i]);
    alpha += ")";
    std::string attained = r.attained ? std::to_string(*r.attained) : "inf";
    out << alpha << std::string(alpha.size() < 10 ? 10 - alpha.size() : 1, ' ')
        << r.op_order << "      " << r.required << "         " << attained
        << std::string(attained.size() < 9 ? 9 - attained.size() : 1, ' ')
        << r.slack.to_string()
        << std::string(r.slack.to_string().size() < 9 ? 9 - r.slack.to_string().size() : 1, ' ')
        << (r.pass ? "yes" : "NO") << "\n";
  }
  out << "overall: " << (report.overall_pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string size_report_to_json(const SizeReport& report) {
  Json j;
  j["schema"] = 1;
  j["mode"] = report.exact ? "exact" : "valuative";
  j["m"] = report.m;
  j["rho"] = report.rho;
  j["d"] = report.d;
  j["l"] = report.l;
  Json arr = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["alpha"] = exponent_to_json(r.alpha);
    rec["order"] = r.op_order;
    rec["required"] = r.required;
    if (r.attained) rec["attained"] = *r.attained;
    else rec["attained"] = nullptr;
    rec["slack"] = r.slack.to_string();
    rec["pass"] = r.pass;
    arr.push_back(std::move(rec));
  }
  j["records"] = std::move(arr);
  j["pass"] = report.overall_pass;
  return j.dump(2);
}

std::string facets_to_text(const NewtonPolyhedron& np, const RingPtr& ring) {
  std::ostringstream out;
  for (const auto& f : np.facets) {
    bool first = true;
    for (std::size_t i = 0; i < f.normal.size(); ++i) {
      if (f.normal[i] == 0) continue;
      if (!first) out << " + ";
      if (f.normal[i] != 1) out << f.normal[i].get_str() << "*";
      out << ring->var_name(i);
      first = false;
    }
    if (first) out << "0";
    out << " >= " << f.offset.get_str() << "\n";
  }
  return out.str();
}

std::string facets_to_json(const NewtonPolyhedron& np) {
  Json j;
  j["schema"] = 1;
  Json arr = Json::array();
  for (const auto& f : np.facets) {
    Json rec;
    Json normal = Json::array();
    for (const auto& x : f.normal) normal.push_back(x.get_str());
    rec["normal"] = std::move(normal);
    rec["offset"] = f.offset.get_str();
    arr.push_back(std::move(rec));
  }
  j["facets"] = std::move(arr);
  return j.dump(2);
}

std::string certificate_to_json(const MembershipCertificate& cert) {
  Json j;
  j["schema"] = 1;
  Json terms = Json::array();
  for (const auto& t : cert.terms) {
    Json rec;
    rec["coeff"] = t.coefficient.to_string();
    Json gens = Json::array();
    for (auto idx : t.generator_indices) gens.push_back(idx + 1);  // 1-based
    rec["gens"] = std::move(gens);
    terms.push_back(std::move(rec));
  }
  j["terms"] = std::move(terms);
  j["j_witness"] = cert.j_witness.to_string();
  return j.dump(2);
}

MembershipCertificate certificate_from_json(const std::string& text, const RingPtr& ring) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("terms") || !j.contains("j_witness"))
    throw DomainError("certificate needs terms and j_witness");
  if (j.contains("schema") && j.at("schema").get<int>() != 1)
    throw DomainError("unsupported certificate schema");
  MembershipCertificate cert{{}, Polynomial::zero(ring)};
  for (const auto& t : j.at("terms")) {
    CertificateTerm term{parse_polynomial(t.at("coeff").get<std::string>(), ring), {}};
    for (const auto& g : t.at("gens")) {
      const auto idx = g.get<std::int64_t>();
      if (idx < 1) throw DomainError("generator indices are 1-based");
      term.generator_indices.push_back(static_cast<std::size_t>(idx - 1));
    }
    cert.terms.push_back(std::move(term));
  }
  cert.j_witness = parse_polynomial(j.at("j_witness").get<std::string>(), ring);
  return cert;
}

std::string certificate_to_text(const MembershipCertificate& cert, const Ideal& ideal) {
  std::ostringstream out;
  out << "f = ";
  bool first = true;
  for (const auto& t : cert.terms) {
    if (!first) out << " + ";
    first = false;
    out << "(" << t.coefficient.to_string() << ")";
    for (auto idx : t.generator_indices)
      out << "*(" << ideal.generators.at(idx).to_string() << ")";
  }
  if (!cert.j_witness.is_zero() || first) {
    if (!first) out << " + ";
    out << "(" << cert.j_witness.to_string() << ")";
  }
  out << "\n";
  return out.str();
}

std::string search_result_to_text(const SearchResult& result) {
  std::ostringstream out;
  out << "candidate N | per-case (hypothesis,certified)\n";
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    out << "N=" << result.candidates[i] << ": ";
    for (const auto& st : result.table[i])
      out << (st.hypothesis_pass ? "H" : ".") << (st.certified ? "C" : ".") << " ";
    out << "\n";
  }
  out << "minimal N = " << result.minimal_N << (result.vacuous ? " (vacuous)" : "") << "\n";
  return out.str();
}

std::string search_result_to_json(const SearchResult& result) {
  Json j;
  j["schema"] = 1;
  j["minimal_N"] = result.minimal_N;
  j["vacuous"] = result.vacuous;
  Json rows = Json::array();
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    Json row;
    row["N"] = result.candidates[i];
    Json cases = Json::array();
    for (const auto& st : result.table[i]) {
      Json c;
      c["hypothesis"] = st.hypothesis_pass;
      c["certified"] = st.certified;
      cases.push_back(std::move(c));
    }
    row["cases"] = std::move(cases);
    rows.push_back(std::move(row));
  }
  j["candidates"] = std::move(rows);
  return j.dump(2);
}

}  // namespace bslab
