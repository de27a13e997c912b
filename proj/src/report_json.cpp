#include "arrfree/report_json.hpp"

#include "arrfree/arrangement_io.hpp"

namespace arrfree {

ojson poly_to_json(const UniPoly& p) {
  ojson j;
  j["text"] = p.to_string("t");
  auto c = ojson::array();
  for (const auto& q : p.coeffs()) c.push_back(to_string(q));
  j["coefficients"] = c;
  return j;
}

ojson multipoly_to_json(const MultiPoly& p) { return p.to_string("x"); }

ojson lattice_to_json(const Arrangement& arr, const IntersectionLattice& lat) {
  ojson j;
  j["dim"] = arr.dim();
  j["rank"] = lat.rank();
  auto flats = ojson::array();
  for (std::size_t i = 0; i < lat.flats().size(); ++i) {
    const Flat& f = lat.flats()[i];
    ojson o;
    o["codim"] = f.codim;
    o["hyperplanes"] = f.hyperplanes;
    o["mobius"] = lat.mobius()[i];
    flats.push_back(o);
  }
  j["flats"] = flats;
  j["char_poly"] = poly_to_json(char_poly(lat));
  return j;
}

ojson derivation_to_json(const Derivation& d) {
  ojson j;
  j["degree"] = d.degree;
  auto c = ojson::array();
  for (const auto& f : d.coeffs) c.push_back(multipoly_to_json(f));
  j["coefficients"] = c;
  return j;
}

ojson certificate_to_json(const Multiarrangement& ma, const FreenessCertificate& cert) {
  ojson j;
  j["arrangement"] = arrangement_to_json(ma);
  j["verdict"] = cert.free ? "Free" : "NonFree";
  if (cert.free) {
    j["exponents"] = cert.exponents;
    j["saito_scalar"] = to_string(cert.saito_scalar);
    auto b = ojson::array();
    for (const auto& d : cert.basis) b.push_back(derivation_to_json(d));
    j["basis"] = b;
  } else {
    ojson w;
    w["kind"] = to_string(cert.witness.kind);
    w["count"] = cert.witness.count;
    w["degree"] = cert.witness.degree;
    j["witness"] = w;
  }
  return j;
}

FreenessCertificate certificate_from_json(const nlohmann::json& j, Multiarrangement& ma) {
  auto need = [&](const nlohmann::json& o, const char* key) -> const nlohmann::json& {
    if (!o.is_object() || !o.contains(key)) throw FormatError(std::string("certificate lacks '") + key + "'");
    return o[key];
  };
  ma = arrangement_from_json(need(j, "arrangement"));
  FreenessCertificate cert;
  const auto& verdict = need(j, "verdict");
  if (!verdict.is_string()) throw FormatError("'verdict' must be a string");
  try {
    if (verdict == "Free") {
      cert.free = true;
      for (const auto& e : need(j, "exponents")) cert.exponents.push_back(e.get<int>());
      cert.saito_scalar = parse_rat(need(j, "saito_scalar").get<std::string>());
      for (const auto& b : need(j, "basis")) {
        Derivation d;
        d.degree = need(b, "degree").get<int>();
        for (const auto& c : need(b, "coefficients")) d.coeffs.push_back(parse_multipoly(c.get<std::string>(), ma.dim()));
        cert.basis.push_back(std::move(d));
      }
    } else if (verdict == "NonFree") {
      const auto& w = need(j, "witness");
      std::string kind = need(w, "kind").get<std::string>();
      if (kind == "TooManyGenerators") cert.witness.kind = NonFreeWitness::Kind::TooManyGenerators;
      else if (kind == "TooFewGeneratorsUpToBound") cert.witness.kind = NonFreeWitness::Kind::TooFewGeneratorsUpToBound;
      else if (kind == "SaitoDeterminantFails") cert.witness.kind = NonFreeWitness::Kind::SaitoDeterminantFails;
      else throw FormatError("unknown witness kind '" + kind + "'");
      cert.witness.count = need(w, "count").get<std::size_t>();
      cert.witness.degree = need(w, "degree").get<int>();
    } else {
      throw FormatError("verdict must be Free or NonFree");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  } catch (const ParseError& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

ojson restriction_to_json(const RestrictionData& rd) {
  ojson j;
  j["hyperplane"] = rd.h + 1;
  auto chart = ojson::array();
  for (std::size_t i = 0; i < rd.chart.dim(); ++i) {
    auto row = ojson::array();
    for (const auto& q : rd.chart.forward().row(i)) row.push_back(to_string(q));
    chart.push_back(row);
  }
  j["chart"] = chart;
  j["restricted"] = arrangement_to_json(rd.restricted);
  auto map = ojson::array();
  for (long v : rd.index_map) map.push_back(v < 0 ? ojson(nullptr) : ojson(v + 1));
  j["index_map"] = map;
  j["multiplicity_sum"] = rd.restricted.total_multiplicity();
  j["scale"] = to_string(rd.scale);
  return j;
}

ojson hilbert_to_json(const HilbertFunction& hf) {
  ojson j;
  j["lo"] = hf.lo;
  j["hi"] = hf.hi;
  j["dims"] = hf.dims;
  return j;
}

ojson series_to_json(const RationalSeries& s) {
  ojson j;
  auto c = ojson::array();
  for (const auto& q : s.numerator.coeffs()) c.push_back(to_string(q));
  j["numerator"] = c;
  j["shift"] = s.shift;
  j["denominator_exponent"] = s.denominator_exponent;
  j["pole_order"] = s.pole_order();
  return j;
}

ojson bivariate_to_json(const BivariateSeries& s) {
  auto a = ojson::array();
  for (const auto& t : s.terms) a.push_back(series_to_json(t));
  return a;
}

ojson theorem1_to_json(const Theorem1Report& rep) {
  ojson j;
  j["hyperplane"] = rep.h + 1;
  j["restricted"] = arrangement_to_json(rep.restricted);
  j["restriction_certificate"] = certificate_to_json(rep.restricted, rep.restriction_certificate);
  j["chi0"] = poly_to_json(rep.chi0);
  if (rep.restriction_certificate.free) j["rhs"] = poly_to_json(rep.eq2.rhs);
  else j["rhs"] = nullptr;
  j["eq2_holds"] = rep.eq2.holds;
  j["degree_condition"] = rep.eq2.degree_ok;
  j["sum_condition"] = rep.eq2.sum_ok;
  j["applicability"] = to_string(rep.applicability);
  j["applicability_basis"] = rep.applicability_basis;
  j["verdict"] = to_string(rep.verdict);
  if (rep.cross_check) {
    ojson c;
    c["verdict"] = rep.cross_check->free ? "Free" : "NonFree";
    if (rep.cross_check->free) c["exponents"] = rep.cross_check->exponents;
    else c["witness"] = to_string(rep.cross_check->witness.kind);
    c["agrees"] = rep.agrees ? ojson(*rep.agrees) : ojson(nullptr);
    j["cross_check"] = c;
  } else {
    j["cross_check"] = nullptr;
  }
  return j;
}

ojson envelope(const std::string& kind, ojson payload) {
  ojson j;
  j["schema"] = "arrfree/" + kind;
  j["schema_version"] = kSchemaVersion;
  j["result"] = std::move(payload);
  return j;
}

}  // namespace arrfree
