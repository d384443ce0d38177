#include "cubic27/io.hpp"

#include <fstream>
#include <sstream>

namespace cubic27 {

std::string rational_str(const Rational& q) { return q.get_str(); }

namespace {
Rational require_rational(const Json& v, const std::string& where) {
  if (!v.is_string())
    throw Error(ErrorCode::InvalidInput, where + ": expected an exact fraction string");
  auto parsed = parse_rational(v.get<std::string>());
  if (!parsed)
    throw Error(ErrorCode::InvalidInput,
                where + ": '" + v.get<std::string>() + "' is not an exact fraction");
  return *parsed;
}
}  // namespace

std::array<ProjPoint, 6> parse_config_points(const Json& doc) {
  if (!doc.is_object() || !doc.contains("points"))
    throw Error(ErrorCode::InvalidInput, "configuration: missing field 'points'");
  const Json& pts = doc["points"];
  if (!pts.is_array() || pts.size() != 6)
    throw Error(ErrorCode::InvalidInput, "configuration: 'points' must list 6 entries");
  std::array<ProjPoint, 6> points;
  for (size_t i = 0; i < 6; ++i) {
    const Json& entry = pts[i];
    if (!entry.is_array() || entry.size() != 3)
      throw Error(ErrorCode::InvalidInput, "configuration: each point needs 3 coordinates");
    std::array<Rational, 3> coords;
    for (size_t c = 0; c < 3; ++c) {
      std::ostringstream os;
      os << "points[" << i << "][" << c << "]";
      coords[c] = require_rational(entry[c], os.str());
    }
    points[i] = normalize(coords);
  }
  return points;
}

SixPointConfig parse_config(const Json& doc) {
  return SixPointConfig::create(parse_config_points(doc));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("parse error in '") + path + "': " + e.what());
  }
}

SixPointConfig load_config_file(const std::string& path) {
  return parse_config(load_json_file(path));
}

HomogPoly parse_curve(const Json& doc) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("coefficients"))
    throw Error(ErrorCode::InvalidInput, "curve: needs 'degree' and 'coefficients'");
  int degree = doc["degree"].get<int>();
  std::map<Monomial, Rational> coeffs;
  for (const auto& [key, value] : doc["coefficients"].items()) {
    int a, b, c;
    char comma1, comma2;
    std::istringstream is(key);
    if (!(is >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',')
      throw Error(ErrorCode::InvalidInput, "curve: bad exponent key '" + key + "'");
    coeffs[{a, b, c}] = require_rational(value, "coefficient " + key);
  }
  return HomogPoly(degree, std::move(coeffs));
}

Json curve_json(const HomogPoly& F) {
  Json out;
  out["degree"] = F.degree();
  Json c = Json::object();
  for (const auto& [m, v] : F.coeffs()) {
    std::ostringstream key;
    key << m[0] << "," << m[1] << "," << m[2];
    c[key.str()] = rational_str(v);
  }
  out["coefficients"] = std::move(c);
  return out;
}

Json point_json(const ProjPoint& p) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) out.push_back(p[i].get_str());
  return out;
}

Json config_json(const SixPointConfig& config) {
  Json out;
  Json pts = Json::array();
  for (int i = 1; i <= 6; ++i) pts.push_back(point_json(config.point(i)));
  out["points"] = std::move(pts);
  return out;
}

ExtraCurveCertificate parse_certificate(const Json& doc) {
  ExtraCurveCertificate cert;
  if (!doc.is_object() || !doc.contains("curve") || !doc.contains("claims"))
    throw Error(ErrorCode::InvalidInput, "certificate: needs 'curve' and 'claims'");
  cert.curve = parse_curve(doc["curve"]);
  for (const auto& cl : doc["claims"]) {
    ExtraCurveCertificate::Claim claim;
    const Json& pt = cl["point"];
    std::array<Rational, 3> coords;
    for (size_t c = 0; c < 3; ++c) coords[c] = require_rational(pt[c], "claim point");
    claim.point = normalize(coords);
    claim.multiplicity = cl["multiplicity"].get<int>();
    claim.node = cl.value("node", false);
    cert.claims.push_back(claim);
  }
  cert.claimed_support_closure = doc.value("support_closure", 2);
  cert.notes = doc.value("notes", std::string());
  return cert;
}

CertificateDocument parse_certificate_document(const Json& doc) {
  if (!doc.is_object() || !doc.contains("config") || !doc.contains("certificate"))
    throw Error(ErrorCode::InvalidInput, "certificate document: needs 'config' and 'certificate'");
  return {parse_config(doc["config"]), parse_certificate(doc["certificate"])};
}

Json certificate_document_json(const SixPointConfig& config, const ExtraCurveCertificate& cert) {
  Json out;
  out["config"] = config_json(config);
  Json c;
  c["curve"] = curve_json(cert.curve);
  Json claims = Json::array();
  for (const auto& claim : cert.claims) {
    Json cl;
    cl["point"] = point_json(claim.point);
    cl["multiplicity"] = claim.multiplicity;
    cl["node"] = claim.node;
    claims.push_back(std::move(cl));
  }
  c["claims"] = std::move(claims);
  c["support_closure"] = cert.claimed_support_closure;
  c["notes"] = cert.notes;
  out["certificate"] = std::move(c);
  return out;
}

Json genericity_json(const GenericityReport& rep) {
  Json out;
  out["general_position"] = rep.general_position;
  if (rep.failing_triple) {
    Json t = Json::array();
    for (int i : *rep.failing_triple) t.push_back(i);
    out["failing_triple"] = std::move(t);
  }
  out["distinct"] = rep.distinct;
  out["conic_free"] = rep.conic_free;
  Json preds = Json::array();
  for (const auto& p : rep.predicate_results) {
    Json e;
    e["id"] = p.id;
    e["holds"] = p.holds;
    if (!p.indices.empty()) e["indices"] = p.indices;
    if (p.witness) e["witness"] = point_json(*p.witness);
    preds.push_back(std::move(e));
  }
  out["predicates"] = std::move(preds);
  out["all_hold"] = rep.all_hold();
  return out;
}

Json support_json(const SupportReport& rep) {
  Json out;
  Json pts = Json::array();
  for (const auto& sp : rep.points) {
    Json e;
    if (sp.point.is_plane()) {
      e["type"] = "plane";
      e["coordinates"] = point_json(std::get<SurfacePoint::Plane>(sp.point.value).p);
    } else {
      const auto& in = std::get<SurfacePoint::InfinitelyNear>(sp.point.value);
      e["type"] = "infinitely_near";
      e["center"] = in.center;
      Json dir = Json::array();
      for (int i = 0; i < 3; ++i) dir.push_back(in.direction[i].get_str());
      e["direction"] = std::move(dir);
    }
    Json lines = Json::array();
    for (int k : sp.hexagon_lines) lines.push_back(k + 1);
    e["lines"] = std::move(lines);
    e["multiplicity"] = sp.local_degree;
    e["branches"] = sp.branch_count;
    pts.push_back(std::move(e));
  }
  out["points"] = std::move(pts);
  out["irrational_points"] = rep.irrational_points;
  out["count_rational"] = rep.count_rational;
  out["count_closure"] = rep.count_closure;
  out["degree_geometric"] = rep.total_degree_geometric;
  out["degree_lattice"] = rep.total_degree_lattice;
  return out;
}

namespace {
Json class_json(const DivClass& c) {
  Json out = Json::array();
  out.push_back(c.e0);
  for (long v : c.e) out.push_back(v);
  return out;
}
}  // namespace

Json incidence_json(const IncidenceReport& rep) {
  Json out;
  Json lines = Json::array();
  for (const auto& li : rep.lines) {
    Json e;
    e["label"] = li.label.str();
    e["class"] = class_json(li.cls);
    e["self_intersection"] = pairing(li.cls, li.cls);
    Json nb = Json::array();
    for (int n : li.neighbors) nb.push_back(rep.lines[static_cast<size_t>(n)].label.str());
    e["neighbors"] = std::move(nb);
    Json tri = Json::array();
    for (auto [m, n] : li.triangles) {
      Json pair = Json::array();
      pair.push_back(rep.lines[static_cast<size_t>(m)].label.str());
      pair.push_back(rep.lines[static_cast<size_t>(n)].label.str());
      tri.push_back(std::move(pair));
    }
    e["coplanar_pairs"] = std::move(tri);
    lines.push_back(std::move(e));
  }
  out["lines"] = std::move(lines);
  out["counts_verified"] = rep.counts_verified;
  return out;
}

Json profile_json(const MultiplicityProfile& p) {
  Json out;
  out["degree"] = p.d;
  out["multiplicities"] = p.m;
  out["extra_degrees"] = p.q;
  Json pts = Json::array();
  for (const auto& ep : p.extra_points) {
    Json e;
    Json lines = Json::array();
    Json contacts = Json::array();
    for (size_t i = 0; i < ep.lines.size(); ++i) {
      lines.push_back(ep.lines[i] + 1);
      contacts.push_back(ep.contacts[i]);
    }
    e["lines"] = std::move(lines);
    e["contacts"] = std::move(contacts);
    pts.push_back(std::move(e));
  }
  out["extra_points"] = std::move(pts);
  out["genus_slack"] = p.genus_slack;
  return out;
}

Json exceptional_json(const ExceptionalLocusReport& rep) {
  Json out;
  Json comps = Json::array();
  for (const auto& c : rep.components) {
    Json e;
    e["label"] = c.label.str();
    e["class"] = class_json(c.cls);
    if (c.plane_curve) e["plane_curve"] = curve_json(*c.plane_curve);
    e["support"] = support_json(c.support);
    e["type"] = curve_type_name(c.type);
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);
  Json extras = Json::array();
  for (const auto& cert : rep.extra_components) {
    Json e;
    e["curve"] = curve_json(cert.curve);
    e["support_closure"] = cert.claimed_support_closure;
    e["notes"] = cert.notes;
    extras.push_back(std::move(e));
  }
  out["extra_components"] = std::move(extras);
  out["genericity"] = genericity_json(rep.genericity);
  return out;
}

Json pencil_json(const PencilDiscriminantReport& rep) {
  Json out;
  out["degenerate"] = rep.degenerate;
  Json elim = Json::array();
  for (const auto& c : rep.eliminant.coeffs()) elim.push_back(c.get_str());
  out["eliminant"] = std::move(elim);
  out["squarefree_degree"] = rep.squarefree_degree;
  Json members = Json::array();
  for (const auto& m : rep.rational_members) {
    Json e;
    e["t"] = rational_str(m.t);
    e["verified_singular"] = m.verified_singular;
    Json pts = Json::array();
    for (size_t i = 0; i < m.singular_points.size(); ++i) {
      Json p;
      p["point"] = point_json(m.singular_points[i]);
      p["node"] = m.is_node[i];
      pts.push_back(std::move(p));
    }
    e["singular_points"] = std::move(pts);
    e["has_rational_singular_point"] = m.has_rational_singular_point;
    members.push_back(std::move(e));
  }
  out["rational_members"] = std::move(members);
  Json discarded = Json::array();
  for (const auto& t : rep.discarded_candidates) discarded.push_back(rational_str(t));
  out["discarded_candidates"] = std::move(discarded);
  out["infinity_member_singular"] = rep.infinity_member_singular;
  out["notes"] = rep.notes;
  return out;
}

Json witness_polynomial_json(const WitnessPolynomial& w) {
  Json out;
  out["parameter"] = w.parameter;
  Json coeffs = Json::array();
  for (const auto& c : w.condition.coeffs()) coeffs.push_back(rational_str(c));
  out["condition"] = std::move(coeffs);
  Json roots = Json::array();
  for (const auto& r : w.rational_roots) roots.push_back(rational_str(r));
  out["rational_roots"] = std::move(roots);
  return out;
}

Json verification_json(const VerificationReport& rep) {
  Json out;
  out["pass"] = rep.pass;
  out["failures"] = rep.failures;
  out["notes"] = rep.notes;
  out["support_closure"] = rep.support_closure;
  out["genus_lhs"] = rep.genus_lhs;
  out["genus_rhs"] = rep.genus_rhs;
  return out;
}

}  // namespace cubic27
