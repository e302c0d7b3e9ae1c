#include "hankelray/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hankelray {

using nlohmann::json;

namespace {

json qmatrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix qmatrix_from(const json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("matrix json: not an array");
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.at(0).size();
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows.at(i).size() != c)
      throw std::invalid_argument("matrix json: ragged rows");
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = rational_from_string(rows.at(i).at(j).get<std::string>());
  }
  return m;
}

json family_json(const FamilyBounds& f) {
  return json{{"Q", f.full.generators},
              {"P", f.full.relations},
              {"Q_min", f.minimized.generators},
              {"P_min", f.minimized.relations},
              {"h_EM", f.h_em},
              {"overcount", f.overcount},
              {"dim_bound", f.dim_bound},
              {"ambient_dim", f.ambient_dim},
              {"codim_bound", f.codim_bound}};
}

json psd_json(const PsdCertificate& psd) {
  json j;
  j["verdict"] = psd.verdict == PsdVerdict::Psd ? "PSD" : "NotPSD";
  j["rank"] = psd.rank;
  if (psd.verdict == PsdVerdict::Psd) {
    json pivots = json::array();
    for (const auto& p : psd.pivots) pivots.push_back(to_string(p));
    j["pivots"] = std::move(pivots);
  } else {
    json w = json::array();
    for (const auto& e : psd.witness) w.push_back(to_string(e));
    j["witness"] = std::move(w);
    j["witness_value"] = to_string(psd.witness_value);
  }
  return j;
}

json certificate_json(const ExtremeRayCertificate& cert) {
  json j;
  j["schema"] = "hankelray.certificate/1";
  j["d"] = cert.d;
  j["socle_degree"] = 2 * cert.d;
  j["rank"] = cert.rank;
  j["corank"] = cert.corank;
  j["psd"] = psd_json(cert.psd);
  j["hilbert"] = cert.hilbert.values;
  j["hyperplane_dim"] = cert.hyperplane_dim;
  j["hyperplane_target"] = cert.hyperplane_target;
  j["is_extreme"] = cert.is_extreme;
  j["rank_one_point_evaluation"] = cert.rank_one_point_evaluation;
  if (cert.kernel_contains) {
    j["kernel_contains"] = json{
        {"L1", cert.kernel_contains->l1},
        {"L2", cert.kernel_contains->l2},
        {"third_form", cert.kernel_contains->third_form},
        {"relation_interpolant", cert.kernel_contains->relation_interpolant}};
  }
  j["dual_variety_criterion"] = cert.dual_variety_criterion;
  j["dual_variety_criterion_extrapolated"] = cert.dual_criterion_extrapolated;
  return j;
}

json point_json(const ProjPoint& p) {
  return json::array(
      {to_string(p.x()), to_string(p.y()), to_string(p.z())});
}

}  // namespace

std::string qmatrix_to_csv(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << to_string(m.at(i, j));
    }
    os << "\n";
  }
  return os.str();
}

QMatrix qmatrix_from_csv(const std::string& csv) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(rational_from_string(cell));
    rows.push_back(std::move(row));
  }
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("matrix csv: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::string qmatrix_to_json(const QMatrix& m) { return qmatrix_json(m).dump(2); }

QMatrix qmatrix_from_json(const std::string& json_text) {
  return qmatrix_from(json::parse(json_text));
}

std::string poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms())
    terms.push_back(json::array({mono.a, mono.b, mono.c, to_string(c)}));
  return json{{"degree", p.degree()}, {"terms", std::move(terms)}}.dump(2);
}

Poly poly_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  Poly p(j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    const Monomial mono{t.at(0).get<int>(), t.at(1).get<int>(),
                        t.at(2).get<int>()};
    p = p + Poly::term(mono, rational_from_string(t.at(3).get<std::string>()));
  }
  return p;
}

std::string functional_to_json(const Functional& ell) {
  json j;
  j["socle_degree"] = ell.socle_degree();
  json values = json::array();
  for (const auto& v : ell.values()) values.push_back(to_string(v));
  j["values"] = std::move(values);
  if (ell.support()) {
    json support = json::array();
    for (const auto& wp : *ell.support())
      support.push_back(json{{"weight", to_string(wp.weight)},
                             {"point", point_json(wp.point)}});
    j["support"] = std::move(support);
  }
  return j.dump(2);
}

Functional functional_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  const int socle = j.at("socle_degree").get<int>();
  std::vector<Rational> values;
  for (const auto& v : j.at("values"))
    values.push_back(rational_from_string(v.get<std::string>()));
  std::optional<std::vector<WeightedPoint>> support;
  if (j.contains("support")) {
    support.emplace();
    for (const auto& wp : j.at("support")) {
      const auto& pt = wp.at("point");
      support->push_back(
          {rational_from_string(wp.at("weight").get<std::string>()),
           ProjPoint(rational_from_string(pt.at(0).get<std::string>()),
                     rational_from_string(pt.at(1).get<std::string>()),
                     rational_from_string(pt.at(2).get<std::string>()))});
    }
  }
  return Functional(socle, std::move(values), std::move(support));
}

std::string hilbert_to_json(const HilbertFunction& h) {
  return json(h.values).dump();
}

std::string certificate_to_json(const ExtremeRayCertificate& cert) {
  return certificate_json(cert).dump(2);
}

QMatrix relation_grid_matrix(const Relation& rel, int d) {
  QMatrix m(d, d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      const auto c = rel.coefficient_at(ProjPoint::affine(d - i, j - 1));
      m.at(i - 1, j - 1) = c ? *c : Rational(0);
    }
  }
  return m;
}

std::string relation_grid_json(const Relation& rel, int d) {
  json j;
  j["schema"] = "hankelray.relation/1";
  j["d"] = d;
  j["layout"] = "entry (i,j), 1-based, is the coefficient at (d-i : j-1 : 1)";
  j["normalization"] =
      "coefficient of the lexicographically first support point is 1";
  j["matrix"] = qmatrix_json(relation_grid_matrix(rel, d));
  return j.dump(2);
}

std::string corank4_report_to_json(const Corank4Report& report) {
  json j;
  j["schema"] = "hankelray.corank4/1";
  j["d"] = report.d;
  j["t1"] = family_json(report.t1);
  j["t2"] = family_json(report.t2);
  j["t2_exceeds_t1"] = report.t2_exceeds_t1;
  return j.dump(2);
}

std::string construction_to_json(const ConstructionResult& c,
                                 const ExtremeRayCertificate& cert) {
  json j = certificate_json(cert);
  j["construction"] = json{
      {"provenance", c.config.provenance},
      {"removed_point", point_json(c.removed_point)},
      {"gamma1_size", c.config.gamma1.size()},
      {"gamma2_size", c.config.gamma2.size()},
  };
  if (c.t0) j["construction"]["t0"] = to_string(*c.t0);
  return j.dump(2);
}

}  // namespace hankelray
