#include "omegalab/json_io.hpp"

#include <stdexcept>

namespace omegalab {

using nlohmann::json;

json to_json(const LatticePolytope& p) {
  json j;
  j["schema"] = kSchema;
  j["ambient_dim"] = p.ambient_dim();
  j["dim"] = p.dim();
  j["vertices"] = p.vertices();
  json ineqs = json::array();
  for (const auto& f : p.inequalities()) ineqs.push_back({{"a", f.a}, {"b", f.b}});
  j["inequalities"] = ineqs;
  json eqs = json::array();
  for (const auto& e : p.equations()) eqs.push_back({{"a", e.a}, {"b", e.b}});
  j["equations"] = eqs;
  return j;
}

json to_json(const SetFunction& f) {
  return {{"schema", kSchema}, {"n", f.n()}, {"values", f.values()}};
}

json to_json(const DerivativeSpace& ds) {
  json bk = json::array();
  for (const auto& e : ds.support_union) bk.push_back(e.entries());
  json rows = json::array();
  for (std::size_t i = 0; i < ds.projection.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < ds.projection.cols(); ++j) row.push_back(to_string(ds.projection(i, j)));
    rows.push_back(row);
  }
  return {{"k", ds.k}, {"m_k", ds.m()}, {"B_k", bk}, {"projection", rows}};
}

json to_json(const LorentzianReport& r) {
  json fails = json::array();
  for (const auto& ms : r.hessian_failures) {
    std::vector<std::size_t> one_based;
    for (std::size_t i : ms) one_based.push_back(i + 1);
    fails.push_back(one_based);
  }
  return {{"mconvex", r.mconvex}, {"nonneg_coeffs", r.nonneg_coeffs}, {"hessian_failures", fails},
          {"is_lorentzian", r.is_lorentzian}};
}

json to_json(const KReport& r) {
  json j = {{"k", r.k},
            {"m_k", r.m_k},
            {"B_k_size", r.b_k_size},
            {"centre_dim", r.centre_dim},
            {"faces_checked", r.faces_checked},
            {"disjoint", to_string(r.disjoint)}};
  if (r.witness) {
    j["witness_face"] = {{"dim", r.witness->face.dim},
                         {"vertices", r.witness->vertices},
                         {"lattice_points", r.witness->face.lattice_points},
                         {"method", to_string(r.witness->verdict.method)},
                         {"certificate", r.witness->verdict.certificate}};
  } else {
    j["witness_face"] = nullptr;
  }
  return j;
}

json to_json(const SmoothnessCertificate& c) {
  json j;
  j["schema"] = kSchema;
  j["polynomial"] = c.polynomial;
  j["n"] = c.n;
  j["d"] = c.d;
  j["mconvex"] = c.mconvex;
  if (c.mconvex_report && !c.mconvex_report->holds)
    j["mconvex_witness"] = {{"x", c.mconvex_report->x->entries()},
                            {"y", c.mconvex_report->y->entries()},
                            {"i", *c.mconvex_report->index + 1}};
  j["lorentzian"] = c.lorentzian ? to_json(*c.lorentzian) : json(nullptr);
  json ks = json::array();
  for (const auto& k : c.k_reports) ks.push_back(to_json(k));
  j["per_k"] = ks;
  j["verdict"] = to_string(c.verdict);
  j["smooth_polytope"] = c.polytope ? to_json(*c.polytope) : json(nullptr);
  return j;
}

LatticePolytope polytope_from_json(const json& j) {
  const auto verts = j.at("vertices").get<std::vector<LatticePoint>>();
  if (verts.empty()) throw std::invalid_argument("polytope JSON without vertices");
  return LatticePolytope::from_points(j.at("ambient_dim").get<std::size_t>(), PointSet(verts.begin(), verts.end()));
}

SetFunction set_function_from_json(const json& j) {
  return SetFunction(j.at("n").get<std::size_t>(), j.at("values").get<std::vector<long>>());
}

}  // namespace omegalab
