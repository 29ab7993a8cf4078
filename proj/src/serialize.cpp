#include "metatheta/serialize.hpp"

namespace metatheta {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const UnipotentFamily& fam) {
  Json dirs = Json::array();
  for (const auto& d : fam.directions) {
    Json triples = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d.at(i, j) != 0) triples.push_back(Json::array({i + 1, j + 1, to_string(d.at(i, j))}));
    dirs.push_back(triples);
  }
  return Json{{"name", fam.name}, {"n", fam.n}, {"labels", fam.labels}, {"directions", dirs}};
}

Json to_json(const CharacterFunctional& chi) {
  Json w = Json::array();
  for (const auto& [root, c] : chi.weights)
    if (c != 0) w.push_back(Json::array({root.first, root.second, to_string(c)}));
  return w;
}

Json to_json(const CycScalar& c) {
  return Json{{"modulus", c.modulus()}, {"coefficients", c.coefficients()}};
}

Json to_json(const CycValue& v) {
  return Json{{"modulus", v.value.modulus()},
              {"coefficients", v.value.coefficients()},
              {"q_exp", to_string(v.q_exp)},
              {"is_zero", v.value.is_zero()}};
}

Json to_json(const FormalScalar& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(Json{{"weil_exp", m.weil_exp},
                         {"q_exp", to_string(m.q_exp)},
                         {"coeff", to_json(c)},
                         {"tokens", m.tokens}});
  return terms;
}

Json to_json(const OrbitReport& r) {
  return Json{{"orbit", to_json(r.orbit)},
              {"gk_dim", to_json(r.gk_dim)},
              {"target_dim", to_json(r.target_dim)},
              {"satisfied", r.satisfied},
              {"balance_lhs", to_json(r.balance_lhs)},
              {"balance_rhs", to_json(r.balance_rhs)},
              {"balanced", r.balanced}};
}

Json to_json(const TransportReport& r) {
  Json j{{"step", r.step},
         {"anchor", r.anchor},
         {"n", r.n},
         {"r", r.r},
         {"a", r.a},
         {"pass", r.ok()},
         {"closed", r.closed},
         {"span_equal", r.span_equal},
         {"character_exact", r.character_exact},
         {"character_matches", r.character_matches},
         {"sign_mask", r.sign_mask},
         {"source_dim", r.source_dim},
         {"target_dim", r.target_dim}};
  if (!r.ok()) {
    j["missing_in_image"] = r.missing_in_image;
    j["extra_in_image"] = r.extra_in_image;
    j["character_mismatch"] = r.character_mismatch;
  }
  return j;
}

Json to_json(const RootExchangeReport& r) {
  return Json{{"pass", r.ok()},
              {"x_abelian", r.x_abelian},
              {"y_abelian", r.y_abelian},
              {"brackets_in_ambient", r.brackets_in_ambient},
              {"nondegenerate", r.nondegenerate},
              {"pairing_rank", r.pairing_rank}};
}

Json to_json(const StabilizerReport& r) {
  Json basis = Json::array();
  for (const auto& m : r.basis) basis.push_back(to_json(m));
  return Json{{"levi_dim", r.levi_dim}, {"dimension", r.dimension}, {"basis", basis}};
}

Json to_json(const HeisenbergReport& r) {
  return Json{{"m", r.m},
              {"k", r.k},
              {"pass", r.ok()},
              {"dimension", r.dimension},
              {"center_dim", r.center_dim},
              {"derived_dim", r.derived_dim},
              {"kernel_normal", r.kernel_normal},
              {"two_step", r.two_step},
              {"coordinates", r.coordinates},
              {"center", r.center}};
}

Json to_json(const PipelineReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(Json{{"name", f.name}, {"exponent", to_json(f.exponent)}});
  return Json{{"n", r.n},
              {"p", r.p},
              {"factors", factors},
              {"gauss_identity", r.gauss_identity},
              {"higher_m_vanishes", r.higher_m_vanishes},
              {"total", to_json(r.total)},
              {"target", to_json(r.target)},
              {"pass", r.ok()}};
}

Json to_json(const FormulaResult& r) {
  Json j{{"n", r.n},
         {"n1", r.n1},
         {"n2", r.n2},
         {"weil_exp", r.weil_exp},
         {"prefactor_q_exp", to_json(r.prefactor_q_exp)},
         {"second_q_exp", to_json(r.second_q_exp)},
         {"t0", r.t0},
         {"t1", r.t1}};
  if (r.gauss) {
    j["p"] = r.p;
    j["gauss_factor"] = to_json(*r.gauss);
  }
  j["terms"] = to_json(r.value);
  j["text"] = r.text();
  return j;
}

Json to_json(const DescentSummary& d) {
  return Json{{"n", d.n},
              {"r", d.r},
              {"r_prime", d.r_prime},
              {"parts", d.parts},
              {"remainder", d.remainder},
              {"radical_dim", d.radical_dim},
              {"orbit", to_json(d.orbit)},
              {"gk_dim", to_json(d.gk_dim)},
              {"dim_eq", d.dim_eq},
              {"balanced", d.balanced}};
}

}  // namespace metatheta
