#include "octodp/report.hpp"

#include "octodp/discriminant.hpp"

#include <sstream>

namespace octodp {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ExtValuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json to_json(const ProjPoint& p) {
  Json out = Json::array();
  for (const auto& x : p.coords()) out.push_back(to_json(x));
  return out;
}

Json to_json(const ModuliVector& d) {
  Json out = Json::array();
  for (const auto& x : d.values()) out.push_back(to_json(x));
  return out;
}

Json to_json(const OctanomialCoefficients& c) {
  Json out = Json::object();
  for (int i = 0; i < 8; ++i) out[std::string(1, kCoefficientNames[i])] = to_json(c.values[i]);
  return out;
}

Json to_json(const QuaternaryCubic& f) {
  Json out = Json::array();
  for (const auto& [exp, coeff] : f.poly.terms()) out.push_back(Json::array({exp, to_json(coeff)}));
  return out;
}

static Json plucker_json(const Plucker& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_json(x));
  return out;
}

static Json triangulation_json(const Triangulation& t) {
  Json cells = Json::array();
  for (PointSet s : t.cells) cells.push_back(point_set_label(s));
  return cells;
}

Json build_report(const ModuliVector& d) {
  const auto c = coefficients_from_moduli(d);
  const auto disc = full_discriminant(c);
  Json out;
  out["moduli"] = to_json(d);
  out["coefficients"] = to_json(c);
  out["coefficient_sum"] = to_json(c.sum());
  out["cubic"] = to_json(octanomial_cubic(c));
  const auto basis = plane_cubic_basis(d);
  out["plane_cubic_basis"] = {{"x", to_string(basis.x)},
                              {"y", to_string(basis.y)},
                              {"z", to_string(basis.z)},
                              {"w", to_string(basis.w)}};
  out["parametrization_holds"] = verify_parametrization(d);
  out["discriminant"] = {{"value", to_json(disc.full_discriminant)},
                         {"a_discriminant", to_json(disc.a_disc_value)},
                         {"principal_a_determinant", to_json(disc.principal_value)},
                         {"smooth", disc.is_smooth}};
  if (disc.vanishing_factor) out["discriminant"]["vanishing_factor"] = *disc.vanishing_factor;
  return out;
}

Json census_report(const LineCensus& census) {
  Json out;
  out["coefficients"] = to_json(census.coefficients);
  Json lines = Json::array();
  for (const auto& l : census.lines) lines.push_back({{"label", to_string(l.label)}, {"plucker", plucker_json(l.p)}});
  out["lines"] = lines;
  Json points = Json::array();
  for (const auto& [pair, pt] : census.intersections) {
    points.push_back({{"lines", {to_string(LineLabel::from_index(pair.first)), to_string(LineLabel::from_index(pair.second))}},
                      {"point", to_json(pt)}});
  }
  out["incident_pairs"] = census.incident_pair_count();
  out["intersections"] = points;
  out["schlafli"] = is_schlafli_graph(census.incidence);
  return out;
}

Json classification_report(const Classification& c, bool with_trees) {
  Json out;
  out["moduli"] = to_json(c.moduli);
  out["prime"] = c.prime.value();
  out["coefficients"] = to_json(c.coefficients);
  Json vals = Json::object();
  for (int i = 0; i < 8; ++i) vals[std::string(1, kCoefficientNames[i])] = to_json(c.valuations[i]);
  out["valuations"] = vals;

  Json smooth;
  smooth["tropically_smooth"] = c.smoothness.smooth();
  smooth["boundary"] = c.smoothness.boundary;
  Json cells = Json::array();
  for (PointSet s : c.smoothness.subdivision) cells.push_back(point_set_label(s));
  smooth["subdivision"] = cells;
  if (c.smoothness.triangulation_class) {
    const int row = *c.smoothness.triangulation_class;
    smooth["triangulation_class"] = row;
    smooth["sr_ideal"] = to_string(sr_ideal(c.smoothness.triangulation->cells));
    smooth["gkz"] = gkz_vector(*c.smoothness.triangulation);
  }
  out["smoothness"] = smooth;

  const auto init = initial_form_check(c.coefficients, c.prime);
  out["discriminant"] = {{"nonzero", init.discriminant_nonzero},
                         {"min_term_valuation", to_json(init.min_term_valuation)},
                         {"min_term_count", init.min_term_count},
                         {"delta_valuation", to_json(init.delta_valuation)}};

  out["distinct_tropical_lines"] = c.distinct_lines.distinct;
  if (c.distinct_lines.collision) {
    out["collision"] = {to_string(c.distinct_lines.collision->first), to_string(c.distinct_lines.collision->second)};
  }

  Json per_line = Json::object();
  for (std::size_t i = 0; i < c.arrangement.strings.size(); ++i)
    per_line[to_string(LineLabel::from_index(static_cast<int>(i)))] = to_string(c.arrangement.strings[i]);
  out["split_strings"] = per_line;
  out["statistic"] = to_string(c.arrangement.statistic);
  out["type"] = to_string(c.type);

  if (with_trees) {
    Json trees = Json::object();
    for (std::size_t i = 0; i < c.arrangement.trees.size(); ++i)
      trees[to_string(LineLabel::from_index(static_cast<int>(i)))] = to_newick(c.arrangement.trees[i], true);
    out["trees"] = trees;
  }
  return out;
}

Json triangulation_census_report() {
  const auto& regular = enumerate_regular_triangulations();
  std::vector<Triangulation> ts;
  for (const auto& r : regular) ts.push_back(r.triangulation);
  const auto orbits = symmetry_orbits(ts);

  std::size_t unimodular = 0, unimodular_orbits = 0;
  Json orbit_list = Json::array();
  for (const auto& orbit : orbits) {
    const auto& rep = regular[orbit.front()];
    Json o;
    o["size"] = orbit.size();
    o["unimodular"] = rep.triangulation.is_unimodular();
    o["cells"] = triangulation_json(rep.triangulation);
    o["sr_ideal"] = to_string(sr_ideal(rep.triangulation.cells));
    o["gkz"] = gkz_vector(rep.triangulation);
    Json w = Json::array();
    for (const auto& x : rep.witness) w.push_back(to_json(x));
    o["weights"] = w;
    if (rep.triangulation.is_unimodular()) {
      unimodular += orbit.size();
      ++unimodular_orbits;
      const int row = unimodular_class(rep.triangulation);
      o["table_row"] = row;
      o["table_weights"] = unimodular_class_table()[row - 1].weights;
    }
    orbit_list.push_back(o);
  }
  Json out;
  out["regular_triangulations"] = regular.size();
  out["orbits"] = orbits.size();
  out["unimodular_triangulations"] = unimodular;
  out["unimodular_orbits"] = unimodular_orbits;
  out["symmetry_group_order"] = symmetry_group().size();
  Json facets = Json::array();
  for (PointSet f : support_facets()) facets.push_back(point_set_label(f));
  out["facets"] = facets;
  out["census"] = orbit_list;
  return out;
}

Json roundtrip_report(const RoundTrip& r) {
  Json out;
  Json pts = Json::array();
  for (const auto& p : r.recovered) pts.push_back(to_json(p));
  out["recovered_points"] = pts;
  Json t = Json::array();
  for (std::size_t i = 0; i < r.transform.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : r.transform.row(i)) row.push_back(to_json(x));
    t.push_back(row);
  }
  out["transform"] = t;
  out["projective"] = r.projective;
  out["configuration"] = r.configuration;
  out["pass"] = r.ok();
  return out;
}

Json finding_report(const Finding& f) {
  Json out;
  out["draw"] = f.draw;
  Json basis = Json::array();
  for (int k : f.seed.basis) basis.push_back(root_matrix()[k].label);
  out["basis"] = basis;
  out["exponents"] = f.seed.exponents;
  Json units = Json::array();
  for (const auto& u : f.seed.units) units.push_back(to_json(u));
  out["units"] = units;
  out["classification"] = classification_report(f.classification);
  return out;
}

std::string schlafli_dot(const LineCensus& census) {
  std::ostringstream os;
  os << "graph schlafli {\n";
  for (int i = 0; i < 27; ++i) os << "  " << to_string(LineLabel::from_index(i)) << ";\n";
  for (const auto& [pair, pt] : census.intersections)
    os << "  " << to_string(LineLabel::from_index(pair.first)) << " -- "
       << to_string(LineLabel::from_index(pair.second)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string arrangement_newick(const TreeArrangement& arrangement, const LineCensus& census) {
  std::ostringstream os;
  for (std::size_t i = 0; i < arrangement.trees.size(); ++i)
    os << to_string(census.lines[i].label) << " " << to_newick(arrangement.trees[i], true) << "\n";
  return os.str();
}

}  // namespace octodp
