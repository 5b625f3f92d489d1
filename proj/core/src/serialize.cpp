#include "jordan/serialize.hpp"

#include "jordan/errors.hpp"

namespace jordan {

using nlohmann::json;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

json algebra_to_json(const Algebra& algebra) {
  switch (algebra.kind()) {
    case AlgebraKind::Matrix:
      return {{"kind", "matrix"}, {"ring", std::string(ring_symbol(algebra.ring()))}, {"m", algebra.size()}};
    case AlgebraKind::Spin:
      return {{"kind", "spin"}, {"n", algebra.size()}};
    case AlgebraKind::Sum: {
      json parts = json::array();
      for (const auto& p : algebra.parts()) parts.push_back(algebra_to_json(p));
      return {{"kind", "sum"}, {"parts", parts}};
    }
  }
  return nullptr;
}

Algebra algebra_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("algebra descriptor must be a JSON object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "matrix") return Algebra::matrix(parse_ring(j.at("ring").get<std::string>()), j.at("m").get<int>());
    if (kind == "spin") return Algebra::spin(j.at("n").get<int>());
    if (kind == "sum") {
      std::vector<Algebra> parts;
      for (const auto& p : j.at("parts")) parts.push_back(algebra_from_json(p));
      return Algebra::sum(parts);
    }
    throw ParseError("unknown algebra kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra descriptor: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid algebra descriptor: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid algebra descriptor: ") + e.what());
  }
}

Algebra parse_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra descriptor is not valid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

json element_to_json(const Element& e) { return {{"algebra", algebra_to_json(e.algebra())}, {"coords", e.coords()}}; }

Element element_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("element must be a JSON object");
    Algebra alg = algebra_from_json(j.at("algebra"));
    auto coords = j.at("coords").get<std::vector<double>>();
    return Element(std::move(alg), std::move(coords));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed element: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid element: ") + e.what());
  }
}

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.get<std::vector<std::vector<double>>>();
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols()) throw ParseError("ragged matrix");
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
  }
}

json report_to_json(const CheckReport& r) {
  return {{"property", r.property},
          {"verdict", std::string(verdict_name(r.verdict))},
          {"trials", r.trials},
          {"evaluated", r.evaluated},
          {"worst_residual", r.worst_residual},
          {"message", r.message},
          {"witness", r.witness}};
}

json spectral_to_json(const SpectralDecomposition& sd) {
  json spaces = json::array();
  for (const auto& s : sd.spaces) {
    json atoms = json::array();
    for (const auto& e : s.atoms) atoms.push_back(e.coords());
    spaces.push_back({{"eigenvalue", s.value}, {"multiplicity", s.atoms.size()}, {"atoms", atoms}});
  }
  return {{"algebra", algebra_to_json(sd.algebra)}, {"spaces", spaces}};
}

json tolerances_to_json(const Tolerances& t) {
  return {{"symmetry", t.symmetry}, {"eigen_cluster", t.eigen_cluster}, {"projection", t.projection},
          {"meet_eigenvalue", t.meet_eigenvalue}, {"compare", t.compare}, {"cone", t.cone},
          {"rank_drop", t.rank_drop}};
}

void set_tolerance(Tolerances& t, const std::string& name, double value) {
  if (!(value > 0.0)) throw ParseError("tolerance '" + name + "' must be positive");
  if (name == "symmetry") t.symmetry = value;
  else if (name == "eigen_cluster") t.eigen_cluster = value;
  else if (name == "projection") t.projection = value;
  else if (name == "meet_eigenvalue") t.meet_eigenvalue = value;
  else if (name == "compare") t.compare = value;
  else if (name == "cone") t.cone = value;
  else if (name == "rank_drop") t.rank_drop = value;
  else throw ParseError("unknown tolerance '" + name + "'");
}

json construction_to_json(const SpinConstruction& c) {
  return {{"source", algebra_to_json(c.source)},
          {"s_o", c.s_o},
          {"invariance_residual", c.product_o.invariance_residual},
          {"product_o", matrix_to_json(c.product_o.gram)},
          {"product_1", matrix_to_json(c.product_1.gram)},
          {"v_basis", matrix_to_json(c.v_basis)},
          {"table", {{"dim", c.table.dim()}, {"unit", c.table.unit()}, {"constants", c.table.constants()}}}};
}

SpinConstruction construction_from_json(const json& j) {
  try {
    const Algebra alg = algebra_from_json(j.at("source"));
    const double residual = j.at("invariance_residual").get<double>();
    InnerProductForm o{alg, matrix_from_json(j.at("product_o")), residual};
    InnerProductForm p1{alg, matrix_from_json(j.at("product_1")), residual};
    const auto& t = j.at("table");
    const auto dim = t.at("dim").get<std::size_t>();
    ProductTable table(dim, t.at("unit").get<std::vector<double>>());
    const auto constants = t.at("constants").get<std::vector<double>>();
    if (constants.size() != dim * dim * dim) throw ParseError("product table has the wrong number of constants");
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t l = 0; l < dim; ++l) table.at(k, i, l) = constants[(k * dim + i) * dim + l];
    return SpinConstruction{alg, std::move(o), std::move(p1), j.at("s_o").get<double>(),
                            matrix_from_json(j.at("v_basis")), std::move(table)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed construction: ") + e.what());
  }
}

}  // namespace jordan
