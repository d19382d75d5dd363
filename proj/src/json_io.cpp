#include "gkdim/json_io.hpp"

namespace gkdim {

using nlohmann::json;

json to_json(const YoungTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

YoungTableau tableau_from_json(const json& j) {
  std::vector<YoungTableau::Row> rows;
  for (const auto& r : j) {
    YoungTableau::Row row;
    for (const auto& x : r) row.push_back(Rational::parse(x.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return YoungTableau(std::move(rows));
}

json to_json(const GKReport& r) {
  json classes = json::array();
  for (std::size_t i = 0; i < r.classes.classes.size(); ++i) {
    classes.push_back({{"indices", r.classes.classes[i].indices},
                       {"tableau", to_json(r.tableaux.tableaux[i])}});
  }
  return {{"n", r.n},
          {"nu0", r.nu0},
          {"a_value", r.a_value},
          {"gk_dimension", r.gk_dimension},
          {"integral", r.integral},
          {"classes", std::move(classes)}};
}

json to_json(const HermitianReport& r) {
  json column = json::array();
  for (const auto& x : r.second_column) column.push_back(x.to_string());
  json xi = json::array();
  if (r.xi) xi = r.xi->runs();
  return {{"p", r.p},
          {"q", r.q},
          {"integral", r.integral},
          {"m", r.m},
          {"second_column", std::move(column)},
          {"xi", std::move(xi)},
          {"gk_dimension", r.gk_dimension},
          {"orbit_index", r.orbit_index},
          {"orbit_dimension", r.orbit_dimension}};
}

json to_json(const UnitaryInterval& iv) {
  return {{"p_prime", iv.p_prime},
          {"q_prime", iv.q_prime},
          {"threshold_real", iv.threshold_real.to_string()},
          {"threshold_int", iv.threshold_int}};
}

}  // namespace gkdim
