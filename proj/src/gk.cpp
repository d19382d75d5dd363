#include "gkdim/gk.hpp"

namespace gkdim {

std::size_t TableauCollection::boxes() const {
  std::size_t total = 0;
  for (const auto& t : tableaux) total += t.boxes();
  return total;
}

CongruenceDecomposition congruence_decomposition(const Weight& w) {
  CongruenceDecomposition d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    CongruenceClass* home = nullptr;
    for (auto& c : d.classes) {
      if (differ_by_integer(c.subweight.front(), w[i])) {
        home = &c;
        break;
      }
    }
    if (!home) home = &d.classes.emplace_back();
    home->indices.push_back(i + 1);
    home->subweight.push_back(w[i]);
  }
  return d;
}

TableauCollection tableau_collection(const CongruenceDecomposition& d) {
  TableauCollection out;
  out.tableaux.reserve(d.classes.size());
  for (const auto& c : d.classes) out.tableaux.push_back(insertion_tableau(std::span<const Rational>(c.subweight)));
  return out;
}

TableauCollection tableau_collection(const Weight& w) {
  if (is_integral(w)) return {{insertion_tableau(w.entries())}};
  return tableau_collection(congruence_decomposition(w));
}

namespace {

std::size_t total_statistic(const TableauCollection& tc) {
  std::size_t a = 0;
  for (const auto& t : tc.tableaux) a += column_statistic(t.shape());
  return a;
}

}  // namespace

std::size_t a_value(const Weight& w) { return total_statistic(tableau_collection(w)); }

GKReport gk_dimension(const Weight& w) {
  GKReport r;
  r.n = w.size();
  r.nu0 = positive_root_count(r.n);
  r.classes = congruence_decomposition(w);
  r.tableaux = tableau_collection(r.classes);
  r.integral = r.classes.classes.size() == 1;
  r.a_value = total_statistic(r.tableaux);
  r.gk_dimension = r.nu0 - r.a_value;
  return r;
}

}  // namespace gkdim
