#pragma once

// Gelfand-Kirillov dimension of simple highest weight sl(n)-modules.
//
// Positions whose lambda+rho entries differ by integers form a congruence
// class; each class is row-inserted on its own, and
//   GKdim L(lambda) = n(n-1)/2 - sum over classes of A(P(lambda_X)).

#include <cstddef>
#include <vector>

#include "gkdim/tableau.hpp"
#include "gkdim/weight.hpp"

namespace gkdim {

struct CongruenceClass {
  std::vector<std::size_t> indices;  // 1-based, increasing
  std::vector<Rational> subweight;   // entries at those indices, original order
};

// Classes ordered by first occurrence in the weight.
struct CongruenceDecomposition {
  std::vector<CongruenceClass> classes;
};

// One tableau per congruence class, in the same order.
struct TableauCollection {
  std::vector<YoungTableau> tableaux;
  std::size_t boxes() const;
};

struct GKReport {
  std::size_t n = 0;
  std::size_t nu0 = 0;
  std::size_t a_value = 0;
  std::size_t gk_dimension = 0;
  bool integral = false;
  CongruenceDecomposition classes;
  TableauCollection tableaux;
};

CongruenceDecomposition congruence_decomposition(const Weight& w);
TableauCollection tableau_collection(const Weight& w);
TableauCollection tableau_collection(const CongruenceDecomposition& d);
std::size_t a_value(const Weight& w);
GKReport gk_dimension(const Weight& w);

inline std::size_t positive_root_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace gkdim
