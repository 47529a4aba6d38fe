#ifndef SUPERAL_SERIALIZE_HPP
#define SUPERAL_SERIALIZE_HPP

#include "superal/algebra.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace superal {

/// Deterministic JSON description of an algebra: graded space, basis
/// matrices, and the nonzero structure constants [e_i, e_j] = sum_m c^m e_m.
/// Every scalar is rendered as an exact decimal/fraction string.
/// Row-major array of exact fraction strings.
inline nlohmann::json matrix_to_json(const SuperMatrix<Rational>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dim().total(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dim().total(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json algebra_to_json(const SuperAlgebra& g) {
  nlohmann::json j;
  j["name"] = g.name();
  j["space"] = {{"even", std::to_string(g.space().even)}, {"odd", std::to_string(g.space().odd)}};
  j["dimension"] = std::to_string(g.dim());
  j["even_dimension"] = std::to_string(g.even_dim());
  j["odd_dimension"] = std::to_string(g.odd_dim());

  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i) {
    nlohmann::json b;
    b["index"] = std::to_string(i);
    b["parity"] = std::to_string(g.parity_bit(i));
    b["matrix"] = matrix_to_json(g.basis(i));
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);

  nlohmann::json sc = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = 0; jj < g.dim(); ++jj) {
      const VecX<Rational>& c = g.bracket_coords(i, jj);
      nlohmann::json coords = nlohmann::json::object();
      for (int m = 0; m < g.dim(); ++m)
        if (!c[m].is_zero()) coords[std::to_string(m)] = c[m].str();
      if (!coords.empty())
        sc.push_back({{"i", std::to_string(i)}, {"j", std::to_string(jj)}, {"coords", std::move(coords)}});
    }
  j["structure_constants"] = std::move(sc);

  if (g.defining_form()) j["defining_form"] = matrix_to_json(*g.defining_form());
  return j;
}

/// Human-oriented text rendering of the same data (basis matrices row by
/// row, then the nonzero brackets).
inline std::string algebra_to_text(const SuperAlgebra& g) {
  std::ostringstream os;
  os << "algebra:   " << g.name() << "\n";
  os << "space:     (" << g.space().even << "|" << g.space().odd << ")\n";
  os << "dimension: " << g.dim() << " = " << g.even_dim() << " even + " << g.odd_dim() << " odd\n";
  for (int i = 0; i < g.dim(); ++i) {
    os << "e" << i << " (" << (g.parity_bit(i) ? "odd" : "even") << "):\n";
    const SuperMatrix<Rational>& m = g.basis(i);
    for (int r = 0; r < m.dim().total(); ++r) {
      os << " ";
      for (int c = 0; c < m.dim().total(); ++c) os << " " << m(r, c).str();
      os << "\n";
    }
  }
  os << "nonzero brackets:\n";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      const VecX<Rational>& c = g.bracket_coords(i, j);
      bool any = false;
      for (int m = 0; m < g.dim(); ++m) any = any || !c[m].is_zero();
      if (!any) continue;
      os << "  [e" << i << ", e" << j << "] =";
      bool first = true;
      for (int m = 0; m < g.dim(); ++m) {
        if (c[m].is_zero()) continue;
        os << (first ? " " : " + ") << c[m].str() << "*e" << m;
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace superal

#endif  // SUPERAL_SERIALIZE_HPP
