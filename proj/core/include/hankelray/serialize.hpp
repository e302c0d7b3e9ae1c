#pragma once

#include <string>

#include "hankelray/cayley_bacharach.hpp"
#include "hankelray/diesel.hpp"
#include "hankelray/extremal.hpp"
#include "hankelray/functional.hpp"
#include "hankelray/qmatrix.hpp"

namespace hankelray {

// CSV: one line per row, entries "p/q" with "/1" omitted.
std::string qmatrix_to_csv(const QMatrix& m);
QMatrix qmatrix_from_csv(const std::string& csv);

// JSON: nested arrays of "p/q" strings.
std::string qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const std::string& json_text);

// JSON: list of [a, b, c, "p/q"] records in basis order.
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& json_text);

// JSON: {socle_degree, values: ["p/q", ...], support: [{weight, point}]}.
std::string functional_to_json(const Functional& ell);
Functional functional_from_json(const std::string& json_text);

std::string hilbert_to_json(const HilbertFunction& h);

std::string certificate_to_json(const ExtremeRayCertificate& cert);

// The relation rendered on the d x d grid: entry (i, j), 1-based, is the
// coefficient of the evaluation at (d-i : j-1 : 1); points outside the
// relation get 0.
QMatrix relation_grid_matrix(const Relation& rel, int d);
std::string relation_grid_json(const Relation& rel, int d);

std::string corank4_report_to_json(const Corank4Report& report);

std::string construction_to_json(const ConstructionResult& c,
                                 const ExtremeRayCertificate& cert);

}  // namespace hankelray
