#pragma once

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "fibdig/digraph.hpp"
#include "fibdig/polynomial.hpp"

namespace fibdig {

/// One `digraph` block; labels are node names and an arc of multiplicity m is
/// written as m repeated edges.
void write_dot(std::ostream& out, const Digraph& g, const std::string& name);

/// One `tail,head,multiplicity` line per distinct arc, labels quoted when needed.
void write_edge_csv(std::ostream& out, const Digraph& g);

/// Order, arc count, degree histograms, and diameter (null if not strongly connected).
nlohmann::json metrics_json(const Digraph& g);

/// Coefficient array, constant term first. Values beyond 64 bits become decimal strings.
nlohmann::json polynomial_json(const IntPolynomial& p);

}  // namespace fibdig
