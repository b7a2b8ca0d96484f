#pragma once

// JSON (nlohmann) and DOT serialization for the CLI. Output is canonically
// ordered so identical invocations are byte-identical.

#include <json.hpp>
#include <string>

#include "tubing/qsym.hpp"
#include "tubing/shortest.hpp"
#include "tubing/shuffle.hpp"
#include "tubing/tableau.hpp"
#include "tubing/tubing.hpp"

namespace tubing {

nlohmann::json to_json(const Perm& w);
nlohmann::json to_json(const ReducedWord& rw);
nlohmann::json to_json(const SimpleGraph& g);
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const GridTableau& t);
// Composition tableaux carry a "comp" key instead of "outer".
nlohmann::json syct_to_json(const Tableau& t);
nlohmann::json to_json(const QSymExpr& q);
nlohmann::json to_json(const CycleWord& gamma);
nlohmann::json to_json(const TaggedShuffle& sh);
nlohmann::json walk_to_json(const std::vector<Inversion>& walk);

Perm perm_from_json(const nlohmann::json& j);
ReducedWord reduced_word_from_json(const nlohmann::json& j);
SimpleGraph graph_from_json(const nlohmann::json& j);
Tableau tableau_from_json(const nlohmann::json& j);

nlohmann::json lattice_to_json(const TubingLattice& lat);
std::string lattice_to_dot(const TubingLattice& lat);
// Weak order S_N with G-equivalence classes drawn as clusters; N <= 4.
std::string weak_order_overlay_dot(const SimpleGraph& g);

std::string perm_to_string(const Perm& w);

}  // namespace tubing
