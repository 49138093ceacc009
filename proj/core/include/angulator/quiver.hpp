#pragma once

#include <string>

#include "angulator/model.hpp"

namespace angulator {

enum class QuiverKind { Hom, Ext };

// Graphviz DOT text for the model's quiver.  Hom: one arrow X -> Y per
// ordered pair with hom_nonzero(X, Y) and X != Y.  Ext: one undirected
// edge (dir=none) per unordered pair with a nonvanishing extension in
// either direction, self-loops included.  Node and edge lines follow the
// canonical object order, so the output is byte-stable.
std::string emit_quiver(const HomModel& model, QuiverKind kind);

} // namespace angulator
