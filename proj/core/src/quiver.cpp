#include "angulator/quiver.hpp"

namespace angulator {

std::string emit_quiver(const HomModel& model, QuiverKind kind) {
    std::string out;
    out += kind == QuiverKind::Hom ? "digraph hom {\n" : "digraph ext {\n";
    if (kind == QuiverKind::Ext) out += "  edge [dir=none];\n";
    int n = model.size();
    for (int i = 0; i < n; ++i) out += "  \"" + model.label(i) + "\";\n";
    for (int i = 0; i < n; ++i) {
        if (kind == QuiverKind::Hom) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (model.hom_nonzero(i, j))
                    out += "  \"" + model.label(i) + "\" -> \"" + model.label(j) + "\";\n";
            }
        } else {
            for (int j = i; j < n; ++j) {
                if (model.ext(i, j) || model.ext(j, i))
                    out += "  \"" + model.label(i) + "\" -> \"" + model.label(j) + "\";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

} // namespace angulator
