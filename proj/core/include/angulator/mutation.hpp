#pragma once

// Mutation of weak cotorsion pairs at a rigid base.
//
// Fix a rigid set D and put Z = nc(D).  Forward mutation plays the role of
// the inverse D-mutation and reduces to the d-fold suspension when D is
// empty; Backward is its inverse.  Both carry weak cotorsion pairs whose
// core contains D to weak cotorsion pairs again and commute with cores.
//
// For d = 1 the mutation has a concrete polygon realization: the chords of
// D cut the polygon into cells, every member of Z \ D lives in exactly one
// cell, and mutation rotates it one step around its cell, Forward towards
// the previous cell vertex.  No combinatorial rule is realized for d >= 2
// with a nonzero base, and that regime is rejected.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "angulator/model.hpp"
#include "angulator/pairs.hpp"
#include "angulator/report.hpp"

namespace angulator {

enum class Direction { Forward, Backward };

const char* to_string(Direction dir);

// Cells of the polygon cut along the base chords, each an ascending vertex
// list, ordered by smallest vertex, then size, then lexicographically.
struct CellDecomposition {
    std::vector<std::vector<int>> cells;
};

class MutationContext {
public:
    // Requires calc.is_rigid(dset).  On explicit models the forward and
    // backward perpendiculars of dset must agree (HypothesisError if not);
    // type A models satisfy that automatically.  The context keeps its own
    // copy of the calculus.
    static MutationContext make(const NcCalculus& calc, ObjectSet dset);

    const NcCalculus& calc() const { return calc_; }
    const HomModel& model() const { return calc_.model(); }
    ObjectSet dset() const { return dset_; }
    ObjectSet z() const { return z_; }

    bool has_cells() const { return cells_.has_value(); }
    const CellDecomposition& cells() const; // UnsupportedError without polygon geometry
    int cell_of(int obj) const;             // for objects in z \ dset

    // One step around the containing cell; identity on dset members.
    int rotate_in_cell(int obj, Direction dir) const;

private:
    explicit MutationContext(NcCalculus calc) : calc_(std::move(calc)) {}

    NcCalculus calc_;
    ObjectSet dset_ = 0;
    ObjectSet z_ = 0;
    std::optional<CellDecomposition> cells_;
    std::vector<int> cell_index_;
    std::vector<int> fwd_image_;
    std::vector<int> bwd_image_;
};

// Mutation at the empty base: the d-fold suspension (Forward) or its
// inverse (Backward), elementwise.  Defined for every model.
ObjectSet mutate_set_zero(const HomModel& model, ObjectSet s, Direction dir);

// Single-object mutation in the d = 1 polygon realization.  Requires a
// type A model with d = 1 and obj in Z; members of dset are fixed.
int mutate_diagonal_d1(const MutationContext& ctx, int obj, Direction dir);

// Mutation of a set S with dset subset of S subset of Z.  Empty base: the
// suspension rule.  d = 1 type A: elementwise cell rotation.  Anything
// else with a nonzero base is UnsupportedError.
ObjectSet mutate_set(const MutationContext& ctx, ObjectSet s, Direction dir);

// Forward and Backward are mutually inverse on all admissible sets of the
// context.  Admissible means dset subset of S subset of Z.
CheckReport check_prop_4_12(const MutationContext& ctx);

// Mutation preserves weak cotorsion pairs and commutes with cores, checked
// in both directions.  When exhaustive and the model is type A with d = 1,
// every subset of every core serves as a base; otherwise only the empty
// base.  Also checks that for each base and direction the map is a
// bijection of the pairs whose core contains the base.
CheckReport check_theorem_4_13(const NcCalculus& calc, bool exhaustive);

// Same, restricted to one base.  Pairs whose core does not contain the
// base are skipped.
CheckReport check_theorem_4_13(const NcCalculus& calc, ObjectSet only_dset);

} // namespace angulator
