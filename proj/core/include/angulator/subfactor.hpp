#pragma once

// Subfactor models Z/D for d = 1 polygon models.
//
// Cutting the polygon along a non-crossing base D leaves cells, and the
// diagonals of Z \ D distribute over the cells, each cell with k >= 4
// vertices carrying a copy of the (k - 3, 1) polygon model under the
// order-preserving renumbering of its vertices.  Extensions survive inside
// a cell and vanish across cells, so the weak cotorsion pairs of the
// subfactor are the products of the cellwise pairs, and they correspond to
// the parent pairs whose core contains D by cutting D out and gluing it
// back in.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "angulator/model.hpp"
#include "angulator/mutation.hpp"
#include "angulator/pairs.hpp"
#include "angulator/report.hpp"

namespace angulator {

struct SubfactorObject {
    int parent_index = -1; // object index in the parent model
    int cell = -1;         // index into cells()
    Diagonal local;        // the diagonal of the cell's own polygon model
};

class SubfactorModel {
public:
    const NcCalculus& parent_calc() const { return parent_; }
    const HomModel& parent_model() const { return parent_.model(); }
    ObjectSet dset() const { return dset_; }
    ObjectSet z() const { return z_; }

    const std::vector<std::vector<int>>& cells() const { return cells_; }

    // Local (n, d) parameters of a cell; nullopt for triangle cells, which
    // carry no diagonals.
    std::optional<ModelParams> cell_params(int cell) const;

    // Objects of Z \ D in ascending parent index order.
    const std::vector<SubfactorObject>& objects() const { return objects_; }
    int slot_of_parent(int parent_index) const; // -1 when not in Z \ D
    int parent_of_local(int cell, const Diagonal& local) const; // -1 when absent

    // Extension in the subfactor: same cell and locally crossing.  For two
    // members of Z \ D this agrees with the parent ext.  Arguments outside
    // Z \ D are a DomainError.
    bool local_ext(int parent_u, int parent_v) const;

    // The subfactor as an explicit model: objects Z \ D with their parent
    // labels, ext from local_ext, shift from the Forward cell rotation.
    HomModel explicit_model() const;

private:
    friend SubfactorModel build_subfactor(const NcCalculus& parent, ObjectSet dset);

    explicit SubfactorModel(NcCalculus parent) : parent_(std::move(parent)) {}

    NcCalculus parent_;
    ObjectSet dset_ = 0;
    ObjectSet z_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<SubfactorObject> objects_;
    std::vector<int> slot_of_parent_;
    std::vector<int> fwd_rotation_; // Forward image per slot
};

// Requires a type A parent with d = 1 and a rigid (non-crossing) dset.
// The subfactor keeps its own copy of the parent calculus.
SubfactorModel build_subfactor(const NcCalculus& parent, ObjectSet dset);

// Verifies the correspondence between parent pairs whose core contains
// dset and the subfactor pairs, in both directions, and that the subfactor
// pairs computed directly agree with the cellwise products.
CheckReport check_theorem_4_11(const NcCalculus& parent, ObjectSet dset);

} // namespace angulator
