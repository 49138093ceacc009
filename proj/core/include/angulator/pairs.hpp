#pragma once

// Weak cotorsion pairs via the nc operator.
//
// For a set S of objects, nc(S) collects the objects with no degree-d
// extension against S in either direction.  nc is an antitone Galois
// polarity: S subset of nc(nc(S)), and nc(ncnc(S)) = nc(S).  A pair (X, Y)
// is a weak cotorsion pair when X = nc(Y) and Y = nc(X); equivalently X is
// ncnc-closed with Y = nc(X).  Sets are bitmasks over the model's canonical
// object order, which caps the calculus at 64 objects.

#include <cstdint>
#include <string>
#include <vector>

#include "angulator/model.hpp"
#include "angulator/report.hpp"

namespace angulator {

using ObjectSet = std::uint64_t; // bit i <-> object index i

constexpr int kMaxCalcObjects = 64;      // mask representation bound
constexpr int kMaxBruteForceObjects = 25; // 2^n subset scan guard
constexpr int kMaxEquivalenceObjects = 20; // check_theorem_3_14 guard

inline ObjectSet object_bit(int i) { return ObjectSet{1} << i; }
inline ObjectSet pair_core(ObjectSet x, ObjectSet y) { return x & y; }

// Orders masks as sorted index sequences compared lexicographically, so the
// empty set comes first and {0} precedes {0, 1} precedes {1}.
bool set_lex_less(ObjectSet a, ObjectSet b);

enum class EnumerationStrategy { BruteForce, NextClosure };

enum class SelfPairClass {
    ClusterTilting,   // nc(S) = S and |S| is the maximum rigid cardinality
    MaximalRigidOnly, // nc(S) = S but |S| below the maximum
    NotSelfDual,      // nc(S) != S
};

const char* to_string(SelfPairClass c);

struct WeakCotorsionPair {
    ObjectSet x = 0;
    ObjectSet y = 0;
    ObjectSet core = 0; // always x & y

    friend bool operator==(const WeakCotorsionPair&, const WeakCotorsionPair&) = default;
};

class NcCalculus {
public:
    // Throws CapacityError when the model has more than 64 objects.  The
    // calculus keeps its own copy of the model.
    explicit NcCalculus(HomModel model);

    const HomModel& model() const { return model_; }
    int object_count() const { return count_; }
    ObjectSet universe() const { return universe_; }

    ObjectSet nc(ObjectSet s) const;
    ObjectSet ncnc(ObjectSet s) const;

    // Objects u with ext(u, s) = 0 for all s in S, and the mirror image.
    // These agree on models with a symmetric ext table.
    ObjectSet perp_forward(ObjectSet s) const;
    ObjectSet perp_backward(ObjectSet s) const;

    // No extensions inside S, self-extensions included.
    bool is_rigid(ObjectSet s) const;

    bool is_weak_cotorsion(ObjectSet x, ObjectSet y) const;

    // Size of a largest rigid set, by exact branch and bound.  Cluster
    // tilting is rigid of exactly this cardinality.
    int max_rigid_cardinality() const;
    bool is_cluster_tilting(ObjectSet s) const;
    SelfPairClass classify_self_pair(ObjectSet s) const;

    // Every ordered pair (X, nc(X)) with X = ncnc(X), sorted by X in
    // set_lex_less order.  BruteForce scans all subsets (at most 25
    // objects); NextClosure walks the ncnc-closed sets in lectic order and
    // works for any model that fits the mask representation.
    std::vector<WeakCotorsionPair> enumerate_weak_cotorsion_pairs(EnumerationStrategy strategy) const;

    // Verifies that the three closure-style characterizations of a weak
    // cotorsion pair agree on every ordered subset pair, in both argument
    // orders.  At most 20 objects.
    CheckReport check_theorem_3_14() const;

    // Mask conversions.
    ObjectSet mask_of(const DiagonalSet& s) const;
    DiagonalSet set_of(ObjectSet s) const;
    ObjectSet mask_of_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(ObjectSet s) const;
    std::string format_mask(ObjectSet s) const; // comma-joined labels

private:
    HomModel model_;
    int count_ = 0;
    ObjectSet universe_ = 0;
    std::vector<ObjectSet> fwd_;  // fwd_[u] = { v : ext(u, v) }
    std::vector<ObjectSet> bwd_;  // bwd_[u] = { v : ext(v, u) }
    std::vector<ObjectSet> both_; // union
    mutable int max_rigid_ = -1;
};

// Closed-set geometry for d = 1: a set of chords is Ptolemy when for any
// two crossing members every chord connecting endpoints of the two is also
// a member.  For d = 1 type A models the Ptolemy sets are exactly the
// ncnc-closed sets, which makes this an independent oracle for closure.
class PtolemyChecker {
public:
    explicit PtolemyChecker(const HomModel& model); // requires type A with d = 1
    bool is_ptolemy(ObjectSet s) const;

private:
    struct Crossing {
        ObjectSet pair_mask = 0;
        ObjectSet required = 0;
    };
    std::vector<Crossing> crossings_;
};

bool is_ptolemy(const HomModel& model, ObjectSet s);

} // namespace angulator
