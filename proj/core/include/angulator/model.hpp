#pragma once

// Combinatorial diagonal models of higher cluster categories of type A.
//
// Fix n >= 1 and d >= 1 and put m = n + 2d + 1.  The objects of the model
// are the "diagonals": increasing (d+1)-tuples (i_0, ..., i_d) of vertices
// of a cyclically ordered m-gon satisfying the gap conditions
//
//     i_x + 2 <= i_{x+1}  for 0 <= x < d,   and   i_d + 2 <= i_0 + m.
//
// Two diagonals X, Y have a nonvanishing extension in degree d exactly when
// they "intertwine" in one order or the other, where X intertwines Y means
// x_0 < y_0 < x_1 < y_1 < ... < x_d < y_d.  The d-fold suspension acts by
// rotating every vertex one step backwards.  For d = 1 this is the classical
// picture of crossing chords of a polygon.
//
// HomModel abstracts the ext/shift data so that the downstream calculus also
// runs on small explicitly tabulated models that are not of type A.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "angulator/errors.hpp"

namespace angulator {

struct ModelParams {
    int n = 0;
    int d = 0;
    int m = 0; // always n + 2d + 1

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Validates n >= 1, d >= 1 and fills in m.
ModelParams make_params(int n, int d);

// An increasing (d+1)-tuple of polygon vertices subject to the gap
// conditions.  Ordered lexicographically; the lexicographic order on
// tuples is the canonical object order everywhere in this library.
class Diagonal {
public:
    Diagonal() = default;

    static bool is_valid(const std::vector<int>& vertices, const ModelParams& params);

    // Throws DomainError unless is_valid(vertices, params).
    static Diagonal checked(std::vector<int> vertices, const ModelParams& params);

    // Trusts the caller; used on paths that construct valid tuples directly.
    static Diagonal unchecked(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;

private:
    std::vector<int> verts_;
};

// All diagonals of the (n, d) model in lexicographic order.  The count is
// m * C(m - d - 2, d) / (d + 1).
std::vector<Diagonal> enumerate_diagonals(const ModelParams& params);

// Strict alternation x_0 < y_0 < x_1 < y_1 < ... < x_d < y_d.
// Irreflexive, and never symmetric for a fixed argument order.
bool intertwines(const Diagonal& x, const Diagonal& y);

// The d-fold suspension and its powers: each step subtracts 1 from every
// vertex modulo m (vertices stay in 1..m).  Bijective with period m.
Diagonal shift_diagonal(const Diagonal& x, const ModelParams& params, int steps);

// Dash-separated vertex list, e.g. "1-3-5".
std::string format_diagonal(const Diagonal& x);

// Accepts the dash form always, and the concatenated digit form ("135")
// when m <= 9.  Throws ParseError with a kind distinguishing malformed
// text, wrong arity, out-of-range vertices and gap violations.
Diagonal parse_diagonal(std::string_view text, const ModelParams& params);

// A duplicate-free set of diagonals kept in lexicographic order.
class DiagonalSet {
public:
    DiagonalSet() = default;
    explicit DiagonalSet(std::vector<Diagonal> diagonals); // sorts and dedups

    const std::vector<Diagonal>& items() const { return items_; }
    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }
    bool contains(const Diagonal& x) const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const DiagonalSet&, const DiagonalSet&) = default;

private:
    std::vector<Diagonal> items_;
};

// Comma-separated diagonals; whitespace is ignored and "" is the empty set.
DiagonalSet parse_diagonal_set(std::string_view text, const ModelParams& params);
std::string format_diagonal_set(const DiagonalSet& s);

// Ext/shift data over a finite object list.  Either a type A model, where
// everything is computed from the diagonal combinatorics, or an explicit
// model given by a square ext table and a shift permutation.  Explicit
// models intended for cotorsion analysis should have a symmetric ext table;
// verify_symmetry reports whether that holds, and the nc calculus stays
// correct either way because it always tests both directions.
class HomModel {
public:
    static HomModel type_a(const ModelParams& params);
    static HomModel explicit_model(std::vector<std::string> objects,
                                   std::vector<std::vector<bool>> ext,
                                   std::vector<int> shift,
                                   int d);

    int d() const { return d_; }
    int size() const { return static_cast<int>(labels_.size()); }
    bool is_type_a() const { return params_.has_value(); }

    // Type A only; DomainError on explicit models.
    const ModelParams& params() const;
    const std::vector<Diagonal>& diagonals() const;
    const Diagonal& diagonal(int i) const;
    int index_of(const Diagonal& x) const; // DomainError if absent

    const std::string& label(int i) const { return labels_[i]; }
    int index_of_label(std::string_view label) const; // DomainError if unknown

    bool ext(int i, int j) const;
    bool verify_symmetry() const;

    // Applies the d-fold suspension |steps| times, backwards when steps < 0.
    int shift_index(int i, int steps) const;

    // Nonvanishing Hom in degree zero, modelled as ext(i, shift(j, -1)).
    bool hom_nonzero(int i, int j) const;

private:
    HomModel() = default;

    std::optional<ModelParams> params_;
    std::vector<Diagonal> diagonals_;
    int d_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> succ_; // one forward suspension step, per object
    std::vector<int> pred_; // inverse of succ_
    std::vector<std::uint8_t> table_; // explicit ext table, row-major; empty for type A
};

// Three-object 4-angulated fixture: the arcs 13, 15, 35 of a hexagon with
// ext(a, b) tabulated as "a crosses the one-step backward rotation of b".
// Its ext table is genuinely asymmetric and its only weak cotorsion pairs
// are (everything, 0) and (0, everything).
HomModel fixture_example_3_10();

} // namespace angulator
