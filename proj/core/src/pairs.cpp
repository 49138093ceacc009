#include "angulator/pairs.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <utility>

#include "angulator/parallel.hpp"

namespace angulator {

bool set_lex_less(ObjectSet a, ObjectSet b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

const char* to_string(SelfPairClass c) {
    switch (c) {
    case SelfPairClass::ClusterTilting: return "ClusterTilting";
    case SelfPairClass::MaximalRigidOnly: return "MaximalRigidOnly";
    case SelfPairClass::NotSelfDual: return "NotSelfDual";
    }
    return "?";
}

NcCalculus::NcCalculus(HomModel model) : model_(std::move(model)), count_(model_.size()) {
    if (count_ > kMaxCalcObjects)
        throw CapacityError("model has " + std::to_string(count_) + " objects; the set calculus is limited to " +
                            std::to_string(kMaxCalcObjects));
    universe_ = count_ == 64 ? ~ObjectSet{0} : (ObjectSet{1} << count_) - 1;
    fwd_.assign(count_, 0);
    bwd_.assign(count_, 0);
    both_.assign(count_, 0);
    for (int i = 0; i < count_; ++i)
        for (int j = 0; j < count_; ++j)
            if (model_.ext(i, j)) {
                fwd_[i] |= object_bit(j);
                bwd_[j] |= object_bit(i);
            }
    for (int i = 0; i < count_; ++i) both_[i] = fwd_[i] | bwd_[i];
}

ObjectSet NcCalculus::nc(ObjectSet s) const {
    ObjectSet out = 0;
    for (int u = 0; u < count_; ++u)
        if ((both_[u] & s) == 0) out |= object_bit(u);
    return out;
}

ObjectSet NcCalculus::ncnc(ObjectSet s) const { return nc(nc(s)); }

ObjectSet NcCalculus::perp_forward(ObjectSet s) const {
    ObjectSet out = 0;
    for (int u = 0; u < count_; ++u)
        if ((fwd_[u] & s) == 0) out |= object_bit(u);
    return out;
}

ObjectSet NcCalculus::perp_backward(ObjectSet s) const {
    ObjectSet out = 0;
    for (int u = 0; u < count_; ++u)
        if ((bwd_[u] & s) == 0) out |= object_bit(u);
    return out;
}

bool NcCalculus::is_rigid(ObjectSet s) const {
    for (ObjectSet rest = s; rest != 0; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if ((fwd_[u] & s) != 0) return false;
    }
    return true;
}

bool NcCalculus::is_weak_cotorsion(ObjectSet x, ObjectSet y) const {
    return nc(y) == x && nc(x) == y;
}

int NcCalculus::max_rigid_cardinality() const {
    if (max_rigid_ >= 0) return max_rigid_;
    // Maximum independent set in the ext graph, restricted to objects
    // without self-extensions.  Exact branch and bound.
    ObjectSet start = 0;
    for (int u = 0; u < count_; ++u)
        if ((both_[u] & object_bit(u)) == 0) start |= object_bit(u);
    int best = 0;
    auto rec = [&](auto&& self, ObjectSet cand, int cur) -> void {
        if (cur + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, cur);
            return;
        }
        int pick = -1, pick_deg = -1;
        for (ObjectSet rest = cand; rest != 0; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            int deg = std::popcount(both_[u] & cand);
            if (deg > pick_deg) {
                pick = u;
                pick_deg = deg;
            }
        }
        self(self, cand & ~(both_[pick] | object_bit(pick)), cur + 1);
        self(self, cand & ~object_bit(pick), cur);
    };
    rec(rec, start, 0);
    max_rigid_ = best;
    return best;
}

bool NcCalculus::is_cluster_tilting(ObjectSet s) const {
    return is_rigid(s) && std::popcount(s) == max_rigid_cardinality();
}

SelfPairClass NcCalculus::classify_self_pair(ObjectSet s) const {
    if (nc(s) != s) return SelfPairClass::NotSelfDual;
    // A self-fixed set is rigid by the definition of membership in nc(S).
    return std::popcount(s) == max_rigid_cardinality() ? SelfPairClass::ClusterTilting
                                                       : SelfPairClass::MaximalRigidOnly;
}

std::vector<WeakCotorsionPair> NcCalculus::enumerate_weak_cotorsion_pairs(EnumerationStrategy strategy) const {
    std::vector<ObjectSet> closed;

    if (strategy == EnumerationStrategy::BruteForce) {
        if (count_ > kMaxBruteForceObjects)
            throw CapacityError("brute-force enumeration is limited to " +
                                std::to_string(kMaxBruteForceObjects) + " objects; this model has " +
                                std::to_string(count_) + " (use the next-closure strategy)");
        std::uint64_t total = ObjectSet{1} << count_;
        int workers = worker_count();
        std::vector<std::vector<ObjectSet>> found(static_cast<std::size_t>(workers) + 1);
        parallel_chunks(total, 1 << 14, [&](int w, std::uint64_t lo, std::uint64_t hi) {
            auto& mine = found[static_cast<std::size_t>(w)];
            for (std::uint64_t s = lo; s < hi; ++s)
                if (ncnc(s) == s) mine.push_back(s);
        });
        for (const auto& part : found) closed.insert(closed.end(), part.begin(), part.end());
    } else {
        // Lectic-order walk over the ncnc-closed sets: from the closure of
        // the empty set, repeatedly jump to the next closed set in lectic
        // order, where candidate closures may only add elements at or above
        // the probed index.
        ObjectSet a = ncnc(0);
        closed.push_back(a);
        while (true) {
            std::optional<ObjectSet> next;
            for (int i = count_ - 1; i >= 0; --i) {
                if (a & object_bit(i)) {
                    a &= ~object_bit(i);
                } else {
                    ObjectSet b = ncnc(a | object_bit(i));
                    if ((b & ~a & (object_bit(i) - 1)) == 0) {
                        next = b;
                        break;
                    }
                }
            }
            if (!next) break;
            a = *next;
            closed.push_back(a);
        }
    }

    std::vector<WeakCotorsionPair> pairs;
    pairs.reserve(closed.size());
    for (ObjectSet x : closed) {
        ObjectSet y = nc(x);
        pairs.push_back(WeakCotorsionPair{x, y, pair_core(x, y)});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const WeakCotorsionPair& a, const WeakCotorsionPair& b) { return set_lex_less(a.x, b.x); });
    return pairs;
}

CheckReport NcCalculus::check_theorem_3_14() const {
    if (count_ > kMaxEquivalenceObjects)
        throw CapacityError("the pairwise equivalence check is limited to " +
                            std::to_string(kMaxEquivalenceObjects) + " objects; this model has " +
                            std::to_string(count_));

    CheckReport report;
    report.theorem = "3.14";
    std::uint64_t total = ObjectSet{1} << count_;
    report.instances_checked = total * total;

    std::vector<std::uint32_t> nc_tab(total);
    parallel_chunks(total, 1 << 14, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t s = lo; s < hi; ++s) nc_tab[s] = static_cast<std::uint32_t>(nc(s));
    });
    std::vector<std::uint8_t> closed(total);
    parallel_chunks(total, 1 << 14, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t s = lo; s < hi; ++s) closed[s] = nc_tab[nc_tab[s]] == s ? 1 : 0;
    });

    // The three conditions for an ordered pair (A, B), with p = [B = nc A],
    // q = [A = nc B]:  c2 = p & q,  c4 = p & closed[A],  c5 = q & closed[B].
    // Swapping the arguments permutes {c2, c4, c5}, so agreement in one
    // order covers both.  When p and q are both false all three are false
    // and agreement is automatic; the pairs needing an explicit look are
    // exactly B = nc A (p) and the nc-preimages of A (q).
    std::vector<std::uint32_t> bucket_start(total + 1, 0);
    for (std::uint64_t s = 0; s < total; ++s) ++bucket_start[nc_tab[s] + 1];
    for (std::uint64_t v = 0; v < total; ++v) bucket_start[v + 1] += bucket_start[v];
    std::vector<std::uint32_t> preimage(total);
    {
        std::vector<std::uint32_t> fill(bucket_start.begin(), bucket_start.end() - 1);
        for (std::uint64_t s = 0; s < total; ++s) preimage[fill[nc_tab[s]]++] = static_cast<std::uint32_t>(s);
    }

    int workers = worker_count();
    struct Hit {
        std::uint64_t x = 0, y = 0;
    };
    std::vector<std::optional<Hit>> hits(static_cast<std::size_t>(workers) + 1);
    parallel_chunks(total, 1 << 12, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& hit = hits[static_cast<std::size_t>(w)];
        auto agree = [&](std::uint64_t a, std::uint64_t b) {
            bool p = nc_tab[a] == b;
            bool q = nc_tab[b] == a;
            bool c2 = p && q;
            bool c4 = p && closed[a] != 0;
            bool c5 = q && closed[b] != 0;
            return c2 == c4 && c4 == c5;
        };
        for (std::uint64_t x = lo; x < hi && !hit; ++x) {
            std::uint64_t ync = nc_tab[x];
            bool ync_done = false;
            for (std::uint32_t k = bucket_start[x]; k < bucket_start[x + 1]; ++k) {
                std::uint64_t y = preimage[k];
                if (!ync_done && ync < y) {
                    if (!agree(x, ync)) { hit = Hit{x, ync}; break; }
                    ync_done = true;
                }
                if (y == ync) ync_done = true;
                if (!agree(x, y)) { hit = Hit{x, y}; break; }
            }
            if (hit) break;
            if (!ync_done && !agree(x, ync)) hit = Hit{x, ync};
        }
    });

    for (const auto& hit : hits) {
        if (!hit) continue;
        report.passed = false;
        report.counterexample = {{"x", format_mask(hit->x)},
                                 {"y", format_mask(hit->y)},
                                 {"detail", "the pair characterizations disagree on (x, y)"}};
        break;
    }
    return report;
}

ObjectSet NcCalculus::mask_of(const DiagonalSet& s) const {
    ObjectSet out = 0;
    for (const Diagonal& x : s) out |= object_bit(model_.index_of(x));
    return out;
}

DiagonalSet NcCalculus::set_of(ObjectSet s) const {
    std::vector<Diagonal> items;
    for (ObjectSet rest = s; rest != 0; rest &= rest - 1)
        items.push_back(model_.diagonal(std::countr_zero(rest)));
    return DiagonalSet(std::move(items));
}

ObjectSet NcCalculus::mask_of_labels(const std::vector<std::string>& labels) const {
    ObjectSet out = 0;
    for (const std::string& label : labels) out |= object_bit(model_.index_of_label(label));
    return out;
}

std::vector<std::string> NcCalculus::labels_of(ObjectSet s) const {
    std::vector<std::string> out;
    for (ObjectSet rest = s; rest != 0; rest &= rest - 1)
        out.push_back(model_.label(std::countr_zero(rest)));
    return out;
}

std::string NcCalculus::format_mask(ObjectSet s) const {
    std::string out;
    bool first = true;
    for (ObjectSet rest = s; rest != 0; rest &= rest - 1) {
        if (!first) out += ',';
        out += model_.label(std::countr_zero(rest));
        first = false;
    }
    return out;
}

PtolemyChecker::PtolemyChecker(const HomModel& model) {
    if (!model.is_type_a() || model.d() != 1)
        throw DomainError("the Ptolemy condition is defined for type A models with d = 1");
    const ModelParams& params = model.params();
    const auto& diagonals = model.diagonals();
    int n = static_cast<int>(diagonals.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!model.ext(i, j)) continue;
            const auto& a = diagonals[i].vertices();
            const auto& b = diagonals[j].vertices();
            int pts[4] = {a[0], a[1], b[0], b[1]};
            Crossing c;
            c.pair_mask = object_bit(i) | object_bit(j);
            for (int s = 0; s < 4; ++s) {
                for (int t = s + 1; t < 4; ++t) {
                    std::vector<int> chord{std::min(pts[s], pts[t]), std::max(pts[s], pts[t])};
                    if (!Diagonal::is_valid(chord, params)) continue;
                    c.required |= object_bit(model.index_of(Diagonal::unchecked(chord)));
                }
            }
            crossings_.push_back(c);
        }
    }
}

bool PtolemyChecker::is_ptolemy(ObjectSet s) const {
    for (const Crossing& c : crossings_) {
        if ((s & c.pair_mask) != c.pair_mask) continue;
        if ((c.required & ~s) != 0) return false;
    }
    return true;
}

bool is_ptolemy(const HomModel& model, ObjectSet s) {
    return PtolemyChecker(model).is_ptolemy(s);
}

} // namespace angulator
