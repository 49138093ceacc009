#include "angulator/mutation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace angulator {

const char* to_string(Direction dir) {
    return dir == Direction::Forward ? "Forward" : "Backward";
}

namespace {

struct Chord {
    int a = 0, b = 0; // a < b
};

// Recursive split of an ascending vertex region along non-crossing chords.
// A chord (c, d) nested inside the splitter's arc goes to the inner part;
// everything else, including chords sharing the splitter's endpoints on the
// outside, goes to the outer part.
void split_region(std::vector<int> region, std::vector<Chord> chords,
                  std::vector<std::vector<int>>& out) {
    if (chords.empty()) {
        out.push_back(std::move(region));
        return;
    }
    Chord cut = chords.front();
    std::vector<int> inner, outer;
    for (int v : region) {
        if (v >= cut.a && v <= cut.b) inner.push_back(v);
        if (v <= cut.a || v >= cut.b) outer.push_back(v);
    }
    std::vector<Chord> inner_chords, outer_chords;
    for (std::size_t i = 1; i < chords.size(); ++i) {
        const Chord& c = chords[i];
        if (c.a >= cut.a && c.b <= cut.b) inner_chords.push_back(c);
        else outer_chords.push_back(c);
    }
    split_region(std::move(inner), std::move(inner_chords), out);
    split_region(std::move(outer), std::move(outer_chords), out);
}

CellDecomposition decompose(const ModelParams& params, const std::vector<Chord>& chords) {
    std::vector<int> whole(static_cast<std::size_t>(params.m));
    for (int v = 1; v <= params.m; ++v) whole[static_cast<std::size_t>(v) - 1] = v;
    CellDecomposition dec;
    split_region(std::move(whole), chords, dec.cells);
    std::sort(dec.cells.begin(), dec.cells.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.front() != b.front()) return a.front() < b.front();
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return dec;
}

int position_in(const std::vector<int>& cell, int v) {
    auto it = std::lower_bound(cell.begin(), cell.end(), v);
    if (it == cell.end() || *it != v) return -1;
    return static_cast<int>(it - cell.begin());
}

} // namespace

MutationContext MutationContext::make(const NcCalculus& calc, ObjectSet dset) {
    if (!calc.is_rigid(dset))
        throw DomainError("mutation base is not rigid: " + calc.format_mask(dset));

    MutationContext ctx(calc);
    ctx.dset_ = dset;
    if (calc.perp_forward(dset) != calc.perp_backward(dset))
        throw HypothesisError("the forward and backward perpendiculars of the base disagree; "
                              "this model does not support mutation at " +
                              calc.format_mask(dset));
    ctx.z_ = calc.nc(dset);

    const HomModel& model = calc.model();
    if (!model.is_type_a() || model.d() != 1) return ctx;

    const ModelParams& params = model.params();
    std::vector<Chord> chords;
    for (ObjectSet rest = dset; rest != 0; rest &= rest - 1) {
        const auto& v = model.diagonal(std::countr_zero(rest)).vertices();
        chords.push_back(Chord{v[0], v[1]});
    }
    ctx.cells_ = decompose(params, chords);

    int count = calc.object_count();
    ctx.cell_index_.assign(count, -1);
    ctx.fwd_image_.assign(count, -1);
    ctx.bwd_image_.assign(count, -1);
    ObjectSet movable = ctx.z_ & ~dset;
    for (ObjectSet rest = movable; rest != 0; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        const auto& v = model.diagonal(u).vertices();
        int found = 0;
        for (std::size_t ci = 0; ci < ctx.cells_->cells.size(); ++ci) {
            const auto& cell = ctx.cells_->cells[ci];
            int k = static_cast<int>(cell.size());
            int ip = position_in(cell, v[0]);
            int iq = position_in(cell, v[1]);
            if (ip < 0 || iq < 0) continue;
            int gap = std::abs(ip - iq);
            if (gap == 1 || gap == k - 1) continue; // boundary edge, not interior
            ++found;
            ctx.cell_index_[u] = static_cast<int>(ci);
            auto image = [&](int step) {
                std::vector<int> w{cell[static_cast<std::size_t>((ip + step + k) % k)],
                                   cell[static_cast<std::size_t>((iq + step + k) % k)]};
                std::sort(w.begin(), w.end());
                return model.index_of(Diagonal::unchecked(std::move(w)));
            };
            ctx.fwd_image_[u] = image(-1);
            ctx.bwd_image_[u] = image(+1);
        }
        if (found != 1)
            throw Error("internal: object " + model.label(u) + " lies in " + std::to_string(found) +
                        " cells");
    }
    return ctx;
}

const CellDecomposition& MutationContext::cells() const {
    if (!cells_)
        throw UnsupportedError("cell decompositions exist only for type A models with d = 1");
    return *cells_;
}

int MutationContext::cell_of(int obj) const {
    cells();
    if (obj < 0 || obj >= calc_.object_count() || cell_index_[obj] < 0)
        throw DomainError("object is not a movable member of Z");
    return cell_index_[obj];
}

int MutationContext::rotate_in_cell(int obj, Direction dir) const {
    if (dset_ & object_bit(obj)) return obj;
    cells();
    if (obj < 0 || obj >= calc_.object_count() || cell_index_[obj] < 0)
        throw DomainError("object is not a member of Z");
    return dir == Direction::Forward ? fwd_image_[obj] : bwd_image_[obj];
}

ObjectSet mutate_set_zero(const HomModel& model, ObjectSet s, Direction dir) {
    int step = dir == Direction::Forward ? 1 : -1;
    ObjectSet out = 0;
    for (ObjectSet rest = s; rest != 0; rest &= rest - 1)
        out |= object_bit(model.shift_index(std::countr_zero(rest), step));
    return out;
}

int mutate_diagonal_d1(const MutationContext& ctx, int obj, Direction dir) {
    ctx.cells(); // rejects models without polygon geometry
    if (obj < 0 || obj >= ctx.calc().object_count())
        throw DomainError("object index out of range");
    if ((ctx.z() & object_bit(obj)) == 0)
        throw DomainError("object " + ctx.model().label(obj) + " is outside Z");
    return ctx.rotate_in_cell(obj, dir);
}

ObjectSet mutate_set(const MutationContext& ctx, ObjectSet s, Direction dir) {
    if ((ctx.dset() & ~s) != 0)
        throw DomainError("mutable set must contain the base");
    if ((s & ~ctx.z()) != 0)
        throw DomainError("mutable set must lie inside Z");
    if (ctx.dset() == 0) return mutate_set_zero(ctx.model(), s, dir);
    if (!ctx.has_cells())
        throw UnsupportedError("mutation at a nonzero base is only realized for d = 1 polygon models");
    ObjectSet out = 0;
    for (ObjectSet rest = s; rest != 0; rest &= rest - 1)
        out |= object_bit(ctx.rotate_in_cell(std::countr_zero(rest), dir));
    return out;
}

CheckReport check_prop_4_12(const MutationContext& ctx) {
    CheckReport report;
    report.theorem = "4.12";
    ObjectSet free = ctx.z() & ~ctx.dset();
    int k = std::popcount(free);
    if (k > kMaxBruteForceObjects)
        throw CapacityError("too many movable objects (" + std::to_string(k) + ") for the inverse check");

    ObjectSet sub = free;
    while (true) {
        ObjectSet s = ctx.dset() | sub;
        ++report.instances_checked;
        ObjectSet fb = mutate_set(ctx, mutate_set(ctx, s, Direction::Forward), Direction::Backward);
        ObjectSet bf = mutate_set(ctx, mutate_set(ctx, s, Direction::Backward), Direction::Forward);
        if (fb != s || bf != s) {
            report.passed = false;
            report.counterexample = {{"set", ctx.calc().format_mask(s)},
                                     {"dset", ctx.calc().format_mask(ctx.dset())},
                                     {"reason", fb != s ? "Backward does not undo Forward"
                                                        : "Forward does not undo Backward"}};
            return report;
        }
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return report;
}

namespace {

CheckReport check_4_13_impl(const NcCalculus& calc, std::optional<ObjectSet> only, bool exhaustive) {
    CheckReport report;
    report.theorem = "4.13";

    auto pairs = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure);

    std::map<ObjectSet, MutationContext> contexts;
    auto context_for = [&](ObjectSet dset) -> const MutationContext& {
        auto it = contexts.find(dset);
        if (it == contexts.end()) it = contexts.emplace(dset, MutationContext::make(calc, dset)).first;
        return it->second;
    };
    if (only) context_for(*only); // validate the base up front

    const HomModel& model = calc.model();
    bool cell_bases = model.is_type_a() && model.d() == 1;

    // Image bookkeeping per (base, direction).  Every image is itself a
    // verified pair whose core contains the base, so injectivity makes the
    // map a bijection of that finite pair family.
    std::map<std::pair<ObjectSet, int>, std::set<ObjectSet>> images;

    auto fail = [&](const WeakCotorsionPair& p, ObjectSet dset, Direction dir, const char* reason) {
        report.passed = false;
        report.counterexample = {{"x", calc.format_mask(p.x)},
                                 {"y", calc.format_mask(p.y)},
                                 {"dset", calc.format_mask(dset)},
                                 {"direction", to_string(dir)},
                                 {"reason", reason}};
    };

    for (const WeakCotorsionPair& p : pairs) {
        std::vector<ObjectSet> bases;
        if (only) {
            if ((p.core & *only) != *only) continue;
            bases.push_back(*only);
        } else if (exhaustive && cell_bases) {
            ObjectSet sub = p.core;
            while (true) {
                bases.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & p.core;
            }
        } else {
            bases.push_back(0);
        }

        for (ObjectSet dset : bases) {
            const MutationContext& ctx = context_for(dset);
            for (Direction dir : {Direction::Forward, Direction::Backward}) {
                ObjectSet mx = mutate_set(ctx, p.x, dir);
                ObjectSet my = mutate_set(ctx, p.y, dir);
                ObjectSet mc = mutate_set(ctx, p.core, dir);
                ++report.instances_checked;
                if (!calc.is_weak_cotorsion(mx, my)) {
                    fail(p, dset, dir, "the mutated pair is not a weak cotorsion pair");
                    return report;
                }
                if (pair_core(mx, my) != mc) {
                    fail(p, dset, dir, "the core of the mutated pair differs from the mutated core");
                    return report;
                }
                auto [it, fresh] = images[{dset, dir == Direction::Forward ? 0 : 1}].insert(mx);
                (void)it;
                if (!fresh) {
                    fail(p, dset, dir, "mutation is not injective on the pairs containing the base");
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace

CheckReport check_theorem_4_13(const NcCalculus& calc, bool exhaustive) {
    return check_4_13_impl(calc, std::nullopt, exhaustive);
}

CheckReport check_theorem_4_13(const NcCalculus& calc, ObjectSet only_dset) {
    return check_4_13_impl(calc, only_dset, true);
}

} // namespace angulator
