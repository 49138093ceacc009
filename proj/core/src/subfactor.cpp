#include "angulator/subfactor.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace angulator {

std::optional<ModelParams> SubfactorModel::cell_params(int cell) const {
    const auto& verts = cells_.at(static_cast<std::size_t>(cell));
    int k = static_cast<int>(verts.size());
    if (k <= 3) return std::nullopt;
    return make_params(k - 3, 1);
}

int SubfactorModel::slot_of_parent(int parent_index) const {
    if (parent_index < 0 || parent_index >= static_cast<int>(slot_of_parent_.size())) return -1;
    return slot_of_parent_[static_cast<std::size_t>(parent_index)];
}

int SubfactorModel::parent_of_local(int cell, const Diagonal& local) const {
    for (const SubfactorObject& obj : objects_)
        if (obj.cell == cell && obj.local == local) return obj.parent_index;
    return -1;
}

bool SubfactorModel::local_ext(int parent_u, int parent_v) const {
    int su = slot_of_parent(parent_u);
    int sv = slot_of_parent(parent_v);
    if (su < 0 || sv < 0)
        throw DomainError("local_ext arguments must lie in Z minus the base");
    const SubfactorObject& a = objects_[static_cast<std::size_t>(su)];
    const SubfactorObject& b = objects_[static_cast<std::size_t>(sv)];
    if (a.cell != b.cell) return false;
    return intertwines(a.local, b.local) || intertwines(b.local, a.local);
}

HomModel SubfactorModel::explicit_model() const {
    int count = static_cast<int>(objects_.size());
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(count));
    for (const SubfactorObject& obj : objects_)
        labels.push_back(parent_model().label(obj.parent_index));
    std::vector<std::vector<bool>> ext(static_cast<std::size_t>(count),
                                       std::vector<bool>(static_cast<std::size_t>(count), false));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                local_ext(objects_[static_cast<std::size_t>(i)].parent_index,
                          objects_[static_cast<std::size_t>(j)].parent_index);
    return HomModel::explicit_model(std::move(labels), std::move(ext), fwd_rotation_, 1);
}

SubfactorModel build_subfactor(const NcCalculus& parent, ObjectSet dset) {
    const HomModel& model = parent.model();
    if (!model.is_type_a() || model.d() != 1)
        throw UnsupportedError("subfactor models are realized for type A models with d = 1");

    MutationContext ctx = MutationContext::make(parent, dset);

    SubfactorModel sub(parent);
    sub.dset_ = dset;
    sub.z_ = ctx.z();
    sub.cells_ = ctx.cells().cells;
    sub.slot_of_parent_.assign(static_cast<std::size_t>(parent.object_count()), -1);

    ObjectSet movable = ctx.z() & ~dset;
    for (ObjectSet rest = movable; rest != 0; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        int ci = ctx.cell_of(u);
        const auto& cell = sub.cells_[static_cast<std::size_t>(ci)];
        const auto& v = model.diagonal(u).vertices();
        auto rank = [&](int vertex) {
            auto it = std::lower_bound(cell.begin(), cell.end(), vertex);
            return static_cast<int>(it - cell.begin()) + 1; // 1-based local vertex
        };
        SubfactorObject obj;
        obj.parent_index = u;
        obj.cell = ci;
        obj.local = Diagonal::unchecked({rank(v[0]), rank(v[1])});
        sub.slot_of_parent_[static_cast<std::size_t>(u)] = static_cast<int>(sub.objects_.size());
        sub.objects_.push_back(std::move(obj));
    }

    sub.fwd_rotation_.resize(sub.objects_.size());
    for (std::size_t slot = 0; slot < sub.objects_.size(); ++slot) {
        int image = ctx.rotate_in_cell(sub.objects_[slot].parent_index, Direction::Forward);
        sub.fwd_rotation_[slot] = sub.slot_of_parent_[static_cast<std::size_t>(image)];
    }
    return sub;
}

CheckReport check_theorem_4_11(const NcCalculus& parent, ObjectSet dset) {
    CheckReport report;
    report.theorem = "4.11";

    SubfactorModel sub = build_subfactor(parent, dset);
    HomModel sub_model = sub.explicit_model();
    NcCalculus sub_calc(sub_model);

    auto fail = [&](const char* stage, const std::string& x, const std::string& y) {
        report.passed = false;
        report.counterexample = {{"stage", stage}, {"x", x}, {"y", y}};
    };

    auto sub_pairs = sub_calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure);

    // Cellwise product reconstruction of the subfactor pairs.
    std::vector<std::vector<WeakCotorsionPair>> factor_pairs;
    std::vector<std::vector<int>> factor_slots; // local object index -> subfactor slot
    for (int ci = 0; ci < static_cast<int>(sub.cells().size()); ++ci) {
        auto params = sub.cell_params(ci);
        if (!params) continue;
        HomModel local = HomModel::type_a(*params);
        NcCalculus local_calc(local);
        factor_pairs.push_back(local_calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure));
        std::vector<int> slots;
        for (const Diagonal& ld : local.diagonals()) {
            int parent_index = sub.parent_of_local(ci, ld);
            if (parent_index < 0) {
                fail("product", "missing local diagonal " + format_diagonal(ld), "");
                return report;
            }
            slots.push_back(sub.slot_of_parent(parent_index));
        }
        factor_slots.push_back(std::move(slots));
    }

    std::vector<WeakCotorsionPair> product_pairs;
    std::vector<std::size_t> odo(factor_pairs.size(), 0);
    while (true) {
        ObjectSet x = 0, y = 0;
        for (std::size_t f = 0; f < factor_pairs.size(); ++f) {
            const WeakCotorsionPair& p = factor_pairs[f][odo[f]];
            for (ObjectSet rest = p.x; rest != 0; rest &= rest - 1)
                x |= object_bit(factor_slots[f][static_cast<std::size_t>(std::countr_zero(rest))]);
            for (ObjectSet rest = p.y; rest != 0; rest &= rest - 1)
                y |= object_bit(factor_slots[f][static_cast<std::size_t>(std::countr_zero(rest))]);
        }
        product_pairs.push_back(WeakCotorsionPair{x, y, pair_core(x, y)});
        std::size_t f = 0;
        for (; f < odo.size(); ++f) {
            if (++odo[f] < factor_pairs[f].size()) break;
            odo[f] = 0;
        }
        if (f == odo.size()) break;
    }
    std::sort(product_pairs.begin(), product_pairs.end(),
              [](const WeakCotorsionPair& a, const WeakCotorsionPair& b) { return set_lex_less(a.x, b.x); });

    if (product_pairs != sub_pairs) {
        fail("product", "the cellwise products differ from the directly enumerated pairs", "");
        return report;
    }
    report.instances_checked += sub_pairs.size();

    // Parent pairs with core containing the base, cut down to the subfactor.
    auto parent_pairs = parent.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure);
    std::set<std::pair<ObjectSet, ObjectSet>> sub_pair_set;
    for (const WeakCotorsionPair& p : sub_pairs) sub_pair_set.insert({p.x, p.y});

    auto cut = [&](ObjectSet parent_set, ObjectSet& out) {
        out = 0;
        for (ObjectSet rest = parent_set & ~dset; rest != 0; rest &= rest - 1) {
            int slot = sub.slot_of_parent(std::countr_zero(rest));
            if (slot < 0) return false;
            out |= object_bit(slot);
        }
        return true;
    };

    std::set<std::pair<ObjectSet, ObjectSet>> forward_images;
    std::uint64_t filtered = 0;
    for (const WeakCotorsionPair& p : parent_pairs) {
        if ((p.core & dset) != dset) continue;
        ++filtered;
        ObjectSet xs = 0, ys = 0;
        if (!cut(p.x, xs) || !cut(p.y, ys)) {
            fail("forward", parent.format_mask(p.x), parent.format_mask(p.y));
            return report;
        }
        if (sub_pair_set.find({xs, ys}) == sub_pair_set.end()) {
            fail("forward", parent.format_mask(p.x), parent.format_mask(p.y));
            return report;
        }
        if (!forward_images.insert({xs, ys}).second) {
            fail("forward", parent.format_mask(p.x), parent.format_mask(p.y));
            return report;
        }
        ++report.instances_checked;
    }

    // Reverse direction: gluing the base back into a subfactor pair must
    // give a parent pair.
    for (const WeakCotorsionPair& p : sub_pairs) {
        ObjectSet px = dset, py = dset;
        for (ObjectSet rest = p.x; rest != 0; rest &= rest - 1)
            px |= object_bit(sub.objects()[static_cast<std::size_t>(std::countr_zero(rest))].parent_index);
        for (ObjectSet rest = p.y; rest != 0; rest &= rest - 1)
            py |= object_bit(sub.objects()[static_cast<std::size_t>(std::countr_zero(rest))].parent_index);
        if (!parent.is_weak_cotorsion(px, py)) {
            fail("reverse", sub_calc.format_mask(p.x), sub_calc.format_mask(p.y));
            return report;
        }
        ++report.instances_checked;
    }

    if (filtered != sub_pairs.size()) {
        fail("count", std::to_string(filtered) + " parent pairs over the base",
             std::to_string(sub_pairs.size()) + " subfactor pairs");
        return report;
    }
    return report;
}

} // namespace angulator
