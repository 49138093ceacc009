#include "angulator/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace angulator {

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

} // namespace

ModelParams make_params(int n, int d) {
    if (n < 1) throw DomainError("model parameter n must be >= 1, got " + std::to_string(n));
    if (d < 1) throw DomainError("model parameter d must be >= 1, got " + std::to_string(d));
    ModelParams p;
    p.n = n;
    p.d = d;
    p.m = n + 2 * d + 1;
    return p;
}

bool Diagonal::is_valid(const std::vector<int>& vertices, const ModelParams& params) {
    if (static_cast<int>(vertices.size()) != params.d + 1) return false;
    for (int v : vertices)
        if (v < 1 || v > params.m) return false;
    // The gap checks subsume strict monotonicity.
    for (std::size_t x = 0; x + 1 < vertices.size(); ++x)
        if (vertices[x] + 2 > vertices[x + 1]) return false;
    if (vertices.back() + 2 > vertices.front() + params.m) return false;
    return true;
}

Diagonal Diagonal::checked(std::vector<int> vertices, const ModelParams& params) {
    if (!is_valid(vertices, params))
        throw DomainError("not a diagonal of the (" + std::to_string(params.n) + ", " +
                          std::to_string(params.d) + ") model: " + join_ints(vertices, '-'));
    return unchecked(std::move(vertices));
}

Diagonal Diagonal::unchecked(std::vector<int> vertices) {
    Diagonal d;
    d.verts_ = std::move(vertices);
    return d;
}

std::vector<Diagonal> enumerate_diagonals(const ModelParams& params) {
    std::vector<Diagonal> out;
    std::vector<int> cur(static_cast<std::size_t>(params.d) + 1);
    // Ascending generation yields lexicographic order directly.
    auto rec = [&](auto&& self, int level) -> void {
        if (level == params.d + 1) {
            out.push_back(Diagonal::unchecked(cur));
            return;
        }
        int lo = level == 0 ? 1 : cur[level - 1] + 2;
        int hi = level == params.d ? std::min(params.m, cur[0] + params.m - 2) : params.m;
        for (int v = lo; v <= hi; ++v) {
            cur[level] = v;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool intertwines(const Diagonal& x, const Diagonal& y) {
    const auto& a = x.vertices();
    const auto& b = y.vertices();
    if (a.size() != b.size())
        throw DomainError("intertwines needs diagonals of the same model");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= b[i]) return false;
        if (i + 1 < a.size() && b[i] >= a[i + 1]) return false;
    }
    return true;
}

Diagonal shift_diagonal(const Diagonal& x, const ModelParams& params, int steps) {
    int s = ((steps % params.m) + params.m) % params.m;
    std::vector<int> v = x.vertices();
    for (int& t : v) {
        t -= s;
        if (t < 1) t += params.m;
    }
    std::sort(v.begin(), v.end());
    // Rotation preserves the cyclic gap conditions, so no recheck is needed.
    return Diagonal::unchecked(std::move(v));
}

std::string format_diagonal(const Diagonal& x) {
    return join_ints(x.vertices(), '-');
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<int> split_dash_form(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (true) {
        std::size_t dash = text.find('-', pos);
        std::string_view tok = text.substr(pos, dash == std::string_view::npos ? dash : dash - pos);
        if (!all_digits(tok))
            throw ParseError(ParseError::Kind::Malformed,
                             "malformed diagonal \"" + std::string(text) + "\"");
        if (tok.size() > 6)
            throw ParseError(ParseError::Kind::OutOfRange,
                             "vertex out of range in \"" + std::string(text) + "\"");
        values.push_back(std::stoi(std::string(tok)));
        if (dash == std::string_view::npos) break;
        pos = dash + 1;
    }
    return values;
}

} // namespace

Diagonal parse_diagonal(std::string_view text, const ModelParams& params) {
    if (text.empty())
        throw ParseError(ParseError::Kind::Malformed, "empty diagonal text");

    std::vector<int> values;
    if (text.find('-') != std::string_view::npos) {
        values = split_dash_form(text);
    } else if (all_digits(text)) {
        if (params.m <= 9 && text.size() > 1) {
            for (char c : text) values.push_back(c - '0');
        } else {
            if (text.size() > 6)
                throw ParseError(ParseError::Kind::OutOfRange,
                                 "vertex out of range in \"" + std::string(text) + "\"");
            values.push_back(std::stoi(std::string(text)));
        }
    } else {
        throw ParseError(ParseError::Kind::Malformed,
                         "malformed diagonal \"" + std::string(text) + "\"");
    }

    for (int v : values)
        if (v < 1 || v > params.m)
            throw ParseError(ParseError::Kind::OutOfRange,
                             "vertex " + std::to_string(v) + " outside 1.." + std::to_string(params.m) +
                                 " in \"" + std::string(text) + "\"");
    if (static_cast<int>(values.size()) != params.d + 1)
        throw ParseError(ParseError::Kind::WrongArity,
                         "expected " + std::to_string(params.d + 1) + " vertices, got " +
                             std::to_string(values.size()) + " in \"" + std::string(text) + "\"");
    if (!Diagonal::is_valid(values, params))
        throw ParseError(ParseError::Kind::GapViolation,
                         "gap conditions violated in \"" + std::string(text) + "\"");
    return Diagonal::unchecked(std::move(values));
}

DiagonalSet::DiagonalSet(std::vector<Diagonal> diagonals) : items_(std::move(diagonals)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool DiagonalSet::contains(const Diagonal& x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
}

DiagonalSet parse_diagonal_set(std::string_view text, const ModelParams& params) {
    std::string stripped;
    stripped.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    if (stripped.empty()) return DiagonalSet{};

    std::vector<Diagonal> items;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = stripped.find(',', pos);
        std::string tok = stripped.substr(pos, comma == std::string::npos ? comma : comma - pos);
        items.push_back(parse_diagonal(tok, params));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return DiagonalSet(std::move(items));
}

std::string format_diagonal_set(const DiagonalSet& s) {
    std::ostringstream out;
    for (int i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << format_diagonal(s.items()[i]);
    }
    return out.str();
}

HomModel HomModel::type_a(const ModelParams& params) {
    HomModel model;
    model.params_ = params;
    model.d_ = params.d;
    model.diagonals_ = enumerate_diagonals(params);
    int n = static_cast<int>(model.diagonals_.size());
    model.labels_.reserve(n);
    for (const Diagonal& x : model.diagonals_) model.labels_.push_back(format_diagonal(x));
    model.succ_.resize(n);
    model.pred_.resize(n);
    for (int i = 0; i < n; ++i) {
        Diagonal img = shift_diagonal(model.diagonals_[i], params, 1);
        auto it = std::lower_bound(model.diagonals_.begin(), model.diagonals_.end(), img);
        int j = static_cast<int>(it - model.diagonals_.begin());
        model.succ_[i] = j;
        model.pred_[j] = i;
    }
    return model;
}

HomModel HomModel::explicit_model(std::vector<std::string> objects,
                                  std::vector<std::vector<bool>> ext,
                                  std::vector<int> shift,
                                  int d) {
    // n = 0 is allowed: subfactors of full triangulations have no objects
    int n = static_cast<int>(objects.size());
    if (d < 1) throw DomainError("explicit model needs d >= 1, got " + std::to_string(d));
    for (int i = 0; i < n; ++i) {
        if (objects[i].empty()) throw DomainError("explicit model labels must be nonempty");
        for (int j = i + 1; j < n; ++j)
            if (objects[i] == objects[j])
                throw DomainError("duplicate object label \"" + objects[i] + "\"");
    }
    if (static_cast<int>(ext.size()) != n)
        throw DomainError("ext table must have one row per object");
    for (const auto& row : ext)
        if (static_cast<int>(row.size()) != n)
            throw DomainError("ext table must be square");
    if (static_cast<int>(shift.size()) != n)
        throw DomainError("shift must list one image per object");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int img : shift) {
        if (img < 0 || img >= n || seen[img])
            throw DomainError("shift must be a permutation of 0.." + std::to_string(n - 1));
        seen[img] = true;
    }

    HomModel model;
    model.d_ = d;
    model.labels_ = std::move(objects);
    model.succ_ = shift;
    model.pred_.resize(n);
    for (int i = 0; i < n; ++i) model.pred_[shift[i]] = i;
    model.table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            model.table_[static_cast<std::size_t>(i) * n + j] = ext[i][j] ? 1 : 0;
    return model;
}

const ModelParams& HomModel::params() const {
    if (!params_) throw DomainError("explicit model has no (n, d) parameters");
    return *params_;
}

const std::vector<Diagonal>& HomModel::diagonals() const {
    if (!params_) throw DomainError("explicit model has no diagonals");
    return diagonals_;
}

const Diagonal& HomModel::diagonal(int i) const {
    return diagonals()[static_cast<std::size_t>(i)];
}

int HomModel::index_of(const Diagonal& x) const {
    const auto& all = diagonals();
    auto it = std::lower_bound(all.begin(), all.end(), x);
    if (it == all.end() || *it != x)
        throw DomainError("unknown diagonal " + format_diagonal(x));
    return static_cast<int>(it - all.begin());
}

int HomModel::index_of_label(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw DomainError("unknown object label \"" + std::string(label) + "\"");
}

bool HomModel::ext(int i, int j) const {
    if (params_) {
        const Diagonal& a = diagonals_[static_cast<std::size_t>(i)];
        const Diagonal& b = diagonals_[static_cast<std::size_t>(j)];
        return intertwines(a, b) || intertwines(b, a);
    }
    return table_[static_cast<std::size_t>(i) * size() + j] != 0;
}

bool HomModel::verify_symmetry() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (ext(i, j) != ext(j, i)) return false;
    return true;
}

int HomModel::shift_index(int i, int steps) const {
    if (params_) steps %= params_->m;
    int idx = i;
    for (int s = steps; s > 0; --s) idx = succ_[idx];
    for (int s = steps; s < 0; ++s) idx = pred_[idx];
    return idx;
}

bool HomModel::hom_nonzero(int i, int j) const {
    return ext(i, shift_index(j, -1));
}

HomModel fixture_example_3_10() {
    // Frozen from the crossing rule: rows and columns in the order 13, 15, 35.
    return HomModel::explicit_model(
        {"13", "15", "35"},
        {{true, false, true}, {true, true, false}, {false, true, true}},
        {1, 2, 0},
        2);
}

} // namespace angulator
