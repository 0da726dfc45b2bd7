#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jl/rational.hpp"

namespace jl {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/// In-place reduced row echelon form. Returns the rank; pivot column of
/// echelon row i is written to pivots[i] when pivots is non-null.
int rref(QMat& m, std::vector<int>* pivots = nullptr);

int rank(QMat m);

/// Basis of the right nullspace {x : m x = 0}, one vector per row.
QMat nullspace(QMat m, int ncols);

/// Solves m x = b. Returns nullopt when inconsistent; otherwise a particular
/// solution with non-pivot coordinates set to zero.
std::optional<QVec> solve(QMat m, QVec b, int ncols);

/// Forward elimination over sparse columns; returns a basis of the
/// combinations sum_i c_i v_i = 0 as sparse coefficient maps (columns are
/// consumed). Deterministic for a fixed column order.
template <class Key>
std::vector<std::map<int, Rat>> sparse_column_nullspace(std::vector<std::map<Key, Rat>> cols) {
    struct ERow {
        std::map<Key, Rat> head;
        std::map<int, Rat> tail;
    };
    auto axpy = [](auto& x, const Rat& f, const auto& y) {
        for (auto& [k, c] : y) {
            auto [it, fresh] = x.try_emplace(k, Rat(0));
            it->second += f * c;
            if (it->second == 0) x.erase(it);
        }
    };
    std::map<Key, ERow> rows;
    std::vector<std::map<int, Rat>> null_basis;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
        ERow v{std::move(cols[static_cast<std::size_t>(i)]), {{i, Rat(1)}}};
        while (!v.head.empty()) {
            auto it = rows.find(v.head.begin()->first);
            if (it == rows.end()) break;
            Rat f = v.head.begin()->second;
            axpy(v.head, -f, it->second.head);
            axpy(v.tail, -f, it->second.tail);
        }
        if (v.head.empty()) {
            null_basis.push_back(std::move(v.tail));
        } else {
            Rat inv = 1 / v.head.begin()->second;
            for (auto& [k, c] : v.head) c *= inv;
            for (auto& [k, c] : v.tail) c *= inv;
            Key pivot = v.head.begin()->first;
            rows.emplace(std::move(pivot), std::move(v));
        }
    }
    return null_basis;
}

/// Incremental exact row reduction over sparse vectors with ordered keys.
/// Rows are kept fully reduced (no row's support meets another row's pivot),
/// so reduction is a single elimination pass over the pivot keys present.
template <class Key>
class SparseEchelon {
public:
    using Row = std::map<Key, Rat>;

    /// Reduces v modulo the span in place.
    void reduce(Row& v) const {
        std::vector<std::pair<Key, Rat>> hits;
        for (auto& [k, c] : v)
            if (rows_.count(k)) hits.emplace_back(k, c);
        for (auto& [k, f] : hits) axpy(v, -f, rows_.at(k));
    }

    /// Inserts v if independent of the current span; returns true if added.
    bool insert(Row v) {
        reduce(v);
        if (v.empty()) return false;
        Rat lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        Key pivot = v.begin()->first;
        for (auto& [p, row] : rows_) {
            auto it = row.find(pivot);
            if (it != row.end()) {
                Rat f = it->second;
                axpy(row, -f, v);
            }
        }
        rows_.emplace(std::move(pivot), std::move(v));
        return true;
    }

    bool contains(Row v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static void axpy(Row& x, const Rat& f, const Row& y) {
        for (auto& [k, c] : y) {
            auto [it, fresh] = x.try_emplace(k, Rat(0));
            it->second += f * c;
            if (it->second == 0) x.erase(it);
        }
    }

    std::map<Key, Row> rows_;  // pivot key -> reduced row
};

}  // namespace jl
