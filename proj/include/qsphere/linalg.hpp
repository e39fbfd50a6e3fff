// Incremental exact Gaussian elimination over an arbitrary key set.
// Vectors are sparse maps Key -> F; F must be a field type with value
// semantics (Rational, RatQ). Rows are kept in echelon form with the pivot
// at each row's smallest key and pivot coefficient 1.
#pragma once

#include <map>

namespace qsphere {

template <class Key, class F>
class SpanSolver {
  public:
    using Vec = std::map<Key, F>;

    /// Residual of v after eliminating against the current rows.
    Vec reduce(Vec v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto r = rows_.find(it->first);
            if (r == rows_.end()) break;
            F c = it->second;
            for (const auto& [k, rc] : r->second) {
                auto vt = v.find(k);
                F nv = (vt == v.end() ? F(0) : vt->second) - c * rc;
                if (nv == F(0)) {
                    if (vt != v.end()) v.erase(vt);
                } else {
                    v[k] = nv;
                }
            }
            it = v.begin();
        }
        return v;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }

    /// Adds v to the span; returns true if the rank increased.
    bool add(const Vec& v) {
        Vec r = reduce(v);
        if (r.empty()) return false;
        F pivot = r.begin()->second;
        for (auto& [k, c] : r) c = c / pivot;
        rows_.emplace(r.begin()->first, std::move(r));
        return true;
    }

    size_t rank() const { return rows_.size(); }

  private:
    std::map<Key, Vec> rows_;
};

}  // namespace qsphere
