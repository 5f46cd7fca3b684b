#include "semihilb/filtration.hpp"

#include "semihilb/error.hpp"

#include <algorithm>

namespace semihilb {

Int HilbertProfile::at(int n) const {
    if (n < 0) return 0;
    if (n < static_cast<int>(values.size())) return values[static_cast<std::size_t>(n)];
    return values.back();
}

const std::vector<Int>& FiltrationTables::d_set(int k) const {
    static const std::vector<Int> empty;
    auto it = D.find(k);
    return it == D.end() ? empty : it->second;
}

const std::vector<Int>& FiltrationTables::c_set(int k) const {
    static const std::vector<Int> empty;
    auto it = C.find(k);
    return it == C.end() ? empty : it->second;
}

bool DeltaReport::all_ok() const {
    return std::all_of(levels.begin(), levels.end(), [](const DeltaLevel& l) { return l.ok; });
}

namespace {

Int base_of(const NumericalSemigroup& s) {
    return std::max<Int>(s.frobenius(), 0);
}

// (h+1)M = e + hM, checked on [0, f + (h+1)e]; larger elements have order
// > h + 1 and their e-shift has order > h automatically.
bool shift_holds(const NumericalSemigroup& s, const OrderTable& t, int h) {
    const Int e = s.multiplicity();
    const Int lim = base_of(s) + static_cast<Int>(h + 1) * e;
    for (Int x = 0; x <= lim; ++x) {
        const int o = t[x];
        if (o < h + 1) continue;
        if (x < e || t[x - e] < h) return false;
    }
    return true;
}

struct Grown {
    OrderTable table;
    int r;
};

Grown grow_table(const NumericalSemigroup& s, bool certify) {
    int levels = 4;
    for (;;) {
        OrderTable t(s, order_horizon(s, levels));
        for (int h = 0; h <= levels; ++h) {
            if (!shift_holds(s, t, h)) continue;
            const int need = certify ? h + static_cast<int>(s.multiplicity()) : h;
            if (need <= levels) return {std::move(t), h};
            return {OrderTable(s, order_horizon(s, need)), h};
        }
        levels *= 2;
    }
}

HilbertProfile build_profile(const NumericalSemigroup& s, const OrderTable& t, int r, bool certify) {
    const Int e = s.multiplicity();
    const int top = std::max(certify ? r + static_cast<int>(e) - 1 : r, 1);
    std::vector<Int> counts(static_cast<std::size_t>(top + 1), 0);
    const Int lim = std::min(t.horizon(), base_of(s) + static_cast<Int>(top + 1) * e);
    for (Int x = 0; x <= lim; ++x) {
        const int o = t[x];
        if (o >= 0 && o <= top) ++counts[static_cast<std::size_t>(o)];
    }
    if (certify) {
        for (int n = r; n <= top; ++n)
            if (counts[static_cast<std::size_t>(n)] != e)
                throw Error(ErrorCode::InternalInconsistency,
                            "H_R(" + std::to_string(n) + ") = " + std::to_string(counts[static_cast<std::size_t>(n)]) +
                                " past the reduction number, expected " + std::to_string(e));
    }

    HilbertProfile p;
    p.stable_at = r;
    while (p.stable_at > 0 && counts[static_cast<std::size_t>(p.stable_at - 1)] == e) --p.stable_at;
    const int n_max = std::max(p.stable_at, 1);
    p.values.assign(counts.begin(), counts.begin() + n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        if (p.values[static_cast<std::size_t>(n)] < p.values[static_cast<std::size_t>(n - 1)])
            p.decreasing_levels.push_back(n);
    return p;
}

FiltrationTables build_tables(const NumericalSemigroup& s, const OrderTable& t, int r) {
    const Int e = s.multiplicity();
    FiltrationTables out;
    out.r_stop = r;
    for (int k = 1; k <= r; ++k) out.C[k];
    for (int k = 2; k <= r; ++k) out.D[k];

    const Int lim = base_of(s) + static_cast<Int>(r + 1) * e;
    for (Int x = 0; x <= lim; ++x) {
        const int o = t[x];
        if (o < 0) continue;
        if (o >= 1 && o <= r && (x < e || t[x - e] <= o - 2)) out.C[o].push_back(x);
        const int k = o + 1;
        if (k >= 2 && k <= r) {
            const int up = t[x + e];
            if (up > k) {
                out.D[k].push_back(x);
                out.D_split[{k, up}].push_back(x);
            }
        }
    }
    for (const auto& [k, set] : out.D) {
        if (!set.empty()) {
            out.k0 = k;
            break;
        }
    }
    return out;
}

} // namespace

Analysis::Analysis(NumericalSemigroup s, AnalysisOptions opts)
    : s_(std::move(s)), table_([&] {
          auto g = grow_table(s_, opts.certify_stabilization);
          r_ = g.r;
          return std::move(g.table);
      }()),
      strata_(semihilb::apery_strata(s_, table_)),
      profile_(build_profile(s_, table_, r_, opts.certify_stabilization)),
      tables_(build_tables(s_, table_, r_)) {}

HilbertProfile hilbert_function(const NumericalSemigroup& s) {
    return Analysis(s).hilbert();
}

FiltrationTables strata_tables(const NumericalSemigroup& s) {
    return Analysis(s).tables();
}

DeltaReport audit_delta(const Analysis& a) {
    DeltaReport rep;
    const auto& h = a.hilbert();
    const auto& t = a.tables();
    for (int k = 2; k <= t.r_stop + 1; ++k) {
        DeltaLevel l;
        l.k = k;
        l.delta_h = h.at(k) - h.at(k - 1);
        l.c_size = static_cast<Int>(t.c_set(k).size());
        l.d_size = static_cast<Int>(t.d_set(k).size());
        l.ok = l.delta_h == l.c_size - l.d_size;
        rep.levels.push_back(l);
        if (!l.ok)
            throw Error(ErrorCode::InternalInconsistency,
                        "delta identity fails at level " + std::to_string(k) + ": " + std::to_string(l.delta_h) +
                            " != " + std::to_string(l.c_size) + " - " + std::to_string(l.d_size));
    }
    return rep;
}

bool is_tangent_cone_cm(const Analysis& a) {
    return !a.tables().k0.has_value();
}

bool is_tangent_cone_cm(const NumericalSemigroup& s) {
    return is_tangent_cone_cm(Analysis(s));
}

} // namespace semihilb
