#include "semihilb/search.hpp"

#include "semihilb/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <omp.h>

namespace semihilb {

namespace {

Int mod(Int x, Int e) {
    Int r = x % e;
    return r < 0 ? r + e : r;
}

} // namespace

ResidueRow residue_admissible(Int e, Int h) {
    if (e < 2 || h < 1 || h > e - 1)
        throw Error(ErrorCode::BadRange, "need e >= 2 and 1 <= h <= e - 1, got e = " + std::to_string(e) +
                                             ", h = " + std::to_string(h));
    ResidueRow row;
    row.e = e;
    row.h = h;
    for (Int x : {Int{1}, Int{2}, Int{3}, h, h + 1, h + 2, 2 * h, 2 * h + 1, 3 * h}) row.base_classes.push_back(mod(x, e));
    for (Int x : {2 * h + 2, h + 3, 3 * h + 1, 2 * h + 3, 3 * h + 2}) row.extra_classes.push_back(mod(x, e));

    std::set<Int> base(row.base_classes.begin(), row.base_classes.end());
    if (base.size() != row.base_classes.size() || base.count(0)) return row;
    std::set<Int> extra(row.extra_classes.begin(), row.extra_classes.end());
    for (Int r = 1; r < e; ++r)
        if (!base.count(r) && !extra.count(r)) return row;
    row.admissible = true;
    return row;
}

std::vector<ResidueRow> residue_table(Int e) {
    if (e < 10) throw Error(ErrorCode::BadRange, "residue table needs e >= 10, got " + std::to_string(e));
    std::vector<ResidueRow> rows;
    for (Int h = 4; h <= e - 1; ++h) rows.push_back(residue_admissible(e, h));
    return rows;
}

std::vector<Int> sp_generators(const SpParameters& p) {
    auto fail = [](const std::string& m) { throw Error(ErrorCode::ConstraintViolation, m); };
    if (p.p < 1 || p.p > 12) fail("p must lie in [1, 12]");
    if (p.k < 1) fail("k must be at least 1");
    if (p.k_prime < -2 || p.k_prime > 4 * p.k - 2) fail("k' must lie in [-2, 4k - 2]");
    if (!(4 * p.k_prime > 3 * p.k - p.p)) fail("need 4k' > 3k - p");
    if (p.alpha < 0 || p.beta < 0 || p.gamma < 0) fail("alpha, beta, gamma must be non-negative");
    if (!(p.alpha < p.gamma) || !(p.beta < p.gamma)) fail("need alpha < gamma and beta < gamma");
    const Int e = 13;
    const Int ni = p.k * e + p.p;
    const Int nj = p.k_prime * e + 4 * p.p;
    return {e,
            ni,
            nj,
            3 * ni - e,
            2 * ni + nj - e,
            ni + 2 * nj - e,
            3 * nj - e,
            2 * ni + 2 * nj - p.alpha * e,
            3 * ni + nj - p.beta * e,
            3 * ni + 2 * nj - p.gamma * e};
}

NumericalSemigroup construct_sp(const SpParameters& p) {
    const auto gens = sp_generators(p);
    try {
        auto s = NumericalSemigroup::build(gens);
        if (s.multiplicity() != 13 || s.embedding_dimension() != 10)
            throw Error(ErrorCode::NotMinimal, "multiplicity is " + std::to_string(s.multiplicity()));
        return s;
    } catch (const Error& err) {
        if (err.code() == ErrorCode::NotMinimal) throw;
        throw Error(ErrorCode::NotMinimal, "{" + format_list(gens) + "}: " + err.what());
    }
}

void validate(const SearchConfig& c) {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::BadConfig, m); };
    if (c.v_offset != 3 && c.v_offset != 4) bad("v_offset must be 3 or 4");
    if (c.workers < 1) bad("workers must be at least 1");
    if (c.gen_bound < 0 || (c.gen_bound == 0 && c.gen_bound_factor < 1)) bad("generator bound must be positive");
    if (c.e_lo > c.e_hi) return;
    if (c.e_lo < 2) bad("multiplicity range must start at 2 or above");
    for (Int e = c.e_lo; e <= c.e_hi; ++e)
        if (c.bound_for(e) < 3 * e)
            bad("generator bound " + std::to_string(c.bound_for(e)) + " is below 3e = " + std::to_string(3 * e));
}

namespace {

using Bits = std::vector<char>;

void close_under(Bits& mem, Int g) {
    const auto n = static_cast<Int>(mem.size());
    for (Int x = g; x < n; ++x)
        if (mem[static_cast<std::size_t>(x - g)]) mem[static_cast<std::size_t>(x)] = 1;
}

bool in(const Bits& mem, Int x) {
    return x >= 0 && x < static_cast<Int>(mem.size()) && mem[static_cast<std::size_t>(x)];
}

// Window large enough to decide membership of every forced value and every
// candidate generator.
Int window_of(const Skeleton& sk, Int bound) {
    Int top = bound;
    for (Int v : sk.apery_extra) top = std::max(top, v);
    return top + sk.e;
}

// Residue classes distinct and nonzero, generators in (e, bound], and no
// forced value an e-shift of the skeleton semigroup.
bool admissible(const Skeleton& sk, Int bound) {
    const Int e = sk.e;
    std::vector<char> seen(static_cast<std::size_t>(e), 0);
    seen[0] = 1;
    for (const auto* list : {&sk.gens, &sk.apery_extra})
        for (Int v : *list) {
            auto& slot = seen[static_cast<std::size_t>(mod(v, e))];
            if (slot) return false;
            slot = 1;
        }
    for (Int g : sk.gens)
        if (g <= e || g > bound) return false;

    Bits mem(static_cast<std::size_t>(window_of(sk, bound) + 1), 0);
    mem[0] = 1;
    close_under(mem, e);
    for (Int g : sk.gens) close_under(mem, g);
    for (const auto* list : {&sk.gens, &sk.apery_extra})
        for (Int v : *list)
            if (in(mem, v - e)) return false;
    return true;
}

void emit(std::vector<Skeleton>& out, Int e, Int bound, std::vector<Int> gens, std::vector<Int> extra) {
    Skeleton sk{e, std::move(gens), std::move(extra)};
    if (admissible(sk, bound)) out.push_back(std::move(sk));
}

void skeletons_e3(std::vector<Skeleton>& out, Int e, Int b) {
    for (Int i = e + 1; i <= b; ++i)
        for (Int j = i + 1; 3 * j - e <= b; ++j)
            emit(out, e, b, {i, j, 3 * i - e, 2 * i + j - e, i + 2 * j - e, 3 * j - e}, {2 * i, i + j, 2 * j});
}

void skeletons_e4(std::vector<Skeleton>& out, Int e, Int b) {
    // Level-2 decrease with |Ap_2| = 4: Ap_2 = {2i, i+j, 2j, i+k} or {2i, i+j, 2j, 2k}.
    for (Int i = e + 1; 3 * i - e <= b; ++i)
        for (Int j = e + 1; 3 * j - e <= b; ++j) {
            if (j == i) continue;
            for (Int k = e + 1; k <= b; ++k) {
                if (k == i || k == j) continue;
                emit(out, e, b, {i, j, k, 3 * i - e, 2 * i + j - e, i + 2 * j - e, 3 * j - e, 2 * i + k - e},
                     {2 * i, i + j, 2 * j, i + k});
                if (i < j)
                    emit(out, e, b, {i, j, k, 3 * i - e, 2 * i + j - e, i + 2 * j - e, 3 * j - e, 3 * k - e},
                         {2 * i, i + j, 2 * j, 2 * k});
            }
        }
    // |Ap_2| = 3, |Ap_3| = 1 with D_2 + e = {4i, 2i+j, i+2j, 3j}.
    for (Int i = e + 1; 4 * i - e <= b; ++i)
        for (Int j = e + 1; 3 * j - e <= b; ++j) {
            if (j == i) continue;
            emit(out, e, b, {i, j, 4 * i - e, 2 * i + j - e, i + 2 * j - e, 3 * j - e}, {2 * i, i + j, 2 * j, 3 * i});
        }
    // |Ap_2| = 3, |Ap_3| = 1 with D_3 + e = {4i, 3i+j, ..., 4j}: one element of
    // {3i, 2i+j, i+2j, 3j} is in Ap_3, the others shifted down by e are generators.
    for (Int i = e + 1; i <= b; ++i)
        for (Int j = i + 1; j <= b; ++j) {
            const Int c3[4] = {3 * i, 2 * i + j, i + 2 * j, 3 * j};
            for (int q = 0; q < 4; ++q) {
                std::vector<Int> gens{i, j};
                for (int t = 0; t < 4; ++t)
                    if (t != q) gens.push_back(c3[t] - e);
                emit(out, e, b, std::move(gens), {2 * i, i + j, 2 * j, c3[q]});
            }
        }
}

struct Completion {
    const Skeleton& sk;
    Int bound;
    int v_offset;
    std::vector<Int> free_classes;
    std::vector<Int> chosen;
    std::vector<NumericalSemigroup>& hits;

    bool forced_still_apery(const Bits& mem) const {
        for (const auto* list : {&sk.gens, &sk.apery_extra})
            for (Int v : *list)
                if (in(mem, v - sk.e)) return false;
        return true;
    }

    void leaf() {
        std::vector<Int> gens{sk.e};
        gens.insert(gens.end(), sk.gens.begin(), sk.gens.end());
        gens.insert(gens.end(), chosen.begin(), chosen.end());
        try {
            auto s = NumericalSemigroup::build(gens);
            if (s.embedding_dimension() != sk.e - v_offset) return;
            Analysis a(std::move(s), AnalysisOptions{false});
            if (a.hilbert().decreasing()) hits.push_back(a.semigroup());
        } catch (const Error&) {
            // not a minimal generating set
        }
    }

    void run(std::size_t depth, const Bits& mem) {
        if (depth == free_classes.size()) {
            leaf();
            return;
        }
        const Int e = sk.e;
        const Int r = free_classes[depth];
        for (Int c = r + e; c <= bound; c += e) {
            if (in(mem, c)) break; // every later candidate of this class is in too
            Bits next = mem;
            close_under(next, c);
            if (!forced_still_apery(next)) continue;
            chosen.push_back(c);
            run(depth + 1, next);
            chosen.pop_back();
        }
    }
};

void complete(const Skeleton& sk, Int bound, int v_offset, std::vector<NumericalSemigroup>& hits) {
    const Int e = sk.e;
    std::vector<char> used(static_cast<std::size_t>(e), 0);
    used[0] = 1;
    for (const auto* list : {&sk.gens, &sk.apery_extra})
        for (Int v : *list) used[static_cast<std::size_t>(mod(v, e))] = 1;
    Completion c{sk, bound, v_offset, {}, {}, hits};
    for (Int r = 1; r < e; ++r)
        if (!used[static_cast<std::size_t>(r)]) c.free_classes.push_back(r);

    Bits mem(static_cast<std::size_t>(window_of(sk, bound) + 1), 0);
    mem[0] = 1;
    close_under(mem, e);
    for (Int g : sk.gens) close_under(mem, g);
    c.run(0, mem);
}

void finalize(std::vector<NumericalSemigroup>& hits) {
    auto key_less = [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
        if (a.multiplicity() != b.multiplicity()) return a.multiplicity() < b.multiplicity();
        return a.generators() < b.generators();
    };
    std::sort(hits.begin(), hits.end(), key_less);
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
}

} // namespace

std::vector<Skeleton> enumerate_skeletons(const SearchConfig& c) {
    validate(c);
    std::vector<Skeleton> out;
    for (Int e = c.e_lo; e <= c.e_hi; ++e) {
        const Int b = c.bound_for(e);
        if (c.v_offset == 3)
            skeletons_e3(out, e, b);
        else
            skeletons_e4(out, e, b);
    }
    return out;
}

std::vector<NumericalSemigroup> search_decreasing_serial(const SearchConfig& c) {
    std::vector<NumericalSemigroup> hits;
    for (const auto& sk : enumerate_skeletons(c)) complete(sk, c.bound_for(sk.e), c.v_offset, hits);
    finalize(hits);
    return hits;
}

std::vector<NumericalSemigroup> search_decreasing(const SearchConfig& c) {
    const auto skeletons = enumerate_skeletons(c);
    const auto n = static_cast<std::ptrdiff_t>(skeletons.size());
    std::vector<std::vector<NumericalSemigroup>> per_thread(static_cast<std::size_t>(c.workers));

#pragma omp parallel num_threads(c.workers)
    {
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
            const auto& sk = skeletons[static_cast<std::size_t>(idx)];
            complete(sk, c.bound_for(sk.e), c.v_offset, local);
        }
    }

    std::vector<NumericalSemigroup> hits;
    for (auto& part : per_thread)
        for (auto& s : part) hits.push_back(std::move(s));
    finalize(hits);
    return hits;
}

std::vector<NumericalSemigroup> search_decreasing_exhaustive(Int e, int v, Int bound) {
    std::vector<NumericalSemigroup> hits;
    if (e < 2 || v < 1 || v > e) return hits;
    const Int window = bound + e;
    std::vector<Int> chosen;

    auto rec = [&](auto&& self, Int r, const Bits& mem) -> void {
        const auto have = static_cast<Int>(chosen.size());
        if (have == v - 1) {
            std::vector<Int> gens{e};
            gens.insert(gens.end(), chosen.begin(), chosen.end());
            if (gcd_of(gens) != 1) return;
            try {
                auto s = NumericalSemigroup::build(gens);
                Analysis a(std::move(s), AnalysisOptions{false});
                if (a.hilbert().decreasing()) hits.push_back(a.semigroup());
            } catch (const Error&) {
            }
            return;
        }
        if (r >= e || (e - r) < (v - 1 - have)) return;
        // Class r left without a generator.
        self(self, r + 1, mem);
        for (Int c = r + e; c <= bound; c += e) {
            if (in(mem, c)) break;
            Bits next = mem;
            close_under(next, c);
            chosen.push_back(c);
            self(self, r + 1, next);
            chosen.pop_back();
        }
    };

    Bits mem(static_cast<std::size_t>(window + 1), 0);
    mem[0] = 1;
    close_under(mem, e);
    rec(rec, 1, mem);
    finalize(hits);
    return hits;
}

std::string search_csv(const std::vector<NumericalSemigroup>& hits) {
    std::ostringstream os;
    os << "e,v,generators,hilbert,decreasing_levels\n";
    for (const auto& s : hits) {
        const auto h = hilbert_function(s);
        std::vector<Int> lv(h.decreasing_levels.begin(), h.decreasing_levels.end());
        os << s.multiplicity() << ',' << s.embedding_dimension() << ',' << format_list(s.generators(), ";") << ','
           << format_list(h.values, ";") << ',' << format_list(lv, ";") << '\n';
    }
    return os.str();
}

} // namespace semihilb
