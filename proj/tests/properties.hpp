#pragma once

// Executable statements checked over generated corpora. Shared by the
// property tests and the acceptance driver.

#include "examples.hpp"
#include "semihilb/combinatorics.hpp"
#include "semihilb/corpus.hpp"
#include "semihilb/error.hpp"
#include "semihilb/filtration.hpp"
#include "semihilb/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace props {

using namespace semihilb;

struct Result {
    explicit Result(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t instances = 0;
    std::size_t applicable = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(const NumericalSemigroup& s, const std::string& what) {
        if (failures++ == 0) first_failure = "<" + format_list(s.generators()) + ">: " + what;
    }
};

inline std::string summary(const Result& r) {
    std::ostringstream o;
    o << r.name << ": " << r.instances << " instances, " << r.applicable << " applicable, " << r.failures
      << " failures";
    if (!r.ok()) o << " (" << r.first_failure << ")";
    return o.str();
}

inline std::vector<Analysis> analyze(const std::vector<NumericalSemigroup>& v) {
    std::vector<Analysis> out;
    out.reserve(v.size());
    for (const auto& s : v) out.emplace_back(s);
    return out;
}

struct Corpora {
    std::vector<Analysis> general;    // examples + random, e <= 40
    std::vector<Analysis> decreasing; // examples that decrease + decreasing corpus
    std::vector<Analysis> symmetric;  // Kunz enumeration + random pairing, v >= e - 4
    std::vector<Analysis> profile3;   // v = e - 3
    std::vector<Analysis> lemmas;     // random, filtered for the counting-lemma hypotheses
};

inline std::vector<Analysis> lemma_corpus(std::uint64_t seed, std::size_t n);

inline Corpora build_corpora(std::uint64_t seed, std::size_t n = 500) {
    Corpora c;
    auto general = ex::all_examples();
    for (auto& s : random_semigroups(seed, n, 3, 40)) general.push_back(std::move(s));
    c.general = analyze(general);

    std::vector<NumericalSemigroup> dec;
    for (auto& s : ex::all_examples())
        if (Analysis(s).hilbert().decreasing()) dec.push_back(s);
    for (auto& s : decreasing_corpus(seed + 1, n)) dec.push_back(std::move(s));
    c.decreasing = analyze(dec);

    std::vector<NumericalSemigroup> sym;
    for (Int e = 3; e <= 9; ++e)
        for (auto& s : kunz_symmetric(e, 3))
            if (s.embedding_dimension() >= e - 4) sym.push_back(std::move(s));
    for (auto& s : random_symmetric(seed + 2, n, 5, 40, 4)) sym.push_back(std::move(s));
    c.symmetric = analyze(sym);

    auto p3 = random_with_profile(seed + 3, n, 8, 20, 3);
    for (auto& row : ex::sp_rows) p3.push_back(ex::make(row));
    c.profile3 = analyze(p3);

    c.lemmas = lemma_corpus(seed + 4, n);
    return c;
}

inline std::set<Int> as_set(const std::vector<Int>& v) {
    return {v.begin(), v.end()};
}

inline std::set<Int> shifted(const std::vector<Int>& v, Int by) {
    std::set<Int> out;
    for (Int x : v) out.insert(x + by);
    return out;
}

// Union over all maximal representations of all elements of the set.
inline std::set<Int> support_of_set(const Analysis& a, const std::vector<Int>& set) {
    std::set<Int> out;
    const auto& gens = a.semigroup().generators();
    for (Int x : set)
        for (const auto& rep : maximal_representations(a.semigroup(), a.orders(), x))
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (rep.coeffs[i] != 0) out.insert(gens[i]);
    return out;
}

// y with a unique maximal representation a n_i + b n_j, a, b > 0, avoiding e.
struct TwoGen {
    Int x = 0;
    Int n_i = 0, n_j = 0;
    int a = 0, b = 0;
    int order = 0;
};

inline std::optional<TwoGen> two_gen(const Analysis& a, Int x, Int y) {
    const auto reps = maximal_representations(a.semigroup(), a.orders(), y);
    if (reps.size() != 1) return std::nullopt;
    const auto& gens = a.semigroup().generators();
    TwoGen t;
    t.x = x;
    t.order = reps[0].order;
    int found = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Int c = reps[0].coeffs[i];
        if (c == 0) continue;
        if (i == 0 || ++found > 2) return std::nullopt;
        (found == 1 ? t.n_i : t.n_j) = gens[i];
        (found == 1 ? t.a : t.b) = static_cast<int>(c);
    }
    if (found != 2) return std::nullopt;
    return t;
}

inline Result delta_identity(const std::vector<Analysis>& corpus) {
    Result r{"delta identity"};
    for (const auto& a : corpus) {
        ++r.instances;
        ++r.applicable;
        try {
            audit_delta(a);
        } catch (const Error& e) {
            r.fail(a.semigroup(), e.what());
        }
    }
    return r;
}

// |D_k| >= max(1 + |C_k|, k + 2) at decreasing levels; |Ap_k0| >= k0 + 1,
// |Ap_2| >= 3 and |C_3| >= 4 when decreasing.
inline Result decreasing_bounds(const std::vector<Analysis>& corpus) {
    Result r{"decreasing => |Ap_2| >= 3, |C_3| >= 4, |D_k| and |Ap_k0| bounds"};
    for (const auto& a : corpus) {
        ++r.instances;
        const auto& h = a.hilbert();
        if (!h.decreasing()) continue;
        ++r.applicable;
        const auto& t = a.tables();
        const auto& st = a.apery_strata();
        if (st.size_of(2) < 3) r.fail(a.semigroup(), "|Ap_2| < 3");
        if (t.c_set(3).size() < 4) r.fail(a.semigroup(), "|C_3| < 4");
        if (!t.k0 || st.size_of(*t.k0) < static_cast<std::size_t>(*t.k0 + 1))
            r.fail(a.semigroup(), "|Ap_k0| < k0 + 1");
        for (int k : h.decreasing_levels) {
            const auto need = std::max<std::size_t>(1 + t.c_set(k).size(), static_cast<std::size_t>(k + 2));
            if (t.d_set(k).size() < need) r.fail(a.semigroup(), "|D_k| bound at level " + std::to_string(k));
        }
    }
    return r;
}

// |D_k| >= k + 1 implies |C_h| >= h + 1 for h in [2, k].
inline Result large_d_spreads(const std::vector<Analysis>& corpus) {
    Result r{"|D_k| >= k+1 => |C_h| >= h+1"};
    for (const auto& a : corpus) {
        ++r.instances;
        const auto& t = a.tables();
        bool hit = false;
        for (const auto& [k, set] : t.D) {
            if (set.size() < static_cast<std::size_t>(k + 1)) continue;
            hit = true;
            for (int h = 2; h <= k; ++h)
                if (t.c_set(h).size() < static_cast<std::size_t>(h + 1))
                    r.fail(a.semigroup(), "|C_" + std::to_string(h) + "| too small");
        }
        r.applicable += hit;
    }
    return r;
}

inline Result ap3_empty_shift(const std::vector<Analysis>& corpus) {
    Result r{"Ap_3 empty => D_k + e = C_{k+1}"};
    for (const auto& a : corpus) {
        ++r.instances;
        if (a.apery_strata().size_of(3) != 0) continue;
        ++r.applicable;
        const auto& t = a.tables();
        const Int e = a.multiplicity();
        for (int k = 2; k <= t.r_stop; ++k)
            if (shifted(t.d_set(k), e) != as_set(t.c_set(k + 1)))
                r.fail(a.semigroup(), "level " + std::to_string(k));
    }
    return r;
}

// For g in D_k with ord(g + e) = k + p: p <= d - 1, |Supp(g + e)| <= |Ap_{p+1}|,
// e never appears in a maximal representation of g + e, and induced elements
// at levels h < k + p with h <= max(p + 1, k0) are Apery elements.
inline Result d_shift_structure(const std::vector<Analysis>& corpus) {
    Result r{"D_k shift: p <= d-1, support bound, a_1 = 0, induced in Ap"};
    for (const auto& a : corpus) {
        ++r.instances;
        const auto& t = a.tables();
        if (!t.k0) continue;
        ++r.applicable;
        const auto& s = a.semigroup();
        const auto& st = a.apery_strata();
        const Int e = s.multiplicity();
        for (const auto& [k, set] : t.D)
            for (Int g : set) {
                const int p = a.orders()[g + e] - k;
                if (p > st.d - 1) r.fail(s, "p > d - 1 for " + std::to_string(g));
                const auto reps = maximal_representations(s, a.orders(), g + e);
                int supp = 0;
                for (const auto& rep : reps) {
                    if (rep.coeffs[0] != 0) r.fail(s, "e in a maximal representation of " + std::to_string(g + e));
                    supp = std::max<int>(supp, static_cast<int>(std::count_if(rep.coeffs.begin(), rep.coeffs.end(),
                                                                             [](Int c) { return c != 0; })));
                }
                if (static_cast<std::size_t>(supp) > st.size_of(p + 1)) r.fail(s, "support bound");
                const int top = std::min(k + p - 1, std::max(p + 1, *t.k0));
                for (const auto& rep : reps)
                    for (int h = 2; h <= top; ++h)
                        for (Int y : induced_elements(s.generators(), rep, h))
                            if (y >= e && s.contains(y - e)) r.fail(s, "induced element not in Ap");
            }
    }
    return r;
}

// Elements induced at level h by a maximal representation of s in C_k have
// order h and lie in C_h.
inline Result induced_orders(const std::vector<Analysis>& corpus) {
    Result r{"induced elements have the predicted order"};
    for (const auto& a : corpus) {
        ++r.instances;
        ++r.applicable;
        const auto& s = a.semigroup();
        const auto& t = a.tables();
        for (const auto& [k, set] : t.C) {
            for (Int x : set)
                for (const auto& rep : maximal_representations(s, a.orders(), x))
                    for (int h = 1; h < k; ++h) {
                        const auto ch = as_set(t.c_set(h));
                        for (Int y : induced_elements(s.generators(), rep, h)) {
                            if (order_of(s, y) != h) r.fail(s, "order of " + std::to_string(y));
                            if (!ch.count(y)) r.fail(s, std::to_string(y) + " not in C_" + std::to_string(h));
                        }
                    }
        }
    }
    return r;
}

inline Result support_chain(const std::vector<Analysis>& corpus) {
    Result r{"Supp(C_k) within Supp(C_{k-1})"};
    for (const auto& a : corpus) {
        ++r.instances;
        const auto& t = a.tables();
        if (t.r_stop < 3) continue;
        ++r.applicable;
        std::set<Int> prev = support_of_set(a, t.c_set(2));
        for (int k = 3; k <= t.r_stop; ++k) {
            auto cur = support_of_set(a, t.c_set(k));
            if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()))
                r.fail(a.semigroup(), "level " + std::to_string(k));
            prev = std::move(cur);
        }
    }
    return r;
}

inline Result gorenstein_guard(const std::vector<Analysis>& corpus) {
    Result r{"symmetric and v >= e-4 => non-decreasing"};
    for (const auto& a : corpus) {
        ++r.instances;
        const auto& s = a.semigroup();
        if (!is_symmetric(s) || s.embedding_dimension() < s.multiplicity() - 4) continue;
        ++r.applicable;
        if (a.hilbert().decreasing()) r.fail(s, "decreasing");
    }
    return r;
}

inline Result symmetry_tests_agree(const std::vector<Analysis>& corpus) {
    Result r{"gap and Apery symmetry tests agree"};
    for (const auto& a : corpus) {
        ++r.instances;
        const bool sym = is_symmetric(a.semigroup());
        r.applicable += sym;
        if (sym != is_symmetric_apery(a.semigroup())) r.fail(a.semigroup(), "disagree");
    }
    return r;
}

inline Result thm_e3_equivalence(const std::vector<Analysis>& corpus) {
    Result r{"v = e-3: decreasing <=> decreasing at 2 <=> pattern"};
    for (const auto& a : corpus) {
        ++r.instances;
        auto c = check_thm_e3(a);
        if (c.verdict == Verdict::NotApplicable) continue;
        ++r.applicable;
        if (c.verdict != Verdict::Consistent) r.fail(a.semigroup(), c.reason);
    }
    return r;
}

inline Result c3_pattern(const std::vector<Analysis>& corpus) {
    Result r{"decreasing and |Ap_2| = 3 => C_3 pattern"};
    for (const auto& a : corpus) {
        ++r.instances;
        if (!a.hilbert().decreasing() || a.apery_strata().size_of(2) != 3) continue;
        ++r.applicable;
        if (classify_c3(a).empty()) r.fail(a.semigroup(), "no pair");
    }
    return r;
}

inline Result ap24_unique(const std::vector<Analysis>& corpus) {
    Result r{"decreasing and |Ap_2| = 4 => exactly one case"};
    for (const auto& a : corpus) {
        ++r.instances;
        if (!a.hilbert().decreasing() || a.apery_strata().size_of(2) != 4) continue;
        ++r.applicable;
        std::set<char> tags;
        for (const auto& m : match_ap24_case(a)) tags.insert(m.tag);
        if (tags.size() != 1) r.fail(a.semigroup(), std::to_string(tags.size()) + " cases match");
    }
    return r;
}

inline Result conditional_reports(const std::vector<Analysis>& corpus) {
    Result r{"apj1, lemma r0 and v = e-4 reports never violated"};
    for (const auto& a : corpus) {
        ++r.instances;
        const auto j = check_apj1(a);
        const auto l = check_lemma_r0(a);
        const auto f = check_thm_e4(a);
        const bool any = j.verdict != Verdict::NotApplicable || l.verdict != Verdict::NotApplicable ||
                         f.verdict != Verdict::NotApplicable;
        r.applicable += any;
        if (j.verdict == Verdict::Violated) r.fail(a.semigroup(), "apj1: " + j.reason);
        if (j.verdict != Verdict::NotApplicable && is_symmetric(a.semigroup())) r.fail(a.semigroup(), "apj1 symmetric");
        if (l.verdict == Verdict::Violated) r.fail(a.semigroup(), "lemma r0: " + l.reason);
        if (f.verdict == Verdict::Violated) r.fail(a.semigroup(), "v = e-4: " + f.reason);
    }
    return r;
}

inline std::vector<TwoGen> two_gen_d(const Analysis& a, int k) {
    std::vector<TwoGen> out;
    const Int e = a.multiplicity();
    for (Int x : a.tables().d_set(k))
        if (auto t = two_gen(a, x, x + e)) out.push_back(*t);
    return out;
}

inline TwoGenConfig single(Int ni, Int nj, int a, int b, int h) {
    return {ni, nj, {{a, b}}, a + b, h};
}

// Disjoint two-generator supports in D_k: induced values at each level are
// disjoint and |C_h| is bounded below by the two counts.
inline Result disjoint_supports(const std::vector<Analysis>& corpus) {
    Result r{"disjoint two-generator supports in D_k"};
    for (const auto& an : corpus) {
        ++r.instances;
        bool hit = false;
        const auto& t = an.tables();
        for (const auto& [k, set] : t.D) {
            const auto tg = two_gen_d(an, k);
            for (std::size_t u = 0; u < tg.size(); ++u)
                for (std::size_t w = u + 1; w < tg.size(); ++w) {
                    const auto& y1 = tg[u];
                    const auto& y2 = tg[w];
                    if (y1.n_i == y2.n_i || y1.n_i == y2.n_j || y1.n_j == y2.n_i || y1.n_j == y2.n_j) continue;
                    hit = true;
                    const int r1 = y1.order - k, r2 = y2.order - k, rr = std::min(r1, r2);
                    for (int h = 2; h <= k + rr; ++h) {
                        const auto z1 = induced_values(single(y1.n_i, y1.n_j, y1.a, y1.b, h));
                        const auto z2 = induced_values(single(y2.n_i, y2.n_j, y2.a, y2.b, h));
                        std::set<Int> both(z1.begin(), z1.end());
                        both.insert(z2.begin(), z2.end());
                        if (both.size() != z1.size() + z2.size()) r.fail(an.semigroup(), "z_1 = z_2");
                        const auto f1 = beta_brute_force(single(y1.n_i, y1.n_j, y1.a, y1.b, h)).formal;
                        const auto f2 = beta_brute_force(single(y2.n_i, y2.n_j, y2.a, y2.b, h)).formal;
                        if (both.size() != static_cast<std::size_t>(f1 + f2)) r.fail(an.semigroup(), "numeric != formal sum");
                        const auto ch = as_set(t.c_set(h));
                        if (!std::includes(ch.begin(), ch.end(), both.begin(), both.end()))
                            r.fail(an.semigroup(), "induced outside C_h");
                        const std::size_t need = h < k + rr ? 4 : (r1 != r2 ? 3 : 2);
                        if (ch.size() < std::max<std::size_t>(need, both.size()))
                            r.fail(an.semigroup(), "|C_" + std::to_string(h) + "| bound");
                    }
                }
        }
        r.applicable += hit;
    }
    return r;
}

// Two-generator supports {n_i, n_j}, {n_t, n_j} in D_k, k >= 3: |C_h| >= 3
// when both n_i and n_t appear once, 4 otherwise, for 2 <= h < k.
inline Result shared_generator(const std::vector<Analysis>& corpus) {
    Result r{"shared-generator supports in D_k"};
    for (const auto& an : corpus) {
        ++r.instances;
        bool hit = false;
        const auto& t = an.tables();
        for (const auto& [k, set] : t.D) {
            if (k < 3) continue;
            const auto tg = two_gen_d(an, k);
            for (std::size_t u = 0; u < tg.size(); ++u)
                for (std::size_t w = u + 1; w < tg.size(); ++w) {
                    const auto& y1 = tg[u];
                    const auto& y2 = tg[w];
                    // Put the shared generator second.
                    Int shared = 0;
                    for (Int g : {y1.n_i, y1.n_j})
                        if (g == y2.n_i || g == y2.n_j) shared = shared ? -1 : g;
                    if (shared <= 0) continue;
                    hit = true;
                    const int a = y1.n_i == shared ? y1.b : y1.a;
                    const int c = y2.n_i == shared ? y2.b : y2.a;
                    const std::size_t need = a == 1 && c == 1 ? 3 : 4;
                    for (int h = 2; h < k; ++h)
                        if (t.c_set(h).size() < need) r.fail(an.semigroup(), "|C_" + std::to_string(h) + "| bound");
                }
        }
        r.applicable += hit;
    }
    return r;
}

// Elements of C_k sharing a two-generator support give at most |C_h| values,
// all inside C_h; one maximal representation avoiding e bounds |C_h| below.
inline Result induced_counts(const std::vector<Analysis>& corpus) {
    Result r{"numeric induced count <= |C_h|, support count bound"};
    for (const auto& an : corpus) {
        ++r.instances;
        bool hit = false;
        const auto& s = an.semigroup();
        const auto& t = an.tables();
        for (const auto& [k, set] : t.C) {
            if (k < 3) continue;
            std::map<std::pair<Int, Int>, std::vector<std::pair<int, int>>> groups;
            for (Int x : set) {
                if (auto tg = two_gen(an, x, x)) groups[{tg->n_i, tg->n_j}].push_back({tg->a, tg->b});
                for (const auto& rep : maximal_representations(s, an.orders(), x)) {
                    if (rep.coeffs[0] != 0) continue;
                    for (int h = 2; h < k; ++h)
                        if (static_cast<Int>(t.c_set(h).size()) < support_count_bound(rep, h))
                            r.fail(s, "support count bound at " + std::to_string(h));
                }
            }
            for (auto& [pair, reps] : groups) {
                hit = true;
                std::sort(reps.begin(), reps.end());
                for (int h = 2; h < k; ++h) {
                    TwoGenConfig c{pair.first, pair.second, reps, k, h};
                    const auto bc = beta_brute_force(c);
                    if (bc.formal != beta_closed_form(c)) r.fail(s, "closed form");
                    if (static_cast<std::size_t>(bc.numeric) > t.c_set(h).size()) r.fail(s, "numeric > |C_h|");
                    const auto vals = induced_values(c);
                    const auto ch = as_set(t.c_set(h));
                    for (Int v : vals)
                        if (!ch.count(v)) r.fail(s, "induced value outside C_h");
                }
            }
        }
        r.applicable += hit;
    }
    return r;
}

// Random instances, e in [10, 40], that have two elements of some D_k with
// two-generator supports, either disjoint or sharing one generator.
inline std::vector<Analysis> lemma_corpus(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::vector<Analysis> out;
    while (out.size() < n) {
        std::vector<Analysis> one;
        if (draw(rng, 0, 1) == 0) one.emplace_back(random_semigroup(rng, 10, 40, 10));
        else one.emplace_back(random_kunz(rng, draw(rng, 10, 40), draw(rng, 3, 4)));
        if (disjoint_supports(one).applicable + shared_generator(one).applicable > 0) out.push_back(std::move(one[0]));
    }
    return out;
}

} // namespace props
