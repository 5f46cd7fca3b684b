#include "semihilb/corpus.hpp"

#include "semihilb/error.hpp"
#include "semihilb/filtration.hpp"
#include "semihilb/structure.hpp"

#include <algorithm>

namespace semihilb {

Int draw(Rng& rng, Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(rng() % span);
}

NumericalSemigroup random_semigroup(Rng& rng, Int e_lo, Int e_hi, int max_extra) {
    const Int e = draw(rng, e_lo, e_hi);
    for (;;) {
        std::vector<Int> vals{e};
        const Int n = draw(rng, 1, std::min<Int>(max_extra, e - 1));
        for (Int i = 0; i < n; ++i) vals.push_back(draw(rng, e + 1, 4 * e));
        if (gcd_of(vals) == 1) return NumericalSemigroup::generated_by(vals);
    }
}

std::vector<NumericalSemigroup> random_semigroups(std::uint64_t seed, std::size_t count, Int e_lo, Int e_hi) {
    Rng rng(seed);
    std::vector<NumericalSemigroup> out;
    while (out.size() < count) out.push_back(random_semigroup(rng, e_lo, e_hi));
    return out;
}

NumericalSemigroup random_kunz(Rng& rng, Int e, Int kmax) {
    std::vector<Int> vals{e};
    for (Int c = 1; c < e; ++c) vals.push_back(draw(rng, 1, kmax) * e + c);
    return NumericalSemigroup::generated_by(vals);
}

std::vector<NumericalSemigroup> random_with_profile(std::uint64_t seed, std::size_t count, Int e_lo, Int e_hi,
                                                    int v_offset) {
    Rng rng(seed);
    std::vector<NumericalSemigroup> out;
    while (out.size() < count) {
        const Int e = draw(rng, e_lo, e_hi);
        for (int tries = 0; tries < 2000; ++tries) {
            auto s = random_kunz(rng, e, draw(rng, 2, 3));
            if (s.embedding_dimension() == e - v_offset) {
                out.push_back(std::move(s));
                break;
            }
        }
    }
    return out;
}

namespace {

// Apery set given by w[c] = k[c] e + c, c = 1..e-1, when it satisfies
// w_a + w_b >= w_{a+b}.
bool kunz_valid(const std::vector<Int>& w, Int e) {
    for (Int a = 1; a < e; ++a)
        for (Int b = a; b < e; ++b) {
            const Int c = (a + b) % e;
            if (c != 0 && w[static_cast<std::size_t>(a)] + w[static_cast<std::size_t>(b)] < w[static_cast<std::size_t>(c)])
                return false;
        }
    return true;
}

NumericalSemigroup from_apery(const std::vector<Int>& w, Int e) {
    std::vector<Int> vals{e};
    vals.insert(vals.end(), w.begin() + 1, w.end());
    return NumericalSemigroup::generated_by(vals);
}

bool symmetric_apery(const std::vector<Int>& w, Int e) {
    const Int top = *std::max_element(w.begin() + 1, w.end());
    const Int m = top % e;
    for (Int c = 1; c < e; ++c) {
        if (c == m) continue;
        const Int partner = ((m - c) % e + e) % e;
        if (partner == 0 || w[static_cast<std::size_t>(c)] + w[static_cast<std::size_t>(partner)] != top) return false;
    }
    return true;
}

} // namespace

std::vector<NumericalSemigroup> kunz_symmetric(Int e, Int kmax) {
    if (e < 2) throw Error(ErrorCode::BadRange, "multiplicity must be at least 2");
    std::vector<NumericalSemigroup> out;
    std::vector<Int> k(static_cast<std::size_t>(e), 1);
    std::vector<Int> w(static_cast<std::size_t>(e), 0);
    for (;;) {
        for (Int c = 1; c < e; ++c) w[static_cast<std::size_t>(c)] = k[static_cast<std::size_t>(c)] * e + c;
        if (symmetric_apery(w, e) && kunz_valid(w, e)) out.push_back(from_apery(w, e));
        Int c = 1;
        while (c < e && k[static_cast<std::size_t>(c)] == kmax) k[static_cast<std::size_t>(c++)] = 1;
        if (c == e) break;
        ++k[static_cast<std::size_t>(c)];
    }
    return out;
}

std::vector<NumericalSemigroup> random_symmetric(std::uint64_t seed, std::size_t count, Int e_lo, Int e_hi,
                                                 int max_offset) {
    Rng rng(seed);
    std::vector<NumericalSemigroup> out;
    while (out.size() < count) {
        const Int e = draw(rng, e_lo, e_hi);
        const Int m = draw(rng, 1, e - 1);
        const Int km = draw(rng, 2, 4);
        std::vector<Int> k(static_cast<std::size_t>(e), 0);
        k[static_cast<std::size_t>(m)] = km;
        bool ok = true;
        for (Int c = 1; c < e && ok; ++c) {
            if (c == m || k[static_cast<std::size_t>(c)] != 0) continue;
            const Int partner = ((m - c) % e + e) % e;
            // w_c + w_partner = w_m: coordinates sum to km, or km - 1 with a carry.
            const Int sum = c < m ? km : km - 1;
            if (partner == c) {
                if (sum % 2 != 0 || sum < 2) ok = false;
                else k[static_cast<std::size_t>(c)] = sum / 2;
                continue;
            }
            if (sum < 2) {
                ok = false;
                continue;
            }
            const Int kc = draw(rng, 1, sum - 1);
            k[static_cast<std::size_t>(c)] = kc;
            k[static_cast<std::size_t>(partner)] = sum - kc;
        }
        if (!ok) continue;
        std::vector<Int> w(static_cast<std::size_t>(e), 0);
        for (Int c = 1; c < e; ++c) w[static_cast<std::size_t>(c)] = k[static_cast<std::size_t>(c)] * e + c;
        if (!kunz_valid(w, e)) continue;
        auto s = from_apery(w, e);
        if (s.embedding_dimension() >= e - max_offset) out.push_back(std::move(s));
    }
    return out;
}

std::vector<NumericalSemigroup> random_sp(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<NumericalSemigroup> out;
    while (out.size() < count) {
        SpParameters p;
        p.p = static_cast<int>(draw(rng, 1, 12));
        p.k = static_cast<int>(draw(rng, 1, 3));
        p.k_prime = static_cast<int>(draw(rng, -2, 4 * p.k - 2));
        p.gamma = static_cast<int>(draw(rng, 1, 8));
        p.alpha = static_cast<int>(draw(rng, 0, p.gamma - 1));
        p.beta = static_cast<int>(draw(rng, 0, p.gamma - 1));
        try {
            out.push_back(construct_sp(p));
        } catch (const Error&) {
        }
    }
    return out;
}

std::vector<NumericalSemigroup> skeleton_filler(std::uint64_t seed, std::size_t count, const SearchConfig& c) {
    const auto skeletons = enumerate_skeletons(c);
    std::vector<NumericalSemigroup> out;
    if (skeletons.empty()) return out;
    Rng rng(seed);
    while (out.size() < count) {
        const auto& sk = skeletons[static_cast<std::size_t>(draw(rng, 0, static_cast<Int>(skeletons.size()) - 1))];
        const Int e = sk.e;
        const Int bound = c.bound_for(e);
        std::vector<char> used(static_cast<std::size_t>(e), 0);
        for (const auto* list : {&sk.gens, &sk.apery_extra})
            for (Int v : *list) used[static_cast<std::size_t>(v % e)] = 1;
        std::vector<Int> vals{e};
        vals.insert(vals.end(), sk.gens.begin(), sk.gens.end());
        for (Int r = 1; r < e; ++r)
            if (!used[static_cast<std::size_t>(r)]) vals.push_back(r + e * draw(rng, 1, std::max<Int>(1, (bound - r) / e)));
        out.push_back(NumericalSemigroup::generated_by(vals));
    }
    return out;
}

std::vector<NumericalSemigroup> decreasing_corpus(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<NumericalSemigroup> out;
    SearchConfig e3;
    e3.e_lo = e3.e_hi = 13;
    e3.gen_bound_factor = 8;
    SearchConfig e4;
    e4.e_lo = 16;
    e4.e_hi = 18;
    e4.v_offset = 4;
    e4.gen_bound_factor = 5;
    const std::size_t sp_share = count / 4;
    for (auto& s : random_sp(rng(), sp_share))
        if (Analysis(s).hilbert().decreasing()) out.push_back(std::move(s));
    while (out.size() < count) {
        const bool four = draw(rng, 0, 1) == 1;
        for (auto& s : skeleton_filler(rng(), 64, four ? e4 : e3)) {
            if (out.size() == count) break;
            if (Analysis(s).hilbert().decreasing()) out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace semihilb
