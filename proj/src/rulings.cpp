#include "legann/rulings.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace legann {

RulingState::RulingState(std::vector<int> partner) : partner_(std::move(partner)) {
    for (int i = 0; i < size(); ++i) {
        if (partner_[i] == i || partner_[i] < 0 || partner_[i] >= size() ||
            partner_[partner_[i]] != i)
            throw std::invalid_argument("RulingState: not a fixed-point-free involution");
    }
}

bool graded_pair_ok(int upper_potential, int lower_potential, int p) {
    if (p == 0) return upper_potential == lower_potential + 1;
    int d = upper_potential - lower_potential - 1;
    return ((d % p) + p) % p == 0;
}

namespace {

bool state_admissible(const std::vector<int>& partner,
                      const std::vector<int>& pot, int p) {
    for (int i = 0; i < static_cast<int>(partner.size()); ++i) {
        int j = partner[i];
        if (i < j && !graded_pair_ok(pot[i], pot[j], p)) return false;
    }
    return true;
}

void gen_states(std::vector<int>& partner, const std::vector<int>& pot, int p,
                std::vector<RulingState>& out) {
    int n = static_cast<int>(partner.size());
    int i = 0;
    while (i < n && partner[i] >= 0) ++i;
    if (i == n) {
        out.push_back(RulingState(partner));
        return;
    }
    for (int j = i + 1; j < n; ++j) {
        if (partner[j] >= 0) continue;
        if (!graded_pair_ok(pot[i], pot[j], p)) continue;  // i is the upper strand
        partner[i] = j;
        partner[j] = i;
        gen_states(partner, pot, p, out);
        partner[i] = -1;
        partner[j] = -1;
    }
}

}  // namespace

std::vector<RulingState> admissible_states(int strands,
                                           const std::vector<int>& potentials,
                                           int p) {
    std::vector<RulingState> out;
    if (strands % 2 != 0) return out;
    std::vector<int> partner(strands, -1);
    gen_states(partner, potentials, p, out);
    return out;
}

std::vector<std::pair<RulingState, int>> transfer(const ElementaryTangle& t,
                                                  const RulingState& state,
                                                  const std::vector<int>& pot_before,
                                                  const std::vector<int>& pot_after,
                                                  int p) {
    (void)pot_before;  // admissibility before the letter is the caller's invariant
    std::vector<std::pair<RulingState, int>> out;
    const std::vector<int>& q = state.pairing();
    const int n = state.size();
    switch (t.kind) {
        case TangleKind::Crossing: {
            int a = t.pos - 1, b = t.pos;
            if (q[a] == b) return out;  // crossing strands must not be paired
            // pass: partners follow the crossing strands
            std::vector<int> np = q;
            auto swap_pos = [&](int x) { return x == a ? b : x == b ? a : x; };
            for (int i = 0; i < n; ++i) np[swap_pos(i)] = swap_pos(q[i]);
            if (state_admissible(np, pot_after, p))
                out.push_back({RulingState(np), 0});
            // switch: pairing of positions unchanged; companion intervals
            // must be disjoint or nested
            int lo1 = std::min(a, q[a]), hi1 = std::max(a, q[a]);
            int lo2 = std::min(b, q[b]), hi2 = std::max(b, q[b]);
            bool disjoint = hi1 < lo2 || hi2 < lo1;
            bool nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
            if ((disjoint || nested) && state_admissible(q, pot_after, p))
                out.push_back({RulingState(q), 1});
            return out;
        }
        case TangleKind::LeftCusp: {
            int a = t.pos - 1;  // new pair occupies slots a, a+1 afterwards
            std::vector<int> np(n + 2);
            auto shift = [&](int x) { return x < a ? x : x + 2; };
            for (int i = 0; i < n; ++i) np[shift(i)] = shift(q[i]);
            np[a] = a + 1;
            np[a + 1] = a;
            if (state_admissible(np, pot_after, p))
                out.push_back({RulingState(np), 0});
            return out;
        }
        case TangleKind::RightCusp: {
            int a = t.pos - 1, b = t.pos;
            if (q[a] != b) return out;  // strands at a cusp must be paired
            std::vector<int> np(n - 2);
            auto unshift = [&](int x) { return x < a ? x : x - 2; };
            for (int i = 0; i < n; ++i) {
                if (i == a || i == b) continue;
                np[unshift(i)] = unshift(q[i]);
            }
            if (state_admissible(np, pot_after, p))
                out.push_back({RulingState(np), 0});
            return out;
        }
    }
    return out;
}

namespace {

void check_preconditions(const OrientedFront& f, int p) {
    if (p < 0) throw std::invalid_argument("ruling polynomial: p must be >= 0");
    ClassicalInvariants inv = f.classical_invariants();
    for (int c = 0; c < f.components(); ++c) {
        int twice_r = 2 * inv.component_rotation[c];
        bool ok = p == 0 ? twice_r == 0 : twice_r % p == 0;
        if (!ok)
            throw DivisibilityError("p = " + std::to_string(p) +
                                    " does not divide 2 r of component " +
                                    std::to_string(c + 1));
    }
    for (int j = 0; j < f.word().slices(); ++j)
        if (f.word().count_at(j) % 2 != 0)
            throw OddStrandCount("slice " + std::to_string(j) +
                                 " has an odd number of strands");
}

}  // namespace

LaurentPoly ruling_polynomial(const OrientedFront& f, int p,
                              const MaslovAssignment& mu) {
    check_preconditions(f, p);
    const FrontWord& w = f.word();
    std::vector<RulingState> initial = admissible_states(
        w.count_at(0), mu.value.empty() ? std::vector<int>{} : mu.value[0], p);
    LaurentPoly total;
    for (const RulingState& s0 : initial) {
        std::map<RulingState, LaurentPoly> cur;
        cur[s0] = LaurentPoly(1);
        for (int j = 0; j < w.size(); ++j) {
            std::map<RulingState, LaurentPoly> next;
            const std::vector<int>& before = mu.value[j];
            const std::vector<int>& after = mu.value[(j + 1) % w.slices()];
            for (const auto& [st, weight] : cur) {
                for (const auto& [succ, sw] :
                     transfer(w.letters()[j], st, before, after, p)) {
                    next[succ] += weight * LaurentPoly::var_z(sw);
                }
            }
            cur = std::move(next);
        }
        auto it = cur.find(s0);
        if (it != cur.end()) total += it->second;
    }
    return total * LaurentPoly::var_z(-w.right_cusps());
}

LaurentPoly ruling_polynomial2(const OrientedFront& f) {
    return ruling_polynomial(f, 2, f.default_maslov());
}

std::vector<std::pair<int, BigInt>> ruling_count_report(const OrientedFront& f,
                                                        int p,
                                                        const MaslovAssignment& mu) {
    check_preconditions(f, p);
    const FrontWord& w = f.word();
    std::map<int, BigInt> hist;
    std::vector<RulingState> initial = admissible_states(
        w.count_at(0), mu.value.empty() ? std::vector<int>{} : mu.value[0], p);
    for (const RulingState& s0 : initial) {
        // explicit depth-first trajectory enumeration
        std::function<void(const RulingState&, int, int)> walk =
            [&](const RulingState& st, int letter, int switches) {
                if (letter == w.size()) {
                    if (st == s0) hist[switches] += BigInt(1);
                    return;
                }
                const std::vector<int>& before = mu.value[letter];
                const std::vector<int>& after = mu.value[(letter + 1) % w.slices()];
                for (const auto& [succ, sw] :
                     transfer(w.letters()[letter], st, before, after, p))
                    walk(succ, letter + 1, switches + sw);
            };
        walk(s0, 0, 0);
    }
    std::vector<std::pair<int, BigInt>> out(hist.begin(), hist.end());
    return out;
}

}  // namespace legann
