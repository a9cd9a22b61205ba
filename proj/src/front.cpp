#include "legann/front.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace legann {

// ---------------------------------------------------------------------------
// FrontWord

FrontWord::FrontWord(int base_strands, std::vector<ElementaryTangle> letters)
    : base_strands_(base_strands), letters_(std::move(letters)) {
    if (base_strands_ < 0)
        throw StrandMismatch("negative strand count", 0);
    int c = base_strands_;
    counts_.reserve(letters_.empty() ? 1 : letters_.size());
    if (letters_.empty()) {
        counts_.push_back(c);
        return;
    }
    for (int j = 0; j < static_cast<int>(letters_.size()); ++j) {
        counts_.push_back(c);
        const ElementaryTangle& t = letters_[j];
        switch (t.kind) {
            case TangleKind::Crossing:
                if (t.pos < 1 || t.pos > c - 1)
                    throw StrandMismatch("crossing out of range", j + 1);
                break;
            case TangleKind::LeftCusp:
                if (t.pos < 1 || t.pos > c + 1)
                    throw StrandMismatch("left cusp out of range", j + 1);
                c += 2;
                break;
            case TangleKind::RightCusp:
                if (t.pos < 1 || t.pos > c - 1)
                    throw StrandMismatch("right cusp out of range", j + 1);
                c -= 2;
                break;
        }
    }
    if (c != base_strands_)
        throw StrandMismatch("word does not close up at the seam",
                             static_cast<int>(letters_.size()));
}

bool FrontWord::has_cusps() const {
    for (const auto& t : letters_)
        if (t.kind != TangleKind::Crossing) return true;
    return false;
}

int FrontWord::right_cusps() const {
    int n = 0;
    for (const auto& t : letters_)
        if (t.kind == TangleKind::RightCusp) ++n;
    return n;
}

int FrontWord::word_area() const {
    int area = 0;
    for (int j = 0; j < size(); ++j) area += count_after(j);
    return area;
}

FrontWord FrontWord::rotated(int k) const {
    if (letters_.empty()) return *this;
    int n = size();
    k = ((k % n) + n) % n;
    std::vector<ElementaryTangle> rot;
    rot.reserve(n);
    for (int j = 0; j < n; ++j) rot.push_back(letters_[(j + k) % n]);
    return FrontWord(counts_[k], std::move(rot));
}

std::string FrontWord::render_word() const {
    std::ostringstream os;
    for (int j = 0; j < size(); ++j) {
        if (j) os << " ";
        switch (letters_[j].kind) {
            case TangleKind::Crossing: os << "s"; break;
            case TangleKind::LeftCusp: os << "l"; break;
            case TangleKind::RightCusp: os << "r"; break;
        }
        os << letters_[j].pos;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// segment graph

namespace {

// position of strand p after passing letter t; 0 when it dies at a right cusp
int forward_map(const ElementaryTangle& t, int p) {
    switch (t.kind) {
        case TangleKind::Crossing:
            if (p == t.pos) return t.pos + 1;
            if (p == t.pos + 1) return t.pos;
            return p;
        case TangleKind::LeftCusp:
            return p < t.pos ? p : p + 2;
        case TangleKind::RightCusp:
            if (p == t.pos || p == t.pos + 1) return 0;
            return p < t.pos ? p : p - 2;
    }
    return 0;
}

struct SegGraph {
    const FrontWord& w;
    std::vector<int> offset;  // node id base per slice
    int nodes = 0;
    // adjacency: (neighbour, flips_direction)
    std::vector<std::vector<std::pair<int, bool>>> adj;

    explicit SegGraph(const FrontWord& word) : w(word) {
        int S = w.slices();
        offset.resize(S + 1, 0);
        for (int j = 0; j < S; ++j) offset[j + 1] = offset[j] + w.count_at(j);
        nodes = offset[S];
        adj.resize(nodes);
        for (int j = 0; j < w.size(); ++j) {
            const ElementaryTangle& t = w.letters()[j];
            int jn = (j + 1) % w.size();
            int C = w.count_at(j);
            for (int p = 1; p <= C; ++p) {
                int q = forward_map(t, p);
                if (q == 0) {
                    if (p == t.pos) link(id(j, t.pos), id(j, t.pos + 1), true);
                } else {
                    link(id(j, p), id(jn, q), false);
                }
            }
            if (t.kind == TangleKind::LeftCusp)
                link(id(jn, t.pos), id(jn, t.pos + 1), true);
        }
    }

    int id(int slice, int pos) const { return offset[slice] + pos - 1; }

    void link(int u, int v, bool flip) {
        adj[u].push_back({v, flip});
        adj[v].push_back({u, flip});
    }
};

}  // namespace

void OrientedFront::trace_components() {
    SegGraph g(word_);
    int S = word_.slices();
    comp_.assign(S, {});
    for (int j = 0; j < S; ++j) comp_[j].assign(word_.count_at(j), -1);
    dir_.assign(S, {});
    for (int j = 0; j < S; ++j) dir_[j].assign(word_.count_at(j), 0);

    std::vector<int> comp(g.nodes, -1);
    std::vector<std::uint8_t> parity(g.nodes, 0);
    ncomp_ = 0;
    for (int root = 0; root < g.nodes; ++root) {
        if (comp[root] >= 0) continue;
        int c = ncomp_++;
        comp[root] = c;
        parity[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, flip] : g.adj[u]) {
                std::uint8_t pv = parity[u] ^ static_cast<std::uint8_t>(flip);
                if (comp[v] < 0) {
                    comp[v] = c;
                    parity[v] = pv;
                    stack.push_back(v);
                } else {
                    assert(comp[v] == c && parity[v] == pv);
                }
            }
        }
    }
    for (int j = 0; j < S; ++j)
        for (int p = 1; p <= word_.count_at(j); ++p) {
            comp_[j][p - 1] = comp[g.id(j, p)];
            dir_[j][p - 1] = parity[g.id(j, p)];  // parity; rebased afterwards
        }
    // base segment per component: bottom-most strand on its first slice
    comp_base_.assign(ncomp_, {-1, -1});
    std::vector<char> found(ncomp_, 0);
    for (int j = 0; j < S; ++j) {
        for (int p = 1; p <= word_.count_at(j); ++p) {
            int c = comp_[j][p - 1];
            if (!found[c]) comp_base_[c] = {j, p};
        }
        for (int p = 1; p <= word_.count_at(j); ++p) found[comp_[j][p - 1]] = 1;
    }
}

void OrientedFront::rebase_directions(const std::vector<bool>& base_left) {
    std::vector<std::uint8_t> adjust(ncomp_);
    for (int c = 0; c < ncomp_; ++c) {
        auto [bs, bp] = comp_base_[c];
        adjust[c] = dir_[bs][bp - 1] ^ (base_left[c] ? 1 : 0);
    }
    for (int j = 0; j < word_.slices(); ++j)
        for (int p = 0; p < word_.count_at(j); ++p)
            dir_[j][p] ^= adjust[comp_[j][p]];
}

OrientedFront::OrientedFront(FrontWord word, const std::vector<bool>& base_left)
    : word_(std::move(word)) {
    trace_components();
    if (static_cast<int>(base_left.size()) != ncomp_)
        throw std::invalid_argument("OrientedFront: need one direction per component (" +
                                    std::to_string(ncomp_) + " components)");
    rebase_directions(base_left);
}

OrientedFront OrientedFront::all_right(FrontWord word) {
    OrientedFront probe;
    probe.word_ = std::move(word);
    probe.trace_components();
    probe.rebase_directions(std::vector<bool>(probe.ncomp_, false));
    return probe;
}

std::vector<bool> OrientedFront::component_dirs() const {
    std::vector<bool> base(ncomp_);
    for (int c = 0; c < ncomp_; ++c) {
        auto [bs, bp] = comp_base_[c];
        base[c] = dir_[bs][bp - 1] != 0;
    }
    return base;
}

std::vector<std::vector<std::pair<int, int>>> OrientedFront::component_segments()
    const {
    std::vector<std::vector<std::pair<int, int>>> out(ncomp_);
    for (int j = 0; j < word_.slices(); ++j)
        for (int p = 1; p <= word_.count_at(j); ++p)
            out[comp_[j][p - 1]].push_back({j, p});
    return out;
}

// ---------------------------------------------------------------------------
// invariants

ClassicalInvariants OrientedFront::classical_invariants() const {
    ClassicalInvariants inv;
    inv.area = word_.word_area();
    std::vector<int> up(ncomp_, 0), down(ncomp_, 0);
    for (int j = 0; j < word_.size(); ++j) {
        const ElementaryTangle& t = word_.letters()[j];
        int jn = (j + 1) % word_.size();
        switch (t.kind) {
            case TangleKind::Crossing:
                inv.writhe += dir_[j][t.pos - 1] == dir_[j][t.pos] ? 1 : -1;
                break;
            case TangleKind::LeftCusp: {
                ++inv.left_cusps;
                // cusp point at the left end of the branches on slice jn:
                // the lower branch runs into the cusp when directed left
                bool lower_left = dir_[jn][t.pos] != 0;
                int c = comp_[jn][t.pos];
                (lower_left ? up : down)[c] += 1;
                break;
            }
            case TangleKind::RightCusp: {
                ++inv.right_cusps;
                bool lower_right = dir_[j][t.pos] == 0;
                int c = comp_[j][t.pos];
                (lower_right ? up : down)[c] += 1;
                break;
            }
        }
    }
    inv.tb = inv.writhe - (inv.left_cusps + inv.right_cusps) / 2;
    inv.component_rotation.resize(ncomp_);
    for (int c = 0; c < ncomp_; ++c) {
        assert((down[c] - up[c]) % 2 == 0);
        inv.component_rotation[c] = (down[c] - up[c]) / 2;
        inv.rotation += inv.component_rotation[c];
    }
    inv.component_winding.assign(ncomp_, 0);
    for (int p = 0; p < word_.count_at(0); ++p)
        inv.component_winding[comp_[0][p]] += dir_[0][p] ? -1 : 1;
    return inv;
}

int OrientedFront::writhe() const { return classical_invariants().writhe; }
int OrientedFront::tb() const { return classical_invariants().tb; }
int OrientedFront::rotation() const { return classical_invariants().rotation; }

// ---------------------------------------------------------------------------
// Maslov potential

MaslovAssignment OrientedFront::maslov(const std::map<int, int>& base_values,
                                       bool strict_parity) const {
    ClassicalInvariants inv = classical_invariants();
    MaslovAssignment out;
    out.modulus.resize(ncomp_);
    for (int c = 0; c < ncomp_; ++c)
        out.modulus[c] = 2 * std::abs(inv.component_rotation[c]);

    SegGraph g(word_);
    std::vector<int> val(g.nodes, 0);
    std::vector<char> seen(g.nodes, 0);
    int S = word_.slices();

    auto node_upper_in_cusp = [&](int u, int v) {
        // cusp edges join (slice, m) and (slice, m+1); smaller pos is upper
        return u < v;
    };

    for (int c = 0; c < ncomp_; ++c) {
        int v0 = 0;
        auto it = base_values.find(c);
        if (it != base_values.end()) v0 = it->second;
        auto [bslice, bpos] = comp_base_[c];
        int bn = g.id(bslice, bpos);
        int dir_parity = dir_[bslice][bpos - 1] ? 1 : 0;
        if (strict_parity && ((v0 % 2) + 2) % 2 != dir_parity)
            throw ParityError("Maslov base value parity disagrees with orientation of component " +
                              std::to_string(c + 1));
        val[bn] = v0;
        seen[bn] = 1;
        std::vector<int> stack{bn};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, flip] : g.adj[u]) {
                int vv;
                if (!flip) {
                    vv = val[u];
                } else if (node_upper_in_cusp(v, u)) {
                    vv = val[u] + 1;  // moving lower -> upper raises by one
                } else {
                    vv = val[u] - 1;
                }
                if (!seen[v]) {
                    seen[v] = 1;
                    val[v] = vv;
                    stack.push_back(v);
                } else {
                    int m = out.modulus[c];
                    int diff = val[v] - vv;
                    assert(m == 0 ? diff == 0 : diff % m == 0);
                    (void)diff;
                    (void)m;
                }
            }
        }
    }

    out.value.assign(S, {});
    for (int j = 0; j < S; ++j) {
        out.value[j].assign(word_.count_at(j), 0);
        for (int p = 1; p <= word_.count_at(j); ++p) {
            int c = comp_[j][p - 1];
            int v = val[g.id(j, p)];
            int m = out.modulus[c];
            if (m > 0) v = ((v % m) + m) % m;
            out.value[j][p - 1] = v;
        }
    }
    return out;
}

MaslovAssignment OrientedFront::default_maslov() const {
    std::map<int, int> base;
    std::vector<bool> dirs = component_dirs();
    for (int c = 0; c < ncomp_; ++c) base[c] = dirs[c] ? 1 : 0;
    return maslov(base, true);
}

// ---------------------------------------------------------------------------
// reorientation, rotation, surgery

OrientedFront OrientedFront::reversed_all() const {
    std::vector<bool> dirs = component_dirs();
    dirs.flip();
    return OrientedFront(word_, dirs);
}

OrientedFront OrientedFront::reversed(int component) const {
    std::vector<bool> dirs = component_dirs();
    dirs[component] = !dirs[component];
    return OrientedFront(word_, dirs);
}

namespace {

OrientedFront from_seeds(const FrontWord& w,
                         const std::vector<std::vector<int>>& seeds);

}  // namespace

OrientedFront OrientedFront::rotated(int k) const {
    int n = word_.size();
    if (n == 0) return *this;
    k = ((k % n) + n) % n;
    if (k == 0) return *this;
    FrontWord w = word_.rotated(k);
    std::vector<std::vector<int>> seeds(w.slices());
    for (int j = 0; j < w.slices(); ++j) {
        seeds[j].resize(w.count_at(j));
        for (int p = 0; p < w.count_at(j); ++p)
            seeds[j][p] = dir_[(j + k) % n][p];
    }
    return from_seeds(w, seeds);
}

OrientedFront OrientedFront::replace_window(
    int first, int len_old, const std::vector<ElementaryTangle>& repl) const {
    int n = word_.size();
    if (first < 0 || len_old < 0 || first + len_old > n)
        throw std::invalid_argument("replace_window: window out of range");
    std::vector<ElementaryTangle> letters;
    letters.reserve(n - len_old + repl.size());
    letters.insert(letters.end(), word_.letters().begin(),
                   word_.letters().begin() + first);
    letters.insert(letters.end(), repl.begin(), repl.end());
    letters.insert(letters.end(), word_.letters().begin() + first + len_old,
                   word_.letters().end());
    FrontWord w(word_.base_strands(), std::move(letters));

    int len_new = static_cast<int>(repl.size());
    std::vector<std::vector<int>> seeds(w.slices());
    for (int j = 0; j < w.slices(); ++j) {
        seeds[j].assign(w.count_at(j), -1);
        int old_slice;
        if (j <= first)
            old_slice = j;
        else if (j >= first + len_new)
            old_slice = j - len_new + len_old;
        else
            continue;
        if (n == 0) old_slice = 0;  // replacing into an empty word
        assert(w.count_at(j) == word_.count_at(old_slice % word_.slices()));
        for (int p = 0; p < w.count_at(j); ++p)
            seeds[j][p] = dir_[old_slice % word_.slices()][p];
    }
    return from_seeds(w, seeds);
}

namespace {

OrientedFront from_seeds(const FrontWord& w,
                         const std::vector<std::vector<int>>& seeds) {
    // under all_right every base segment points right, so xoring a seed with
    // the all-right direction at the same segment gives the component's base
    // direction; disagreeing seeds mean the caller's window mapping is wrong
    OrientedFront f = OrientedFront::all_right(FrontWord(w));
    std::vector<int> base(f.components(), -1);
    for (int j = 0; j < w.slices(); ++j)
        for (int p = 1; p <= w.count_at(j); ++p) {
            int seed = seeds[j][p - 1];
            if (seed < 0) continue;
            int parity = f.dir_left(j, p) ? 1 : 0;  // parity under all_right
            int b = seed ^ parity;
            int c = f.component_at(j, p);
            if (base[c] < 0)
                base[c] = b;
            else if (base[c] != b)
                throw std::logic_error("inconsistent orientation seeds");
        }
    std::vector<bool> dirs(f.components());
    for (int c = 0; c < f.components(); ++c) {
        if (base[c] < 0) throw std::logic_error("component without orientation seed");
        dirs[c] = base[c] != 0;
    }
    return OrientedFront(w, dirs);
}

}  // namespace

std::string OrientedFront::canonical_key() const {
    auto serialize = [&](int k) {
        std::ostringstream os;
        int n = word_.size();
        int S = word_.slices();
        os << word_.count_at(k % S) << "|";
        for (int j = 0; j < n; ++j) {
            const ElementaryTangle& t = word_.letters()[(j + k) % n];
            os << "slr"[static_cast<int>(t.kind)] << t.pos << ".";
        }
        os << "|";
        for (int j = 0; j < S; ++j) {
            for (int p = 0; p < word_.count_at((j + k) % S); ++p)
                os << (dir_[(j + k) % S][p] ? 'L' : 'R');
            os << ";";
        }
        return os.str();
    };
    int n = std::max(1, word_.size());
    std::string best = serialize(0);
    for (int k = 1; k < n; ++k) best = std::min(best, serialize(k));
    return best;
}

// ---------------------------------------------------------------------------
// stacking

OrientedFront stack(const OrientedFront& top, const OrientedFront& bottom) {
    const FrontWord& wt = top.word();
    const FrontWord& wb = bottom.word();
    int nt = wt.size();
    std::vector<ElementaryTangle> letters = wt.letters();
    for (const ElementaryTangle& t : wb.letters())
        letters.push_back({t.kind, t.pos + wt.base_strands()});
    FrontWord w(wt.base_strands() + wb.base_strands(), std::move(letters));

    std::vector<std::vector<int>> seeds(w.slices());
    for (int j = 0; j < w.slices(); ++j) {
        seeds[j].assign(w.count_at(j), -1);
        int ct, cb;  // slice of top / bottom contributing here
        if (j < nt) {
            ct = j;
            cb = 0;
        } else {
            ct = 0;
            cb = std::min(j - nt, std::max(0, wb.slices() - 1));
        }
        int p = 0;
        for (int q = 0; q < wt.count_at(ct); ++q)
            seeds[j][p++] = top.dir_left(ct, q + 1) ? 1 : 0;
        for (int q = 0; q < wb.count_at(cb); ++q)
            seeds[j][p++] = bottom.dir_left(cb, q + 1) ? 1 : 0;
        assert(p == w.count_at(j));
    }
    return from_seeds(w, seeds);
}

OrientedFront stack(const std::vector<OrientedFront>& parts) {
    if (parts.empty()) return OrientedFront::all_right(FrontWord());
    OrientedFront acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = stack(parts[i], acc);
    return acc;
}

OrientedFront basic_front(int m, bool reversed) {
    if (m < 1) throw std::invalid_argument("basic_front: m must be positive");
    std::vector<ElementaryTangle> letters;
    for (int i = 1; i < m; ++i) letters.push_back(crossing(i));
    FrontWord w(m, std::move(letters));
    return OrientedFront(std::move(w), {reversed});
}

// ---------------------------------------------------------------------------
// tangle connectivity signature (far-commute validation)

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void unite(int x, int y) { up[find(x)] = find(y); }
};

// Endpoint pairing of the tangle formed by letters [first, first+len) of w.
// Tokens: first-slice positions (ids 0..C-1) and cusp births (fresh ids).
// Signature: sorted list of endpoint pairs, where endpoints are encoded as
// ('F', pos) or ('L', pos), plus the number of closed loops.
struct WindowSig {
    std::vector<std::pair<std::pair<char, int>, std::pair<char, int>>> pairs;
    int loops = 0;
    friend bool operator==(const WindowSig&, const WindowSig&) = default;
};

WindowSig window_signature(const FrontWord& w, int first, int len) {
    int C = w.count_at(first);
    std::vector<int> tokens(C);
    std::iota(tokens.begin(), tokens.end(), 0);
    int next_token = C;
    std::vector<std::pair<int, int>> unions;
    std::vector<int> all_tokens;
    for (int i = 0; i < C; ++i) all_tokens.push_back(i);

    for (int j = first; j < first + len; ++j) {
        const ElementaryTangle& t = w.letters()[j];
        switch (t.kind) {
            case TangleKind::Crossing:
                std::swap(tokens[t.pos - 1], tokens[t.pos]);
                break;
            case TangleKind::LeftCusp: {
                int a = next_token++, b = next_token++;
                all_tokens.push_back(a);
                all_tokens.push_back(b);
                unions.push_back({a, b});
                tokens.insert(tokens.begin() + (t.pos - 1), {a, b});
                break;
            }
            case TangleKind::RightCusp: {
                unions.push_back({tokens[t.pos - 1], tokens[t.pos]});
                tokens.erase(tokens.begin() + (t.pos - 1),
                             tokens.begin() + (t.pos + 1));
                break;
            }
        }
    }

    UnionFind uf(next_token);
    for (auto [x, y] : unions) uf.unite(x, y);

    std::map<int, std::vector<std::pair<char, int>>> groups;
    for (int i = 0; i < next_token; ++i) groups[uf.find(i)];
    for (int p = 0; p < C; ++p) groups[uf.find(p)].push_back({'F', p + 1});
    for (int p = 0; p < static_cast<int>(tokens.size()); ++p)
        groups[uf.find(tokens[p])].push_back({'L', p + 1});

    WindowSig sig;
    for (auto& [root, ends] : groups) {
        if (ends.empty()) {
            ++sig.loops;  // closed component inside the window
            continue;
        }
        assert(ends.size() == 2);
        std::sort(ends.begin(), ends.end());
        sig.pairs.push_back({ends[0], ends[1]});
    }
    std::sort(sig.pairs.begin(), sig.pairs.end());
    return sig;
}

}  // namespace

// ---------------------------------------------------------------------------
// moves

namespace {

bool is_crossing(const ElementaryTangle& t) { return t.kind == TangleKind::Crossing; }

// LR2 contraction patterns: returns the contracted letter
std::optional<ElementaryTangle> lr2_contract(const ElementaryTangle& a,
                                             const ElementaryTangle& b,
                                             const ElementaryTangle& c) {
    if (a.kind == TangleKind::LeftCusp && is_crossing(b) && is_crossing(c)) {
        int m = a.pos;
        if (b.pos == m + 1 && c.pos == m) return left_cusp(m + 1);   // l_m s_{m+1} s_m
        if (m >= 2 && b.pos == m - 1 && c.pos == m) return left_cusp(m - 1);
        // l_{m+1} s_m s_{m+1} -> l_m, written with a.pos = m+1
    }
    if (is_crossing(a) && is_crossing(b) && c.kind == TangleKind::RightCusp) {
        int n = c.pos;
        if (a.pos == n && b.pos == n + 1) return right_cusp(n + 1);  // s_n s_{n+1} r_n
        if (n >= 2 && a.pos == n && b.pos == n - 1) return right_cusp(n - 1);
        // s_{n} s_{n-1} r_{n} ... see below
    }
    return std::nullopt;
}

// LR1 deletion pattern at [l, s, r]
bool lr1_deletable(const ElementaryTangle& a, const ElementaryTangle& b,
                   const ElementaryTangle& c) {
    if (a.kind != TangleKind::LeftCusp || !is_crossing(b) ||
        c.kind != TangleKind::RightCusp)
        return false;
    int m = a.pos;
    if (b.pos == m + 1 && c.pos == m) return true;   // l_m s_{m+1} r_m
    if (m >= 2 && b.pos == m - 1 && c.pos == m) return true;  // l_{m+1} s_m r_{m+1}
    return false;
}

}  // namespace

OrientedFront apply_move(const OrientedFront& f, const Move& move) {
    const FrontWord& w = f.word();
    int n = w.size();
    auto need = [&](bool cond, const char* what) {
        if (!cond) throw PatternMismatch(what);
    };
    switch (move.kind) {
        case Move::Kind::CyclicRotate:
            return f.rotated(move.index == 0 ? 1 : move.index);

        case Move::Kind::Braid:
        case Move::Kind::LR3: {
            need(move.index + 3 <= n, "braid window out of range");
            const auto& L = w.letters();
            const ElementaryTangle &a = L[move.index], &b = L[move.index + 1],
                                   &c = L[move.index + 2];
            need(is_crossing(a) && is_crossing(b) && is_crossing(c) &&
                     a.pos == c.pos && std::abs(a.pos - b.pos) == 1,
                 "no braid triple at position");
            return f.replace_window(move.index, 3,
                                    {crossing(b.pos), crossing(a.pos), crossing(b.pos)});
        }

        case Move::Kind::FarCommute: {
            need(move.index + 2 <= n, "commute window out of range");
            const ElementaryTangle a = w.letters()[move.index];
            const ElementaryTangle b = w.letters()[move.index + 1];
            if (is_crossing(a) && is_crossing(b))
                need(std::abs(a.pos - b.pos) >= 2, "crossings not far apart");
            WindowSig want = window_signature(w, move.index, 2);
            for (int db : {-2, 0, 2}) {
                for (int da : {-2, 0, 2}) {
                    if (b.pos + db < 1 || a.pos + da < 1) continue;
                    std::vector<ElementaryTangle> cand{{b.kind, b.pos + db},
                                                       {a.kind, a.pos + da}};
                    if (cand[0] == a && cand[1] == b) continue;  // unchanged window
                    try {
                        OrientedFront g = f.replace_window(move.index, 2, cand);
                        if (window_signature(g.word(), move.index, 2) == want)
                            return g;
                    } catch (const StrandMismatch&) {
                    } catch (const std::logic_error&) {
                    }
                }
            }
            throw PatternMismatch("letters do not commute");
        }

        case Move::Kind::LR1: {
            if (move.param == 0) {
                need(move.index + 3 <= n, "swallowtail window out of range");
                const auto& L = w.letters();
                need(lr1_deletable(L[move.index], L[move.index + 1], L[move.index + 2]),
                     "no swallowtail at position");
                return f.replace_window(move.index, 3, {});
            }
            // insertion: host strand at `param` on slice `index`
            need(move.index <= n && move.index >= 0, "insert position out of range");
            int m = move.param;
            std::vector<ElementaryTangle> pat =
                move.variant == 0
                    ? std::vector<ElementaryTangle>{left_cusp(m), crossing(m + 1),
                                                    right_cusp(m)}
                    : std::vector<ElementaryTangle>{left_cusp(m + 1), crossing(m),
                                                    right_cusp(m + 1)};
            try {
                return f.replace_window(move.index, 0, pat);
            } catch (const StrandMismatch&) {
                throw PatternMismatch("swallowtail insertion invalid here");
            } catch (const std::logic_error&) {
                throw PatternMismatch("swallowtail insertion invalid here");
            }
        }

        case Move::Kind::LR2: {
            if (move.variant == 0) {
                need(move.index + 3 <= n, "slide window out of range");
                const auto& L = w.letters();
                auto r = lr2_contract(L[move.index], L[move.index + 1], L[move.index + 2]);
                need(r.has_value(), "no cusp-crossing slide at position");
                return f.replace_window(move.index, 3, {*r});
            }
            need(move.index < n, "slide expansion out of range");
            const ElementaryTangle t = w.letters()[move.index];
            std::vector<ElementaryTangle> pat;
            if (t.kind == TangleKind::LeftCusp) {
                if (move.variant == 1) {
                    need(t.pos >= 2, "cannot slide cusp further up");
                    pat = {left_cusp(t.pos - 1), crossing(t.pos), crossing(t.pos - 1)};
                } else {
                    pat = {left_cusp(t.pos + 1), crossing(t.pos), crossing(t.pos + 1)};
                }
            } else if (t.kind == TangleKind::RightCusp) {
                if (move.variant == 1) {
                    need(t.pos >= 2, "cannot slide cusp further up");
                    pat = {crossing(t.pos - 1), crossing(t.pos), right_cusp(t.pos - 1)};
                } else {
                    pat = {crossing(t.pos + 1), crossing(t.pos), right_cusp(t.pos + 1)};
                }
            } else {
                throw PatternMismatch("slide expansion needs a cusp letter");
            }
            try {
                return f.replace_window(move.index, 1, pat);
            } catch (const StrandMismatch&) {
                throw PatternMismatch("slide expansion invalid here");
            }
        }
    }
    throw PatternMismatch("unknown move");
}

std::vector<Move> applicable_moves(const OrientedFront& f, bool allow_growth) {
    std::vector<Move> out;
    const FrontWord& w = f.word();
    int n = w.size();
    if (n >= 2) out.push_back({Move::Kind::CyclicRotate, 1, 0, 0});
    auto try_push = [&](Move m) {
        try {
            apply_move(f, m);
            out.push_back(m);
        } catch (const PatternMismatch&) {
        }
    };
    for (int i = 0; i + 2 <= n; ++i) try_push({Move::Kind::FarCommute, i, 0, 0});
    for (int i = 0; i + 3 <= n; ++i) {
        try_push({Move::Kind::Braid, i, 0, 0});
        try_push({Move::Kind::LR1, i, 0, 0});
        try_push({Move::Kind::LR2, i, 0, 0});
    }
    if (allow_growth) {
        for (int i = 0; i < std::max(1, n); ++i) {
            int C = w.count_at(i % w.slices());
            for (int m = 1; m <= C; ++m) {
                try_push({Move::Kind::LR1, i, m, 0});
                try_push({Move::Kind::LR1, i, m, 1});
            }
        }
        for (int i = 0; i < n; ++i) {
            try_push({Move::Kind::LR2, i, 0, 1});
            try_push({Move::Kind::LR2, i, 0, 2});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// file format

FrontFile parse_front(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int strands = 0;
    bool saw_strands = false, saw_letters = false;
    std::vector<ElementaryTangle> letters;
    std::vector<std::pair<int, bool>> orients;  // (component, left?)
    std::map<int, int> maslov;

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "strands") {
                if (saw_letters || saw_strands)
                    throw SyntaxError("strands header must come first (line " +
                                      std::to_string(lineno) + ")");
                if (!(ls >> strands))
                    throw SyntaxError("strands header needs a count");
                saw_strands = true;
            } else if (tok == "orient" || tok == "maslov") {
                std::string spec;
                if (!(ls >> spec)) throw SyntaxError(tok + " needs c<k>=<value>");
                if (spec.size() < 4 || spec[0] != 'c')
                    throw SyntaxError("bad " + tok + " directive: " + spec);
                auto eq = spec.find('=');
                if (eq == std::string::npos)
                    throw SyntaxError("bad " + tok + " directive: " + spec);
                int comp = std::stoi(spec.substr(1, eq - 1));
                std::string val = spec.substr(eq + 1);
                if (tok == "orient") {
                    if (val != "+" && val != "-")
                        throw SyntaxError("orient value must be + or -");
                    orients.push_back({comp, val == "-"});
                } else {
                    maslov[comp] = std::stoi(val);
                }
            } else if (tok.size() >= 2 &&
                       (tok[0] == 's' || tok[0] == 'l' || tok[0] == 'r')) {
                int m;
                try {
                    m = std::stoi(tok.substr(1));
                } catch (...) {
                    throw SyntaxError("bad tangle token '" + tok + "' (line " +
                                      std::to_string(lineno) + ")");
                }
                saw_letters = true;
                switch (tok[0]) {
                    case 's': letters.push_back(crossing(m)); break;
                    case 'l': letters.push_back(left_cusp(m)); break;
                    default: letters.push_back(right_cusp(m)); break;
                }
            } else {
                throw SyntaxError("unrecognized token '" + tok + "' (line " +
                                  std::to_string(lineno) + ")");
            }
        }
    }

    FrontWord word(strands, std::move(letters));
    OrientedFront probe = OrientedFront::all_right(word);
    std::vector<bool> dirs(probe.components(), false);
    for (auto [comp, left] : orients) {
        if (comp < 1 || comp > probe.components())
            throw SyntaxError("orient refers to component c" + std::to_string(comp) +
                              " but the diagram has " +
                              std::to_string(probe.components()));
        dirs[comp - 1] = left;
    }
    std::map<int, int> maslov0;  // 0-based component keys
    for (auto [comp, v] : maslov) {
        if (comp < 1 || comp > probe.components())
            throw SyntaxError("maslov refers to component c" + std::to_string(comp) +
                              " but the diagram has " +
                              std::to_string(probe.components()));
        maslov0[comp - 1] = v;
    }
    return FrontFile{OrientedFront(word, dirs), maslov0};
}

std::string render_front(const FrontFile& file) {
    std::ostringstream os;
    const OrientedFront& f = file.front;
    os << "strands " << f.word().base_strands() << "\n";
    if (f.word().size() > 0) os << f.word().render_word() << "\n";
    std::vector<bool> dirs = f.component_dirs();
    for (int c = 0; c < f.components(); ++c)
        os << "orient c" << (c + 1) << "=" << (dirs[c] ? "-" : "+") << "\n";
    for (auto [comp, v] : file.maslov)
        os << "maslov c" << (comp + 1) << "=" << v << "\n";
    return os.str();
}

}  // namespace legann
