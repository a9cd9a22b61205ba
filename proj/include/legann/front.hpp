// front.hpp
//
// Annular front diagrams as cyclic words of elementary tangles: crossings
// s<m>, left cusps l<m>, right cusps r<m>, acting on strands numbered from
// the top.  A FrontWord validates the strand-count chain; an OrientedFront
// adds per-component orientations and exposes the derived data every other
// module consumes: segment directions, components, classical invariants,
// Maslov potentials, and the window surgery the skein rewriter is built on.
//
// Slice j is the vertical interval before letter j; slice 0 contains the
// seam x = 0, so a word with n letters has max(n, 1) slices and the strand
// count after the last letter must close up to the seam count.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "legann/laurent.hpp"

namespace legann {

struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& what) : std::runtime_error(what) {}
};
struct StrandMismatch : std::runtime_error {
    int position;
    StrandMismatch(const std::string& what, int pos)
        : std::runtime_error(what), position(pos) {}
};
struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};
struct PatternMismatch : std::runtime_error {
    explicit PatternMismatch(const std::string& what) : std::runtime_error(what) {}
};

enum class TangleKind : std::uint8_t { Crossing, LeftCusp, RightCusp };

struct ElementaryTangle {
    TangleKind kind;
    int pos;  // 1-based strand index, top to bottom
    friend bool operator==(const ElementaryTangle&, const ElementaryTangle&) = default;
};

inline ElementaryTangle crossing(int m) { return {TangleKind::Crossing, m}; }
inline ElementaryTangle left_cusp(int m) { return {TangleKind::LeftCusp, m}; }
inline ElementaryTangle right_cusp(int m) { return {TangleKind::RightCusp, m}; }

class FrontWord {
public:
    FrontWord() : base_strands_(0) { counts_.push_back(0); }
    FrontWord(int base_strands, std::vector<ElementaryTangle> letters);

    int base_strands() const { return base_strands_; }
    const std::vector<ElementaryTangle>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int slices() const { return letters_.empty() ? 1 : size(); }
    // strand count on slice j (before letter j)
    int count_at(int slice) const { return counts_[slice]; }
    int count_after(int letter) const {
        return counts_[(letter + 1) % slices()];
    }
    bool has_cusps() const;
    int right_cusps() const;
    int word_area() const;

    FrontWord rotated(int k) const;
    std::string render_word() const;

    friend bool operator==(const FrontWord&, const FrontWord&) = default;

private:
    int base_strands_;
    std::vector<ElementaryTangle> letters_;
    std::vector<int> counts_;  // counts_[j] = strands on slice j
};

struct MaslovAssignment {
    std::vector<std::vector<int>> value;  // [slice][pos-1]
    std::vector<int> modulus;             // per component: 2|r|; 0 means integers
    int at(int slice, int pos) const { return value[slice][pos - 1]; }
};

struct ClassicalInvariants {
    int writhe = 0;
    int left_cusps = 0;
    int right_cusps = 0;
    int tb = 0;
    int rotation = 0;  // whole link; integral for closed annular fronts
    int area = 0;
    std::vector<int> component_rotation;
    std::vector<int> component_winding;
};

class OrientedFront {
public:
    OrientedFront() = default;
    // base_left[c]: direction of component c's base segment (false = rightward)
    OrientedFront(FrontWord word, const std::vector<bool>& base_left);
    static OrientedFront all_right(FrontWord word);

    const FrontWord& word() const { return word_; }
    int components() const { return ncomp_; }
    bool dir_left(int slice, int pos) const { return dir_[slice][pos - 1] != 0; }
    int component_at(int slice, int pos) const { return comp_[slice][pos - 1]; }
    // designated base segment: bottom-most strand on the component's first slice
    std::pair<int, int> component_base(int c) const { return comp_base_[c]; }
    std::vector<bool> component_dirs() const;
    // segments (slice, pos) grouped by component, in scan order
    std::vector<std::vector<std::pair<int, int>>> component_segments() const;

    ClassicalInvariants classical_invariants() const;
    int writhe() const;
    int tb() const;
    int rotation() const;

    // Maslov potential from one base value per component.  With strict
    // parity the base value must reduce mod 2 to the base direction.
    MaslovAssignment maslov(const std::map<int, int>& base_values,
                            bool strict_parity = true) const;
    MaslovAssignment default_maslov() const;

    OrientedFront reversed_all() const;
    OrientedFront reversed(int component) const;

    // cyclic reindexing and local surgery; directions outside the replaced
    // window are inherited, inside they are re-derived
    OrientedFront rotated(int k) const;
    OrientedFront replace_window(int first, int len_old,
                                 const std::vector<ElementaryTangle>& repl) const;

    // serialization key: least rotation of (letters, directions)
    std::string canonical_key() const;

    friend bool operator==(const OrientedFront&, const OrientedFront&) = default;

private:
    FrontWord word_;
    std::vector<std::vector<std::uint8_t>> dir_;  // 0 right, 1 left
    std::vector<std::vector<int>> comp_;
    std::vector<std::pair<int, int>> comp_base_;
    int ncomp_ = 0;

    void trace_components();  // fills comp_, comp_base_, parities into dir_
    void rebase_directions(const std::vector<bool>& base_left);
};

// K placed vertically above L; letters of K first, strand indices of L
// shifted by K's seam count.
OrientedFront stack(const OrientedFront& top, const OrientedFront& bottom);
OrientedFront stack(const std::vector<OrientedFront>& parts);

// The basic front A_m (closure of s1 s2 ... s_{m-1}); reversed = true gives
// the orientation-reversed A_{-m}.
OrientedFront basic_front(int m, bool reversed = false);

struct Move {
    enum class Kind { CyclicRotate, FarCommute, Braid, LR1, LR2, LR3 };
    Kind kind;
    int index = 0;    // letter position the move applies at
    int param = 0;    // strand index for insertions
    int variant = 0;  // flavour selector for insertions
};

// Applies one move; throws PatternMismatch when the pattern is absent.
// Windows never wrap the seam; rotate first to reposition.
OrientedFront apply_move(const OrientedFront& f, const Move& move);

// All moves applicable to f (reductions and bounded insertions), used by the
// randomized invariance harnesses.
std::vector<Move> applicable_moves(const OrientedFront& f, bool allow_growth);

// File format: optional "strands <N>" header, tangle tokens, optional
// "orient c<k>=<+|->" and "maslov c<k>=<int>" lines.
struct FrontFile {
    OrientedFront front;
    std::map<int, int> maslov;  // explicit per-component base values, if any
};

FrontFile parse_front(const std::string& text);
std::string render_front(const FrontFile& file);

}  // namespace legann
