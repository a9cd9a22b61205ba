// rulings.hpp
//
// Enumeration of p-graded normal rulings by sweeping the front once around
// the annulus.  The sweep state is a fixed-point-free involution pairing the
// strands over a generic x; crossings either pass or switch (the switch
// gated by the disjoint-or-nested normality test and by gradedness), cusps
// create or cancel a paired couple.  The ruling polynomial is the weighted
// count of closed sweep trajectories, z^{switches - right cusps}.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "legann/front.hpp"
#include "legann/laurent.hpp"

namespace legann {

struct DivisibilityError : std::runtime_error {
    explicit DivisibilityError(const std::string& what) : std::runtime_error(what) {}
};
struct OddStrandCount : std::runtime_error {
    explicit OddStrandCount(const std::string& what) : std::runtime_error(what) {}
};

class RulingState {
public:
    RulingState() = default;
    explicit RulingState(std::vector<int> partner);

    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int i) const { return partner_[i]; }  // 0-based
    const std::vector<int>& pairing() const { return partner_; }

    friend bool operator==(const RulingState&, const RulingState&) = default;
    friend bool operator<(const RulingState& x, const RulingState& y) {
        return x.partner_ < y.partner_;
    }

private:
    std::vector<int> partner_;
};

// mod-p congruence with mod 0 meaning equality over the integers and
// mod 1 no condition
bool graded_pair_ok(int upper_potential, int lower_potential, int p);

// All pairings admissible for the given slice potentials (top to bottom).
std::vector<RulingState> admissible_states(int strands,
                                           const std::vector<int>& potentials,
                                           int p);

// Successor states across one elementary tangle, with the switch count the
// step contributes (0 or 1).
std::vector<std::pair<RulingState, int>> transfer(const ElementaryTangle& t,
                                                  const RulingState& state,
                                                  const std::vector<int>& pot_before,
                                                  const std::vector<int>& pot_after,
                                                  int p);

// R^p of the front under the given Maslov potential.  Throws
// DivisibilityError unless p divides 2 r for every component, and
// OddStrandCount when some slice carries an odd number of strands.
LaurentPoly ruling_polynomial(const OrientedFront& f, int p,
                              const MaslovAssignment& mu);

// R^2 with the orientation-derived potential (the choice is immaterial).
LaurentPoly ruling_polynomial2(const OrientedFront& f);

// Histogram of rulings by switch count, from explicit trajectory
// enumeration; matches the transfer-matrix polynomial term by term.
std::vector<std::pair<int, BigInt>> ruling_count_report(const OrientedFront& f,
                                                        int p,
                                                        const MaslovAssignment& mu);

}  // namespace legann
