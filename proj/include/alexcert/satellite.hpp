#pragma once

#include <cstdint>
#include <string>

#include "alexcert/alexander.hpp"
#include "alexcert/braid.hpp"
#include "alexcert/laurent.hpp"

namespace alexcert {

// Pattern data for a satellite: winding number and the polynomial of the
// pattern closed in the trivial solid torus. Patterns are supplied
// numerically, never as diagrams.
struct SatellitePattern {
    int winding = 0;
    HalfLaurent pattern_poly;
};

// Delta of the satellite: companion polynomial with t -> t^winding, times the
// pattern polynomial.
HalfLaurent satellite_poly(const SatellitePattern& pattern, const HalfLaurent& companion);

struct ObstructionVerdict {
    bool winding_ok = false;   // |winding| != 1
    bool sign_ok = false;      // alpha * beta >= 0 for the pattern polynomial
    bool fires = false;        // both; the satellite is never a certified link
    bool zero_pattern = false; // pattern polynomial vanishes (alpha undefined)
};

ObstructionVerdict obstruction(const SatellitePattern& pattern);

// (n,1)-cable pattern: winding n, pattern closure the unknot.
SatellitePattern cable_pattern(int n);

struct KrishnaReport {
    HalfLaurent companion_poly;
    HalfLaurent cable_poly;
    std::int64_t beta = 0;
    bool not_in_p = false;  // beta = 0 and the obstruction fires
};

// (n,1)-cable of the closure of a positive braid knot word: the cable's
// polynomial has beta = 0, so the cable is not a certified link.
KrishnaReport krishna_check(int n, const PositiveBraidWord& companion_word);

}  // namespace alexcert
