#include "alexcert/satellite.hpp"

#include <stdexcept>

namespace alexcert {

HalfLaurent satellite_poly(const SatellitePattern& pattern, const HalfLaurent& companion) {
    return substitute_power(companion, pattern.winding) * pattern.pattern_poly;
}

ObstructionVerdict obstruction(const SatellitePattern& pattern) {
    ObstructionVerdict v;
    v.winding_ok = pattern.winding != 1 && pattern.winding != -1;
    if (pattern.pattern_poly.is_zero()) {
        // alpha undefined; the product test holds vacuously but is flagged
        v.zero_pattern = true;
        v.sign_ok = true;
    } else {
        AlexSummary s = summarize(pattern.pattern_poly);
        v.sign_ok = s.alpha * s.beta >= 0;
    }
    v.fires = v.winding_ok && v.sign_ok;
    return v;
}

SatellitePattern cable_pattern(int n) {
    if (n < 2) throw std::invalid_argument("cable pattern requires n >= 2");
    return {n, HalfLaurent::one()};
}

KrishnaReport krishna_check(int n, const PositiveBraidWord& companion_word) {
    if (closure_components(companion_word) != 1)
        throw std::invalid_argument("companion word must close to a knot");
    KrishnaReport report;
    report.companion_poly = braid_poly(companion_word);
    SatellitePattern pattern = cable_pattern(n);
    report.cable_poly = satellite_poly(pattern, report.companion_poly);
    report.beta = summarize(report.cable_poly).beta;
    report.not_in_p = report.beta == 0 && obstruction(pattern).fires;
    return report;
}

}  // namespace alexcert
