#pragma once

// Shared test fixtures: a few high-precision zeta zero ordinates so unit
// tests do not depend on the generated tables (the full-table checks live in
// the acceptance binary).

#include <vector>

#include "zetasum/zero_catalog.hpp"

namespace zetasum_test {

inline const std::vector<double>& first_zeta_ordinates() {
    static const std::vector<double> t = {
        14.134725141734693, 21.022039638771554, 25.010857580145688,
        30.424876125859513, 32.935061587739190, 37.586178158825671,
        40.918719012147495, 43.327073280914999, 48.005150881167159,
        49.773832477672302, 52.970321477714460, 56.446247697063394,
        59.347044002602353, 60.831778524609809, 65.112544048081607,
        67.079810529494173, 69.546401711173979, 72.067157674481907,
        75.704690699083933, 77.144840068874805, 79.337375020249367,
        82.910380854086030, 84.735492980517050, 87.425274613125229,
        88.809111207634465, 92.491899270558484, 94.651344040519886,
        95.870634228245309, 98.831194218193692, 101.31785100573139,
    };
    return t;
}

inline zetasum::ZeroCatalog small_zeta_catalog(int n = 30) {
    zetasum::ZeroCatalog cat;
    cat.kind = zetasum::CatalogKind::zeta();
    const auto& t = first_zeta_ordinates();
    for (int k = 0; k < n && k < static_cast<int>(t.size()); ++k)
        cat.records.push_back({k + 1, t[static_cast<std::size_t>(k)],
                               "embedded"});
    return cat;
}

}  // namespace zetasum_test
