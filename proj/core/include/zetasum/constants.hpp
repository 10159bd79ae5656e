#pragma once

// Named constants used by the explicit-formula coefficients.  All are
// computed at first use (never transcribed as decimals) and cached.

namespace zetasum {

struct Constants {
    double euler_gamma;   // gamma_0
    double stieltjes_1;   // gamma_1
    double stieltjes_2;   // gamma_2
    double glaisher_log;  // log A = 1/12 - zeta'(-1)
    double gibbs_g;       // -1/2 + Si(pi)/pi
};

const Constants& constants();

}  // namespace zetasum
