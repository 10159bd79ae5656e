#pragma once

// Ingest, validate, and serve ordered nontrivial-zero ordinates for zeta and
// for Dirichlet L-functions.
//
// File format: UTF-8 text, '#' comments, one positive decimal per line,
// ascending.  L-zero files carry a header line '# L q=<q> chi=<index>'; for
// non-real characters a companion file stores the magnitudes of the
// negative-ordinate zeros.

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace zetasum {

struct ZeroRecord {
    int index;        // 1-based
    double ordinate;  // imaginary part t_k > 0
    std::string source;
};

struct CatalogKind {
    enum class Family { Zeta, Dirichlet } family = Family::Zeta;
    int q = 0;          // modulus, Dirichlet only
    int chi_index = 0;  // character index, Dirichlet only

    static CatalogKind zeta() { return {}; }
    static CatalogKind dirichlet(int q, int chi) {
        return {Family::Dirichlet, q, chi};
    }
};

struct ZeroCatalog {
    CatalogKind kind;
    std::vector<ZeroRecord> records;

    std::size_t size() const { return records.size(); }
    double ordinate(int k) const { return records.at(k - 1).ordinate; }  // 1-based
};

// Parse a zero table.  Throws std::runtime_error on non-monotone ordinates
// (integrity error) or unparseable lines (format error, message carries the
// line number).  An empty file yields an empty catalog.
ZeroCatalog load_zeros(const std::string& path, CatalogKind kind);

// Write the catalog back in the same format at 15 significant digits.
std::string serialize(const ZeroCatalog& catalog);

struct ValidationFailure {
    int index;
    double ordinate;
    double magnitude;  // |f(1/2 + i t)|
};

struct ValidationReport {
    std::size_t checked = 0;
    std::vector<ValidationFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Check |line_function(1/2 + i t_k)| <= tolerance for every record, where
// line_function defaults to zeta.  Also rechecks strict ordinate growth.
ValidationReport validate(
    const ZeroCatalog& catalog, double tolerance = 1e-6,
    const std::function<std::complex<double>(std::complex<double>)>&
        line_function = {});

// Ordinates strictly below T (in catalog order).
std::vector<double> zeros_up_to(const ZeroCatalog& catalog, double T);
int nth_pair_count_for_T(const ZeroCatalog& catalog, double T);

// Resolve the default zero-table directory: $ZETASUM_ZERO_DIR if set, else
// "data/zeros" relative to the working directory.
std::string default_zero_dir();

}  // namespace zetasum
