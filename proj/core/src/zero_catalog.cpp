#include "zetasum/zero_catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zetasum/zeta.hpp"

namespace zetasum {

ZeroCatalog load_zeros(const std::string& path, CatalogKind kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_zeros: cannot open " + path);
    ZeroCatalog cat;
    cat.kind = kind;
    std::string line;
    int line_no = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip comments and whitespace
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        char* end = nullptr;
        double t = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0') {
            std::ostringstream msg;
            msg << "load_zeros: format error at " << path << ":" << line_no
                << " ('" << tok << "')";
            throw std::runtime_error(msg.str());
        }
        if (t <= prev) {
            std::ostringstream msg;
            msg << "load_zeros: non-monotone ordinate at " << path << ":"
                << line_no;
            throw std::runtime_error(msg.str());
        }
        prev = t;
        cat.records.push_back(
            {static_cast<int>(cat.records.size()) + 1, t, path});
    }
    return cat;
}

std::string serialize(const ZeroCatalog& catalog) {
    std::ostringstream out;
    out.precision(15);
    if (catalog.kind.family == CatalogKind::Family::Dirichlet)
        out << "# L q=" << catalog.kind.q << " chi=" << catalog.kind.chi_index
            << "\n";
    for (const auto& r : catalog.records) out << r.ordinate << "\n";
    return out.str();
}

ValidationReport validate(
    const ZeroCatalog& catalog, double tolerance,
    const std::function<std::complex<double>(std::complex<double>)>&
        line_function) {
    ValidationReport rep;
    double prev = 0.0;
    for (const auto& r : catalog.records) {
        std::complex<double> s(0.5, r.ordinate);
        std::complex<double> v =
            line_function ? line_function(s) : zeta(s);
        double mag = std::abs(v);
        ++rep.checked;
        if (mag > tolerance || r.ordinate <= prev)
            rep.failures.push_back({r.index, r.ordinate, mag});
        prev = r.ordinate;
    }
    return rep;
}

std::vector<double> zeros_up_to(const ZeroCatalog& catalog, double T) {
    std::vector<double> out;
    for (const auto& r : catalog.records) {
        if (r.ordinate >= T) break;
        out.push_back(r.ordinate);
    }
    return out;
}

int nth_pair_count_for_T(const ZeroCatalog& catalog, double T) {
    return static_cast<int>(zeros_up_to(catalog, T).size());
}

std::string default_zero_dir() {
    if (const char* env = std::getenv("ZETASUM_ZERO_DIR")) return env;
    return "data/zeros";
}

}  // namespace zetasum
