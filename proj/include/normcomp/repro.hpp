#pragma once

#include "normcomp/inequalities.hpp"

namespace normcomp {

/// One expected-vs-computed line of a reproduction target.
struct ReproCheck {
    std::string label;
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool ok = false;
};

struct ReproReport {
    std::string target;
    std::vector<ReproCheck> checks;
    bool ok = true;

    void add(std::string label, double expected, double computed, double tolerance);
    void add_check(ReproCheck check);
};

std::string to_json(const ReproReport& r);

/// The scalar-partition counterexample numbers: ||A||_1.5 = 7.7617 and
/// || |A| ||_1.5 = 7.9761 within 5e-4, plus positivity of the matrix.
ReproReport repro_counterexample();

/// |slack| of the 2x2-block bound on the sharpness witness, over random
/// (b, c, d) triples and the given q values (direction chosen by q; the
/// default grid spans both regimes and both endpoints).
ReproReport repro_sharpness(std::size_t triples = 100,
                            const std::vector<double>& qs = {1.0, 1.1, 1.25, 1.5, 1.75, 1.9,
                                                             2.0, 2.5, 3.0, 4.0},
                            std::uint64_t seed = 20240);

/// The d = 3, q = 1.5 gap between the exact norm power and the multi-block
/// bound.
ReproReport repro_nonsharpness();

/// Equality of the 2x2-block bound at the endpoints q = 1 and q = 2 on
/// seeded random instances.
ReproReport repro_equality_endpoints(std::size_t instances = 1000, std::uint64_t seed = 20240);

std::vector<ReproReport> repro_all();

}  // namespace normcomp
