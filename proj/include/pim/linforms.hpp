// Exact linear forms I_n = a_n + b_n*pi, their integer-scaled versions, the
// lemma certificates, and the empirical delta reduction.
#pragma once

#include <string>

#include "pim/construction.hpp"
#include "pim/numtheory.hpp"
#include "pim/rational.hpp"

namespace pim {

struct LinearForm {
    long n = 0;
    Rat a, b;
    // "dual" when both Lemma-5 routes for the P integral were evaluated and
    // agreed, "x5" when only the (x+5)-basis route ran.
    std::string route_tag;
};

struct ScaledForm {
    long n = 0;
    Int a_int, b_int;
    long scale_log2 = 0;  // -floor(5n/2) + 2
    Int L;
    Int F;  // gcd(a_int, b_int)
};

struct Certificate {
    std::string lemma;
    long n = 0;
    long checked = 0;
    bool pass = false;
    std::string first_counterexample;
};

struct FormOptions {
    // run the Gaussian-basis route for the P integral and require agreement
    // with the (x+5)-basis route
    bool check_two_routes = true;
};

// Shared assembly pipeline; index taken from params.label.
LinearForm assemble_form(const IntegrandParams& params, const FormOptions& opts = {});

LinearForm linear_form(long n, const FormOptions& opts = {});  // classic case

ScaledForm scaled_form(long n);
ScaledForm scale_classic(const LinearForm& f);  // Proposition-1 scaling of a classic form

Certificate verify_lemma(int lemma_id, long n);
Certificate verify_prop1(long n);

struct DeltaResult {
    bool defined = false;
    double delta = 0.0;
    double mu_estimate = 0.0;
};

// Reduce (a, b) to coprime integers (p, q) and measure
// delta = -log|p + q pi| / log|q|.  Invariant under rational scaling.
DeltaResult delta_empirical(const Rat& a, const Rat& b);
inline DeltaResult delta_empirical(const LinearForm& f) { return delta_empirical(f.a, f.b); }

// Delta of the Proposition-1 scaled integer form, no gcd reduction; this is
// the quantity whose limit is rate_I/rate_b.
DeltaResult delta_scaled(const ScaledForm& f);

}  // namespace pim
