#pragma once

#include "stirgamma/bernoulli.hpp"
#include "stirgamma/exact_rational.hpp"

#include <complex>
#include <vector>

namespace stirgamma {

/*
 * Coefficients of the asymptotic expansion
 *
 *   log Gamma(z) ~ (z - 1/2) log z - z + (1/2) log(2 pi)
 *                  + sum_{n>=1} a_n / z^(2n-1),
 *
 * where a_n = (2n-2)! B_{2n} / (2n)!. The a_n are kept exact; evaluation uses
 * double conversions fixed at build time. Immutable once built.
 */
class StirlingSeries {
public:
    int max_terms() const { return static_cast<int>(exact_.size()); }

    // a_n for 1 <= n <= max_terms(); throws std::out_of_range otherwise.
    const ExactRational& coefficient_exact(int n) const;
    double coefficient(int n) const;

    // (1/2) log(2 pi).
    double log_constant() const { return log_constant_; }

private:
    friend StirlingSeries build_series(const BernoulliTable&, int);
    std::vector<ExactRational> exact_;
    std::vector<double> approx_;
    double log_constant_ = 0.0;
};

/*
 * Builds a_1 .. a_n_terms from an exact Bernoulli table, which must extend to
 * index 2*n_terms at least (std::invalid_argument otherwise).
 */
StirlingSeries build_series(const BernoulliTable& table, int n_terms);

/*
 * Truncated expansion at z, using terms a_1 .. a_{n_used}, without any
 * argument shifting. Principal branch. Throws std::domain_error on the branch
 * cut (real z <= 0, including 0) and std::out_of_range when n_used exceeds
 * the series length.
 */
std::complex<double> eval_log_gamma_raw(const StirlingSeries& series, std::complex<double> z,
                                        int n_used);

/*
 * Index n in [1, cap] minimizing the term magnitude |a_n| / |z|^(2n-1):
 * the first local minimum of the scan, or cap when the terms are still
 * shrinking there. Magnitudes are compared in log space so extreme |z|
 * cannot overflow.
 */
int smallest_term_index(const StirlingSeries& series, std::complex<double> z, int cap);

// First omitted term magnitude |a_{n_used+1}| / |z|^(2*n_used+1).
double error_estimate(const StirlingSeries& series, std::complex<double> z, int n_used);

struct TruncationPolicy {
    enum class Mode { fixed, smallest_term };

    Mode mode = Mode::smallest_term;
    int fixed_terms = 0;
    int cap = 30;

    static TruncationPolicy fixed(int n_terms, int cap);
    static TruncationPolicy smallest(int cap);
};

}  // namespace stirgamma
