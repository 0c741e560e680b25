#pragma once

#include "stirgamma/exact_rational.hpp"

#include <vector>

namespace stirgamma {

/*
 * Exact table of the Taylor coefficients c_j of z/(e^z - 1) together with the
 * Bernoulli numbers B_j = j! c_j, for 0 <= j <= max_index(). Built once by
 * build_table and immutable afterwards; safe to share across threads.
 *
 * Sign convention: B_1 = -1/2.
 */
class BernoulliTable {
public:
    unsigned max_index() const { return static_cast<unsigned>(c_.size()) - 1; }

    // c_j (= B_j / j!); throws std::out_of_range for j > max_index().
    const ExactRational& c(unsigned j) const;
    // B_j; throws std::out_of_range for j > max_index().
    const ExactRational& bernoulli(unsigned j) const;

private:
    friend BernoulliTable build_table(unsigned);
    std::vector<ExactRational> c_;
    std::vector<ExactRational> b_;
};

/*
 * Builds the table from the defining recursion
 *
 *     c_0 = 1,   c_j = -sum_{k=0}^{j-1} c_k / (j-k+1)!   for j >= 1,
 *
 * evaluated literally in exact rational arithmetic.
 */
BernoulliTable build_table(unsigned max_index);

ExactRational bernoulli_number(const BernoulliTable& table, unsigned j);

/*
 * Independent check value for B_m via the explicit double sum
 *
 *     B_m = sum_{k=0}^{m} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k,j) j^m
 *
 * (0^0 = 1), which shares no code path with build_table.
 */
ExactRational bernoulli_oracle(unsigned m);

}  // namespace stirgamma
