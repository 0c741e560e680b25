#include "stirgamma/bernoulli.hpp"

#include <stdexcept>

namespace stirgamma {

const ExactRational& BernoulliTable::c(unsigned j) const {
    if (j >= c_.size()) throw std::out_of_range("BernoulliTable: index beyond table");
    return c_[j];
}

const ExactRational& BernoulliTable::bernoulli(unsigned j) const {
    if (j >= b_.size()) throw std::out_of_range("BernoulliTable: index beyond table");
    return b_[j];
}

BernoulliTable build_table(unsigned max_index) {
    BernoulliTable table;
    table.c_.reserve(max_index + 1);
    table.b_.reserve(max_index + 1);

    // Factorials 0! .. (max_index+1)! feed the recursion denominators.
    std::vector<ExactRational> inv_factorial;
    inv_factorial.reserve(max_index + 2);
    ExactInteger fact(1);
    inv_factorial.emplace_back(ExactInteger(1), fact);
    for (unsigned n = 1; n <= max_index + 1; ++n) {
        fact *= ExactInteger(static_cast<std::int64_t>(n));
        inv_factorial.emplace_back(ExactInteger(1), fact);
    }

    ExactRational jfact(1);
    for (unsigned j = 0; j <= max_index; ++j) {
        ExactRational cj;
        if (j == 0) {
            cj = ExactRational(1);
        } else {
            ExactRational sum;
            for (unsigned k = 0; k < j; ++k) sum += table.c_[k] * inv_factorial[j - k + 1];
            cj = -sum;
        }
        if (j > 0) jfact *= ExactRational(static_cast<std::int64_t>(j));
        table.c_.push_back(cj);
        table.b_.push_back(cj * jfact);
    }
    return table;
}

ExactRational bernoulli_number(const BernoulliTable& table, unsigned j) {
    return table.bernoulli(j);
}

ExactRational bernoulli_oracle(unsigned m) {
    ExactRational total;
    for (unsigned k = 0; k <= m; ++k) {
        ExactRational inner;
        for (unsigned j = 0; j <= k; ++j) {
            // 0^0 counts as 1 in this identity.
            ExactInteger power = (j == 0 && m == 0)
                                     ? ExactInteger(1)
                                     : ExactInteger::pow(ExactInteger(static_cast<std::int64_t>(j)), m);
            ExactRational term(binomial(k, j) * power);
            inner += (j % 2 == 0) ? term : -term;
        }
        total += inner / ExactRational(static_cast<std::int64_t>(k) + 1);
    }
    return total;
}

}  // namespace stirgamma
