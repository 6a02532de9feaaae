#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mz/rational.hpp"

namespace mztest {

inline mz::Rational rand_rational(std::mt19937& rng, int max_num = 20, int max_den = 6) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return mz::Rational(num(rng), den(rng));
}

inline mz::Rational rand_nonzero_rational(std::mt19937& rng, int max_num = 20, int max_den = 6) {
    for (;;) {
        mz::Rational r = rand_rational(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

inline std::vector<mz::Rational> rand_distinct_rationals(std::mt19937& rng, int count,
                                                         int max_num = 20, int max_den = 6) {
    std::set<mz::Rational> seen;
    while (static_cast<int>(seen.size()) < count)
        seen.insert(rand_rational(rng, max_num, max_den));
    return {seen.begin(), seen.end()};
}

} // namespace mztest
