#pragma once

#include <random>
#include <string>

#include "tropline/io.hpp"
#include "tropline/polynomial.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(TROPLINE_DATA_DIR) + "/" + name; }

inline tropline::TropicalPolynomial load_poly(const std::string& name) {
    return tropline::parse_polynomial(tropline::read_file(data_path(name)));
}

inline tropline::Rat rand_rat(std::mt19937& rng, int num_range, int max_den) {
    std::uniform_int_distribution<int> n(-num_range, num_range), d(1, max_den);
    return tropline::make_rat(n(rng), d(rng));
}

inline int rand_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline tropline::LatticePoint3 rand_lattice(std::mt19937& rng, int lo, int hi) {
    return {rand_int(rng, lo, hi), rand_int(rng, lo, hi), rand_int(rng, lo, hi)};
}

}  // namespace testing
