#ifndef QPTHETA_TEST_SUPPORT_HPP
#define QPTHETA_TEST_SUPPORT_HPP

#include "qptheta/core.hpp"

#include <algorithm>
#include <random>

namespace test_support
{

using qptheta::Complex;

inline double rel_err(Complex actual, Complex expected)
{
    return std::abs(actual - expected) / std::max(std::abs(expected), 1e-300);
}

struct Draws
{
    std::mt19937_64 gen;
    explicit Draws(unsigned long long seed) : gen(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    Complex point(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }
};

} // namespace test_support

#endif
