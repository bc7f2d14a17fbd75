#pragma once

#include <random>
#include <string>
#include <vector>

#include "rcurve/json_io.hpp"
#include "rcurve/rcurve.hpp"

namespace rcurve::test {

inline std::string fixture_path(const std::string& name) { return std::string(RCURVE_FIXTURES) + "/" + name + ".json"; }

inline ProjParam fixture(const std::string& name) { return read_input(read_json_file(fixture_path(name))).param; }

inline ProjParam circle() { return parse_param({"t0^2 + t1^2", "2*t0*t1", "t1^2 - t0^2"}); }
inline ProjParam gerono() { return parse_param({"(t0^2 + t1^2)^2", "t1^4 - t0^4", "2*t0*t1*(t1^2 - t0^2)"}); }
inline ProjParam line() { return parse_param({"t0", "t1", "0"}); }
inline ProjParam parabola() { return parse_param({"t0^2", "t0*t1", "t1^2"}); }

/// Lowest degree first.
inline UPoly P(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(make_rat(x));
    return UPoly(v);
}

inline Rat rand_rat(std::mt19937_64& rng, long num_range, long den_max = 1) {
    std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
    return make_rat(num(rng), den(rng));
}

inline UPoly rand_poly(std::mt19937_64& rng, int degree, long range) {
    std::vector<Rat> c;
    for (int k = 0; k < degree; ++k) c.push_back(rand_rat(rng, range));
    Rat lead = 0;
    while (is_zero(lead)) lead = rand_rat(rng, range);
    c.push_back(lead);
    return UPoly(c);
}

}  // namespace rcurve::test
