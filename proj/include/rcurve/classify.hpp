#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rcurve/curve_analysis.hpp"

namespace rcurve {

enum class CaseLabel { CASE1, CASE2, CASE3, NONE };

/// Invariant value: 1 or infinity.
enum class Inv { ONE, INF };

inline std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::CASE1: return "CASE1";
        case CaseLabel::CASE2: return "CASE2";
        case CaseLabel::CASE3: return "CASE3";
        case CaseLabel::NONE: return "NONE";
    }
    return "NONE";
}
inline std::string to_string(Inv v) { return v == Inv::ONE ? "1" : "infinity"; }
inline std::string to_string(Mode m) { return m == Mode::ARC ? "arc" : "full"; }

struct Classification {
    CaseLabel case_label = CaseLabel::NONE;
    Inv p_ball = Inv::INF;
    Inv p_sphere1 = Inv::INF;
    bool p_sphere_k_ge2 = false;
    Inv r_ball_sphere = Inv::INF;
    Inv rs_ball_sphere = Inv::INF;
    std::optional<bool> laurent_image;  // only for m = 2
    bool s_compact = false;
    Mode mode = Mode::FULL_TRACE;
    std::string case_reason;     // why the case label was chosen
    std::string sphere1_reason;  // the clause deciding p_sphere1
    InfinityReport evidence;
};

/// Case label from the points at infinity and their fibers.
inline std::pair<CaseLabel, std::string> case_from_report(const InfinityReport& r) {
    const auto& f = r.fibers;
    if (f.size() == 1 && f[0].fiber.size() == 1 && f[0].is_real_point)
        return {CaseLabel::CASE1, "one point at infinity with a single real branch"};
    if (f.size() == 1 && f[0].is_real_point && f[0].fiber_is_conjugate_pair)
        return {CaseLabel::CASE2, "one real point at infinity with two conjugate branches"};
    if (f.size() == 2 && !f[0].is_real_point && !f[1].is_real_point && f[0].fiber.size() == 1 &&
        f[1].fiber.size() == 1 && same_point(f[0].fiber[0].conj(), f[1].fiber[0]))
        return {CaseLabel::CASE3, "two conjugate non-real points at infinity, one branch each"};
    std::string why = std::to_string(f.size()) + " point(s) at infinity; fiber sizes";
    for (const auto& x : f) why += " " + std::to_string(x.fiber.size()) + (x.is_real_point ? "(real)" : "(non-real)");
    return {CaseLabel::NONE, why};
}

inline Classification classify(const SemialgInput& input) {
    Classification c;
    c.mode = input.mode;
    c.evidence = infinity_fibers(input.param);
    auto [label, why] = case_from_report(c.evidence);
    c.case_label = label;
    c.case_reason = why;
    const bool arc = input.mode == Mode::ARC;
    const bool bounded = c.evidence.real_trace_bounded;
    c.s_compact = arc || bounded;
    if (!c.s_compact) {
        c.sphere1_reason = "S is not compact (the real trace reaches infinity)";
        if (input.param.m() == 2) c.laurent_image = false;
        return c;
    }
    c.r_ball_sphere = Inv::ONE;
    c.rs_ball_sphere = Inv::ONE;
    const bool case1 = label == CaseLabel::CASE1;
    const bool case23 = label == CaseLabel::CASE2 || label == CaseLabel::CASE3;
    c.p_ball = case1 ? Inv::ONE : Inv::INF;
    const bool sphere1 = (arc && case1) || (!arc && bounded && case23);
    c.p_sphere1 = sphere1 ? Inv::ONE : Inv::INF;
    c.p_sphere_k_ge2 = arc && case1;
    if (input.param.m() == 2) c.laurent_image = sphere1;
    if (sphere1) {
        c.sphere1_reason = arc ? "arc on a curve with one real branch at infinity"
                               : "full bounded trace with " + to_string(label);
    } else if (arc) {
        c.sphere1_reason = case23 ? "a proper sub-arc is not the full trace required by " + to_string(label)
                                  : "arc whose curve fails the single-branch condition (" + to_string(label) + ")";
    } else {
        c.sphere1_reason = "bounded trace but the points at infinity are " + to_string(label) + ": " + why;
    }
    return c;
}

/// Fiber structure summary used to compare classifications: sorted
/// (fiber size, real point, conjugate pair, multiplicities) tuples.
inline std::vector<std::tuple<std::size_t, bool, bool, std::vector<unsigned>>> fiber_signature(const InfinityReport& r) {
    std::vector<std::tuple<std::size_t, bool, bool, std::vector<unsigned>>> out;
    for (const auto& f : r.fibers) {
        auto mult = f.multiplicities;
        std::sort(mult.begin(), mult.end());
        out.emplace_back(f.fiber.size(), f.is_real_point, f.fiber_is_conjugate_pair, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Equality of the decided fields and of the fiber structure (not coordinates).
inline bool same_decision(const Classification& a, const Classification& b) {
    return a.case_label == b.case_label && a.p_ball == b.p_ball && a.p_sphere1 == b.p_sphere1 &&
           a.p_sphere_k_ge2 == b.p_sphere_k_ge2 && a.r_ball_sphere == b.r_ball_sphere &&
           a.rs_ball_sphere == b.rs_ball_sphere && a.laurent_image == b.laurent_image && a.s_compact == b.s_compact &&
           a.mode == b.mode && a.evidence.real_trace_bounded == b.evidence.real_trace_bounded &&
           a.evidence.real_root_count_of_P0 == b.evidence.real_root_count_of_P0 &&
           fiber_signature(a.evidence) == fiber_signature(b.evidence);
}

/// Internal consistency of a classification.
inline bool invariants_hold(const Classification& c) {
    if (c.rs_ball_sphere != c.r_ball_sphere) return false;
    if (c.p_ball == Inv::ONE && c.p_sphere1 != Inv::ONE) return false;
    if (c.p_sphere_k_ge2 && c.case_label != CaseLabel::CASE1) return false;
    if (c.laurent_image && *c.laurent_image != (c.p_sphere1 == Inv::ONE)) return false;
    return true;
}

}  // namespace rcurve
