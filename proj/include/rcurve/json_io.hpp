#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcurve/classify.hpp"
#include "rcurve/oracle.hpp"
#include "rcurve/verify.hpp"
#include "rcurve/witness.hpp"

namespace rcurve {

using Json = nlohmann::json;

constexpr int kSchema = 1;

/// Parameterization document: homogeneous "components" in t0, t1, or an
/// "affine" list of {"num", "den"} in t; optional "name", "mode", "a", "b".
struct InputDoc {
    ProjParam param;
    std::string name;
    std::optional<Mode> mode;
    std::optional<Rat> a, b;
};

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void check_schema(const Json& j) {
    if (!j.is_object()) throw InvalidInput("document must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchema)
        throw InvalidInput("unsupported schema " + j.at("schema").dump());
}

inline std::string json_string(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_string()) throw InvalidInput("field '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

inline Rat json_rat(const Json& j) {
    if (j.is_number_integer()) return Rat(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw InvalidInput("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

inline Mode parse_mode(const std::string& s) {
    if (s == "full") return Mode::FULL_TRACE;
    if (s == "arc") return Mode::ARC;
    throw InvalidInput("mode must be 'full' or 'arc', got '" + s + "'");
}

inline InputDoc read_input(const Json& j) {
    check_schema(j);
    InputDoc doc;
    if (j.contains("components")) {
        std::vector<std::string> comps;
        for (const auto& c : j.at("components")) {
            if (!c.is_string()) throw InvalidInput("components must be strings");
            comps.push_back(c.get<std::string>());
        }
        doc.param = parse_param(comps);
    } else if (j.contains("affine")) {
        std::vector<std::pair<UPoly, UPoly>> fr;
        for (const auto& c : j.at("affine")) {
            if (c.is_string()) {
                fr.emplace_back(parse_upoly(c.get<std::string>()), UPoly(Rat(1)));
            } else {
                fr.emplace_back(parse_upoly(json_string(c, "num")),
                                c.contains("den") ? parse_upoly(json_string(c, "den")) : UPoly(Rat(1)));
            }
        }
        doc.param = homogenize_affine(fr);
    } else {
        throw InvalidInput("parameterization document needs 'components' or 'affine'");
    }
    if (j.contains("name")) doc.name = json_string(j, "name");
    if (j.contains("mode")) doc.mode = parse_mode(json_string(j, "mode"));
    if (j.contains("a")) doc.a = json_rat(j.at("a"));
    if (j.contains("b")) doc.b = json_rat(j.at("b"));
    return doc;
}

inline Json to_json(const ProjParam& p) {
    Json comps = Json::array();
    for (const auto& c : p.components()) comps.push_back(to_string(c));
    return {{"components", comps}, {"degree", p.degree()}, {"m", p.m()}};
}

inline std::string point_string(const AlgPoint1& t) {
    if (!t.at_infinity && t.degree() == 2) return "[1:" + to_string(as_quadext(t)) + "]";
    return to_string(t);
}

inline Json to_json(const ProjPoint& p) {
    if (p.exact) {
        Json c = Json::array();
        for (const auto& x : p.coords) c.push_back(to_string(x));
        return {{"exact", true}, {"coords", c}, {"text", to_string(p)}};
    }
    Json boxes = Json::array();
    for (const auto& b : p.boxes)
        boxes.push_back({{"re", {b.re.lo.get_str(), b.re.hi.get_str()}}, {"im", {b.im.lo.get_str(), b.im.hi.get_str()}}});
    return {{"exact", false}, {"boxes", boxes}, {"text", to_string(p)}};
}

inline Json to_json(const InfinityReport& r) {
    Json fibers = Json::array();
    for (const auto& f : r.fibers) {
        Json pts = Json::array();
        for (const auto& t : f.fiber) pts.push_back(point_string(t));
        fibers.push_back({{"point", to_json(f.point)},
                          {"fiber", pts},
                          {"multiplicities", f.multiplicities},
                          {"is_real_point", f.is_real_point},
                          {"fiber_is_conjugate_pair", f.fiber_is_conjugate_pair}});
    }
    return {{"points_at_infinity", fibers},
            {"real_trace_bounded", r.real_trace_bounded},
            {"real_root_count_of_P0", r.real_root_count_of_P0}};
}

inline Json inv_json(Inv v) { return v == Inv::ONE ? Json(1) : Json("infinity"); }
inline std::string yes_no(bool b) { return b ? "YES" : "NO"; }

inline Json to_json(const Classification& c, std::size_t m) {
    Json j = {{"schema", kSchema},
              {"case_label", to_string(c.case_label)},
              {"p_ball", inv_json(c.p_ball)},
              {"p_sphere1", inv_json(c.p_sphere1)},
              {"p_sphere_k_ge2", yes_no(c.p_sphere_k_ge2)},
              {"r_ball_sphere", inv_json(c.r_ball_sphere)},
              {"rs_ball_sphere", inv_json(c.rs_ball_sphere)},
              {"s_compact", c.s_compact},
              {"mode", to_string(c.mode)},
              {"case_reason", c.case_reason},
              {"sphere1_reason", c.sphere1_reason},
              {"evidence", to_json(c.evidence)}};
    if (m == 2) j["laurent_image"] = c.laurent_image ? Json(yes_no(*c.laurent_image)) : Json(nullptr);
    return j;
}

inline Json to_json(const RealPolyMap& w) {
    Json comps = Json::array();
    for (const auto& c : w.components) {
        auto [a, b] = split_surd(c);
        if (b.is_zero_poly())
            comps.push_back(to_string(a, w.vars));
        else
            comps.push_back({{"rational", to_string(a, w.vars)}, {"surd_part", to_string(b, w.vars)}});
    }
    Json j = {{"schema", kSchema}, {"kind", "witness"}, {"source", to_string(w.source)},
              {"variables", w.vars}, {"components", comps}};
    if (w.source == Source::SPHERE) j["k"] = w.k;
    if (w.surd != 0) j["surd"] = w.surd.get_str();
    return j;
}

inline RealPolyMap read_witness(const Json& j) {
    check_schema(j);
    if (j.value("kind", "") != "witness") throw InvalidInput("not a witness document");
    RealPolyMap w;
    const std::string src = json_string(j, "source");
    if (src == "interval")
        w.source = Source::INTERVAL;
    else if (src == "circle")
        w.source = Source::CIRCLE;
    else if (src == "sphere")
        w.source = Source::SPHERE;
    else
        throw InvalidInput("unknown witness source '" + src + "'");
    if (w.source == Source::SPHERE) w.k = j.value("k", 2);
    w.vars = source_vars(w.source, w.k);
    if (j.contains("surd")) w.surd = Integer(json_string(j, "surd"));
    for (const auto& c : j.at("components")) {
        if (c.is_string()) {
            w.components.push_back(to_quad(parse_poly(c.get<std::string>(), w.vars)));
        } else {
            if (w.surd == 0) throw InvalidInput("surd_part given without a surd");
            w.components.push_back(join_surd(parse_poly(json_string(c, "rational"), w.vars),
                                             parse_poly(json_string(c, "surd_part"), w.vars), w.surd));
        }
    }
    if (w.components.empty()) throw InvalidInput("witness has no components");
    return w;
}

namespace detail {

inline Json int_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

inline Integer json_int(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw InvalidInput("expected an integer, got " + j.dump());
}

}  // namespace detail

inline Json to_json(const LaurentPoly& l) {
    Json coeffs = Json::object();
    for (const auto& [k, v] : l.coeffs()) {
        const Rat r = re(v), i = im(v);
        coeffs[std::to_string(k)] = {detail::int_json(r.get_num()), detail::int_json(r.get_den()),
                                     detail::int_json(i.get_num()), detail::int_json(i.get_den())};
    }
    return {{"schema", kSchema}, {"kind", "laurent"}, {"coefficients", coeffs}, {"text", to_string(l)}};
}

inline LaurentPoly read_laurent(const Json& j) {
    check_schema(j);
    if (j.value("kind", "") != "laurent") throw InvalidInput("not a Laurent document");
    std::map<int, Gauss> c;
    for (const auto& [key, v] : j.at("coefficients").items()) {
        if (!v.is_array() || v.size() != 4) throw InvalidInput("Laurent coefficient must be [re_num, re_den, im_num, im_den]");
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InvalidInput("Laurent exponent '" + key + "' is not an integer");
        }
        const Integer rd = detail::json_int(v[1]), id = detail::json_int(v[3]);
        if (rd == 0 || id == 0) throw InvalidInput("zero denominator in Laurent coefficient");
        c[k] = gauss(make_rat(detail::json_int(v[0]), rd), make_rat(detail::json_int(v[2]), id));
    }
    return LaurentPoly(c);
}

inline Json to_json(const VerifyReport& r) {
    return {{"schema", kSchema},
            {"kind", "check"},
            {"pass", r.pass()},
            {"exact_checked", r.exact_checked},
            {"exact_ok", r.exact_ok},
            {"endpoints_checked", r.endpoints_checked},
            {"endpoints_ok", r.endpoints_ok},
            {"hausdorff", r.hausdorff},
            {"tol", r.tol},
            {"samples", r.samples},
            {"failure", r.failure_kind()},
            {"detail", r.detail}};
}

inline Json error_json(const std::string& reason, const std::string& message, const Json& evidence = Json::object()) {
    return {{"schema", kSchema}, {"error", true}, {"reason", reason}, {"message", message}, {"evidence", evidence}};
}

}  // namespace rcurve
