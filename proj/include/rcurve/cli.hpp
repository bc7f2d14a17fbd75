#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcurve/json_io.hpp"

namespace rcurve::cli {

namespace detail {

struct InputFlags {
    std::string param;
    std::string mode;
    std::string a, b;
};

inline void add_input_flags(CLI::App* sub, InputFlags& f, bool param_required = true) {
    auto* opt = sub->add_option("--param", f.param, "parameterization JSON file");
    if (param_required) opt->required();
    sub->add_option("--mode", f.mode, "full | arc")->check(CLI::IsMember({"full", "arc"}));
    sub->add_option("--a", f.a, "arc start (rational)");
    sub->add_option("--b", f.b, "arc end (rational)");
}

inline std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct Loaded {
    InputDoc doc;
    SemialgInput input;
};

inline Loaded load_input(const InputFlags& f, const Json* fallback = nullptr) {
    Loaded l;
    l.doc = read_input(read_json_file(f.param));
    if (l.doc.name.empty()) l.doc.name = stem(f.param);
    Mode mode = Mode::FULL_TRACE;
    std::optional<Rat> a = l.doc.a, b = l.doc.b;
    if (fallback && fallback->contains("input")) {
        const Json& in = fallback->at("input");
        if (in.contains("mode")) mode = parse_mode(in.at("mode").get<std::string>());
        if (in.contains("a")) a = json_rat(in.at("a"));
        if (in.contains("b")) b = json_rat(in.at("b"));
    }
    if (l.doc.mode) mode = *l.doc.mode;
    if (!f.mode.empty()) mode = parse_mode(f.mode);
    if (!f.a.empty()) a = parse_rat(f.a);
    if (!f.b.empty()) b = parse_rat(f.b);
    if (mode == Mode::ARC) {
        if (!a || !b) throw InvalidInput("arc mode needs --a and --b");
        l.input = SemialgInput::arc(l.doc.param, *a, *b);
    } else {
        l.input = SemialgInput::full(l.doc.param);
    }
    return l;
}

inline Json input_json(const SemialgInput& in) {
    Json j = {{"mode", to_string(in.mode)}};
    if (in.mode == Mode::ARC) {
        j["a"] = in.a.get_str();
        j["b"] = in.b.get_str();
    }
    return j;
}

inline void emit(const Json& doc, const std::string& out_path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + out_path + "' for writing");
    f << text;
    if (!f) throw InvalidInput("write to '" + out_path + "' failed");
}

inline double parse_tol(const std::string& s) {
    try {
        return to_double(parse_rat(s));
    } catch (const InvalidInput&) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || !(v > 0)) throw InvalidInput("tolerance must be a positive number, got '" + s + "'");
        return v;
    }
}

inline std::string table_row(const std::string& name, const Classification& c) {
    auto cell = [](const std::string& s, int w) {
        std::ostringstream o;
        o << std::left << std::setw(w) << s;
        return o.str();
    };
    std::ostringstream o;
    o << cell("S", 24) << cell("case", 7) << cell("p_B", 10) << cell("p_S1", 10) << cell("p_Sk(k>=2)", 12)
      << cell("r_B=r_S", 10) << cell("rs_B=rs_S", 11) << "compact\n";
    o << cell(name + " (" + to_string(c.mode) + ")", 24) << cell(to_string(c.case_label), 7)
      << cell(to_string(c.p_ball), 10) << cell(to_string(c.p_sphere1), 10) << cell(yes_no(c.p_sphere_k_ge2), 12)
      << cell(to_string(c.r_ball_sphere), 10) << cell(to_string(c.rs_ball_sphere), 11)
      << (c.s_compact ? "yes" : "no") << "\n";
    o << "case: " << c.case_reason << "\n";
    o << "p_S1: " << c.sphere1_reason << "\n";
    return o.str();
}

}  // namespace detail

/// Runs one command; args exclude the program name. Exit codes: 0 success,
/// 1 usage or I/O error, 2 mathematical rejection.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rcurve: polynomial and regular images of balls and spheres for rational curves"};
    app.require_subcommand(1);

    detail::InputFlags cf, wf, sf, chf;
    std::string out_path;
    bool as_text = false, as_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "decide p_B, p_S, r_B, rs_B and the case label");
    detail::add_input_flags(classify_cmd, cf);
    classify_cmd->add_flag("--text", as_text, "print a table row");
    classify_cmd->add_flag("--json", as_json, "print JSON (default)");
    classify_cmd->add_option("--out", out_path, "output file");

    std::string target;
    int sphere_k = 2;
    auto* witness_cmd = app.add_subcommand("witness", "construct a witness map");
    detail::add_input_flags(witness_cmd, wf);
    witness_cmd->add_option("--target", target, "interval | circle | sphere2 | sphere | laurent")
        ->required()
        ->check(CLI::IsMember({"interval", "circle", "sphere2", "sphere", "laurent"}));
    witness_cmd->add_option("--k", sphere_k, "sphere dimension for --target sphere");
    witness_cmd->add_option("--out", out_path, "output file");

    std::string laurent_in;
    auto* laurent_cmd = app.add_subcommand("laurent", "convert between circle maps and Laurent polynomials");
    laurent_cmd->require_subcommand(1);
    auto* to_real = laurent_cmd->add_subcommand("to-real", "Laurent document -> circle witness");
    auto* from_real = laurent_cmd->add_subcommand("from-real", "circle witness -> Laurent document");
    for (auto* s : {to_real, from_real}) {
        s->add_option("--in", laurent_in, "input document")->required();
        s->add_option("--out", out_path, "output file");
    }

    std::string impl_param;
    auto* impl_cmd = app.add_subcommand("implicitize", "implicit equation of a plane curve");
    impl_cmd->add_option("--param", impl_param, "parameterization JSON file")->required();
    impl_cmd->add_option("--out", out_path, "output file");

    std::size_t n_samples = 1000;
    std::string format = "svg";
    auto* sample_cmd = app.add_subcommand("sample", "sample the set and write SVG or CSV");
    detail::add_input_flags(sample_cmd, sf);
    sample_cmd->add_option("--n", n_samples, "sample count");
    sample_cmd->add_option("--format", format, "svg | csv")->check(CLI::IsMember({"svg", "csv"}));
    sample_cmd->add_option("--out", out_path, "plot file")->required();

    std::string witness_path, tol_text = "1/1000";
    std::size_t check_n = 10000;
    auto* check_cmd = app.add_subcommand("check", "verify a witness against a parameterization");
    check_cmd->add_option("--witness", witness_path, "witness or Laurent document")->required();
    detail::add_input_flags(check_cmd, chf);
    check_cmd->add_option("--tol", tol_text, "Hausdorff tolerance (rational or decimal)");
    check_cmd->add_option("--n", check_n, "sample count");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify_cmd->parsed()) {
            auto l = detail::load_input(cf);
            Classification c = classify(l.input);
            if (as_text && !as_json) {
                std::string text = detail::table_row(l.doc.name, c);
                if (out_path.empty()) {
                    out << text;
                } else {
                    std::ofstream f(out_path, std::ios::binary);
                    if (!f || !(f << text)) throw InvalidInput("cannot write '" + out_path + "'");
                }
            } else {
                Json j = to_json(c, l.input.param.m());
                j["name"] = l.doc.name;
                j["param"] = to_json(l.input.param);
                j["input"] = detail::input_json(l.input);
                detail::emit(j, out_path, out);
            }
        } else if (witness_cmd->parsed()) {
            auto l = detail::load_input(wf);
            Json j;
            if (target == "interval") {
                j = to_json(witness_interval(l.input));
            } else if (target == "circle") {
                j = to_json(witness_circle(l.input));
            } else if (target == "sphere2" || target == "sphere") {
                j = to_json(witness_sphere_k(l.input, target == "sphere2" ? 2 : sphere_k));
            } else {
                if (l.input.param.m() != 2) throw InvalidInput("laurent target needs a plane curve (m = 2)");
                j = to_json(laurent_from_real(witness_circle(l.input)));
            }
            j["input"] = detail::input_json(l.input);
            detail::emit(j, out_path, out);
        } else if (laurent_cmd->parsed()) {
            Json in = read_json_file(laurent_in);
            if (to_real->parsed())
                detail::emit(to_json(real_from_laurent(read_laurent(in))), out_path, out);
            else
                detail::emit(to_json(laurent_from_real(read_witness(in))), out_path, out);
        } else if (impl_cmd->parsed()) {
            InputDoc doc = read_input(read_json_file(impl_param));
            MPoly f = implicitize_plane(doc.param);
            Json j = {{"schema", kSchema},
                      {"kind", "implicit"},
                      {"variables", {"x0", "x1", "x2"}},
                      {"polynomial", to_string(f, {"x0", "x1", "x2"})},
                      {"degree", f.total_degree()}};
            detail::emit(j, out_path, out);
        } else if (sample_cmd->parsed()) {
            auto l = detail::load_input(sf);
            SampleCloud cloud = sample(l.input, n_samples);
            emit_plot({cloud}, out_path, format == "svg" ? PlotFormat::SVG : PlotFormat::CSV);
            Json j = {{"schema", kSchema}, {"kind", "sample"},           {"points", cloud.points.size()},
                      {"dropped", cloud.dropped}, {"format", format}, {"path", out_path}};
            out << j.dump(2) << "\n";
        } else if (check_cmd->parsed()) {
            Json wdoc = read_json_file(witness_path);
            check_schema(wdoc);
            auto l = detail::load_input(chf, &wdoc);
            const double tol = detail::parse_tol(tol_text);
            VerifyReport rep = wdoc.value("kind", "") == "laurent"
                                   ? verify_witness(read_laurent(wdoc), l.input, tol, check_n)
                                   : verify_witness(read_witness(wdoc), l.input, tol, check_n);
            out << to_json(rep).dump(2) << "\n";
            return rep.pass() ? 0 : 2;
        }
    } catch (const MathRejection& e) {
        Json ev = Json::object();
        for (const auto& [k, v] : e.evidence()) {
            // integers stay numbers in the evidence map
            bool numeric = !v.empty() && std::all_of(v.begin(), v.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            ev[k] = numeric && v.size() < 18 ? Json(std::stoll(v)) : Json(v);
        }
        out << error_json(e.reason(), e.what(), ev).dump(2) << "\n";
        err << "rejected (" << e.reason() << "): " << e.what() << "\n";
        return 2;
    } catch (const Inconclusive& e) {
        out << error_json("inconclusive", e.what()).dump(2) << "\n";
        err << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        out << error_json("parse_error", e.what(), {{"position", e.position()}}).dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        out << error_json("invalid_input", e.what()).dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << error_json("internal", e.what()).dump(2) << "\n";
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rcurve::cli
