#include "geomrep/arrangement.hpp"
#include "geomrep/hypergraph.hpp"
#include "geomrep/recognize.hpp"
#include "geomrep/reduction.hpp"
#include "geomrep/svg.hpp"
#include "geomrep/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace geomrep;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content << (content.empty() || content.back() == '\n' ? "" : "\n");
    else
        spit(out_path, content);
}

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

Hypergraph load_hypergraph(const std::string& path) {
    std::string text = slurp(path);
    nlohmann::json j = parse_json(text);
    if (j.contains("hypergraph")) return parse_hypergraph(j["hypergraph"].dump());
    return parse_hypergraph(text);
}

Fixture load_arrangement_file(const std::string& path) {
    std::string text = slurp(path);
    nlohmann::json j = parse_json(text);
    if (j.contains("n_lines")) return parse_wiring(text);
    if (j.contains("lines")) return parse_arrangement(text);
    throw std::runtime_error(path + ": neither a wiring diagram nor a line arrangement");
}

Mat mat_from_file(const nlohmann::json& j) {
    Mat m;
    for (const auto& row : j) {
        Vec r;
        for (const auto& c : row) r.push_back(rat_from_string(c.get<std::string>()));
        m.push_back(r);
    }
    return m;
}

struct FamilySpec {
    ShapeFamily family;
    bool exact_polygon = false;  // complete recognizer applies
    bool intervals = false;
};

FamilySpec parse_family(const std::string& text) {
    FamilySpec out;
    if (text == "halfplane") {
        out.family.kind = ShapeFamily::Kind::Halfplanes;
    } else if (text == "disk") {
        out.family.kind = ShapeFamily::Kind::UnitDisks;
    } else if (text == "interval") {
        out.family.kind = ShapeFamily::Kind::Intervals;
        out.intervals = true;
    } else if (text == "square") {
        out.family.kind = ShapeFamily::Kind::PolygonTranslates;
        out.family.polygon = unit_square();
        out.exact_polygon = true;
    } else if (text.rfind("ellipse:", 0) == 0) {
        out.family.kind = ShapeFamily::Kind::Ellipses;
        nlohmann::json j = parse_json(slurp(text.substr(8)));
        out.family.q = mat_from_file(j.at("q"));
    } else if (text.rfind("polygon:", 0) == 0) {
        out.family.kind = ShapeFamily::Kind::PolygonTranslates;
        nlohmann::json j = parse_json(slurp(text.substr(8)));
        for (const auto& row : j.at("vertices")) {
            Point p;
            for (const auto& c : row) p.push_back(rat_from_string(c.get<std::string>()));
            out.family.polygon.push_back(p);
        }
        out.exact_polygon = true;
    } else {
        throw std::runtime_error("unknown family: " + text +
                                 " (use halfplane|disk|ellipse:<Qfile>|polygon:<Pfile>|square|interval)");
    }
    return out;
}

std::pair<int, int> parse_budget(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos) return {std::stoi(text), 2000};
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

int run(int argc, char** argv) {
    CLI::App app{"geomrep: exact geometric hypergraph representation toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, rep_path, arr_path, family_text = "disk", name;
    std::string budget_text = "64x2000";
    int dim = 2;
    long caps = 12;
    unsigned long seed = 0xC0FFEEul;

    auto* reduce = app.add_subcommand("reduce", "arrangement -> hypergraph with provenance");
    reduce->add_option("--in", in_path, "arrangement or wiring JSON")->required();
    reduce->add_option("--out", out_path, "output JSON (default: stdout)");

    auto* verify = app.add_subcommand("verify", "check a representation against a hypergraph");
    verify->add_option("--in", in_path, "hypergraph JSON")->required();
    verify->add_option("--rep", rep_path, "representation JSON")->required();
    verify->add_option("--out", out_path, "report JSON (default: stdout)");

    auto* recognize = app.add_subcommand("recognize", "decide representability for a family");
    recognize->add_option("--in", in_path, "hypergraph JSON")->required();
    recognize->add_option("--family", family_text,
                          "halfplane|disk|ellipse:<Qfile>|polygon:<Pfile>|square|interval");
    recognize->add_option("--budget", budget_text, "search budget RESTARTSxITERATIONS");
    recognize->add_option("--seed", seed, "random seed for the search family");
    recognize->add_option("--caps", caps, "pair cap for the exact polygon recognizer");
    recognize->add_option("--out", out_path, "decision JSON (default: stdout)");

    auto* emit_etr_cmd = app.add_subcommand("emit-etr", "halfspace representability as an ETR sentence");
    emit_etr_cmd->add_option("--in", in_path, "hypergraph JSON")->required();
    emit_etr_cmd->add_option("--dim", dim, "ambient dimension (default 2)");
    emit_etr_cmd->add_option("--out", out_path, "formula text (default: stdout)");

    auto* stretch = app.add_subcommand("stretch-check", "is B a stretching of A?");
    stretch->add_option("--in", in_path, "wiring diagram JSON (A)")->required();
    stretch->add_option("--arrangement", arr_path, "line arrangement JSON (B)")->required();
    stretch->add_option("--out", out_path, "report JSON (default: stdout)");

    auto* lift = app.add_subcommand("lift", "embed a planar arrangement into R^d with a canvas");
    lift->add_option("--in", in_path, "planar arrangement JSON")->required();
    lift->add_option("--dim", dim, "target dimension")->required();
    lift->add_option("--out", out_path, "lifted arrangement JSON (default: stdout)");

    auto* fixture_cmd = app.add_subcommand("fixture", "write a named test arrangement");
    fixture_cmd
        ->add_option("--name", name,
                     "pappus_lines|pappus_wiring|non_pappus_wiring|grid(n)|random_simple(n,seed)")
        ->required();
    fixture_cmd->add_option("--out", out_path, "output JSON (default: stdout)");

    auto* render = app.add_subcommand("render", "deterministic SVG of an arrangement or representation");
    render->add_option("--in", in_path, "arrangement, wiring, or representation JSON")->required();
    render->add_option("--out", out_path, "SVG file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (reduce->parsed()) {
            ReductionOutput r = build_hypergraph(load_arrangement_file(in_path));
            emit(out_path, serialize_reduction(r));
            return 0;
        }
        if (verify->parsed()) {
            Hypergraph h = load_hypergraph(in_path);
            Representation r = parse_representation(slurp(rep_path));
            VerifyReport report = verify_representation(h, r);
            emit(out_path, serialize_report(report));
            return report.pass ? 0 : 1;
        }
        if (recognize->parsed()) {
            Hypergraph h = load_hypergraph(in_path);
            FamilySpec fam = parse_family(family_text);
            Decision d;
            if (fam.intervals) {
                IntervalDecision id = recognize_intervals(h);
                d.outcome = id.representable ? Outcome::Yes : Outcome::No;
                if (id.representable) {
                    d.stats.note = "witness ordering:";
                    for (int v : id.ordering) d.stats.note += " " + std::to_string(v);
                }
            } else if (fam.exact_polygon) {
                RecognizeOptions opts;
                opts.max_pairs = caps;
                d = recognize_polygon_translates(h, fam.family.polygon, opts);
            } else {
                auto [restarts, iters] = parse_budget(budget_text);
                SearchBudget budget;
                budget.restarts = restarts;
                budget.iterations = iters;
                budget.seed = seed;
                d = search_representation(h, fam.family, budget);
            }
            emit(out_path, serialize_decision(d));
            return exit_code(d);
        }
        if (emit_etr_cmd->parsed()) {
            Hypergraph h = load_hypergraph(in_path);
            EtrFormula f = emit_etr(h, dim);
            emit(out_path, render_etr(f));
            return 0;
        }
        if (stretch->parsed()) {
            WiringDiagram w = parse_wiring(slurp(in_path));
            HyperplaneArrangement b = parse_arrangement(slurp(arr_path));
            StretchReport report = check_stretching(w, b);
            nlohmann::json j;
            j["ok"] = report.ok;
            j["vertices"] = nlohmann::json::array();
            for (const auto& e : report.entries)
                j["vertices"].push_back(
                    {{"on", e.vertex}, {"ok", e.ok}, {"offending", e.offending}});
            emit(out_path, j.dump(2));
            return report.ok ? 0 : 1;
        }
        if (lift->parsed()) {
            HyperplaneArrangement a = parse_arrangement(slurp(in_path));
            CanvasLift lifted = canvas_lift(a, dim);
            nlohmann::json j = parse_json(serialize_arrangement(lifted.arrangement));
            j["canvas"] = lifted.canvas_labels;
            emit(out_path, j.dump(2));
            return 0;
        }
        if (fixture_cmd->parsed()) {
            Fixture f = fixture(name);
            if (auto* w = std::get_if<WiringDiagram>(&f))
                emit(out_path, serialize_wiring(*w));
            else
                emit(out_path, serialize_arrangement(std::get<HyperplaneArrangement>(f)));
            return 0;
        }
        if (render->parsed()) {
            std::string text = slurp(in_path);
            nlohmann::json j = parse_json(text);
            std::string svg;
            if (j.contains("points") && j.contains("shapes"))
                svg = render_representation_svg(parse_representation(text));
            else if (j.contains("n_lines"))
                svg = render_wiring_svg(parse_wiring(text));
            else
                svg = render_arrangement_svg(parse_arrangement(text));
            emit(out_path, svg);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
