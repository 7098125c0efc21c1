#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oddc/classify.hpp"
#include "oddc/coloring.hpp"
#include "oddc/discharge.hpp"
#include "oddc/embedding.hpp"
#include "oddc/gen.hpp"
#include "oddc/graph.hpp"
#include "oddc/lemmas.hpp"
#include "oddc/solver.hpp"

using namespace oddc;

namespace {

// Exit codes: 0 = all checks pass, 1 = a semantic violation or finding,
// 2 = usage/input error.
constexpr int kExitPass = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph6(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') {
            if (line.rfind(">>graph6<<", 0) == 0 && line.size() > 10) break;
            continue;
        }
        break;
    }
    if (line.empty()) throw std::runtime_error("no graph6 line in " + path);
    return parse_graph6(line);
}

RotationSystem load_rot(const std::string& path) {
    return parse_rot(read_file(path));
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return {std::stoll(text), 1};
        return {std::stoll(text.substr(0, slash)),
                std::stoll(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw std::runtime_error("bad fraction: " + text);
    }
}

const char* role_str(VertexRole r) {
    switch (r) {
        case VertexRole::TwoVertex: return "two-vertex";
        case VertexRole::Convenient: return "convenient";
        case VertexRole::NonConvenient: return "non-convenient";
    }
    return "?";
}

const char* kind_str(TwoVertexKind k) {
    switch (k) {
        case TwoVertexKind::Bad: return "bad";
        case TwoVertexKind::SemiBad: return "semi-bad";
        case TwoVertexKind::NonBad: return "non-bad";
    }
    return "?";
}

struct Options {
    std::string format = "text";
    int jobs = 1;
    bool tsv() const { return format == "tsv"; }
};

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               int k, const Options& opt) {
    Graph g = load_graph6(graph_path);
    g.validate();
    if (coloring_path.empty()) {
        if (opt.tsv())
            std::cout << "graph\t" << g.vertex_count() << '\t' << g.edge_count()
                      << '\n';
        else
            std::cout << "graph: " << g.vertex_count() << " vertices, "
                      << g.edge_count() << " edges\n";
        return kExitPass;
    }
    Coloring c = parse_coloring(read_file(coloring_path), g.vertex_count(), k);
    OddReport report = is_odd_coloring(g, c);
    if (opt.tsv()) {
        for (auto [u, v] : report.proper_violations)
            std::cout << "violation\tproper\t" << u << '\t' << v << '\n';
        for (int v : report.odd_violations)
            std::cout << "violation\todd\t" << v << '\n';
        std::cout << "result\t" << (report.pass ? "pass" : "fail") << '\n';
    } else {
        for (auto [u, v] : report.proper_violations)
            std::cout << "proper violation: edge " << u << "-" << v
                      << " is monochromatic\n";
        for (int v : report.odd_violations)
            std::cout << "odd violation: vertex " << v << " has no odd color\n";
        std::cout << (report.pass ? "odd coloring: PASS" : "odd coloring: FAIL")
                  << '\n';
    }
    return report.pass ? kExitPass : kExitFinding;
}

void print_witness(const Coloring& c, const Options& opt) {
    for (std::size_t v = 0; v < c.color.size(); ++v) {
        if (opt.tsv())
            std::cout << "witness\t" << v << '\t' << c.color[v] << '\n';
        else
            std::cout << v << ' ' << c.color[v] << '\n';
    }
}

int cmd_solve(const std::string& graph_path, int k, bool chromatic,
              std::int64_t time_limit_ms, const Options& opt) {
    Graph g = load_graph6(graph_path);
    SearchConfig cfg;
    cfg.jobs = opt.jobs;
    cfg.time_limit_ms = time_limit_ms;
    if (!chromatic) {
        cfg.palette = k;
        SolveResult r = solve_odd_coloring(g, cfg);
        switch (r.status) {
            case SolveStatus::Colorable:
                if (opt.tsv())
                    std::cout << "result\tcolorable\t" << k << '\n';
                else
                    std::cout << "odd " << k << "-colorable\n";
                print_witness(*r.witness, opt);
                return kExitPass;
            case SolveStatus::NotColorable:
                if (opt.tsv())
                    std::cout << "result\tnot-colorable\t" << k << '\n';
                else
                    std::cout << "not odd " << k << "-colorable\n";
                return kExitFinding;
            case SolveStatus::Timeout:
                if (opt.tsv())
                    std::cout << "result\ttimeout\t" << k << '\n';
                else
                    std::cout << "timeout at k=" << k << '\n';
                return kExitFinding;
        }
    }
    ChromaticResult r = odd_chromatic_number(g, cfg);
    if (r.timed_out) {
        if (opt.tsv())
            std::cout << "result\ttimeout\t" << r.last_tried << '\n';
        else
            std::cout << "timeout at k=" << r.last_tried
                      << " (no value for chi_o)\n";
        return kExitFinding;
    }
    if (opt.tsv())
        std::cout << "result\tchi\t" << *r.value << '\n';
    else
        std::cout << "chi_o = " << *r.value << '\n';
    return kExitPass;
}

int cmd_faces(const std::string& rot_path, const Options& opt) {
    RotationSystem rs = load_rot(rot_path);
    FaceSet faces = trace_faces(rs);
    int chi = euler_characteristic(rs, faces);
    if (opt.tsv()) {
        for (int f = 0; f < faces.face_count(); ++f) {
            std::cout << "face\t" << f << '\t' << faces.degree(f) << '\t';
            for (std::size_t i = 0; i < faces.walks[f].size(); ++i)
                std::cout << (i ? " " : "") << faces.walks[f][i];
            std::cout << '\n';
        }
        std::cout << "chi\t" << chi << '\n';
    } else {
        write_face_listing(std::cout, faces);
        std::cout << "chi = " << chi << '\n';
    }
    return kExitPass;
}

int cmd_classify(const std::string& rot_path, const Options& opt) {
    RotationSystem rs = load_rot(rot_path);
    FaceSet faces = trace_faces(rs);
    const Graph& g = rs.graph();
    auto vc = classify_vertices(g);
    auto twos = classify_two_vertices(rs, faces);
    auto fc = classify_faces(rs, faces);
    auto poors = poor_relations(rs, faces);
    if (opt.tsv()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            std::cout << "vertex\t" << v << '\t' << vc[v].degree << '\t'
                      << vc[v].two_neighbor_count << '\t'
                      << (vc[v].convenient ? 1 : 0) << '\t' << role_str(vc[v].role)
                      << '\n';
        for (const auto& b : twos)
            std::cout << "twovertex\t" << b.vertex << '\t' << kind_str(b.kind)
                      << '\t' << b.four_face_corners << '\n';
        for (int f = 0; f < faces.face_count(); ++f) {
            std::cout << "face\t" << f << '\t' << fc[f].degree << '\t'
                      << fc[f].two_vertex_count << '\t';
            for (std::size_t i = 0; i < fc[f].degree_vector.size(); ++i)
                std::cout << (i ? " " : "") << fc[f].degree_vector[i];
            std::cout << '\n';
        }
        for (const auto& p : poors)
            std::cout << "poor\t" << p.poor_vertex << '\t' << p.beneficiary
                      << '\t' << p.face1 << '\t' << p.face2 << '\n';
    } else {
        for (int v = 0; v < g.vertex_count(); ++v)
            std::cout << "vertex " << v << ": degree " << vc[v].degree << ", "
                      << vc[v].two_neighbor_count << " 2-neighbors, "
                      << role_str(vc[v].role) << '\n';
        for (const auto& b : twos)
            std::cout << "2-vertex " << b.vertex << ": " << kind_str(b.kind)
                      << " (" << b.four_face_corners << " 4-face corners)\n";
        for (int f = 0; f < faces.face_count(); ++f) {
            std::cout << "face " << f << ": degree " << fc[f].degree << ", "
                      << fc[f].two_vertex_count << " 2-vertices, (";
            for (std::size_t i = 0; i < fc[f].degree_vector.size(); ++i)
                std::cout << (i ? "," : "") << fc[f].degree_vector[i];
            std::cout << ")\n";
        }
        for (const auto& p : poors)
            std::cout << "poor: " << p.poor_vertex << " -> " << p.beneficiary
                      << " (faces " << p.face1 << ", " << p.face2 << ")\n";
    }
    return kExitPass;
}

int cmd_discharge(const std::string& rot_path, bool full_ledger,
                  const Options& opt) {
    RotationSystem rs = load_rot(rot_path);
    FaceSet faces = trace_faces(rs);
    ChargeLedger ledger = apply_rules(rs, faces);
    AuditReport report = audit(rs, faces, ledger);
    if (opt.tsv()) {
        if (full_ledger) {
            for (const auto& t : ledger.transfers)
                std::cout << "transfer\tR" << t.rule << '\t' << t.from.str()
                          << '\t' << t.to.str() << '\t' << t.amount.str() << '\n';
            for (std::size_t v = 0; v < ledger.vertex_final.size(); ++v)
                std::cout << "final\tv" << v << '\t'
                          << ledger.vertex_final[v].str() << '\n';
            for (std::size_t f = 0; f < ledger.face_final.size(); ++f)
                std::cout << "final\tf" << f << '\t' << ledger.face_final[f].str()
                          << '\n';
        }
        std::cout << "total\t" << report.total_initial.ratio_str() << '\t'
                  << report.total_final.ratio_str() << '\t' << report.euler_term
                  << '\n';
        for (const auto& e : report.negatives) {
            std::cout << "negative\t" << e.element.str() << '\t'
                      << e.final_charge.str() << '\t' << e.context << '\t';
            for (std::size_t i = 0; i < e.screens.size(); ++i)
                std::cout << (i ? " " : "") << e.screens[i];
            std::cout << '\n';
        }
    } else {
        if (full_ledger) write_ledger(std::cout, ledger);
        std::cout << "total = " << report.total_final.ratio_str() << " (chi="
                  << report.euler_term << "); negatives: ";
        if (report.negatives.empty()) {
            std::cout << "none\n";
        } else {
            std::cout << report.negatives.size() << '\n';
            for (const auto& e : report.negatives) {
                std::cout << "  " << e.element.str() << " : "
                          << e.final_charge.str() << " (" << e.context << ")";
                if (!e.screens.empty()) {
                    std::cout << " screens:";
                    for (const auto& s : e.screens) std::cout << ' ' << s;
                }
                std::cout << '\n';
            }
        }
        std::cout << "conservation: " << (report.conserved ? "ok" : "VIOLATED")
                  << "; -6*(V-E+F) identity: "
                  << (report.total_matches_euler ? "ok" : "VIOLATED") << '\n';
    }
    if (!report.conserved || !report.total_matches_euler) return kExitFinding;
    return report.negatives.empty() ? kExitPass : kExitFinding;
}

int cmd_screen(const std::string& rot_path, const Options& opt) {
    RotationSystem rs = load_rot(rot_path);
    FaceSet faces = trace_faces(rs);
    auto matches = run_screens(rs, faces);
    for (const auto& m : matches) {
        if (opt.tsv()) {
            std::cout << "match\t" << m.screen << '\t';
            for (std::size_t i = 0; i < m.vertices.size(); ++i)
                std::cout << (i ? " " : "") << 'v' << m.vertices[i];
            std::cout << '\t';
            for (std::size_t i = 0; i < m.faces.size(); ++i)
                std::cout << (i ? " " : "") << 'f' << m.faces[i];
            std::cout << '\n';
        } else {
            std::cout << "screen " << m.screen << ":";
            for (int v : m.vertices) std::cout << " v" << v;
            for (int f : m.faces) std::cout << " f" << f;
            std::cout << '\n';
        }
    }
    if (!opt.tsv() && matches.empty()) std::cout << "no matches\n";
    return matches.empty() ? kExitPass : kExitFinding;
}

int cmd_lemma(const std::string& rot_path, const std::string& id_text,
              int trials, std::uint64_t seed, std::int64_t time_limit_ms,
              const std::string& dump_dir, const Options& opt) {
    auto id = parse_lemma_id(id_text);
    if (!id) throw std::runtime_error("unknown lemma id " + id_text);
    RotationSystem rs = load_rot(rot_path);
    std::vector<CorpusEntry> corpus;
    corpus.push_back(CorpusEntry{rs.graph(), rs, rot_path});
    SearchConfig cfg;
    cfg.jobs = opt.jobs;
    cfg.time_limit_ms = time_limit_ms;
    HarnessSummary sum =
        run_lemma_harness(corpus, *id, trials, seed, cfg, dump_dir);
    if (opt.tsv()) {
        std::cout << "summary\t" << lemma_id_str(*id) << '\t' << sum.matches
                  << '\t' << sum.processed << '\t' << sum.passed << '\t'
                  << sum.failed << '\t' << sum.oracle_timeouts << '\t'
                  << sum.oracle_infeasible << '\n';
    } else {
        std::cout << lemma_id_str(*id) << ": matches=" << sum.matches
                  << " processed=" << sum.processed << " passed=" << sum.passed
                  << " failed=" << sum.failed
                  << " oracle-timeouts=" << sum.oracle_timeouts
                  << " oracle-infeasible=" << sum.oracle_infeasible << '\n';
        for (const auto& f : sum.failures)
            std::cout << "FAILURE entry " << f.entry << ": " << f.detail << '\n';
    }
    return sum.failed == 0 ? kExitPass : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd colorings of surface-embedded graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    app.add_option("--jobs", opt.jobs, "solver worker threads")
        ->check(CLI::PositiveNumber);

    std::string graph_path, coloring_path, rot_path;
    int palette = 0;
    bool chromatic = false;
    std::int64_t time_limit_ms = 0;

    auto* verify = app.add_subcommand("verify", "check an odd coloring");
    verify->add_option("--graph", graph_path, "graph6 file")->required();
    verify->add_option("--coloring", coloring_path, "coloring file (v color lines)");
    verify->add_option("--k", palette, "palette size (default: max color)");

    auto* solve = app.add_subcommand("solve", "exact odd-colorability search");
    solve->add_option("--graph", graph_path, "graph6 file")->required();
    auto* kopt = solve->add_option("--k", palette, "decide odd k-colorability");
    solve->add_flag("--chromatic", chromatic, "compute the odd chromatic number");
    solve->add_option("--time-limit-ms", time_limit_ms, "per-solve limit (0 = none)");

    auto* facesc = app.add_subcommand("faces", "trace faces of an embedding");
    facesc->add_option("--rot", rot_path, "rotation file")->required();

    auto* classifyc = app.add_subcommand("classify", "structure tables");
    classifyc->add_option("--rot", rot_path, "rotation file")->required();

    bool full_ledger = false;
    auto* dischargec = app.add_subcommand("discharge", "run the charge audit");
    dischargec->add_option("--rot", rot_path, "rotation file")->required();
    dischargec->add_flag("--ledger", full_ledger, "print the full transfer ledger");

    auto* screenc = app.add_subcommand("screen", "counterexample-shape screens");
    screenc->add_option("--rot", rot_path, "rotation file")->required();

    std::string lemma_id_text, dump_dir;
    int trials = 0;
    std::uint64_t seed = 0;
    auto* lemmac = app.add_subcommand("lemma", "reducibility harness");
    lemmac->add_option("--id", lemma_id_text, "lemma id, e.g. L-no3v")->required();
    lemmac->add_option("--rot", rot_path, "rotation file")->required();
    lemmac->add_option("--trials", trials, "matches to sample (0 = all)");
    lemmac->add_option("--seed", seed, "sampling seed");
    lemmac->add_option("--time-limit-ms", time_limit_ms, "oracle limit (0 = none)");
    lemmac->add_option("--dump-dir", dump_dir, "directory for failure reproducers");

    auto* genc = app.add_subcommand("gen", "corpus generators");
    genc->require_subcommand(1);
    int gm = 0, gn = 0;
    bool triangle_free = false, as_g6 = false;
    auto* grid = genc->add_subcommand("torus-grid", "C_m x C_n quadrangulation");
    grid->add_option("m", gm, "rows")->required();
    grid->add_option("n", gn, "columns")->required();
    grid->add_flag("--triangle-free", triangle_free, "reject girth-3 grids");
    grid->add_flag("--g6", as_g6, "emit graph6 instead of a rotation file");

    std::string fraction_text = "0";
    auto* subdiv = genc->add_subcommand("subdivide", "subdivide a random edge subset");
    subdiv->add_option("--rot", rot_path, "rotation file")->required();
    subdiv->add_option("--fraction", fraction_text, "fraction of edges, e.g. 1/4")
        ->required();
    subdiv->add_option("--seed", seed, "selection seed");
    subdiv->add_flag("--g6", as_g6, "emit graph6 instead of a rotation file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (*verify) return cmd_verify(graph_path, coloring_path, palette, opt);
        if (*solve) {
            if (chromatic && *kopt)
                throw std::runtime_error("--k and --chromatic are exclusive");
            if (!chromatic && !*kopt) chromatic = true;
            return cmd_solve(graph_path, palette, chromatic, time_limit_ms, opt);
        }
        if (*facesc) return cmd_faces(rot_path, opt);
        if (*classifyc) return cmd_classify(rot_path, opt);
        if (*dischargec) return cmd_discharge(rot_path, full_ledger, opt);
        if (*screenc) return cmd_screen(rot_path, opt);
        if (*lemmac)
            return cmd_lemma(rot_path, lemma_id_text, trials, seed,
                             time_limit_ms, dump_dir, opt);
        if (*grid) {
            RotationSystem rs = gen_torus_grid(gm, gn, triangle_free);
            if (as_g6)
                std::cout << encode_graph6(rs.graph()) << '\n';
            else
                std::cout << write_rot(rs);
            return kExitPass;
        }
        if (*subdiv) {
            auto [num, den] = parse_fraction(fraction_text);
            RotationSystem rs =
                gen_subdivided(load_rot(rot_path), num, den, seed);
            if (as_g6)
                std::cout << encode_graph6(rs.graph()) << '\n';
            else
                std::cout << write_rot(rs);
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
