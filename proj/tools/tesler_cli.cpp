#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tesler/json_io.hpp"
#include "tesler/parallel.hpp"

using namespace tesler;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
    if (const char* env = std::getenv("TESLER_ALPHA_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
        std::cerr << "notice: ignoring unusable TESLER_ALPHA_JOBS value \"" << env << "\"\n";
    }
    return 1;
}

struct Options {
    int n = 0;
    std::string a_str;
    int codim = -1;
    std::string format = "text";
    std::string out;
    int jobs = default_jobs();
    bool oracle = false;
    bool min_only = false;
    std::string p_file, q_file, map_file;

    RatVec a;  // effective hook sums after parsing and trimming
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw Error("cannot open output file: " + opt.out);
    f << text;
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

// Parses --a, trims a zero prefix (the polytope is unchanged up to a
// coordinate drop), and rejects anything non-positive that remains.
// Returns 0 when usable, else the exit code.
int resolve_hooks(Options& opt) {
    if (opt.n < 2) {
        std::cerr << "error: --n must be at least 2\n";
        return kExitUsage;
    }
    RatVec a;
    if (opt.a_str.empty()) {
        a.assign(static_cast<std::size_t>(opt.n), Rat(1));
    } else {
        std::stringstream ss(opt.a_str);
        std::string item;
        try {
            while (std::getline(ss, item, ',')) a.push_back(parse_rat(item));
        } catch (const Error& e) {
            std::cerr << "error: bad --a entry: " << e.what() << "\n";
            return kExitUsage;
        }
        if (a.size() != static_cast<std::size_t>(opt.n)) {
            std::cerr << "error: --a needs exactly " << opt.n << " comma-separated values\n";
            return kExitUsage;
        }
    }
    const std::size_t dropped = trim_leading_zeros(a);
    if (dropped > 0) {
        std::cerr << "notice: dropped " << dropped
                  << " leading zero hook sums; continuing with size " << a.size() << "\n";
        opt.n = static_cast<int>(a.size());
    }
    try {
        require_strictly_positive(a);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    opt.a = std::move(a);
    return 0;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_faces(Options& opt) {
    if (int rc = resolve_hooks(opt)) return rc;
    const int d = opt.n * (opt.n - 1) / 2;
    if (opt.codim < 0 || opt.codim > d) {
        std::cerr << "error: --codim must lie in [0, " << d << "] for --n " << opt.n << "\n";
        return kExitUsage;
    }
    const std::vector<FaceSupport> faces = enumerate_faces(opt.n, opt.codim);
    if (opt.format == "json") {
        json out{{"n", opt.n},
                 {"a", ratvec_json(opt.a)},
                 {"codim", opt.codim},
                 {"count", faces.size()}};
        json arr = json::array();
        for (const FaceSupport& s : faces) arr.push_back(support_json(s));
        out["faces"] = std::move(arr);
        emit(opt, dumped(out));
    } else if (opt.format == "csv") {
        std::string text = "codim,support\n";
        for (const FaceSupport& s : faces)
            text += std::to_string(opt.codim) + "," + csv_quote(support_str(s)) + "\n";
        emit(opt, text);
    } else {
        std::string text = "codim " + std::to_string(opt.codim) + ": " +
                           std::to_string(faces.size()) + " faces\n";
        for (const FaceSupport& s : faces) text += "  " + support_str(s) + "\n";
        emit(opt, text);
    }
    return kExitPass;
}

int cmd_alpha(Options& opt) {
    if (int rc = resolve_hooks(opt)) return rc;
    if (opt.codim < 0 || opt.codim > 3) {
        std::cerr << "error: alpha values are available for --codim 0 through 3\n";
        return kExitUsage;
    }
    if (opt.codim >= 2 && opt.n < 3) {
        std::cerr << "error: codimension " << opt.codim << " faces require --n >= 3\n";
        return kExitUsage;
    }
    const std::vector<FaceSupport> faces = enumerate_faces(opt.n, opt.codim);
    std::vector<Rat> alphas(faces.size());
    std::vector<std::string> labels(faces.size());
    parallel_for(faces.size(), opt.jobs, [&](std::size_t i) {
        alphas[i] = alpha_of_face(opt.n, faces[i]).value;
        labels[i] = opt.codim >= 2 ? to_string(classify_case(opt.n, faces[i]).label) : "-";
    });
    Rat min_alpha = alphas.empty() ? Rat(0) : alphas[0];
    for (const Rat& v : alphas) min_alpha = std::min(min_alpha, v);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!opt.min_only || alphas[i] == min_alpha) keep.push_back(i);

    if (opt.format == "json") {
        json out{{"n", opt.n}, {"codim", opt.codim}, {"min", rat_json(min_alpha)}};
        json arr = json::array();
        for (std::size_t i : keep)
            arr.push_back(json{{"support", support_json(faces[i])},
                               {"case", labels[i]},
                               {"alpha", rat_json(alphas[i])}});
        out["faces"] = std::move(arr);
        emit(opt, dumped(out));
    } else if (opt.format == "csv") {
        std::string text = "support,case,alpha\n";
        for (std::size_t i : keep)
            text += csv_quote(support_str(faces[i])) + "," + labels[i] + "," +
                    rat_str(alphas[i]) + "\n";
        emit(opt, text);
    } else {
        std::string text;
        if (opt.min_only) text += rat_str(min_alpha) + "\n";
        for (std::size_t i : keep)
            text += "  " + support_str(faces[i]) + "  " + labels[i] + "  " + rat_str(alphas[i]) +
                    "\n";
        emit(opt, text);
    }
    return kExitPass;
}

int cmd_verify(Options& opt) {
    if (int rc = resolve_hooks(opt)) return rc;
    if (opt.n < 3) {
        std::cerr << "error: the verified tables start at --n 3\n";
        return kExitUsage;
    }
    const TableReport rep = verify_tables(opt.n, opt.jobs);

    bool oracle_ran = false;
    bool oracle_ok = true;
    std::size_t oracle_faces = 0;
    std::string oracle_detail;
    if (opt.oracle && opt.n <= 4) {
        oracle_ran = true;
        std::vector<FaceSupport> all;
        for (int k = 1; k <= 3; ++k)
            for (FaceSupport& s : enumerate_faces(opt.n, k)) all.push_back(std::move(s));
        oracle_faces = all.size();
        std::vector<char> ok(all.size(), 1);
        parallel_for(all.size(), opt.jobs, [&](std::size_t i) {
            ok[i] = fcone_mdp_oracle(opt.n, all[i]).m == fcone_mdp(opt.n, all[i]).m;
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            if (!ok[i]) {
                oracle_ok = false;
                if (oracle_detail.empty()) oracle_detail = support_str(all[i]);
            }
    }
    const bool pass = rep.all_pass() && oracle_ok;

    if (opt.format == "json") {
        json out = table_report_json(rep);
        out["oracle_checked"] = oracle_ran;
        out["oracle_ok"] = oracle_ok;
        if (oracle_ran) out["oracle_faces"] = oracle_faces;
        out["pass"] = pass;
        emit(opt, dumped(out));
    } else if (opt.format == "csv") {
        std::string text = "codim,case,count,prototype_match,alpha_match,alpha\n";
        for (const CaseReport& c : rep.cases)
            text += std::to_string(c.tag.codim) + "," + to_string(c.tag.label) + "," +
                    std::to_string(c.count) + "," + (c.mdp_match ? "yes" : "no") + "," +
                    (c.alpha_match ? "yes" : "no") + "," + rat_str(c.alpha) + "\n";
        emit(opt, text);
    } else {
        std::string text;
        text += "unimodularity certificate: " + std::to_string(rep.vertices_checked) +
                " vertices " + (rep.certificate_ok ? "pass" : "FAIL") + "\n";
        text += "codim 2: " + std::to_string(rep.codim2_faces) + " faces\n";
        text += "codim 3: " + std::to_string(rep.codim3_faces) + " faces\n";
        for (const FaceFailure& f : rep.failures)
            text += "  mismatch at " + support_str(f.support) + ": " + f.what + "\n";
        if (oracle_ran)
            text += "edge-geometry oracle: " + std::to_string(oracle_faces) + " faces " +
                    (oracle_ok ? "agree" : ("disagree, first at " + oracle_detail)) + "\n";
        else if (opt.oracle)
            text += "edge-geometry oracle: skipped, runs at --n 4 and below\n";
        text += pass ? "PASS\n" : "FAIL\n";
        emit(opt, text);
    }
    return pass ? kExitPass : kExitMismatch;
}

std::string poly_str(const RatVec& coeffs) {
    std::string text;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rat& c = coeffs[k];
        if (c == 0) continue;
        const Rat mag = abs(c);
        if (text.empty())
            text += c < 0 ? "-" : "";
        else
            text += c < 0 ? " - " : " + ";
        const bool unit = mag == 1;
        if (k == 0 || !unit) {
            const bool wrap = !is_integral(mag);
            text += wrap ? "(" + rat_str(mag) + ")" : rat_str(mag);
            if (k > 0) text += " ";
        }
        if (k >= 1) text += "t";
        if (k >= 2) text += "^" + std::to_string(k);
    }
    if (text.empty()) text = "0";
    return text;
}

int cmd_ehrhart(Options& opt) {
    if (int rc = resolve_hooks(opt)) return rc;
    if (opt.n > 4) {
        std::cerr << "error: the full counting polynomial is only tractable for --n up to 4\n";
        return kExitUsage;
    }
    McMullenReport rep;
    try {
        rep = mcmullen_check(opt.n, opt.a, opt.jobs);
    } catch (const NonIntegralHookSum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const bool pass = rep.all_match();

    if (opt.format == "json") {
        emit(opt, dumped(mcmullen_json(rep)));
    } else if (opt.format == "csv") {
        std::string text = "dim,coefficient,weighted_sum,match\n";
        for (const McMullenTerm& t : rep.terms)
            text += std::to_string(t.dim) + "," + rat_str(t.coeff) + "," + rat_str(t.weighted) +
                    "," + (t.match ? "yes" : "no") + "\n";
        emit(opt, text);
    } else {
        std::string text = "E(t) = " + poly_str(rep.ehrhart) + "\n";
        text += "E(1) = " + rat_str(poly_eval(rep.ehrhart, 1)) + "\n";
        for (const McMullenTerm& t : rep.terms)
            text += "  dim " + std::to_string(t.dim) + ": coefficient " + rat_str(t.coeff) +
                    ", weighted face sum " + rat_str(t.weighted) +
                    (t.match ? "" : "  MISMATCH") + "\n";
        text += pass ? "PASS\n" : "FAIL\n";
        emit(opt, text);
    }
    return pass ? kExitPass : kExitMismatch;
}

int cmd_vertices(Options& opt) {
    if (int rc = resolve_hooks(opt)) return rc;
    const VertexGraph g = enumerate_vertices(opt.n, opt.a);
    if (opt.format == "json") {
        emit(opt, dumped(vertex_graph_json(g)));
    } else if (opt.format == "csv") {
        std::string text = "index,support,entries\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            std::string entries;
            for (const Rat& v : g.vertices[i].flat()) {
                if (!entries.empty()) entries += " ";
                entries += rat_str(v);
            }
            text += std::to_string(i) + "," + csv_quote(support_str(g.supports[i])) + "," +
                    csv_quote(entries) + "\n";
        }
        emit(opt, text);
    } else {
        std::string text = std::to_string(g.vertices.size()) + " vertices, " +
                           std::to_string(g.edges.size()) + " edges\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            text += "  v" + std::to_string(i) + "  on " + support_str(g.supports[i]) + "\n";
        }
        emit(opt, text);
    }
    return kExitPass;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read file: " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
}

int cmd_deformation(Options& opt) {
    bool pass = false;
    try {
        const VertexGraph p = vertex_graph_from_json(load_json(opt.p_file));
        const std::vector<UTMatrix> q = vertex_list_from_json(load_json(opt.q_file));
        const std::vector<std::size_t> phi = index_map_from_json(load_json(opt.map_file));
        pass = verify_deformation(p, q, phi);
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (opt.format == "json")
        emit(opt, dumped(json{{"pass", pass}}));
    else
        emit(opt, std::string(pass ? "PASS" : "FAIL") + "\n");
    return pass ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact faces, corner weights, and lattice counts for hook-sum polytopes"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_n) {
        if (needs_n)
            sub->add_option("--n", opt.n, "matrix size")->required();
        sub->add_option("--a", opt.a_str, "comma-separated hook sums, default all ones");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", opt.out, "write output to this file instead of stdout");
        sub->add_option("--jobs", opt.jobs, "worker threads for face sweeps")
            ->check(CLI::Range(1, 1024));
    };

    CLI::App* faces = app.add_subcommand("faces", "list the faces of one codimension");
    add_common(faces, true);
    faces->add_option("--codim", opt.codim, "codimension to list")->required();

    CLI::App* alpha = app.add_subcommand("alpha", "corner weights of faces, codim 0 through 3");
    add_common(alpha, true);
    alpha->add_option("--codim", opt.codim, "codimension to evaluate")->required();
    alpha->add_flag("--min", opt.min_only, "print only the minimizing faces");

    CLI::App* verify = app.add_subcommand("verify", "check every codim 2 and 3 face against the case prototypes");
    add_common(verify, true);
    verify->add_flag("--oracle", opt.oracle,
                     "cross-check cone matrices against edge geometry (n <= 4)");

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "counting polynomial with the weighted-face cross-check");
    add_common(ehrhart, true);

    CLI::App* vertices = app.add_subcommand("vertices", "vertex coordinates and the edge graph");
    add_common(vertices, true);

    CLI::App* deform = app.add_subcommand("deformation-check", "verify a vertex map between two polytopes");
    deform->add_option("--p", opt.p_file, "source vertex graph JSON")->required();
    deform->add_option("--q", opt.q_file, "target vertex list JSON")->required();
    deform->add_option("--map", opt.map_file, "JSON array mapping source to target indices")
        ->required();
    deform->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    deform->add_option("--out", opt.out, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (faces->parsed()) return cmd_faces(opt);
        if (alpha->parsed()) return cmd_alpha(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (ehrhart->parsed()) return cmd_ehrhart(opt);
        if (vertices->parsed()) return cmd_vertices(opt);
        if (deform->parsed()) return cmd_deformation(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
