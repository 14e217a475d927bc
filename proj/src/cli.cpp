#include "equispec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "equispec/capture.hpp"
#include "equispec/constructions.hpp"
#include "equispec/graph.hpp"
#include "equispec/io.hpp"
#include "equispec/report.hpp"

namespace equispec {

namespace {

struct Globals {
    bool json = false;
    bool transpose = false;
    Tolerances tol;
};

class Inputs {
public:
    explicit Inputs(std::istream& stdin_stream) : stdin_(stdin_stream) {}

    std::string read(const std::string& path) {
        if (path == "-") {
            if (stdin_used_) throw Error(ErrorCode::InvalidParams, "standard input can back only one file");
            stdin_used_ = true;
            std::ostringstream os;
            os << stdin_.rdbuf();
            return os.str();
        }
        std::ifstream f(path);
        if (!f) throw ParseError(0, "cannot open '" + path + "'");
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    }

private:
    std::istream& stdin_;
    bool stdin_used_ = false;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidParams, "cannot write '" + path + "'");
    f << text;
}

std::string params_text(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + k + "=" + format_number(v);
    return out;
}

std::string expected_text(const ConstructedMatrix& c) {
    std::string out;
    for (std::size_t i = 0; i < c.expected_distinct.size(); ++i) {
        if (i) out += ", ";
        out += format_complex(c.expected_distinct[i]);
        if (c.expected_multiplicities[i] > 1) out += "^" + std::to_string(c.expected_multiplicities[i]);
    }
    return out;
}

Json tolerances_json(const Globals& g, const CaptureReport& r) {
    Json t = to_json(g.tol);
    t["equitable"] = round12(r.quotient.tolerance);
    t["cluster"] = round12(r.parent_spectrum.cluster_tolerance);
    return t;
}

Json enlargements_json(const std::vector<Enlargement>& found) {
    Json list = Json::array();
    for (const auto& e : found) list.push_back(to_json(e));
    return list;
}

void print_enlargements(std::ostream& out, const std::vector<Enlargement>& found, std::size_t budget) {
    if (found.empty()) {
        out << "none within budget (" << budget << " splits)\n";
        return;
    }
    for (const auto& e : found) {
        out << "splits " << e.splits << ": " << e.partition.to_string() << "\n  quotient spectrum: "
            << format_spectrum(e.report.quotient_spectrum) << '\n';
    }
}

struct AnalyzeArgs {
    std::string matrix;
    std::string partition;
    bool interlace = false;
    std::size_t enlarge = 0;
};

struct EnlargeArgs {
    std::string matrix;
    std::string partition;
    std::size_t max_splits = kDefaultMaxSplits;
};

struct ConstructArgs {
    std::string family;
    std::string params;
    bool check = false;
    std::string matrix_out;
    std::string partition_out;
};

struct GraphArgs {
    std::string family;
    std::string params;
    std::string edges;
    std::string kind = "adjacency";
    std::string phi;
    bool analyze = false;
    std::string matrix_out;
    std::string partition_out;
};

class Runner {
public:
    Runner(const Globals& g, std::ostream& out, std::istream& in) : g_(g), out_(out), inputs_(in) {}

    Matrix load_matrix(const std::string& path) {
        Matrix m = parse_matrix_string(inputs_.read(path));
        return g_.transpose ? m.transpose() : m;
    }

    Partition load_partition(const std::string& path, std::size_t n) {
        return parse_partition_string(inputs_.read(path), n);
    }

    int analyze(const AnalyzeArgs& a) {
        const Matrix m = load_matrix(a.matrix);
        const Partition p = a.partition.empty()
                                ? coarsest_equitable_refinement(m, Partition::trivial(m.rows()), g_.tol.equitable)
                                : load_partition(a.partition, m.rows());
        return report_analysis(m, p, a.matrix + (a.partition.empty() ? "" : " " + a.partition), a.interlace,
                               a.enlarge);
    }

    int report_analysis(const Matrix& m, const Partition& p, const std::string& input, bool interlace,
                        std::size_t enlarge) {
        const CaptureReport r = analyze_capture(m, p, g_.tol);
        std::optional<InterlacingReport> il;
        if (interlace) il = check_interlacing(m, p);
        std::optional<std::vector<Enlargement>> found;
        if (enlarge > 0 && !r.full_capture) found = search_enlargement(m, p, enlarge, g_.tol);

        if (g_.json) {
            Json doc = document("analyze", input);
            doc["tolerances"] = tolerances_json(g_, r);
            const Json body = to_json(r);
            for (const auto& [k, v] : body.items()) doc[k] = v;
            if (il) doc["interlacing"] = to_json(*il);
            if (found) doc["enlargements"] = enlargements_json(*found);
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << text_report(r);
            if (il) out_ << text_report(*il);
            if (found) {
                out_ << "enlargements:\n";
                print_enlargements(out_, *found, enlarge);
            }
        }
        return r.full_capture ? kExitOk : kExitNegative;
    }

    int refine(const std::string& matrix, const std::string& seed) {
        const Matrix m = load_matrix(matrix);
        const Partition start = seed.empty() ? Partition::trivial(m.rows()) : load_partition(seed, m.rows());
        const Partition r = coarsest_equitable_refinement(m, start, g_.tol.equitable);
        if (g_.json) {
            Json doc = document("refine", matrix);
            doc["partition"] = to_json(r);
            doc["quotient"] = to_json(quotient(m, r, g_.tol.equitable));
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << r.to_string() << '\n';
        }
        return kExitOk;
    }

    int enlarge(const EnlargeArgs& a) {
        const Matrix m = load_matrix(a.matrix);
        const Partition p = load_partition(a.partition, m.rows());
        const auto found = search_enlargement(m, p, a.max_splits, g_.tol);
        if (g_.json) {
            Json doc = document("enlarge", a.matrix + " " + a.partition);
            doc["seed"] = to_json(p);
            doc["max_splits"] = a.max_splits;
            doc["enlargements"] = enlargements_json(found);
            out_ << doc.dump(2) << '\n';
        } else {
            print_enlargements(out_, found, a.max_splits);
        }
        return found.empty() ? kExitNegative : kExitOk;
    }

    int construct(const ConstructArgs& a) {
        ConstructedMatrix c = construct_family(a.family, parse_params(a.params));
        if (g_.transpose) c.matrix = c.matrix.transpose();
        if (!a.matrix_out.empty()) write_file(a.matrix_out, format_matrix(c.matrix));
        if (!a.partition_out.empty()) write_file(a.partition_out, format_partition(c.designated_partition));
        std::optional<CaptureReport> check;
        if (a.check) check = analyze_capture(c.matrix, c.designated_partition, g_.tol);

        if (g_.json) {
            Json doc = document("construct", a.family);
            const Json body = to_json(c);
            for (const auto& [k, v] : body.items()) doc[k] = v;
            if (check) doc["check"] = to_json(*check);
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << "# family: " << c.family_name << '\n'
                 << "# params: " << params_text(c.params) << '\n'
                 << "# partition: " << c.designated_partition.to_string() << '\n'
                 << "# expected spectrum: " << expected_text(c) << '\n';
            if (check) {
                out_ << "# computed spectrum: " << format_spectrum(check->parent_spectrum) << '\n'
                     << "# full capture: " << (check->full_capture ? "yes" : "no") << '\n';
            }
            out_ << format_matrix(c.matrix);
        }
        return check && !check->full_capture ? kExitNegative : kExitOk;
    }

    int graph(const GraphArgs& a) {
        if (a.family.empty() == a.edges.empty()) {
            throw Error(ErrorCode::InvalidParams, "give exactly one of --family or --edges");
        }
        Graph g = a.edges.empty() ? build_graph(a.family, parse_params(a.params)) : [&] {
            std::istringstream is(inputs_.read(a.edges));
            return parse_edge_list(is);
        }();
        const GraphMatrixKind kind = parse_matrix_kind(a.kind);
        std::optional<WeightFunction> phi;
        if (!a.phi.empty()) {
            if (kind != GraphMatrixKind::weighted_adjacency) {
                throw Error(ErrorCode::InvalidParams, "--phi only applies to weighted_adjacency");
            }
            phi = weight_preset(a.phi);
        }
        Matrix m = graph_matrix(g, kind, phi);
        if (g_.transpose) m = m.transpose();
        const Partition p = g.family() == "custom"
                                ? coarsest_equitable_refinement(m, Partition::trivial(m.rows()), g_.tol.equitable)
                                : designated_partition(g);
        if (!a.matrix_out.empty()) write_file(a.matrix_out, format_matrix(m));
        if (!a.partition_out.empty()) write_file(a.partition_out, format_partition(p));

        const std::string input = (a.edges.empty() ? a.family : a.edges) + " " + a.kind;
        if (a.analyze) return report_analysis(m, p, input, false, 0);

        if (g_.json) {
            Json doc = document("graph", input);
            doc["family"] = g.family();
            doc["kind"] = a.kind;
            doc["phi"] = a.phi.empty() ? Json(nullptr) : Json(a.phi);
            doc["labels"] = g.labels();
            doc["matrix"] = to_json(m);
            doc["partition"] = to_json(p);
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << "# family: " << g.family();
            if (!g.params().empty()) out_ << " (" << params_text(g.params()) << ')';
            out_ << "\n# kind: " << a.kind << (a.phi.empty() ? "" : " phi=" + a.phi) << '\n' << "# vertices:";
            for (const auto& l : g.labels()) out_ << ' ' << l;
            out_ << "\n# partition: " << p.to_string() << '\n' << format_matrix(m);
        }
        return kExitOk;
    }

    int interlace(const std::string& matrix, const std::string& partition) {
        const Matrix m = load_matrix(matrix);
        const Partition p = load_partition(partition, m.rows());
        const InterlacingReport r = check_interlacing(m, p);
        if (g_.json) {
            Json doc = document("interlace", matrix + " " + partition);
            doc["partition"] = to_json(p);
            doc["interlacing"] = to_json(r);
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << "partition: " << p.to_string() << '\n' << text_report(r);
        }
        return r.interlaces ? kExitOk : kExitNegative;
    }

private:
    const Globals& g_;
    std::ostream& out_;
    Inputs inputs_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Equitable partitions, quotient matrices and the eigenvalues they capture", "equispec"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("equispec ") + kToolVersion);

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_flag("--transpose", g.transpose, "Use column sums (analyse the transpose)");
    app.add_option("--tol-equitable", g.tol.equitable, "Row-sum tolerance (0 = 1e-8 max(1,||M||))")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--tol-cluster", g.tol.cluster, "Eigenvalue cluster tolerance (0 = 1e-6 max(1,rho))")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--tol-rank", g.tol.rank, "Rank threshold (0 = 1e-10 max(1,sigma_max))")
        ->check(CLI::NonNegativeNumber);

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "Capture analysis of a matrix and partition");
    analyze->add_option("matrix", aa.matrix, "Matrix file ('-' for stdin)")->required();
    analyze->add_option("partition", aa.partition, "Partition file (default: coarsest equitable)");
    analyze->add_flag("--interlace", aa.interlace, "Also check interlacing (symmetric input)");
    analyze->add_option("--enlarge", aa.enlarge, "Search singleton splits up to K when capture fails")
        ->check(CLI::Range(1, 3));

    std::string refine_matrix, refine_seed;
    auto* refine = app.add_subcommand("refine", "Coarsest equitable refinement");
    refine->add_option("matrix", refine_matrix, "Matrix file ('-' for stdin)")->required();
    refine->add_option("seed", refine_seed, "Seed partition file (default: one cell)");

    EnlargeArgs ea;
    auto* enlarge = app.add_subcommand("enlarge", "Minimal singleton-split enlargements with full capture");
    enlarge->add_option("matrix", ea.matrix, "Matrix file ('-' for stdin)")->required();
    enlarge->add_option("partition", ea.partition, "Equitable seed partition file")->required();
    enlarge->add_option("--max-splits", ea.max_splits, "Split budget")->check(CLI::Range(1, 3));

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a matrix family with a prescribed spectrum");
    construct->add_option("--family", ca.family, "m3 | m4triple | m4double | m4three | mn2 | mprime | mab | "
                                                 "alphablock | atik")
        ->required();
    construct->add_option("--params", ca.params, "k=v,k=v");
    construct->add_flag("--check", ca.check, "Run the capture analysis on the result");
    construct->add_option("--matrix-out", ca.matrix_out, "Also write the matrix file");
    construct->add_option("--partition-out", ca.partition_out, "Also write the partition file");

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "Graph matrices");
    graph->add_option("--family", ga.family, "pendant_k3 | complete | complete_bipartite | complete_split");
    graph->add_option("--params", ga.params, "k=v,k=v");
    graph->add_option("--edges", ga.edges, "Edge list file ('-' for stdin)");
    graph->add_option("--kind", ga.kind,
                      "adjacency | weighted_adjacency | laplacian | signless_laplacian | distance | "
                      "distance_laplacian | distance_signless_laplacian");
    graph->add_option("--phi", ga.phi, "unit | zagreb1 | sombor | geometric_arithmetic | abc");
    graph->add_flag("--analyze", ga.analyze, "Run the capture analysis on the designated partition");
    graph->add_option("--matrix-out", ga.matrix_out, "Also write the matrix file");
    graph->add_option("--partition-out", ga.partition_out, "Also write the partition file");

    std::string il_matrix, il_partition;
    auto* interlace = app.add_subcommand("interlace", "Interlacing of the averaged quotient");
    interlace->add_option("matrix", il_matrix, "Symmetric matrix file ('-' for stdin)")->required();
    interlace->add_option("partition", il_partition, "Partition file")->required();

    for (auto* sub : {analyze, refine, enlarge, construct, graph, interlace}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // help and version exit 0; everything else is an input error
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    Runner run(g, out, in);
    try {
        if (*analyze) return run.analyze(aa);
        if (*refine) return run.refine(refine_matrix, refine_seed);
        if (*enlarge) return run.enlarge(ea);
        if (*construct) return run.construct(ca);
        if (*graph) return run.graph(ga);
        if (*interlace) return run.interlace(il_matrix, il_partition);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace equispec
