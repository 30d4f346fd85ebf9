// Command-line front end: exact-arithmetic pipelines around cohomology basis
// graphs of graph groups, plus a randomized self-verification harness.
//
// Exit codes: 0 success, 1 unexpected error, 2 unreadable/malformed input,
// 3 singular matrix where a basis was required, 4 size guard exceeded,
// 5 internal invariant violated (always a defect, never user error).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbg/cohomology.hpp"
#include "cbg/io.hpp"
#include "cbg/minor_bases.hpp"
#include "cbg/presentation.hpp"
#include "cbg/properties.hpp"
#include "cbg/reconstruction.hpp"
#include "cbg/tracks.hpp"

namespace {

using nlohmann::json;

// Runtime knobs shared across subcommands.  All randomness flows from the
// one seed; guards stay within the hard limits of the underlying searches.
struct RunConfig {
    std::uint32_t p = 2;
    std::uint64_t seed = 0;
    int trials = 100;
    int max_n = 12;  // vertex guard for the exponential minor/embedding searches
    std::string format = "json";
};

// Hard ceiling for the minor/embedding guard: the searches are exponential,
// and the largest host any supported workload needs has 14 vertices.
constexpr int kHardMaxN = 16;

int guard_from_env(int fallback) {
    const char* s = std::getenv("CBG_MAX_N");
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0')
        throw cbg::ParseError(std::string("CBG_MAX_N must be an integer, got \"") + s + "\"");
    if (v < 1) v = 1;
    if (v > kHardMaxN) v = kHardMaxN;
    return static_cast<int>(v);
}

void print_report(const json& report) { std::cout << report.dump(2) << "\n"; }

// Graph-headline commands honor --format; json renders the full report.
void print_graph_or_report(const cbg::SimpleGraph& g, const json& report,
                           const std::string& format) {
    if (format == "edgelist")
        std::cout << cbg::format_graph_edgelist(g);
    else if (format == "dot")
        std::cout << cbg::format_graph_dot(g);
    else
        print_report(report);
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

int run_basis_graph(const std::string& graph_path, const std::string& matrix_path,
                    const std::string& format) {
    cbg::SimpleGraph g = cbg::parse_graph_file(graph_path);
    cbg::PrimeFieldMatrix a = cbg::parse_matrix_text(cbg::read_text_file(matrix_path));
    cbg::CohomologyBasis basis(g, std::move(a));
    cbg::SimpleGraph gb = cbg::cohomology_basis_graph(basis);
    cbg::Permutation sigma = cbg::find_good_reordering(basis.graph(), basis.matrix());
    cbg::VertexMap embedding = cbg::verify_containment(basis);
    cbg::EdgeReport counts = cbg::edge_report(basis);
    json report{{"p", basis.field().modulus()},
                {"defining_graph", cbg::graph_to_json(basis.graph())},
                {"basis_graph", cbg::graph_to_json(gb)},
                {"reordering", sigma.images()},
                {"embedding", embedding.image},
                {"edge_counts",
                 {{"defining", counts.defining_edges}, {"basis_graph", counts.basis_graph_edges}}},
                {"edge_minimal", counts.minimal}};
    print_graph_or_report(gb, report, format);
    return 0;
}

int run_reconstruct(const std::string& pairing_path, const std::string& format) {
    cbg::PairingTensor pairing = cbg::parse_pairing_json(cbg::read_text_file(pairing_path));
    cbg::ReconstructionResult result = cbg::reconstruct_minimal_edges(pairing);
    json report{{"p", pairing.field().modulus()},
                {"graph", cbg::graph_to_json(result.graph)},
                {"witness", cbg::matrix_to_json(result.witness)},
                {"edge_count", result.graph.edge_count()}};
    print_graph_or_report(result.graph, report, format);
    return 0;
}

int run_properties(const std::string& graph_path, int max_n) {
    cbg::SimpleGraph g = cbg::parse_graph_file(graph_path);
    json report{{"n", g.vertex_count()},
                {"edge_count", g.edge_count()},
                {"empty", cbg::is_empty_graph(g)},
                {"linear-forest", cbg::is_linear_forest(g)},
                {"outerplanar", cbg::is_outerplanar(g, max_n)},
                {"planar", cbg::is_planar_graph(g)},
                {"linkless", cbg::is_linkless(g, max_n)}};
    json mu = nullptr;
    for (int k = 0; k <= 4; ++k)
        if (cbg::mu_at_most(g, k, max_n)) {
            mu = k;
            break;
        }
    report["mu_upper_bound"] = mu;
    cbg::ComplementReport cp = cbg::complement_is_planar(g);
    cbg::ComplementReport co = cbg::complement_is_outerplanar(g, max_n);
    report["complement_planar"] = {{"verdict", cp.verdict},
                                   {"has_twin_vertices", cp.has_twin_vertices}};
    report["complement_outerplanar"] = {{"verdict", co.verdict},
                                        {"has_twin_vertices", co.has_twin_vertices}};
    print_report(report);
    return 0;
}

int run_presentation(const std::string& path, const std::string& property, std::uint32_t p) {
    cbg::PrimeField field = cbg::detail::field_from_modulus(p, "option --p");
    cbg::ParsedPresentation parsed = cbg::parse_presentation(cbg::read_text_file(path));
    cbg::PropertyCertificate cert =
        cbg::certify_property(parsed.presentation, property, field);
    json report{{"p", field.modulus()},
                {"generators", parsed.presentation.generator_count()},
                {"relators", parsed.presentation.relator_count()},
                {"h1_dimension", cert.basis_graph.vertex_count()},
                {"property", cert.property},
                {"verdict", cert.verdict},
                {"statement", cert.statement},
                {"basis_graph", cbg::graph_to_json(cert.basis_graph)},
                {"warnings", parsed.warnings}};
    print_report(report);
    return 0;
}

int run_tracks(const std::string& graph_path, const std::string& matrix_path) {
    cbg::SimpleGraph g = cbg::parse_graph_file(graph_path);
    cbg::PrimeFieldMatrix a = cbg::parse_matrix_text(cbg::read_text_file(matrix_path));
    std::vector<cbg::OneBlock> blocks = cbg::find_one_blocks(g, a);
    std::map<cbg::Track, std::uint32_t> partition = cbg::track_partition(g, a);
    const cbg::PrimeField& f = a.field();
    std::uint32_t det = cbg::det_gaussian(a);
    std::uint32_t from_tracks = 0;

    json blocks_json = json::array();
    for (const auto& b : blocks) blocks_json.push_back({{"rows", b.rows}, {"cols", b.cols}});
    json tracks_json = json::array();
    for (const auto& [track, value] : partition) {
        from_tracks = f.add(from_tracks, value);
        json pieces = json::array();
        for (const auto& piece : track.pieces)
            pieces.push_back({{"rows", piece.rows}, {"cols", piece.cols}});
        tracks_json.push_back({{"pieces", std::move(pieces)},
                               {"max_dimension", track.max_dimension()},
                               {"determinant", value}});
    }
    json report{{"p", f.modulus()},
                {"blocks", std::move(blocks_json)},
                {"realized_tracks", std::move(tracks_json)},
                {"track_count", partition.size()},
                {"determinant", det},
                {"determinant_from_tracks", from_tracks},
                {"partition_identity", det == from_tracks}};
    print_report(report);
    return 0;
}

int run_dumbbell(int n, int m) {
    cbg::CohomologyBasis base = cbg::dumbbell(n, m);
    cbg::MinorBasisResult move =
        cbg::elementary_minor_basis(base.graph(), base.matrix(), cbg::MinorOp::contract_edge(1, 2));
    cbg::SimpleGraph basis_graph = cbg::cohomology_basis_graph(base);
    cbg::SimpleGraph contracted_basis_graph =
        cbg::cohomology_basis_graph(move.minor_graph, move.basis);
    int gap = cbg::contraction_gap(n, m);
    json discarded = json::array();
    for (const auto& d : move.discarded) discarded.push_back({{"row", d.row}, {"reason", d.reason}});
    json report{{"n", n},
                {"m", m},
                {"p", 2},
                {"defining_graph", cbg::graph_to_json(base.graph())},
                {"basis", cbg::matrix_to_json(base.matrix())},
                {"basis_graph", cbg::graph_to_json(basis_graph)},
                {"contracted_graph", cbg::graph_to_json(move.minor_graph)},
                {"contracted_basis", cbg::matrix_to_json(move.basis)},
                {"contracted_basis_graph", cbg::graph_to_json(contracted_basis_graph)},
                {"discarded_rows", std::move(discarded)},
                {"edge_counts",
                 {{"basis_graph", basis_graph.edge_count()},
                  {"contracted_basis_graph", contracted_basis_graph.edge_count()}}},
                {"gap", gap}};
    print_report(report);
    return 0;
}

int run_gamma_prime(const std::string& graph_path, const std::string& matrix_path,
                    const std::string& rule_name, const std::string& format) {
    cbg::SimpleGraph g = cbg::parse_graph_file(graph_path);
    cbg::PrimeFieldMatrix a = cbg::parse_matrix_text(cbg::read_text_file(matrix_path));
    if (a.field().modulus() != 2)
        throw cbg::GuardError("the scaffold construction supports only p = 2, got p = " +
                              std::to_string(a.field().modulus()));
    cbg::GammaPrimeRule rule = rule_name == "literal" ? cbg::GammaPrimeRule::literal
                                                      : cbg::GammaPrimeRule::corrected;
    cbg::SimpleGraph result = cbg::gamma_prime(g, a, rule);
    cbg::SimpleGraph basis_graph = cbg::cohomology_basis_graph(g, a);
    json report{{"p", 2},
                {"rule", rule_name},
                {"graph", cbg::graph_to_json(result)},
                {"scaffold", cbg::graph_to_json(cbg::gamma_prime_scaffold(g, a))},
                {"basis_graph", cbg::graph_to_json(basis_graph)},
                {"matches_basis_graph", result == basis_graph}};
    print_graph_or_report(result, report, format);
    return 0;
}

// ---------------------------------------------------------------------------
// Randomized verification suites.

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

cbg::SimpleGraph random_graph(std::mt19937_64& eng, int n) {
    cbg::SimpleGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((eng() >> 32) & 1U) g.add_edge(i, j);
    return g;
}

// One trial of a suite: fills `instance` with the generated data and returns
// a failure description, or nothing when every checked property holds.
using TrialBody = std::optional<std::string> (*)(std::mt19937_64&, const RunConfig&, json&);

std::optional<std::string> trial_theorem_main(std::mt19937_64& eng, const RunConfig& cfg,
                                              json& instance) {
    int n = 1 + static_cast<int>(eng() % 7);
    cbg::SimpleGraph g = random_graph(eng, n);
    cbg::PrimeFieldMatrix a = cbg::random_invertible(n, cbg::PrimeField(cfg.p), eng());
    instance = {{"graph", cbg::graph_to_json(g)}, {"matrix", cbg::matrix_to_json(a)}};
    cbg::CohomologyBasis basis(g, a);
    cbg::SimpleGraph gb = cbg::cohomology_basis_graph(basis);
    cbg::VertexMap embedding = cbg::verify_containment(basis);
    if (!embedding.is_embedding(g, gb))
        return "claimed embedding of the defining graph fails validation";
    return std::nullopt;
}

std::optional<std::string> trial_tracks(std::mt19937_64& eng, const RunConfig& cfg,
                                        json& instance) {
    int n = 1 + static_cast<int>(eng() % 6);
    cbg::SimpleGraph g = random_graph(eng, n);
    cbg::PrimeField field(cfg.p);
    cbg::PrimeFieldMatrix a = cbg::random_invertible(n, field, eng());
    instance = {{"graph", cbg::graph_to_json(g)}, {"matrix", cbg::matrix_to_json(a)}};
    std::map<cbg::Track, std::uint32_t> partition = cbg::track_partition(g, a);
    std::uint32_t sum = 0;
    for (const auto& [track, value] : partition) {
        sum = field.add(sum, value);
        if (track.max_dimension() >= 2 && value != 0)
            return "a track with a piece of dimension >= 2 has nonzero determinant";
    }
    if (sum != cbg::det_gaussian(a))
        return "track-restricted determinants do not sum to det(A)";
    return std::nullopt;
}

std::optional<std::string> trial_minor_moves(std::mt19937_64& eng, const RunConfig& cfg,
                                             json& instance) {
    int n = 2 + static_cast<int>(eng() % 5);
    cbg::SimpleGraph g = random_graph(eng, n);
    cbg::PrimeFieldMatrix a = cbg::random_invertible(n, cbg::PrimeField(cfg.p), eng());
    int kind = static_cast<int>(eng() % 3);
    if (kind != 0 && g.edge_count() == 0) kind = 0;
    cbg::MinorOp op = cbg::MinorOp::delete_vertex(1 + static_cast<int>(eng() % n));
    if (kind != 0) {
        auto e = g.edges()[eng() % g.edge_count()];
        op = kind == 1 ? cbg::MinorOp::delete_edge(e.first, e.second)
                       : cbg::MinorOp::contract_edge(e.first, e.second);
    }
    instance = {{"graph", cbg::graph_to_json(g)},
                {"matrix", cbg::matrix_to_json(a)},
                {"operation", op.describe()}};
    cbg::MinorRelationReport report = cbg::verify_minor_relation(g, a, op, cfg.max_n);
    if (op.kind != cbg::MinorOp::Kind::ContractEdge && !report.holds)
        return "a deletion move's basis graph is not a minor of the original basis graph";
    return std::nullopt;
}

std::optional<std::string> trial_ideals(std::mt19937_64& eng, const RunConfig& cfg,
                                        json& instance) {
    cbg::PrimeField f2(cfg.p);
    int n = 1 + static_cast<int>(eng() % 6);
    cbg::SimpleGraph g = random_graph(eng, n);
    cbg::PrimeFieldMatrix a = cbg::random_invertible(n, f2, eng());
    instance = {{"graph", cbg::graph_to_json(g)}, {"matrix", cbg::matrix_to_json(a)}};
    cbg::SimpleGraph gb = cbg::cohomology_basis_graph(g, a);
    if (cbg::gamma_prime(g, a, cbg::GammaPrimeRule::corrected) != gb)
        return "the corrected scaffold rule disagrees with the basis graph";
    if (g.edge_count() > 0) {
        cbg::EdgeIdeal ideal(n, g.edges());
        auto [generator_graph, survivor_graph] = cbg::graphs_from_edge_ideal(ideal, a);
        instance["edge_ideal_generators"] = cbg::graph_to_json(generator_graph);
        if (survivor_graph != gb)
            return "the surviving-monomial graph disagrees with the basis graph";
    }
    return std::nullopt;
}

int run_verify(const std::string& suite, const RunConfig& cfg) {
    TrialBody body = nullptr;
    if (suite == "theorem-main")
        body = trial_theorem_main;
    else if (suite == "tracks")
        body = trial_tracks;
    else if (suite == "minor-moves")
        body = trial_minor_moves;
    else if (suite == "ideals")
        body = trial_ideals;
    if (suite == "ideals" && cfg.p != 2)
        throw cbg::GuardError("suite 'ideals' runs over p = 2, got p = " + std::to_string(cfg.p));

    std::string replay = "cbg verify --suite " + suite + " --trials " +
                         std::to_string(cfg.trials) + " --seed " + std::to_string(cfg.seed) +
                         " --p " + std::to_string(cfg.p);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 eng(
            splitmix64(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(t) + 1))));
        json instance;
        std::optional<std::string> failure;
        try {
            failure = body(eng, cfg, instance);
        } catch (const cbg::InvariantViolation& e) {
            failure = e.what();
        }
        if (failure) {
            json report{{"suite", suite},     {"status", "fail"},
                        {"trial", t},         {"seed", cfg.seed},
                        {"p", cfg.p},         {"reason", *failure},
                        {"instance", instance}, {"replay", replay}};
            print_report(report);
            throw cbg::InvariantViolation("suite '" + suite + "' failed at trial " +
                                          std::to_string(t) + ": " + *failure);
        }
    }
    json report{{"suite", suite},
                {"status", "pass"},
                {"trials", cfg.trials},
                {"seed", cfg.seed},
                {"p", cfg.p}};
    print_report(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Cohomology basis graphs of graph groups: exact pipelines over prime "
        "fields and a randomized verification harness.\n"
        "Environment: CBG_MAX_N bounds the exponential minor/embedding "
        "searches (default 12, hard cap 16)."};
    app.require_subcommand(1);

    std::string graph_path, matrix_path, pairing_path, presentation_path;
    std::string property, rule = "corrected", suite, format = "json";
    RunConfig cfg;
    int dumbbell_n = 1, dumbbell_m = 1;

    const std::vector<std::string> formats{"json", "edgelist", "dot"};
    const std::vector<std::string> properties{"empty", "linear-forest", "outerplanar", "planar",
                                              "linkless"};

    CLI::App* bg = app.add_subcommand(
        "basis-graph", "Basis graph of (graph, basis matrix) with reordering and embedding");
    bg->add_option("--graph", graph_path, "graph file (JSON or edge-list text)")->required();
    bg->add_option("--matrix", matrix_path, "matrix file (\"n_rows n_cols p\" then rows)")
        ->required();
    bg->add_option("--format", format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();

    CLI::App* rec = app.add_subcommand("reconstruct",
                                       "Recover the sparsest defining graph from a cup pairing");
    rec->add_option("--pairing", pairing_path, "pairing JSON file")->required();
    rec->add_option("--format", format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();

    CLI::App* props = app.add_subcommand("properties",
                                         "Minor-closed property ladder and complement tests");
    props->add_option("--graph", graph_path, "graph file (JSON or edge-list text)")->required();

    CLI::App* pres = app.add_subcommand(
        "presentation", "Property certificate for a finitely presented group");
    pres->add_option("file", presentation_path, "presentation text file")->required();
    pres->add_option("--property", property, "property to certify")
        ->required()
        ->check(CLI::IsMember(properties));
    pres->add_option("--p", cfg.p, "field characteristic (prime)")->capture_default_str();

    CLI::App* trk = app.add_subcommand("tracks",
                                       "Blocks, realized tracks, and the determinant partition");
    trk->add_option("--graph", graph_path, "graph file (JSON or edge-list text)")->required();
    trk->add_option("--matrix", matrix_path, "matrix file (\"n_rows n_cols p\" then rows)")
        ->required();

    CLI::App* dmb = app.add_subcommand(
        "dumbbell", "Two joined stars whose basis graph gains edges under contraction");
    dmb->add_option("n", dumbbell_n, "leaves on the first star")
        ->required()
        ->check(CLI::Range(1, 30));
    dmb->add_option("m", dumbbell_m, "leaves on the second star")
        ->required()
        ->check(CLI::Range(1, 30));

    CLI::App* gp = app.add_subcommand(
        "gamma-prime", "Scaffold reformulation of the basis graph over F_2");
    gp->add_option("--graph", graph_path, "graph file (JSON or edge-list text)")->required();
    gp->add_option("--matrix", matrix_path, "matrix file over p = 2")->required();
    gp->add_option("--rule", rule, "edge rule")
        ->check(CLI::IsMember(std::vector<std::string>{"corrected", "literal"}))
        ->capture_default_str();
    gp->add_option("--format", format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();

    CLI::App* ver = app.add_subcommand("verify", "Randomized verification suites");
    ver->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(
            std::vector<std::string>{"theorem-main", "tracks", "minor-moves", "ideals"}));
    ver->add_option("--trials", cfg.trials, "number of random trials")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    ver->add_option("--seed", cfg.seed, "root seed for all randomness")->capture_default_str();
    ver->add_option("--p", cfg.p, "field characteristic (prime)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.max_n = guard_from_env(cfg.max_n);
        cbg::detail::field_from_modulus(cfg.p, "option --p");  // reject non-prime early
        cfg.format = format;
        if (bg->parsed()) return run_basis_graph(graph_path, matrix_path, cfg.format);
        if (rec->parsed()) return run_reconstruct(pairing_path, cfg.format);
        if (props->parsed()) return run_properties(graph_path, cfg.max_n);
        if (pres->parsed()) return run_presentation(presentation_path, property, cfg.p);
        if (trk->parsed()) return run_tracks(graph_path, matrix_path);
        if (dmb->parsed()) return run_dumbbell(dumbbell_n, dumbbell_m);
        if (gp->parsed()) return run_gamma_prime(graph_path, matrix_path, rule, cfg.format);
        if (ver->parsed()) return run_verify(suite, cfg);
        return 1;  // unreachable: require_subcommand(1)
    } catch (const cbg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cbg::SingularMatrixError& e) {
        std::cerr << "singular matrix: " << e.what() << "\n";
        return 3;
    } catch (const cbg::GuardError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 4;
    } catch (const cbg::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
