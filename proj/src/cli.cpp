#include "aec/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "aec/coloring.hpp"
#include "aec/density.hpp"
#include "aec/embedding.hpp"
#include "aec/generators.hpp"
#include "aec/json_io.hpp"
#include "aec/structure.hpp"

namespace aec::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string graph_digest(const Graph& g) {
    std::ostringstream os;
    write_edge_list(g, os);
    return hex64(fnv1a(os.str()));
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

struct Outcome {
    int exit_code = 0;
    std::string outcome = "ok";
    Json report = Json::object();
    std::vector<std::string> artifacts;
    std::string input_digest = "fnv1a:0000000000000000";
};

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::string kind = "sparse";
    int n = 24;
    int count = 1;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

Outcome cmd_gen(const GenOptions& opt, std::ostream& err) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(opt.kind + ":" + std::to_string(opt.n) + ":" +
                                  std::to_string(opt.seed) + ":" +
                                  std::to_string(opt.count)));
    fs::create_directories(opt.out_dir);
    for (int i = 0; i < opt.count; ++i) {
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
        std::string stem = opt.kind + "_" + std::to_string(opt.n) + "_" +
                           std::to_string(seed);
        fs::path path;
        if (opt.kind == "drawing" || opt.kind == "triangulation") {
            Drawing d = opt.kind == "drawing"
                            ? generate_one_planar(opt.n, seed)
                            : generate_planar_triangulation(opt.n, seed);
            path = fs::path(opt.out_dir) / (stem + ".json");
            std::ofstream f(path);
            f << drawing_json(d).dump(2) << '\n';
        } else {
            CorpusKind kind;
            if (opt.kind == "regular") kind = CorpusKind::Regular;
            else if (opt.kind == "sparse") kind = CorpusKind::Sparse;
            else if (opt.kind == "ringel") kind = CorpusKind::Ringel;
            else if (opt.kind == "oneplanar") kind = CorpusKind::OnePlanarBase;
            else throw Error(Errc::ParseError, "unknown gen kind '" + opt.kind + "'");
            Graph g = corpus_graph(kind, opt.n, seed);
            path = fs::path(opt.out_dir) / (stem + ".edges");
            std::ofstream f(path);
            write_edge_list(g, f);
        }
        oc.artifacts.push_back(path.string());
        err << "wrote " << path.string() << '\n';
    }
    oc.report = Json{{"written", oc.artifacts.size()}};
    return oc;
}

// ------------------------------------------------------------- density

Outcome cmd_density(const std::string& file, const std::string& alpha,
                    long long beta) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Graph g = read_edge_list_file(file);
    DensityCertificate cert = is_linear(g, {Rat::parse(alpha), beta});
    oc.report = certificate_json(cert);
    if (!cert.verdict) {
        oc.exit_code = 1;
        oc.outcome = "failed";
    }
    return oc;
}

// ---------------------------------------------------- validate / bounds

Outcome cmd_validate(const std::string& file) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Drawing d = drawing_from_json(parse_json_file(file));
    auto errs = validate_drawing(d);
    oc.report = Json{{"ok", errs.empty()}, {"errors", drawing_errors_json(errs)}};
    if (!errs.empty()) {
        oc.exit_code = 1;
        oc.outcome = "failed";
    }
    return oc;
}

Outcome cmd_bounds(const std::string& file) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Drawing d = drawing_from_json(parse_json_file(file));
    BoundsReport rep = check_bounds(d);
    oc.report = bounds_json(rep);
    bool violated = !rep.thm1_ok || (rep.thm2_ok && !*rep.thm2_ok);
    if (violated) {
        // a failed bound on a valid drawing contradicts the theorems
        oc.exit_code = 2;
        oc.outcome = "violation";
    }
    return oc;
}

// -------------------------------------------------- find-config / audit

Outcome cmd_find_config(const std::string& file) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Graph g = read_edge_list_file(file);
    auto r = find_reducible(g);
    oc.report = Json{{"found", r.has_value()},
                     {"reducible", r ? reducible_json(*r) : Json()}};
    return oc;
}

Outcome cmd_audit(const std::string& file) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Graph g = read_edge_list_file(file);
    oc.report = charge_report_json(discharging_audit(g));
    return oc;
}

// ------------------------------------------------------ color / verify

Outcome cmd_color(const std::string& file, std::optional<int> k,
                  const std::string& lists_file, const std::string& coloring_out,
                  std::ostream& err) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Graph g = read_edge_list_file(file);
    ListAssignment lists = lists_file.empty()
                               ? uniform_lists(g, k)
                               : lists_from_json(parse_json_file(lists_file), g);

    ColorOutcome res = color_graph(g, lists);
    Json small = Json::array();
    for (const EdgeId& e : res.small_lists) small.push_back(Json::array({e.a, e.b}));

    if (res.success) {
        // paranoid re-check in-process before reporting success
        VerifyReport again = verify_coloring(g, res.coloring);
        if (!again.proper || !again.acyclic)
            throw Error(Errc::TheoremViolation, "final verification disagreed");
        oc.report = Json{{"coloring", coloring_json(res.coloring)},
                         {"verify", verify_report_json(again)},
                         {"small_lists", small}};
        if (!coloring_out.empty()) {
            std::ofstream f(coloring_out);
            f << coloring_json(res.coloring).dump(2) << '\n';
            oc.artifacts.push_back(coloring_out);
        }
        err << "colored " << g.edge_count() << " edges\n";
        return oc;
    }

    Json failure = res.failure ? failure_json(*res.failure) : Json();
    oc.report = Json{{"failure", failure}, {"small_lists", small}};
    if (res.small_lists.empty()) {
        // full-size lists and still no extension: theorem-falsifying
        oc.exit_code = 2;
        oc.outcome = "violation";
        err << "extension failure with full-size lists; report preserved\n";
    } else {
        oc.exit_code = 1;
        oc.outcome = "failed";
    }
    return oc;
}

Outcome cmd_verify(const std::string& file, const std::string& coloring_file) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file) + slurp(coloring_file)));
    Graph g = read_edge_list_file(file);
    EdgeColoring c = coloring_from_json(parse_json_file(coloring_file));
    VerifyReport rep = verify_coloring(g, c);
    oc.report = verify_report_json(rep);
    if (!rep.proper || !rep.acyclic) {
        oc.exit_code = 1;
        oc.outcome = "failed";
    }
    return oc;
}

Outcome cmd_chi_a(const std::string& file, int k_max) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a(slurp(file)));
    Graph g = read_edge_list_file(file);
    auto chi = chi_a_bruteforce(g, k_max);
    if (chi) {
        oc.report = Json{{"chi_a", *chi}};
    } else {
        oc.report = Json{{"exceeded", true}, {"k_max", k_max}};
        oc.exit_code = 1;
        oc.outcome = "failed";
    }
    return oc;
}

// --------------------------------------------------------------- bench

struct BenchRow {
    std::string digest;
    std::string kind;
    int n = 0, m = 0, delta = 0, k = 0;
    double elim_ms = 0, color_ms = 0, verify_ms = 0;
    std::string outcome = "ok";
};

Outcome cmd_bench(std::uint64_t seed, int count, int nmin, int nmax, int jobs,
                  std::ostream& err) {
    Outcome oc;
    oc.input_digest = hex64(fnv1a("bench:" + std::to_string(seed) + ":" +
                                  std::to_string(count)));
    const CorpusKind kinds[] = {CorpusKind::Regular, CorpusKind::Sparse,
                                CorpusKind::Ringel, CorpusKind::OnePlanarBase};
    std::vector<BenchRow> rows(count);
    std::atomic<int> next{0};

    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            CorpusKind kind = kinds[i % 4];
            std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            int span = std::max(1, nmax - nmin + 1);
            int n = nmin + static_cast<int>(s * 2654435761u % span);
            BenchRow row;
            row.kind = corpus_kind_name(kind);
            try {
                Graph g = corpus_graph(kind, n, s);
                row.digest = graph_digest(g);
                row.n = g.vertex_count();
                row.m = g.edge_count();
                row.delta = g.degree_profile().max_degree;
                row.k = default_palette_size(g);

                auto t0 = Clock::now();
                auto steps = elimination_order(g);
                row.elim_ms = ms_since(t0);

                t0 = Clock::now();
                ColorOutcome res = color_graph(g, uniform_lists(g));
                row.color_ms = ms_since(t0);

                t0 = Clock::now();
                VerifyReport rep = verify_coloring(g, res.coloring);
                row.verify_ms = ms_since(t0);

                if (!res.success || !rep.proper || !rep.acyclic)
                    row.outcome = "violation";
                (void)steps;
            } catch (const DensityRefusal&) {
                row.outcome = "refused";
            } catch (const LemmaViolationError&) {
                row.outcome = "violation";
            } catch (const std::exception& e) {
                row.outcome = std::string("failed: ") + e.what();
            }
            rows[i] = std::move(row);
        }
    };

    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::sort(rows.begin(), rows.end(),
              [](const BenchRow& a, const BenchRow& b) { return a.digest < b.digest; });

    Json arr = Json::array();
    bool any_violation = false, any_failed = false;
    err << "digest            kind       n    m    D   K    elim  color verify ok\n";
    for (const BenchRow& r : rows) {
        arr.push_back(Json{{"digest", r.digest},
                           {"kind", r.kind},
                           {"n", r.n},
                           {"m", r.m},
                           {"delta", r.delta},
                           {"k", r.k},
                           {"elim_ms", r.elim_ms},
                           {"color_ms", r.color_ms},
                           {"verify_ms", r.verify_ms},
                           {"outcome", r.outcome}});
        err << r.digest.substr(6) << ' ' << std::left << std::setw(10) << r.kind
            << std::right << std::setw(4) << r.n << ' ' << std::setw(4) << r.m
            << ' ' << std::setw(3) << r.delta << ' ' << std::setw(4) << r.k << ' '
            << std::setw(7) << std::fixed << std::setprecision(1) << r.elim_ms
            << std::setw(7) << r.color_ms << std::setw(7) << r.verify_ms << ' '
            << r.outcome << '\n';
        if (r.outcome == "violation") any_violation = true;
        else if (r.outcome != "ok") any_failed = true;
    }
    oc.report = Json{{"instances", arr}};
    if (any_violation) {
        oc.exit_code = 2;
        oc.outcome = "violation";
    } else if (any_failed) {
        oc.exit_code = 1;
        oc.outcome = "failed";
    }
    return oc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"linearity certificates, 1-planar drawings and acyclic edge "
                 "list-coloring"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* sc_gen = app.add_subcommand("gen", "generate graph/drawing corpora");
    sc_gen->add_option("--kind", gen.kind,
                       "regular|sparse|ringel|oneplanar|triangulation|drawing");
    sc_gen->add_option("--n", gen.n, "instance size");
    sc_gen->add_option("--count", gen.count, "number of instances");
    sc_gen->add_option("--seed", gen.seed, "RNG seed")->required();
    sc_gen->add_option("--out", gen.out_dir, "output directory");

    std::string file, alpha = "4", lists_file, coloring_file, coloring_out;
    long long beta = -1;
    auto* sc_density = app.add_subcommand("density", "certify alpha-linearity");
    sc_density->add_option("file", file)->required();
    sc_density->add_option("--alpha", alpha, "rational, e.g. 4 or 3/2");
    sc_density->add_option("--beta", beta, "integral offset");

    auto* sc_validate = app.add_subcommand("validate", "check a drawing");
    sc_validate->add_option("file", file)->required();

    auto* sc_bounds = app.add_subcommand("bounds", "crossing/edge bounds");
    sc_bounds->add_option("file", file)->required();

    auto* sc_find = app.add_subcommand("find-config", "locate a reducible spot");
    sc_find->add_option("file", file)->required();

    auto* sc_audit = app.add_subcommand("audit", "discharging ledger");
    sc_audit->add_option("file", file)->required();

    int k_value = -1;
    auto* sc_color = app.add_subcommand("color", "acyclic edge list-coloring");
    sc_color->add_option("file", file)->required();
    sc_color->add_option("--k", k_value, "uniform list size (default 3*Delta+70)");
    sc_color->add_option("--lists", lists_file, "list-assignment JSON");
    sc_color->add_option("--coloring-out", coloring_out, "write coloring JSON here");

    auto* sc_verify = app.add_subcommand("verify", "verify a coloring");
    sc_verify->add_option("file", file)->required();
    sc_verify->add_option("--coloring", coloring_file)->required();

    int k_max = 20;
    auto* sc_chi = app.add_subcommand("chi-a", "exact acyclic chromatic index");
    sc_chi->add_option("file", file)->required();
    sc_chi->add_option("--max", k_max, "largest k to try");

    std::uint64_t bench_seed = 0;
    int bench_count = 40, bench_nmin = 12, bench_nmax = 48;
    int bench_jobs = static_cast<int>(std::thread::hardware_concurrency());
    auto* sc_bench = app.add_subcommand("bench", "corpus run with timing table");
    sc_bench->add_option("--seed", bench_seed)->required();
    sc_bench->add_option("--count", bench_count);
    sc_bench->add_option("--nmin", bench_nmin);
    sc_bench->add_option("--nmax", bench_nmax);
    sc_bench->add_option("--jobs", bench_jobs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 3;
    }

    auto t0 = Clock::now();
    Outcome oc;
    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (sc_gen->parsed()) oc = cmd_gen(gen, err);
        else if (sc_density->parsed()) oc = cmd_density(file, alpha, beta);
        else if (sc_validate->parsed()) oc = cmd_validate(file);
        else if (sc_bounds->parsed()) oc = cmd_bounds(file);
        else if (sc_find->parsed()) oc = cmd_find_config(file);
        else if (sc_audit->parsed()) oc = cmd_audit(file);
        else if (sc_color->parsed())
            oc = cmd_color(file,
                           k_value > 0 ? std::optional<int>(k_value) : std::nullopt,
                           lists_file, coloring_out, err);
        else if (sc_verify->parsed()) oc = cmd_verify(file, coloring_file);
        else if (sc_chi->parsed()) oc = cmd_chi_a(file, k_max);
        else if (sc_bench->parsed())
            oc = cmd_bench(bench_seed, bench_count, bench_nmin, bench_nmax,
                           bench_jobs, err);
    } catch (const DensityRefusal& e) {
        oc.exit_code = 1;
        oc.outcome = "refused";
        oc.report = Json{{"error", e.what()},
                         {"certificate", certificate_json(e.certificate())}};
    } catch (const LemmaViolationError& e) {
        oc.exit_code = 2;
        oc.outcome = "violation";
        oc.report = Json{{"error", e.what()},
                         {"charges", charge_report_json(e.violation().charges)}};
    } catch (const Error& e) {
        oc.exit_code = e.code() == Errc::TheoremViolation ? 2 : 1;
        oc.outcome = oc.exit_code == 2 ? "violation" : "refused";
        oc.report = Json{{"error", e.what()}};
    } catch (const std::exception& e) {
        oc.exit_code = 1;
        oc.outcome = "failed";
        oc.report = Json{{"error", e.what()}};
    }

    Json run_report{{"command", command},
                    {"input_digest", oc.input_digest},
                    {"outcome", oc.outcome},
                    {"timings_ms", Json{{"total", ms_since(t0)}}},
                    {"artifacts", oc.artifacts},
                    {"report", oc.report}};
    out << run_report.dump(2) << '\n';
    return oc.exit_code;
}

}  // namespace aec::cli
