// Command-line front end: graph generation, Z/Q builds, walk spectra, link
// sweeps, mixing traces, theorem verification, and Z-vs-Q comparison tables.

#include "hdx/class_weights.hpp"
#include "hdx/complex.hpp"
#include "hdx/complex_io.hpp"
#include "hdx/expansion.hpp"
#include "hdx/graph.hpp"
#include "hdx/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

json face_to_json(const hdx::Face& f) {
    json arr = json::array();
    for (const auto& z : f.verts) arr.push_back({z.v, z.b});
    return arr;
}

hdx::ComplexKind parse_kind(const std::string& kind) {
    if (kind == "z" || kind == "Z") return hdx::ComplexKind::Z;
    if (kind == "q" || kind == "Q") return hdx::ComplexKind::Q;
    throw std::invalid_argument("--kind must be z or q");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted product complexes: builders, walk spectra, and verification"};
    app.require_subcommand(1);

    // gen-graph
    auto* gen = app.add_subcommand("gen-graph", "generate a graph and write its edge list");
    std::string gen_type = "cycle";
    int gen_n = 8, gen_d = 3;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--type", gen_type, "cycle | complete | random-regular")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--d", gen_d, "degree (random-regular only)");
    gen->add_option("--seed", gen_seed, "RNG seed (random-regular only; default 1)");
    gen->add_option("-o,--out", gen_out, "output edge-list path")->required();

    // build
    auto* build = app.add_subcommand("build", "build a Z or Q complex and write it as JSON");
    std::string build_graph, build_kind = "z", build_out;
    int build_H = 2, build_s = 4;
    std::size_t build_cap = 10'000'000;
    bool build_weighted_q = false;
    build->add_option("--graph", build_graph, "edge-list input")->required();
    build->add_option("--H", build_H, "dimension")->required();
    build->add_option("--s", build_s, "color count")->required();
    build->add_option("--kind", build_kind, "z | q (default z)");
    build->add_option("--max-top-faces", build_cap, "size cap on predicted top faces");
    build->add_flag("--allow-weighted-q", build_weighted_q, "permit Q on weighted graphs");
    build->add_option("-o,--out", build_out, "output complex JSON")->required();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of an up-down/down-up walk");
    std::string spec_complex, spec_walk = "updown", spec_out;
    int spec_level = 0;
    std::size_t spec_maxdim = 20000;
    spectrum->add_option("--complex", spec_complex, "complex JSON input")->required();
    spectrum->add_option("--level", spec_level, "walk level k")->required();
    spectrum->add_option("--walk", spec_walk, "updown | downup (default updown)");
    spectrum->add_option("--max-dim", spec_maxdim, "refuse eigensolves above this size");
    spectrum->add_option("-o,--out", spec_out, "output CSV")->required();

    // local-sweep
    auto* sweep_cmd = app.add_subcommand("local-sweep", "gap of every link 1-skeleton at a level");
    std::string sweep_complex, sweep_out;
    int sweep_level = 0;
    sweep_cmd->add_option("--complex", sweep_complex, "complex JSON input")->required();
    sweep_cmd->add_option("--level", sweep_level, "face dimension k (0..H-2)")->required();
    sweep_cmd->add_option("-o,--out", sweep_out, "output JSON")->required();

    // mix
    auto* mix = app.add_subcommand("mix", "total-variation mixing trace of an up-down walk");
    std::string mix_complex, mix_out;
    int mix_level = 0, mix_steps = 100;
    std::size_t mix_start = 0;
    bool mix_sample = false;
    std::uint64_t mix_seed = 1;
    mix->add_option("--complex", mix_complex, "complex JSON input")->required();
    mix->add_option("--level", mix_level, "walk level k")->required();
    mix->add_option("--steps", mix_steps, "number of steps")->required();
    mix->add_option("--start-index", mix_start, "start face index in canonical order (default 0)");
    mix->add_flag("--sample", mix_sample, "emit one sampled trajectory instead of the exact trace");
    mix->add_option("--seed", mix_seed, "RNG seed for --sample (default 1)");
    mix->add_option("-o,--out", mix_out, "output CSV")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the full verification harness");
    std::string verify_graph, verify_out;
    int verify_H = 3, verify_s = 6;
    double verify_tol = 1e-9;
    bool verify_explore = false;
    verify->add_option("--graph", verify_graph, "edge-list input")->required();
    verify->add_option("--H", verify_H, "dimension")->required();
    verify->add_option("--s", verify_s, "color count")->required();
    verify->add_option("--tol", verify_tol, "eigenvalue tolerance (default 1e-9)");
    verify->add_flag("--explore", verify_explore, "report values outside the theorem hypotheses");
    verify->add_option("-o,--out", verify_out, "output report JSON");

    // compare
    auto* compare = app.add_subcommand("compare", "Z-vs-Q table of walk gaps and local expansion");
    std::string cmp_graph, cmp_out;
    int cmp_H = 3, cmp_s = 6;
    compare->add_option("--graph", cmp_graph, "edge-list input")->required();
    compare->add_option("--H", cmp_H, "dimension")->required();
    compare->add_option("--s", cmp_s, "color count")->required();
    compare->add_option("-o,--out", cmp_out, "output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            hdx::WeightedGraph g;
            if (gen_type == "cycle") g = hdx::gen_cycle(gen_n);
            else if (gen_type == "complete") g = hdx::gen_complete(gen_n);
            else if (gen_type == "random-regular") g = hdx::gen_random_regular(gen_n, gen_d, gen_seed);
            else throw std::invalid_argument("unknown graph type '" + gen_type + "'");
            std::ostringstream os;
            for (const auto& e : g.edges) {
                os << e.u << " " << e.v;
                if (e.w != 1) os << " " << hdx::rational_str(e.w);
                os << "\n";
            }
            atomic_write(gen_out, os.str());
            std::cout << "wrote " << gen_out << " (" << g.n << " vertices, " << g.edges.size()
                      << " edges)\n";
        } else if (*build) {
            json config = {{"subcommand", "build"},
                           {"format_version", hdx::kFormatVersion},
                           {"graph", build_graph},
                           {"H", build_H},
                           {"s", build_s},
                           {"kind", build_kind},
                           {"max_top_faces", build_cap},
                           {"allow_weighted_q", build_weighted_q}};
            hdx::WeightedGraph g = hdx::load_graph(build_graph);
            hdx::BuildOptions opt;
            opt.max_top_faces = build_cap;
            opt.allow_weighted_q = build_weighted_q;
            hdx::ComplexKind kind = parse_kind(build_kind);
            hdx::Complex c = (kind == hdx::ComplexKind::Z) ? hdx::build_Z(g, build_H, build_s, opt)
                                                           : hdx::build_Q(g, build_H, build_s, opt);
            json doc = hdx::complex_to_json(c);
            doc["config"] = config;
            atomic_write(build_out, doc.dump(1) + "\n");
            std::cout << "wrote " << build_out << " (" << c.face_count() << " faces, top level "
                      << c.level(c.H).size() << ")\n";
        } else if (*spectrum) {
            json config = {{"subcommand", "spectrum"}, {"format_version", hdx::kFormatVersion},
                           {"complex", spec_complex},  {"level", spec_level},
                           {"walk", spec_walk},        {"max_dim", spec_maxdim}};
            hdx::Complex c = hdx::load_complex(spec_complex);
            hdx::WalkOperator op;
            if (spec_walk == "updown") op = hdx::updown(c, spec_level);
            else if (spec_walk == "downup") op = hdx::downup(c, spec_level);
            else throw std::invalid_argument("--walk must be updown or downup");
            hdx::SpectrumOptions sopt;
            sopt.max_dim = spec_maxdim;
            hdx::SpectrumReport rep =
                hdx::operator_spectrum(op, hdx::stationary_measure(c, spec_level), sopt);
            std::ostringstream os;
            os << "# config: " << config.dump() << "\n";
            os << "level,walk,i,eigenvalue\n";
            for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i)
                os << spec_level << "," << spec_walk << "," << i << "," << fmt17(rep.eigenvalues[i])
                   << "\n";
            atomic_write(spec_out, os.str());
            std::cout << "wrote " << spec_out << " (nu2 = " << fmt17(rep.gap) << ")\n";
        } else if (*sweep_cmd) {
            json config = {{"subcommand", "local-sweep"},
                           {"format_version", hdx::kFormatVersion},
                           {"complex", sweep_complex},
                           {"level", sweep_level}};
            hdx::Complex c = hdx::load_complex(sweep_complex);
            hdx::LevelSweep sweep = hdx::local_sweep(c, sweep_level);
            json doc;
            doc["config"] = config;
            doc["format_version"] = hdx::kFormatVersion;
            doc["level"] = sweep.k;
            doc["nu"] = sweep.nu;
            doc["argmin_face"] = face_to_json(sweep.gaps[sweep.argmin].face);
            doc["split_min"] = sweep.split_min;
            doc["pure_min"] = sweep.pure_min;
            json gaps = json::array();
            for (const auto& lg : sweep.gaps)
                gaps.push_back({{"face", face_to_json(lg.face)},
                                {"class", hdx::class_str(lg.cls)},
                                {"gap", lg.gap}});
            doc["gaps"] = std::move(gaps);
            atomic_write(sweep_out, doc.dump(1) + "\n");
            std::cout << "wrote " << sweep_out << " (nu^(" << sweep.k << ") = " << fmt17(sweep.nu)
                      << ")\n";
        } else if (*mix) {
            json config = {{"subcommand", "mix"},     {"format_version", hdx::kFormatVersion},
                           {"complex", mix_complex},  {"level", mix_level},
                           {"steps", mix_steps},      {"start_index", mix_start},
                           {"sample", mix_sample},    {"seed", mix_seed}};
            hdx::Complex c = hdx::load_complex(mix_complex);
            hdx::WalkOperator op = hdx::updown(c, mix_level);
            std::ostringstream os;
            os << "# config: " << config.dump() << "\n";
            if (mix_sample) {
                auto path = hdx::sample_walk(op, mix_start, mix_steps, mix_seed);
                os << "step,face_index\n";
                for (std::size_t t = 0; t < path.size(); ++t) os << t << "," << path[t] << "\n";
            } else {
                hdx::StationaryMeasure pi = hdx::stationary_measure(c, mix_level);
                auto trace =
                    hdx::evolve(op, pi, hdx::point_mass(c.level(mix_level).size(), mix_start), mix_steps);
                os << "step,tv\n";
                for (std::size_t t = 0; t < trace.size(); ++t)
                    os << (t + 1) << "," << fmt17(trace[t]) << "\n";
            }
            atomic_write(mix_out, os.str());
            std::cout << "wrote " << mix_out << "\n";
        } else if (*verify) {
            json config = {{"subcommand", "verify"}, {"format_version", hdx::kFormatVersion},
                           {"graph", verify_graph},  {"H", verify_H},
                           {"s", verify_s},          {"tol", verify_tol},
                           {"explore", verify_explore}};
            hdx::WeightedGraph g = hdx::load_graph(verify_graph);
            hdx::VerifyOptions opt;
            opt.explore = verify_explore;
            opt.tol = verify_tol;
            hdx::VerificationReport rep = hdx::verify_theorems(g, verify_H, verify_s, opt);
            for (const auto& chk : rep.checks) {
                const char* tag = chk.skipped ? "SKIP" : (chk.pass ? "PASS" : "FAIL");
                std::cout << "[" << tag << "] " << chk.id << ": " << chk.formula << " (expected "
                          << fmt17(chk.expected) << ", computed " << fmt17(chk.computed) << ")\n";
            }
            json doc = hdx::report_to_json(rep);
            doc["config"] = config;
            if (!verify_out.empty()) atomic_write(verify_out, doc.dump(1) + "\n");
            std::cout << (rep.all_pass ? "all checks passed" : "some checks FAILED") << "\n";
            return rep.all_pass ? 0 : 1;
        } else if (*compare) {
            json config = {{"subcommand", "compare"}, {"format_version", hdx::kFormatVersion},
                           {"graph", cmp_graph},      {"H", cmp_H},
                           {"s", cmp_s}};
            hdx::WeightedGraph g = hdx::load_graph(cmp_graph);
            hdx::Complex zc = hdx::build_Z(g, cmp_H, cmp_s);
            hdx::Complex qc = hdx::build_Q(g, cmp_H, cmp_s);
            std::ostringstream os;
            os << "# config: " << config.dump() << "\n";
            os << "k,nu2_updown_z,nu2_updown_q,nu_local_z,nu_local_q\n";
            for (int k = 0; k <= cmp_H - 1; ++k) {
                auto zs = hdx::operator_spectrum(hdx::updown(zc, k), hdx::stationary_measure(zc, k));
                auto qs = hdx::operator_spectrum(hdx::updown(qc, k), hdx::stationary_measure(qc, k));
                os << k << "," << fmt17(zs.gap) << "," << fmt17(qs.gap);
                if (k <= cmp_H - 2) {
                    os << "," << fmt17(hdx::local_sweep(zc, k).nu) << ","
                       << fmt17(hdx::local_sweep(qc, k).nu);
                } else {
                    os << ",,";
                }
                os << "\n";
            }
            atomic_write(cmp_out, os.str());
            std::cout << "wrote " << cmp_out << "\n";
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
