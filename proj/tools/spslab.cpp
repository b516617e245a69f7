// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0
//
// spslab: construct, verify and analyze finite State Property Systems, their
// closure-system presentations, and the discretized elastic sphere model.
//
// Exit codes: 0 success / property holds, 1 usage or parse error, 2 domain
// failure (axiom violation, invalid complement map, negative search).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spslab/classical.hpp"
#include "spslab/closure.hpp"
#include "spslab/document.hpp"
#include "spslab/report.hpp"
#include "spslab/sphere_model.hpp"
#include "spslab/topological.hpp"

namespace {

using namespace spslab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

std::size_t size_cap_from_env() {
    if (const char* value = std::getenv("SPSLAB_SIZE_CAP")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(value, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
        throw Error(Errc::invalid_document, "SPSLAB_SIZE_CAP must be a positive integer");
    }
    return kDefaultSizeCap;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::parse_error, "cannot read file " + path, 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct LoadedSps {
    SpsDocument doc;
    FiniteSps system;
    std::optional<OrthoMap> ortho;
    std::vector<TestPair> tests;
    std::string digest;
};

LoadedSps load_sps(const std::string& path) {
    const std::string text = slurp(path);
    const ParsedDocument parsed = parse_document(text);
    if (parsed.kind != DocumentKind::sps)
        throw Error(Errc::invalid_document, "expected an sps document in " + path);
    LoadedSps loaded;
    loaded.doc = *parsed.sps;
    loaded.system = sps_from_document(loaded.doc);
    loaded.ortho = ortho_from_document(loaded.system, loaded.doc);
    loaded.tests = tests_from_document(loaded.system, loaded.doc);
    loaded.digest = hex64(fnv1a64(text));
    return loaded;
}

std::string id_list(const FiniteSps& s, const std::vector<ElemId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += property_literal(s, ids[i]);
    }
    return out.empty() ? "(none)" : out;
}

void axiom_section(Report& report, const FiniteSps& s, const AxiomVerdict& v) {
    report.open_section("axioms");
    report.kv("top-actual-everywhere", v.top_actual_everywhere ? "pass" : "fail");
    if (v.top_witness)
        report.kv("top-witness", s.state_name(*v.top_witness));
    report.kv("bottom-actual-nowhere", v.bottom_actual_nowhere ? "pass" : "fail");
    if (v.bottom_witness)
        report.kv("bottom-witness", s.state_name(*v.bottom_witness));
    report.kv("preorder-consistent", v.preorder_matches ? "pass" : "fail");
    if (v.preorder_witness)
        report.kv("preorder-witness", s.state_name(v.preorder_witness->first) + " " +
                                          s.state_name(v.preorder_witness->second));
    report.kv("property-determination", v.property_determination ? "pass" : "fail");
    if (v.determination_witness)
        report.kv("determination-witness",
                  property_literal(s, v.determination_witness->first) + " " +
                      property_literal(s, v.determination_witness->second));
    report.kv("meets-pointwise", v.meets_pointwise ? "pass" : "fail");
    if (v.meet_witness)
        report.kv("meet-witness", property_literal(s, v.meet_witness->first) + " " +
                                      property_literal(s, v.meet_witness->second));
    report.kv("verdict", v.pass() ? "pass" : "fail");
}

int cmd_check(const std::string& path) {
    const std::string text = slurp(path);
    const ParsedDocument parsed = parse_document(text);
    Report report("check " + path, hex64(fnv1a64(text)));

    if (parsed.kind == DocumentKind::lattice) {
        report.open_section("lattice");
        const FiniteLattice lattice = lattice_from_document(*parsed.lattice);
        report.kv("elements", std::to_string(lattice.size()));
        report.kv("atomistic", lattice.is_atomistic() ? "yes" : "no");
        report.kv("boolean", lattice.is_boolean() ? "yes" : "no");
        report.kv("verdict", "pass");
        std::cout << report.to_text();
        return kExitOk;
    }
    if (parsed.kind == DocumentKind::model) {
        throw Error(Errc::invalid_document, "model configs cannot be checked; use model build");
    }

    const SpsDocument& doc = *parsed.sps;
    const FiniteSps system = sps_from_document(doc);
    const AxiomVerdict verdict = verify_axioms(system);
    report.open_section("system");
    report.kv("states", std::to_string(system.state_count()));
    report.kv("properties", std::to_string(system.property_count()));
    axiom_section(report, system, verdict);

    bool ok = verdict.pass();
    if (const auto ortho = ortho_from_document(system, doc)) {
        const OrthoVerdict ov = verify_ortho(system.lattice(), *ortho);
        report.open_section("orthocomplementation");
        report.kv("involution", ov.involution_ok ? "pass" : "fail");
        report.kv("order-reversing", ov.order_reversing_ok ? "pass" : "fail");
        report.kv("meet-complement", ov.meet_complement_ok ? "pass" : "fail");
        report.kv("join-complement", ov.join_complement_ok ? "pass" : "fail");
        report.kv("verdict", ov.pass() ? "pass" : "fail");
        ok = ok && ov.pass();
    }
    std::cout << report.to_text();
    return ok ? kExitOk : kExitDomain;
}

struct AnalyzeFlags {
    bool classical = false;
    bool topological = false;
    bool ortho_search = false;
    bool thm3 = false;
    bool prop2 = false;
    bool coverage = false;
};

int cmd_analyze(const std::string& path, const AnalyzeFlags& flags, std::size_t cap) {
    const LoadedSps loaded = load_sps(path);
    const FiniteSps& s = loaded.system;
    Report report("analyze " + path, loaded.digest);

    const AxiomVerdict axioms = verify_axioms(s);
    if (!axioms.pass()) {
        axiom_section(report, s, axioms);
        std::cout << report.to_text();
        return kExitDomain;
    }

    bool ok = true;
    std::optional<OrthoMap> ortho = loaded.ortho;

    if (flags.ortho_search) {
        const auto orthos = enumerate_orthos(s.lattice(), cap);
        report.open_section("ortho-search");
        report.kv("count", std::to_string(orthos.size()));
        if (orthos.empty()) report.line("no orthocomplementation exists");
        for (std::size_t i = 0; i < orthos.size(); ++i) {
            std::string pairs;
            for (ElemId a = 0; a < s.property_count(); ++a)
                if (a <= orthos[i].image[a]) {
                    if (!pairs.empty()) pairs += ' ';
                    pairs += property_literal(s, a) + "<->" +
                             property_literal(s, orthos[i].image[a]);
                }
            report.kv("ortho-" + std::to_string(i), pairs);
        }
        if (!ortho && !orthos.empty()) ortho = orthos.front();
        if (orthos.empty()) ok = false;
    }

    if ((flags.classical || flags.thm3) && !ortho)
        throw Error(Errc::invalid_ortho,
                    "analysis needs complement pairs in the document or --ortho-search");

    if (flags.classical) {
        const ClassicalAnalysis analysis = analyze_classical(s, *ortho);
        report.open_section("classical");
        report.kv("classical-properties", id_list(s, analysis.classical_set));
        report.kv("classical-state-count", std::to_string(analysis.state_classes.size()));
        for (StateId p = 0; p < s.state_count(); ++p)
            report.kv("state-class " + s.state_name(p),
                      property_literal(s, analysis.classical_state_of[p]));
        report.kv("totally-nonclassical",
                  analysis.classical_set.size() == 2 ? "yes" : "no");
    }

    if (flags.topological) {
        const TopologicalAnalysis analysis = analyze_topological(s);
        report.open_section("topological");
        report.kv("topological-properties", id_list(s, analysis.top_set));
        report.kv("topological-state-count", std::to_string(analysis.t_states.size()));
        for (StateId p = 0; p < s.state_count(); ++p)
            report.kv("topological-state " + s.state_name(p),
                      property_literal(s, analysis.tau_of[p]));
        report.kv("t-classical", is_t_classical(s) ? "yes" : "no");
        const FiniteSps sub = t_classical_system(s);
        report.kv("t-subsystem",
                  std::to_string(sub.state_count()) + " states, " +
                      std::to_string(sub.property_count()) + " properties");
    }

    if (flags.thm3) {
        const auto agreement = check_classical_topological_agreement(s, *ortho);
        report.open_section("classicality-agreement");
        report.kv("classical", id_list(s, agreement.classical_set));
        report.kv("topological", id_list(s, agreement.topological_set));
        report.kv("central", id_list(s, agreement.central_set));
        report.kv("atomistic", agreement.atomistic ? "yes" : "no");
        report.kv("classical-equals-topological",
                  agreement.classical_equals_topological ? "yes" : "no");
        report.kv("classical-subset-of-central",
                  agreement.classical_subset_of_central ? "yes" : "no");
        if (agreement.atomistic)
            report.kv("three-way-equal", agreement.three_way_equal ? "yes" : "no");
        if (!agreement.pass()) ok = false;
    }

    if (flags.prop2) {
        const auto identities = check_topological_state_identities(s, loaded.tests);
        report.open_section("state-identities");
        report.kv("unconditional", identities.unconditional_ok ? "pass" : "fail");
        report.kv("operational-condition", identities.condition_holds ? "holds" : "skipped");
        if (identities.condition_holds) {
            report.kv("state-join-identity", identities.state_join_identity_ok ? "pass" : "fail");
            report.kv("image-union-identity",
                      identities.image_union_identity_ok ? "pass" : "fail");
        }
        if (!identities.pass()) ok = false;
    }

    if (flags.coverage) {
        const CoverageReport coverage = coverage_structure(s, loaded.tests);
        report.open_section("coverage");
        auto shape = [&report, &s](const char* name,
                                   const CoverageReport::FamilyShape& family) {
            report.kv(std::string(name) + "-blocks", std::to_string(family.blocks.size()));
            std::string blocks;
            for (StateSet b : family.blocks) {
                if (!blocks.empty()) blocks += ' ';
                blocks += format_set(s.state_names(), b);
            }
            report.kv(std::string(name) + "-family", blocks);
            report.kv(std::string(name) + "-covers", family.covers ? "yes" : "no");
            report.kv(std::string(name) + "-partition", family.partition ? "yes" : "no");
        };
        shape("topological", coverage.topological);
        shape("operational", coverage.operational);
    }

    std::cout << report.to_text();
    return ok ? kExitOk : kExitDomain;
}

int cmd_decompose(const std::string& path, std::optional<std::string> out_dir, std::size_t cap) {
    const LoadedSps loaded = load_sps(path);
    const FiniteSps& s = loaded.system;
    if (!loaded.ortho)
        throw Error(Errc::invalid_ortho, "decomposition needs complement pairs in the document");

    Report report("decompose " + path, loaded.digest);
    const Decomposition decomposition = decompose(s, *loaded.ortho, cap);

    const std::filesystem::path input(path);
    const std::filesystem::path dir =
        out_dir ? std::filesystem::path(*out_dir) : input.parent_path();
    const std::string stem = input.stem().string();

    report.open_section("summands");
    report.kv("count", std::to_string(decomposition.summands.size()));
    for (std::size_t k = 0; k < decomposition.summands.size(); ++k) {
        const SpsSummand& part = decomposition.summands[k];
        const std::filesystem::path out_path =
            dir / (stem + ".summand-" + std::to_string(k) + ".sps");
        std::ofstream out(out_path);
        if (!out)
            throw Error(Errc::invalid_document, "cannot write " + out_path.string());
        out << write_sps_document(part.system, &part.ortho, {});
        report.kv("summand-" + std::to_string(k),
                  format_set(s.state_names(), part.states) + " -> " + out_path.string());
        report.kv("summand-" + std::to_string(k) + "-totally-nonclassical",
                  part.totally_nonclassical ? "yes" : "no");
    }
    report.open_section("reconstruction");
    report.kv("isomorphism-witness", "found");
    std::string mapping;
    for (StateId p = 0; p < decomposition.witness.state_map.size(); ++p) {
        if (p) mapping += ' ';
        mapping += std::to_string(p) + ":" + s.state_name(decomposition.witness.state_map[p]);
    }
    report.kv("state-map", mapping);
    std::cout << report.to_text();
    return kExitOk;
}

struct ModelOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> preset;
    std::optional<double> epsilon;
    std::optional<int> d_resolution;
    std::optional<double> theta;
    std::vector<double> point;
    std::vector<double> direction;
    std::optional<double> d;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::vector<double> eps_list;
    std::optional<std::string> out;
};

std::vector<SpherePoint> resolve_preset(const std::string& name) {
    if (name == "icosahedron") return icosahedron_sample();
    if (name.rfind("fibonacci-", 0) == 0) {
        const std::string count = name.substr(10);
        char* end = nullptr;
        const unsigned long n = std::strtoul(count.c_str(), &end, 10);
        if (!end || *end != '\0' || n == 0)
            throw Error(Errc::invalid_document, "bad preset '" + name + "'");
        return fibonacci_sample(n);
    }
    throw Error(Errc::invalid_document,
                "unknown preset '" + name + "' (use icosahedron or fibonacci-N)");
}

// Merges a config document (if any) with command-line overrides.
struct ResolvedModel {
    SphereModelConfig config;
    std::string digest;
};

ResolvedModel resolve_model(const ModelOptions& options) {
    std::vector<SpherePoint> sample;
    std::vector<SpherePoint> directions;
    double epsilon = 1.0;
    int d_resolution = 1;
    std::string digest_source;

    if (options.config_path) {
        const std::string text = slurp(*options.config_path);
        digest_source = text;
        const ParsedDocument parsed = parse_document(text);
        if (parsed.kind != DocumentKind::model)
            throw Error(Errc::invalid_document, "expected a model config document");
        const ModelDocument& doc = *parsed.model;
        if (doc.preset) sample = resolve_preset(*doc.preset);
        for (const auto& [x, y, z] : doc.points) sample.push_back(make_sphere_point(x, y, z));
        for (const auto& [x, y, z] : doc.directions)
            directions.push_back(make_sphere_point(x, y, z));
        if (doc.epsilon) epsilon = *doc.epsilon;
        if (doc.d_resolution) d_resolution = *doc.d_resolution;
    }
    if (options.preset) sample = resolve_preset(*options.preset);
    if (options.epsilon) epsilon = *options.epsilon;
    if (options.d_resolution) d_resolution = *options.d_resolution;
    if (sample.empty())
        throw Error(Errc::empty_sample, "no sample: give --preset, --config or points");

    ResolvedModel resolved;
    resolved.config = make_model_config(std::move(sample), std::move(directions), epsilon,
                                        d_resolution);
    if (digest_source.empty()) {
        std::string key = "preset=" + options.preset.value_or("?") +
                          " epsilon=" + std::to_string(epsilon) +
                          " d_resolution=" + std::to_string(d_resolution);
        digest_source = key;
    }
    resolved.digest = hex64(fnv1a64(digest_source));
    return resolved;
}

int cmd_model_build(const ModelOptions& options) {
    const ResolvedModel resolved = resolve_model(options);
    const SphereModel model = build_model(resolved.config);
    const std::string document = write_sps_document(model.system, nullptr, model.tests);

    if (!options.out) {
        std::cout << document;
        return kExitOk;
    }
    std::ofstream out(*options.out);
    if (!out) throw Error(Errc::invalid_document, "cannot write " + *options.out);
    out << document;

    Report report("model build", resolved.digest);
    report.open_section("model");
    report.kv("sample-points", std::to_string(resolved.config.sample.size()));
    report.kv("directions", std::to_string(resolved.config.directions.size()));
    report.kv("epsilon", std::to_string(resolved.config.epsilon));
    report.kv("d-grid-points", std::to_string(resolved.config.d_grid.size()));
    report.kv("properties", std::to_string(model.system.property_count()));
    report.kv("tests", std::to_string(model.tests.size()));
    report.kv("document", *options.out);
    std::cout << report.to_text();
    return kExitOk;
}

int cmd_model_simulate(const ModelOptions& options) {
    std::vector<SpherePoint> directions;
    std::vector<double> d_values;
    double epsilon = options.epsilon.value_or(1.0);
    std::string digest_source;

    if (options.config_path) {
        ModelOptions config_only = options;
        const ResolvedModel resolved = resolve_model(config_only);
        directions = resolved.config.directions;
        d_values = resolved.config.d_grid;
        epsilon = resolved.config.epsilon;
        digest_source = resolved.digest;
    } else {
        SpherePoint axis{0, 0, 1};
        if (!options.direction.empty())
            axis = normalized(options.direction[0], options.direction[1], options.direction[2]);
        directions = {axis};
        d_values = {options.d.value_or(0.0)};
    }

    SpherePoint particle{0, 0, 1};
    if (!options.point.empty()) {
        particle = normalized(options.point[0], options.point[1], options.point[2]);
    } else if (options.theta) {
        const double t = *options.theta * std::numbers::pi / 180.0;
        particle = normalized(std::sin(t), 0.0, std::cos(t));
    }

    if (digest_source.empty())
        digest_source = "theta=" + std::to_string(options.theta.value_or(0)) +
                        " epsilon=" + std::to_string(epsilon) +
                        " d=" + std::to_string(d_values.front()) +
                        " n=" + std::to_string(options.trials);

    Report report("model simulate", hex64(fnv1a64(digest_source)));
    report.set_seed(options.seed);
    report.open_section("simulation");
    report.line("epsilon d direction-index trials up-count analytic-probability");
    std::uint64_t stream = 0;
    for (std::size_t k = 0; k < directions.size(); ++k)
        for (const double d : d_values) {
            const TestSpec spec = make_test_spec(directions[k], epsilon, d);
            const SimulationCounts counts =
                simulate(particle, spec, options.trials, options.seed, stream++);
            std::ostringstream row;
            row << epsilon << ' ' << d << ' ' << k << ' ' << options.trials << ' ' << counts.up
                << ' ' << outcome_probability(particle, spec);
            report.line(row.str());
        }
    std::cout << report.to_text();
    return kExitOk;
}

int cmd_model_sweep(const ModelOptions& options) {
    const ResolvedModel resolved = resolve_model(options);
    std::vector<double> eps_list = options.eps_list;
    if (eps_list.empty()) eps_list = {1.0, 0.5, 0.25, 0.1, 0.01};
    const int resolution = options.d_resolution.value_or(41);

    const auto rows = epsilon_sweep(resolved.config.sample, resolved.config.directions,
                                    eps_list, resolution);
    Report report("model sweep", resolved.digest);
    report.open_section("sweep");
    report.line("epsilon family-size topological-count additivity-defect t-classical");
    for (const SweepRow& row : rows) {
        std::ostringstream text;
        text << row.epsilon << ' ' << row.family_size << ' ' << row.topological_count << ' '
             << row.additivity_defect << ' ' << (row.t_classical ? "yes" : "no");
        report.line(text.str());
    }
    report.open_section("endpoints");
    report.kv("defect-first", std::to_string(rows.front().additivity_defect));
    report.kv("defect-last", std::to_string(rows.back().additivity_defect));
    report.kv("defect-decreased",
              rows.front().additivity_defect > rows.back().additivity_defect ? "yes" : "no");
    std::cout << report.to_text();
    return kExitOk;
}

int cmd_model_counterexample(const ModelOptions& options, std::size_t cap) {
    const ResolvedModel resolved = resolve_model(options);
    const CapWitnessReport witness = find_nontopological_cap(resolved.config.sample, cap);

    Report report("model counterexample", resolved.digest);
    report.open_section("witness");
    report.kv("found", witness.witness_found ? "yes" : "no");
    if (witness.witness_found) {
        const auto& sample = resolved.config.sample;
        std::ostringstream direction;
        const SpherePoint& u = sample[witness.direction_index];
        direction << u.x << ' ' << u.y << ' ' << u.z;
        report.kv("direction", direction.str());
        report.kv("cap-image-size", std::to_string(set_size(witness.cap_image)));
        report.kv("antipode-closure-size", std::to_string(set_size(witness.antipode_image)));
        report.kv("join-image-size", std::to_string(set_size(witness.join_image)));
        report.kv("union-image-size", std::to_string(set_size(witness.union_image)));
        report.kv("operationally-classical", witness.cap_operationally_classical ? "yes" : "no");
    } else {
        report.line("no witness on this sample (insufficient sample)");
    }
    report.open_section("orthocomplementability");
    report.kv("lattice-size", std::to_string(witness.lattice_size));
    if (witness.ortho_search_ran)
        report.kv("orthocomplementations", std::to_string(witness.ortho_count));
    else
        report.kv("orthocomplementations",
                  "not enumerated: lattice exceeds the size cap " + std::to_string(cap));
    std::cout << report.to_text();
    return witness.witness_found ? kExitOk : kExitDomain;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"finite State Property Systems: verification, classical/topological "
                 "analysis, decomposition, and the elastic sphere model"};
    app.require_subcommand(1);
    const std::size_t cap = size_cap_from_env();

    std::string path;
    auto* check = app.add_subcommand("check", "validate a document and verify the axioms");
    check->add_option("file", path, "sps or lattice document")->required();

    AnalyzeFlags flags;
    auto* analyze = app.add_subcommand("analyze", "run analyses on an sps document");
    analyze->add_option("file", path, "sps document")->required();
    analyze->add_flag("--classical", flags.classical, "classical properties and states");
    analyze->add_flag("--topological", flags.topological, "topological properties and states");
    analyze->add_flag("--ortho-search", flags.ortho_search, "enumerate orthocomplementations");
    analyze->add_flag("--thm3", flags.thm3, "classical/topological/central agreement");
    analyze->add_flag("--prop2", flags.prop2, "topological state identities");
    analyze->add_flag("--coverage", flags.coverage, "partition/cover structure of state classes");

    std::optional<std::string> out_dir;
    auto* decompose_cmd = app.add_subcommand("decompose", "split into non-classical summands");
    decompose_cmd->add_option("file", path, "sps document with complement pairs")->required();
    std::string out_dir_value;
    auto* out_dir_opt = decompose_cmd->add_option("--out-dir", out_dir_value,
                                                  "directory for summand documents");

    auto* model = app.add_subcommand("model", "discretized elastic sphere model");
    model->require_subcommand(1);
    ModelOptions options;
    auto add_common = [&options](CLI::App* cmd) {
        cmd->add_option("--config", options.config_path, "model config document");
        cmd->add_option("--preset", options.preset, "icosahedron or fibonacci-N");
        cmd->add_option("--epsilon", options.epsilon, "elastic half-length in [0,1]");
        cmd->add_option("--d-resolution", options.d_resolution, "points in the d grid");
    };
    auto* build = model->add_subcommand("build", "emit the model as an sps document");
    add_common(build);
    build->add_option("--out", options.out, "write the document here (report to stdout)");

    auto* simulate_cmd = model->add_subcommand("simulate", "run seeded measurements");
    add_common(simulate_cmd);
    simulate_cmd->add_option("--theta", options.theta, "particle angle from +z, degrees");
    simulate_cmd->add_option("--point", options.point, "particle x,y,z")->expected(3)->delimiter(',');
    simulate_cmd->add_option("--direction", options.direction, "axis x,y,z")->expected(3)->delimiter(',');
    simulate_cmd->add_option("--d", options.d, "elastic center");
    simulate_cmd->add_option("--n", options.trials, "trial count");
    simulate_cmd->add_option("--seed", options.seed, "random seed");

    auto* sweep = model->add_subcommand("sweep", "closure statistics across epsilon");
    add_common(sweep);
    sweep->add_option("--eps", options.eps_list, "descending epsilon list")->delimiter(',');

    auto* counterexample = model->add_subcommand("counterexample",
                                                 "search for a non-topological classical cap");
    add_common(counterexample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*check) return cmd_check(path);
    if (*analyze) return cmd_analyze(path, flags, cap);
    if (*decompose_cmd) {
        if (*out_dir_opt) out_dir = out_dir_value;
        return cmd_decompose(path, out_dir, cap);
    }
    if (*build) return cmd_model_build(options);
    if (*simulate_cmd) return cmd_model_simulate(options);
    if (*sweep) return cmd_model_sweep(options);
    if (*counterexample) return cmd_model_counterexample(options, cap);
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const Error& e) {
        std::cerr << "spslab: " << e.what() << "\n";
        return e.code() == Errc::parse_error ? kExitUsage : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "spslab: " << e.what() << "\n";
        return kExitUsage;
    }
}
