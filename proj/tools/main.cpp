#include "CLI11.hpp"
#include "json.hpp"

#include "torus/acceptance.hpp"
#include "torus/error.hpp"
#include "torus/homology.hpp"
#include "torus/moment.hpp"
#include "torus/params.hpp"
#include "torus/polytope.hpp"
#include "torus/strata.hpp"
#include "torus/symmetry.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace torus;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct Options {
    int n = 5;
    unsigned seed = 7;
    int samples = 100;
    bool tsv = false;
    bool summary = false;
    std::string sigma;
    std::string chart = "12";
    std::string matrix;
    std::string space;
    std::string coeff = "z";
};

// A report: the JSON payload is the contract, the table is for reading.
struct Report {
    json payload;
    std::vector<std::vector<std::string>> table;
    int exit_code = 0;
};

json vector_json(const RatVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(render(v(i)));
    return out;
}

json pairs_json(const AdmissibleSet& s) {
    json out = json::array();
    for (auto& p : s.pairs) out.push_back({p.i, p.j});
    return out;
}

AdmissibleSet parse_sigma(const std::string& text, int n) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("sigma is not JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorKind::Parse, "sigma must be a list of index pairs");
    AdmissibleSet s{n, {}};
    for (auto& entry : doc) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
            throw Error(ErrorKind::Parse, "sigma entries must be pairs of integers");
        const int i = entry[0].get<int>(), j = entry[1].get<int>();
        if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error(ErrorKind::OutOfRange, "bad pair in sigma");
        s.pairs.insert(Pair(i, j));
    }
    if (!is_admissible(n, s.pairs)) throw Error(ErrorKind::NotAdmissible, "sigma " + render(s) + " is not admissible");
    return s;
}

Gaussian gaussian_of(const json& entry) {
    if (entry.is_number_integer()) return Gaussian(Rational(entry.get<long>()));
    if (entry.is_string()) return parse_gaussian(entry.get<std::string>());
    throw Error(ErrorKind::Parse, "matrix entries must be integers or strings such as \"1/2-3i\"");
}

PlaneMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read matrix file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("matrix file is not JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw Error(ErrorKind::Parse, "matrix must be a list of rows");
    std::vector<std::pair<Gaussian, Gaussian>> rows;
    for (auto& row : doc) {
        if (!row.is_array() || row.size() != 2) throw Error(ErrorKind::Parse, "every matrix row needs two entries");
        rows.emplace_back(gaussian_of(row[0]), gaussian_of(row[1]));
    }
    return make_plane(rows);
}

std::string type_tag(const AdmissibleSet& s) {
    if (s.n != 5) return "";
    return tag(classify(polytope_of(s)));
}

Report strata_report(const Options& o) {
    Report r;
    auto sets = enumerate_admissible_sets(o.n);
    std::map<std::string, int> census;
    json rows = json::array();
    r.table.push_back({"sigma", "type", "polytope_dim", "stabilizer_dim", "defect", "param_dim"});
    for (auto& s : sets) {
        const std::string type = type_tag(s);
        if (!type.empty()) ++census[type];
        if (o.summary) continue;
        auto rec = stratum_record(s);
        rows.push_back({{"sigma", pairs_json(s)},
                        {"type", type},
                        {"polytope_dim", rec.polytope_dim},
                        {"stabilizer_dim", rec.stabilizer_dim},
                        {"defect", rec.defect},
                        {"param_dim", rec.param_dim}});
        r.table.push_back({render(s), type, std::to_string(rec.polytope_dim), std::to_string(rec.stabilizer_dim),
                           std::to_string(rec.defect), std::to_string(rec.param_dim)});
    }
    r.payload = {{"n", o.n}, {"total", sets.size()}};
    if (o.n == 5) {
        json by_type = json::object();
        for (auto t : all_polytope_types()) by_type[tag(t)] = census[tag(t)];
        r.payload["census"] = by_type;
    }
    if (o.summary) {
        r.table = {{"type", "count"}};
        const json census_rows = r.payload.value("census", json::object());
        for (auto& [t, c] : census_rows.items()) r.table.push_back({t, std::to_string(c.get<int>())});
        r.table.push_back({"total", std::to_string(sets.size())});
    } else {
        r.payload["strata"] = rows;
    }
    return r;
}

Report polytopes_report(const Options& o) {
    Report r;
    json rows = json::array();
    r.table.push_back({"sigma", "type", "vertices", "dim", "f_vector", "nonsimple"});
    for (auto& s : enumerate_admissible_sets(o.n)) {
        auto poly = polytope_of(s);
        json f = poly.f_vector();
        std::ostringstream fv;
        for (size_t k = 0; k < f.size(); ++k) fv << (k ? "," : "") << f[k].get<int>();
        const std::string type = type_tag(s);
        const int nonsimple = nonsimple_vertex_count(poly);
        rows.push_back({{"sigma", pairs_json(s)},
                        {"type", type},
                        {"vertices", poly.vertices().size()},
                        {"dim", poly.affine_dim()},
                        {"f_vector", f},
                        {"nonsimple_vertices", nonsimple}});
        r.table.push_back({render(s), type, std::to_string(poly.vertices().size()), std::to_string(poly.affine_dim()),
                           fv.str(), std::to_string(nonsimple)});
    }
    r.payload = {{"n", o.n}, {"polytopes", rows}};
    return r;
}

Report fundamental_report(const Options& o) {
    Report r;
    auto table = fundamental_table(o.n);
    json rows = json::array();
    r.table.push_back({"p", "m_p", "q_p", "generator", "type", "orbit_size", "stabilizer_order"});
    for (auto& row : table.rows) {
        const std::string type = o.n == 5 ? tag(row.type) : "";
        rows.push_back({{"p", row.p},
                        {"m_p", row.m_p},
                        {"q_p", row.q_p},
                        {"generator", pairs_json(row.generator)},
                        {"type", type},
                        {"orbit_size", row.orbit_size},
                        {"stabilizer_order", row.stabilizer_order}});
        r.table.push_back({std::to_string(row.p), std::to_string(row.m_p), std::to_string(row.q_p), render(row.generator), type,
                           std::to_string(row.orbit_size), std::to_string(row.stabilizer_order)});
    }
    r.payload = {{"n", o.n}, {"orbits", table.rows.size()}, {"rows", rows}};
    return r;
}

json moment_entry(const PluckerVector& p, std::vector<std::vector<std::string>>& table) {
    AdmissibleSet s{p.n(), support(p)};
    auto poly = polytope_of(s);
    auto x = moment(p);
    const int rank = dmu_rank(p);
    const bool inside = relative_interior_contains(poly.vertices(), x);
    std::ostringstream xs;
    for (Eigen::Index i = 0; i < x.size(); ++i) xs << (i ? "," : "") << render(x(i));
    table.push_back({render(s), xs.str(), std::to_string(rank), std::to_string(poly.affine_dim()), inside ? "yes" : "no"});
    return {{"support", pairs_json(s)},
            {"moment", vector_json(x)},
            {"dmu_rank", rank},
            {"polytope_dim", poly.affine_dim()},
            {"in_relative_interior", inside},
            {"regular_point", is_regular_point(p)}};
}

Report moment_report(const Options& o) {
    Report r;
    r.table.push_back({"support", "moment", "dmu_rank", "polytope_dim", "in_relative_interior"});
    json rows = json::array();
    if (!o.matrix.empty()) {
        rows.push_back(moment_entry(plucker_coordinates(read_matrix(o.matrix)), r.table));
    } else {
        std::mt19937 rng(o.seed);
        std::uniform_int_distribution<int> d(-1, 1);
        while (static_cast<int>(rows.size()) < o.samples) {
            PlaneMatrix m(o.n, 2);
            for (int i = 0; i < o.n; ++i)
                for (int c = 0; c < 2; ++c) m(i, c) = Gaussian(Rational(d(rng)), Rational(d(rng)));
            try {
                rows.push_back(moment_entry(plucker_coordinates(m), r.table));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::RankDeficient) throw;
            }
        }
    }
    long mismatches = 0;
    for (auto& row : rows)
        mismatches += !row["in_relative_interior"].get<bool>() || row["dmu_rank"] != row["polytope_dim"];
    r.payload = {{"n", o.n}, {"samples", rows.size()}, {"mismatches", mismatches}, {"points", rows}};
    r.exit_code = mismatches ? kExitMismatch : 0;
    return r;
}

Report check_transitions_report(const Options& o) {
    Report r;
    std::mt19937 rng(o.seed);
    long closed = 0, cocycle = 0;
    const auto charts = all_pairs(5);
    std::uniform_int_distribution<size_t> pick(0, charts.size() - 1);
    for (int k = 0; k < o.samples; ++k) {
        auto t = random_main_triple(rng);
        closed += !(transition({1, 2}, {1, 3}, t) == transition_12_13_closed(t));
        const Pair a = charts[pick(rng)], b = charts[pick(rng)], c = charts[pick(rng)];
        cocycle += !(transition(b, c, transition(a, b, t)) == transition(a, c, t));
    }
    r.payload = {{"samples", o.samples},
                 {"closed_form_failures", closed},
                 {"cocycle_failures", cocycle},
                 {"verdict", closed + cocycle == 0 ? "pass" : "fail"}};
    r.table = {{"check", "failures"}, {"closed_form", std::to_string(closed)}, {"cocycle", std::to_string(cocycle)}};
    r.exit_code = closed + cocycle ? kExitMismatch : 0;
    return r;
}

Report virtual_report(const Options& o) {
    if (o.sigma.empty()) throw Error(ErrorKind::Usage, "params virtual needs --sigma");
    Report r;
    auto family = virtual_space(parse_sigma(o.sigma, 5), parse_pair(o.chart));
    json pieces = json::array();
    r.table.push_back({"piece"});
    for (auto& piece : family.pieces) {
        pieces.push_back(piece.describe());
        r.table.push_back({piece.describe()});
    }
    std::mt19937 rng(o.seed);
    json samples = json::array();
    bool embedded = true;
    for (auto& u : family.sample(rng, 5)) {
        samples.push_back(render(u));
        embedded = embedded && satisfies_embedding_equations(five_of_chart(family.chart, u));
    }
    r.payload = {{"sigma", pairs_json(family.sigma)}, {"chart", render(family.chart)}, {"type", tag(family.type)},
                 {"pieces", pieces},                {"samples", samples},               {"samples_embedded", embedded}};
    return r;
}

Report embed_report(const Options& o) {
    if (o.matrix.empty()) throw Error(ErrorKind::Usage, "params embed needs --matrix");
    Report r;
    auto e = embed_five(plucker_coordinates(read_matrix(o.matrix)));
    const char* labels[5] = {"1234", "1235", "1245", "1345", "2345"};
    json coords = json::object();
    r.table.push_back({"subset", "cross_ratio"});
    for (int k = 0; k < 5; ++k) {
        coords[labels[k]] = render(e.coords[static_cast<size_t>(k)]);
        r.table.push_back({labels[k], render(e.coords[static_cast<size_t>(k)])});
    }
    r.payload = {{"coordinates", coords}, {"equations_hold", e.valid}};
    r.exit_code = e.valid ? 0 : kExitMismatch;
    return r;
}

HomologyProfile space_homology(const std::string& space, Coefficients c) {
    if (space == "g42") return orbit_space_homology(4, c);
    if (space == "g52") return orbit_space_homology(5, c);
    if (space == "X") return quotient_by_g42_homology(c);
    return stage_homology(parse_stage(space), c);
}

Report homology_report(const Options& o) {
    if (o.space.empty()) throw Error(ErrorKind::Usage, "homology needs --space");
    Report r;
    auto h = space_homology(o.space, parse_coefficients(o.coeff));
    r.payload = json::array();
    r.table.push_back({"degree", "free_rank", "torsion"});
    for (int d = 0; d <= h.top_degree(); ++d) {
        const auto g = h.at(d);
        json torsion = json::array();
        std::string text;
        for (auto& t : g.torsion) {
            torsion.push_back(t.convert_to<long>());
            text += (text.empty() ? "" : ",") + t.str();
        }
        r.payload.push_back({{"degree", d}, {"free_rank", g.rank}, {"torsion", torsion}});
        r.table.push_back({std::to_string(d), std::to_string(g.rank), text});
    }
    return r;
}

Report report_all(const Options& o) {
    if (o.n != 5) throw Error(ErrorKind::Unsupported, "the acceptance suite is defined for n = 5");
    Report r;
    r.payload = json::array();
    r.table.push_back({"criterion", "verdict", "title", "detail", "seconds"});
    bool all = true;
    for (auto& c : run_acceptance(o.seed)) {
        all = all && c.pass;
        r.payload.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
        std::ostringstream secs;
        secs.precision(2);
        secs << std::fixed << c.seconds;
        r.table.push_back({std::to_string(c.id), c.pass ? "PASS" : "FAIL", c.title, c.detail, secs.str()});
    }
    r.exit_code = all ? 0 : kExitMismatch;
    return r;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BoundaryNotSquareZero:
        case ErrorKind::InexactSequence:
        case ErrorKind::AmbiguousExtension: return kExitInternal;
        default: return kExitValidation;
    }
}

void emit(const Report& r, const std::string& command, const Options& o) {
    if (o.tsv) {
        for (auto& row : r.table) {
            for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? "\t" : "") << row[k];
            std::cout << '\n';
        }
        return;
    }
    json out = {{"command", command}, {"seed", o.seed}, {"payload", r.payload}};
    std::cout << out.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torus orbits on complex Grassmannians: strata, polytopes, parameters and homology"};
    app.require_subcommand(1);
    Options o;

    auto output_flags = [&](CLI::App* sub) {
        auto* json_flag = sub->add_flag("--json", "JSON output (default)");
        sub->add_flag("--tsv", o.tsv, "tab-separated table")->excludes(json_flag);
        sub->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    };
    auto n_option = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of coordinates")->check(CLI::Range(3, 7))->capture_default_str();
    };

    auto* strata = app.add_subcommand("strata", "admissible sets and their invariants");
    n_option(strata);
    strata->add_flag("--summary", o.summary, "type census only");
    output_flags(strata);

    auto* polytopes = app.add_subcommand("polytopes", "admissible polytopes");
    n_option(polytopes);
    output_flags(polytopes);

    auto* fundamental = app.add_subcommand("fundamental", "orbits of strata under coordinate permutations");
    n_option(fundamental);
    output_flags(fundamental);

    auto* moment_cmd = app.add_subcommand("moment", "moment map images of sampled or given planes");
    n_option(moment_cmd);
    moment_cmd->add_option("--samples", o.samples, "number of random planes")->check(CLI::PositiveNumber)->capture_default_str();
    moment_cmd->add_option("--matrix", o.matrix, "JSON file with the rows of a plane matrix");
    output_flags(moment_cmd);

    auto* params = app.add_subcommand("params", "parameter spaces of the main stratum for n = 5");
    params->require_subcommand(1);
    auto* transitions = params->add_subcommand("check-transitions", "closed-form transition and cocycle checks");
    transitions->add_option("--samples", o.samples, "number of random triples")->check(CLI::PositiveNumber)->capture_default_str();
    output_flags(transitions);
    auto* virtual_cmd = params->add_subcommand("virtual", "virtual parameter space of a stratum");
    virtual_cmd->add_option("--sigma", o.sigma, "admissible set as JSON, e.g. [[1,2],[1,3]]")->required();
    virtual_cmd->add_option("--chart", o.chart, "chart index pair")->capture_default_str();
    output_flags(virtual_cmd);
    auto* embed = params->add_subcommand("embed", "cross-ratio embedding of a main-stratum plane");
    embed->add_option("--matrix", o.matrix, "JSON file with the rows of a plane matrix")->required();
    output_flags(embed);

    auto* homology_cmd = app.add_subcommand("homology", "homology of the orbit spaces and their filtration stages");
    homology_cmd->add_option("--space", o.space, "g42, g52, V1, L1, L2, V21, V2, X (also V21_rel_L2, V32, V3)")->required();
    homology_cmd->add_option("--coeff", o.coeff, "z or z2")->check(CLI::IsMember({"z", "z2"}))->capture_default_str();
    output_flags(homology_cmd);

    auto* report = app.add_subcommand("report-all", "run the acceptance suite");
    n_option(report);
    output_flags(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    std::string command;
    for (int k = 1; k < argc; ++k) command += (k > 1 ? " " : "") + std::string(argv[k]);

    try {
        Report r;
        if (strata->parsed()) r = strata_report(o);
        else if (polytopes->parsed()) r = polytopes_report(o);
        else if (fundamental->parsed()) r = fundamental_report(o);
        else if (moment_cmd->parsed()) r = moment_report(o);
        else if (transitions->parsed()) r = check_transitions_report(o);
        else if (virtual_cmd->parsed()) r = virtual_report(o);
        else if (embed->parsed()) r = embed_report(o);
        else if (homology_cmd->parsed()) r = homology_report(o);
        else r = report_all(o);
        emit(r, command, o);
        return r.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
