// bflab: exact counting laboratory for bilinear form statistics over the
// rational plane. Every subcommand reads text inputs, computes exactly, and
// emits a deterministic JSON (or CSV) report embedding the run configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bflab/bflab.hpp"

using json = nlohmann::ordered_json;
using namespace bflab;

namespace {

struct RunConfig {
    std::uint64_t seed = 0;
    std::string format = "json";
    std::uint64_t max_cost = 1'000'000'000ull;
    bool force = false;
    double st_constant = 4.0;
    std::string c_param = "1";
    std::string out;

    CostGuard guard() const { return CostGuard{max_cost, force}; }

    json to_json() const {
        return json{{"seed", seed},         {"format", format},
                    {"max_cost", max_cost}, {"force", force},
                    {"st_constant", st_constant}, {"c_param", c_param}};
    }
};

ScalarSet load_scalar_set(const std::string& path) {
    std::istringstream in(read_file(path));
    try {
        return read_scalar_set(in);
    } catch (const std::domain_error& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

PointSet load_point_set(const std::string& path) {
    std::istringstream in(read_file(path));
    try {
        return read_point_set(in);
    } catch (const std::domain_error& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

BilinearForm load_form(const std::string& spec) {
    if (spec == "dot") return BilinearForm::dot();
    if (spec == "cross" || spec == "skew") return BilinearForm::skew();
    std::istringstream in(read_file(spec));
    return read_form(in);
}

json row_to_json(const RatioRow& row) {
    json j{{"name", row.name}, {"measured", row.measured}, {"bound", row.bound}};
    if (row.ratio)
        j["ratio"] = *row.ratio;
    else
        j["ratio"] = nullptr;
    j["flagged"] = row.flagged;
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

json report_to_json(const Report& rep) {
    json j;
    j["suite"] = rep.suite;
    json inputs = json::object();
    for (const auto& [k, v] : rep.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    json rows = json::array();
    for (const auto& row : rep.rows) rows.push_back(row_to_json(row));
    j["rows"] = rows;
    if (rep.fit) {
        json pts = json::array();
        for (const auto& [n, v] : rep.fit->points) pts.push_back(json::array({n, v}));
        j["fit"] = json{{"slope", rep.fit->slope},
                        {"intercept", rep.fit->intercept},
                        {"rms", rep.fit->rms_residual},
                        {"points", pts}};
    }
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

std::string render_csv(const json& j) {
    std::ostringstream out;
    if (j.contains("rows")) {
        out << "name,measured,bound,ratio,flagged\n";
        for (const auto& row : j["rows"]) {
            out << row["name"].get<std::string>() << ',' << row["measured"] << ','
                << row["bound"] << ',';
            if (!row["ratio"].is_null()) out << row["ratio"];
            out << ',' << (row["flagged"].get<bool>() ? 1 : 0) << '\n';
        }
    } else {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured()) continue;
            out << key << ',' << value << '\n';
        }
    }
    return out.str();
}

void emit(json j, const RunConfig& cfg) {
    j["version"] = kVersion;
    j["seed"] = cfg.seed;
    j["config"] = cfg.to_json();
    std::string text = cfg.format == "csv" ? render_csv(j) : j.dump(2) + "\n";
    if (!cfg.out.empty())
        write_file(cfg.out, text);
    else
        std::cout << text;
}

// points files for the incidences counter may carry an optional weight column
std::vector<WeightedPoint> load_weighted_points(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<WeightedPoint> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        auto toks = detail::tokenize(line);
        if (toks.size() != 2 && toks.size() != 3)
            throw std::domain_error(path + ": line " + std::to_string(lineno) +
                                    ": expected 'x y [weight]'");
        WeightedPoint wp{Point{Scalar::parse(toks[0]), Scalar::parse(toks[1])}, 1};
        if (toks.size() == 3) wp.weight = std::stoull(toks[2]);
        out.push_back(wp);
    }
    return out;
}

std::vector<long> parse_n_list(const std::string& arg) {
    std::vector<long> ns;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ns.push_back(std::stol(item));
    }
    if (ns.empty()) throw std::domain_error("empty N list");
    return ns;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bflab: exact bilinear-form counting laboratory"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(0, 1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "seed recorded in reports");
    app.add_option("--format", cfg.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--max-cost", cfg.max_cost, "pair-evaluation budget");
    app.add_flag("--force", cfg.force, "override the cost guard");
    app.add_option("--st-constant", cfg.st_constant, "incidence bound constant");
    app.add_option("--c-param", cfg.c_param, "cluster constant C (rational)");
    app.add_option("--out", cfg.out, "write the report to a file");

    auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // ---- setop / energy / weak-es ----
    std::string a_path, b_path, op_name;
    bool with_table = false;
    CLI::App* setop = sub(&app, "setop", "sum/difference/product/ratio set of two scalar sets");
    setop->add_option("--a", a_path, "scalar set file")->required();
    setop->add_option("--b", b_path, "scalar set file")->required();
    setop->add_option("--op", op_name, "sum|diff|prod|ratio")->required();
    setop->add_flag("--table", with_table, "include the representation table");

    CLI::App* energy = sub(&app, "energy", "additive energy E(A,B)");
    energy->add_option("--a", a_path, "scalar set file")->required();
    energy->add_option("--b", b_path, "scalar set file (defaults to --a)");

    CLI::App* weakes = sub(&app, "weak-es", "weak Erdos-Szemeredi report for A");
    weakes->add_option("--a", a_path, "scalar set file")->required();

    // ---- form ----
    std::string points_path, form_spec = "cross";
    bool want_values = false, want_energy = false, want_pinned = false, want_dist = false;
    std::int64_t split_w0 = -1;
    CLI::App* form = sub(&app, "form", "bilinear form statistics over a point set");
    form->add_option("--points", points_path, "point set file")->required();
    form->add_option("--form", form_spec, "dot|cross|FILE");
    form->add_flag("--values", want_values, "nonzero value set");
    form->add_flag("--energy", want_energy, "form energy");
    form->add_flag("--pinned", want_pinned, "pinned form energy");
    form->add_flag("--distance-energy", want_dist, "squared-distance energy");
    form->add_option("--split", split_w0, "rich/poor split at threshold W0");

    // ---- crossratio ----
    bool count_only = false;
    CLI::App* crossratio = sub(&app, "crossratio", "cross-ratio set R(A)");
    crossratio->add_option("--a", a_path, "scalar set file")->required();
    crossratio->add_flag("--count-only", count_only, "emit the cardinality only");

    CLI::App* crdirs = sub(&app, "crossratio-dirs", "cross-ratios of the directions of P");
    crdirs->add_option("--points", points_path, "point set file")->required();

    // ---- gen ----
    std::string gen_kind = "arithmetic", start_str = "1", step_str = "1", out_path;
    std::uint64_t gen_n = 0, gen_bound = 0, gen_seed = 0;
    bool puncture = false;
    CLI::App* gen = sub(&app, "gen", "deterministic input families");
    gen->require_subcommand(1);
    CLI::App* gen_prog = sub(gen, "progression", "arithmetic or geometric progression");
    gen_prog->add_option("--kind", gen_kind, "arithmetic|geometric");
    gen_prog->add_option("--start", start_str, "first term (rational)");
    gen_prog->add_option("--step", step_str, "step or ratio (rational)");
    gen_prog->add_option("--n", gen_n, "number of terms")->required();
    gen_prog->add_option("--out", out_path, "output file")->required();
    CLI::App* gen_grid = sub(gen, "grid", "Cartesian product A x B");
    gen_grid->add_option("--a", a_path, "scalar set file")->required();
    gen_grid->add_option("--b", b_path, "scalar set file (defaults to --a)");
    gen_grid->add_flag("--puncture", puncture, "remove the origin");
    gen_grid->add_option("--out", out_path, "output file")->required();
    CLI::App* gen_random = sub(gen, "random", "seeded random integer set");
    gen_random->add_option("--seed", gen_seed, "generator seed")->required();
    gen_random->add_option("--n", gen_n, "set size")->required();
    gen_random->add_option("--bound", gen_bound, "values in [-bound, bound]")->required();
    gen_random->add_option("--out", out_path, "output file")->required();
    CLI::App* gen_erdos = sub(gen, "erdos", "grid-plus-pencil construction bundle");
    gen_erdos->add_option("--n", gen_n, "N, a 6th power of an even integer")->required();
    gen_erdos->add_option("--out", out_path, "output directory")->required();

    // ---- count ----
    std::string c_path, d_path, t_path, q_path, lines_path, alpha_str, value_str = "1";
    CLI::App* count = sub(&app, "count", "exact equation and incidence counters");
    count->require_subcommand(1);
    CLI::App* c_affine = sub(count, "affine-product", "solutions of a - b = cd");
    c_affine->add_option("--a", a_path, "scalar set file")->required();
    c_affine->add_option("--b", b_path, "defaults to --a");
    c_affine->add_option("--c", c_path, "defaults to --a");
    c_affine->add_option("--d", d_path, "defaults to --a");
    CLI::App* c_teq = sub(count, "teq", "solutions of t1 t2 = t3 t4 - t5 t6");
    c_teq->add_option("--t", t_path, "scalar set file")->required();
    CLI::App* c_ternary = sub(count, "ternary", "solutions of a1 x1 + a2 x2 + a3 x3 = 0");
    c_ternary->add_option("--a", a_path, "scalar set file")->required();
    c_ternary->add_option("--alpha", alpha_str, "three nonzero rationals, comma separated")
        ->required();
    CLI::App* c_inc = sub(count, "incidences", "weighted point-line incidences");
    c_inc->add_option("--points", points_path, "point file, optional weight column")->required();
    c_inc->add_option("--lines", lines_path, "line file: a b c [weight]")->required();
    CLI::App* c_fv = sub(count, "form-value", "pairs with a fixed nonzero form value");
    c_fv->add_option("--p", points_path, "point set file")->required();
    c_fv->add_option("--q", q_path, "point set file (defaults to --p)");
    c_fv->add_option("--form", form_spec, "dot|cross|FILE");
    c_fv->add_option("--value", value_str, "target value (nonzero rational)");

    // ---- cluster ----
    std::uint64_t m_override = 0;
    CLI::App* cluster = sub(&app, "cluster", "slope clusters, mu(U), and intersection energies");
    cluster->add_option("--a", a_path, "scalar set file (strictly positive)")->required();
    cluster->add_option("--m", m_override, "cluster width M (overrides the chosen value)");
    cluster->add_option("--report", cfg.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- suite ----
    std::string suite_points, suite_a, suite_ns;
    std::int64_t suite_w0 = -1;
    CLI::App* suite = sub(&app, "suite", "per-theorem measurement suites");
    suite->require_subcommand(1);
    CLI::App* s_thm34 = sub(suite, "thm34", "value-set bounds under the rich/poor split");
    s_thm34->add_option("--points", suite_points, "point set file")->required();
    s_thm34->add_option("--w0", suite_w0, "override the threshold w0");
    CLI::App* s_eps1 = sub(suite, "eps1", "|AA+AA| lower bounds");
    s_eps1->add_option("--a", suite_a, "scalar set file")->required();
    CLI::App* s_eps2 = sub(suite, "eps2", "|AA-AA| lower bounds");
    s_eps2->add_option("--a", suite_a, "scalar set file")->required();
    CLI::App* s_constr = sub(suite, "construction", "grid-plus-pencil measurements");
    s_constr->add_option("--n", suite_ns, "comma-separated N values")->required();
    CLI::App* s_weakes = sub(suite, "weak-es", "weak Erdos-Szemeredi rows");
    s_weakes->add_option("--a", suite_a, "scalar set file")->required();
    CLI::App* s_eupper = sub(suite, "e-upper", "form energy against N^3 and N^(10/3)");
    s_eupper->add_option("--points", suite_points, "point set file")->required();
    s_eupper->add_option("--form", form_spec, "dot|cross|FILE");

    // ---- fit ----
    std::string csv_path;
    CLI::App* fit = sub(&app, "fit", "log-log exponent fit of size,value rows");
    fit->add_option("--csv", csv_path, "CSV file of size,value rows")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CostGuard guard = cfg.guard();
        if (setop->parsed()) {
            ScalarSet a = load_scalar_set(a_path), b = load_scalar_set(b_path);
            SetOpKind op = parse_setop(op_name);
            json j{{"op", setop_name(op)},
                   {"card", combine_cardinality(a, b, op, guard)},
                   {"mass", a.size() * b.size()}};
            if (with_table) {
                CountTable t = representation_table(a, b, op, guard);
                json table = json::object();
                for (const auto& [k, c] : t.sorted_entries()) table[k.str()] = c;
                j["table"] = table;
            }
            emit(j, cfg);
        } else if (energy->parsed()) {
            ScalarSet a = load_scalar_set(a_path);
            ScalarSet b = b_path.empty() ? a : load_scalar_set(b_path);
            json j{{"op", "energy"},
                   {"card", combine_cardinality(a, b, SetOpKind::sum, guard)},
                   {"mass", a.size() * b.size()},
                   {"energy", additive_energy(a, b, guard)}};
            emit(j, cfg);
        } else if (weakes->parsed()) {
            WeakEsReport r = weak_es_report(load_scalar_set(a_path), guard);
            emit(json{{"op", "weak-es"},
                      {"energy", r.energy},
                      {"card_aa", r.card_aa},
                      {"card_sum", r.card_sum},
                      {"card_diff", r.card_diff},
                      {"ratio_e_a_over_aa3", r.ratio},
                      {"cs_sum_holds", r.cs_sum_holds},
                      {"cs_diff_holds", r.cs_diff_holds}},
                 cfg);
        } else if (form->parsed()) {
            PointSet p = load_point_set(points_path);
            BilinearForm f = load_form(form_spec);
            json j{{"op", "form"}, {"points", p.size()}};
            if (want_values) {
                ScalarSet t = value_set(p, f, guard);
                j["card"] = t.size();
                json vals = json::array();
                for (const auto& v : t) vals.push_back(v.str());
                j["values"] = vals;
            }
            if (want_energy) j["energy"] = form_energy(p, f, guard);
            if (want_pinned) j["pinned_energy"] = pinned_form_energy(p, f, guard);
            if (want_dist) j["distance_energy"] = distance_energy(p, guard);
            if (form->count("--split")) {
                if (split_w0 < 1) throw std::domain_error("w0 must be a positive integer");
                RichPoorSplit s = split_by_line_richness(p, split_w0);
                j["split"] = json{{"w0", s.threshold}, {"n1", s.poor.size()}, {"n2", s.rich.size()}};
            }
            emit(j, cfg);
        } else if (crossratio->parsed()) {
            ScalarSet a = load_scalar_set(a_path);
            ScalarSet r = cross_ratio_set(a, guard);
            json j{{"op", "crossratio"}, {"card", r.size()}};
            if (!count_only) {
                json vals = json::array();
                for (const auto& v : r) vals.push_back(v.str());
                j["values"] = vals;
            }
            emit(j, cfg);
        } else if (crdirs->parsed()) {
            PointSet p = load_point_set(points_path);
            std::set<Direction> dirset;
            for (const auto& q : p) dirset.insert(direction_of(q));
            std::vector<Direction> dirs(dirset.begin(), dirset.end());
            std::uint64_t k = dirs.size();
            guard.check(k * k * k * k, "direction cross-ratio set");
            std::set<Scalar> values;
            for (std::size_t i = 0; i < dirs.size(); ++i)
                for (std::size_t j2 = 0; j2 < dirs.size(); ++j2)
                    for (std::size_t k2 = 0; k2 < dirs.size(); ++k2)
                        for (std::size_t l = 0; l < dirs.size(); ++l) {
                            if (i == j2 || i == k2 || i == l || j2 == k2 || j2 == l || k2 == l)
                                continue;
                            values.insert(cross_ratio_of_directions(dirs[i], dirs[j2], dirs[k2],
                                                                    dirs[l]));
                        }
            json j{{"op", "crossratio-dirs"}, {"directions", k}, {"card", values.size()}};
            emit(j, cfg);
        } else if (gen->parsed()) {
            if (gen_prog->parsed()) {
                ProgressionKind kind = gen_kind == "geometric" ? ProgressionKind::geometric
                                                               : ProgressionKind::arithmetic;
                if (gen_kind != "geometric" && gen_kind != "arithmetic")
                    throw std::domain_error("unknown progression kind '" + gen_kind + "'");
                ScalarSet s = make_progression(kind, Scalar::parse(start_str),
                                               Scalar::parse(step_str), gen_n);
                std::ostringstream os;
                write_scalar_set(os, s);
                write_file(out_path, os.str());
                emit(json{{"op", "gen-progression"}, {"out", out_path}, {"card", s.size()}}, cfg);
            } else if (gen_grid->parsed()) {
                ScalarSet a = load_scalar_set(a_path);
                ScalarSet b = b_path.empty() ? a : load_scalar_set(b_path);
                PointSet p = make_grid(a, b, puncture);
                std::ostringstream os;
                write_point_set(os, p);
                write_file(out_path, os.str());
                emit(json{{"op", "gen-grid"}, {"out", out_path}, {"card", p.size()}}, cfg);
            } else if (gen_random->parsed()) {
                ScalarSet s = random_set(gen_seed, gen_n, gen_bound);
                std::ostringstream os;
                write_scalar_set(os, s);
                write_file(out_path, os.str());
                emit(json{{"op", "gen-random"}, {"out", out_path}, {"card", s.size()}}, cfg);
            } else {
                ConstructionBundle b = erdos_construction(static_cast<long>(gen_n));
                std::filesystem::create_directories(out_path);
                std::ostringstream p1s, p2s, ls;
                write_point_set(p1s, b.p1);
                write_point_set(p2s, b.p2);
                for (const auto& dir : b.pencil)
                    ls << dir.a().get_str() << ' ' << dir.b().get_str() << '\n';
                write_file(out_path + "/p1.pts", p1s.str());
                write_file(out_path + "/p2.pts", p2s.str());
                write_file(out_path + "/lines.txt", ls.str());
                json meta{{"N", b.n},
                          {"sizes", json{{"p1", b.p1.size()},
                                         {"p2", b.p2.size()},
                                         {"lines", b.pencil.size()}}}};
                write_file(out_path + "/meta.json", meta.dump(2) + "\n");
                emit(json{{"op", "gen-erdos"}, {"out", out_path}, {"n", b.n},
                          {"sizes", meta["sizes"]}},
                     cfg);
            }
        } else if (count->parsed()) {
            if (c_affine->parsed()) {
                ScalarSet a = load_scalar_set(a_path);
                ScalarSet b = b_path.empty() ? a : load_scalar_set(b_path);
                ScalarSet c = c_path.empty() ? a : load_scalar_set(c_path);
                ScalarSet d = d_path.empty() ? a : load_scalar_set(d_path);
                emit(json{{"op", "affine-product"}, {"count", count_affine_product(a, b, c, d, guard)}},
                     cfg);
            } else if (c_teq->parsed()) {
                emit(json{{"op", "teq"}, {"count", count_teq(load_scalar_set(t_path), guard)}}, cfg);
            } else if (c_ternary->parsed()) {
                std::vector<Scalar> alphas;
                std::stringstream ss(alpha_str);
                std::string item;
                while (std::getline(ss, item, ',')) alphas.push_back(Scalar::parse(item));
                if (alphas.size() != 3)
                    throw std::domain_error("--alpha needs exactly three rationals");
                emit(json{{"op", "ternary"},
                          {"count", count_ternary_linear(load_scalar_set(a_path), alphas[0],
                                                          alphas[1], alphas[2], guard)}},
                     cfg);
            } else if (c_inc->parsed()) {
                auto pts = load_weighted_points(points_path);
                std::istringstream ls(read_file(lines_path));
                auto lines = read_lines(ls);
                IncidenceReport r = count_incidences(pts, lines, cfg.st_constant, guard);
                emit(json{{"op", "incidences"},
                          {"count", r.incidences},
                          {"bound", r.bound},
                          {"ratio", r.ratio},
                          {"w_p_max", r.w_p_max},
                          {"w_l_max", r.w_l_max},
                          {"mass_p", r.total_p},
                          {"mass_l", r.total_l}},
                     cfg);
            } else {
                PointSet p = load_point_set(points_path);
                PointSet q = q_path.empty() ? p : load_point_set(q_path);
                emit(json{{"op", "form-value"},
                          {"count", count_form_value(p, q, load_form(form_spec),
                                                     Scalar::parse(value_str), guard)}},
                     cfg);
            }
        } else if (cluster->parsed()) {
            ScalarSet a = load_scalar_set(a_path);
            auto fibers = slope_fibers(a);
            std::uint64_t mass = 0;
            for (const auto& f : fibers) mass += f.members.size();
            ChosenM chosen = choose_M(a.size(), fibers.size(), Scalar::parse(cfg.c_param));
            std::uint64_t m = m_override ? m_override : chosen.m;
            auto clusters = build_clusters(fibers, m);
            std::uint64_t full = 0;
            for (const auto& c : clusters) full += c.full;
            std::uint64_t a2 = a.size() * a.size();
            guard.check(full * (m * (m - 1) / 2) * a2, "cluster mu sweep");

            json rows = json::array();
            unsigned __int128 sum_mu = 0;
            for (const auto& c : clusters) {
                if (!c.full) continue;
                ClusterMuReport r = cluster_mu(c, a, guard);
                sum_mu += r.mu;
                rows.push_back(json{{"min_slope", c.slopes.front().slope.str()},
                                    {"max_slope", c.slopes.back().slope.str()},
                                    {"mu", r.mu},
                                    {"ie_lower_bound", r.ie_lower_bound},
                                    {"ratio_vs_m2a2_over_8", r.ratio_vs_m2a2_over_8}});
            }
            ScalarSet aa = combine(a, a, SetOpKind::product, guard);
            std::uint64_t plus = combine_cardinality(aa, aa, SetOpKind::sum, guard);
            json j{{"op", "cluster"},
                   {"card_a", a.size()},
                   {"fibers", fibers.size()},
                   {"mass_identity_holds", mass == a2},
                   {"dhat", chosen.dhat.str()},
                   {"m", m},
                   {"m_raw", chosen.raw},
                   {"m_clamped", chosen.clamped},
                   {"clusters", clusters.size()},
                   {"full_clusters", full},
                   {"sum_mu", static_cast<std::uint64_t>(sum_mu)},
                   {"aa_plus_aa", plus},
                   {"sum_mu_le_sq", sum_mu <= static_cast<unsigned __int128>(plus) * plus},
                   {"cluster_rows", rows}};
            emit(j, cfg);
        } else if (suite->parsed()) {
            SuiteInput in;
            std::string name;
            if (s_thm34->parsed()) {
                name = "thm34";
                in.points = load_point_set(suite_points);
                if (s_thm34->count("--w0")) {
                    if (suite_w0 < 1) throw std::domain_error("w0 must be a positive integer");
                    in.w0 = static_cast<std::uint64_t>(suite_w0);
                }
            } else if (s_eps1->parsed()) {
                name = "eps1";
                in.scalars = load_scalar_set(suite_a);
            } else if (s_eps2->parsed()) {
                name = "eps2";
                in.scalars = load_scalar_set(suite_a);
            } else if (s_constr->parsed()) {
                name = "construction";
                in.ns = parse_n_list(suite_ns);
            } else if (s_weakes->parsed()) {
                name = "weak-es";
                in.scalars = load_scalar_set(suite_a);
            } else {
                name = "e-upper";
                in.points = load_point_set(suite_points);
                in.form = load_form(form_spec);
            }
            emit(report_to_json(run_suite(name, in, guard)), cfg);
        } else if (fit->parsed()) {
            std::istringstream in(read_file(csv_path));
            std::vector<std::pair<std::uint64_t, std::uint64_t>> records;
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (detail::is_comment_or_blank(line)) continue;
                std::replace(line.begin(), line.end(), ',', ' ');
                std::istringstream row(line);
                std::uint64_t n, v;
                if (!(row >> n >> v))
                    throw std::domain_error(csv_path + ": line " + std::to_string(lineno) +
                                            ": expected 'size,value'");
                records.emplace_back(n, v);
            }
            FitResult f = fit_exponent(records);
            emit(json{{"op", "fit"},
                      {"fit", json{{"slope", f.slope}, {"intercept", f.intercept},
                                   {"rms", f.rms_residual}}},
                      {"points", records.size()}},
                 cfg);
        } else {
            std::cout << app.help();
        }
    } catch (const CostGuardError& e) {
        json err{{"error", e.what()},
                 {"kind", "cost-guard"},
                 {"declared_cost", e.declared_cost},
                 {"budget", e.budget}};
        std::cout << err.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}, {"kind", "precondition"}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }
    return 0;
}
