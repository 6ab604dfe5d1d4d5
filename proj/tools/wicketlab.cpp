#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wicketlab/wicketlab.hpp"

namespace wl = wicketlab;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerification = 2, kBudget = 3 };

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A failed check whose diagnostics have already been assembled as a report.
struct ReportedFailure {
    json report;
    int code;
};

struct Globals {
    std::uint64_t seed = 0;
    std::string format = "auto";
    std::size_t jobs = 1;
};

double round4(double x) { return std::round(x * 1e4) / 1e4; }

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    return out;
}

template <class F>
auto parse_file(const std::string& path, F read) {
    auto in = open_input(path);
    try {
        return read(in);
    } catch (const wl::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

wl::CapSet read_cap_file(const std::string& path, std::optional<std::size_t> n) {
    return parse_file(path, [&](std::istream& in) { return wl::read_cap(in, n); });
}

json edge_json(const wl::Edge& e) { return json::array({e[0], e[1], e[2]}); }

json cap_json(const wl::CapSet& s) {
    json out = json::array();
    for (const auto& e : s.elements()) out.push_back(e.to_string());
    return out;
}

json triple_json(const wl::Ap3Triple& t) {
    return json::array({t[0].to_string(), t[1].to_string(), t[2].to_string()});
}

void print_text_value(std::ostream& os, const json& v) {
    if (v.is_number_float()) {
        os << std::fixed << std::setprecision(4) << v.get<double>();
        os.unsetf(std::ios::floatfield);
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        bool first = true;
        for (const auto& x : v) {
            if (!first) os << ' ';
            first = false;
            print_text_value(os, x);
        }
    } else {
        os << v.dump();
    }
}

void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        std::cout << key << ": ";
        print_text_value(std::cout, value);
        std::cout << '\n';
    }
}

std::string resolve_format(const Globals& g, const char* fallback) { return g.format == "auto" ? fallback : g.format; }

// cap -------------------------------------------------------------------

json cmd_cap_verify(const std::string& path, std::optional<std::size_t> n) {
    const auto cap = read_cap_file(path, n);
    const auto check = wl::is_ap3_free(cap);
    json r;
    r["ap3-free"] = check.free;
    r["dimension"] = cap.dimension();
    r["size"] = cap.size();
    if (!check.free) {
        r["witness"] = triple_json(*check.witness);
        throw ReportedFailure{r, kVerification};
    }
    return r;
}

json cmd_cap_max(std::size_t n, const std::string& out) {
    const auto result = wl::max_cap_exact(n);
    if (!out.empty()) {
        auto f = open_output(out);
        wl::write_cap(f, result.witness);
    }
    json r;
    r["n"] = n;
    r["size"] = result.size;
    r["cap"] = cap_json(result.witness);
    return r;
}

json cap_summary(const wl::CapSet& cap, const std::string& out) {
    if (!out.empty()) {
        auto f = open_output(out);
        wl::write_cap(f, cap);
    }
    json r;
    r["ap3-free"] = cap.verified();
    r["dimension"] = cap.dimension();
    r["size"] = cap.size();
    r["cap"] = cap_json(cap);
    return r;
}

// build -----------------------------------------------------------------

struct BuildSummary {
    std::string construction;
    std::int64_t n = 0;
    std::size_t set_size = 0;
    const wl::TripartiteHypergraph* graph = nullptr;
    std::vector<wl::WicketWitness> wickets;
};

json coloring_fields(const wl::ColoringResult& c, std::uint64_t vertices) {
    json r;
    r["k"] = c.coloring.k;
    r["seed"] = c.coloring.seed;
    r["attempts"] = c.coloring.attempts;
    r["resamples"] = c.coloring.resample_count;
    r["selected_color"] = c.selected_color;
    r["selected_edges"] = c.selected_edges.size();
    if (!c.selected_edges.empty() && vertices > 1)
        r["exponent"] = round4(std::log(double(c.selected_edges.size())) / std::log(double(vertices)));
    else
        r["exponent"] = nullptr;
    return r;
}

json budget_report(const std::string& message, std::size_t wickets, std::size_t k, const wl::ColoringOptions& opts) {
    json r;
    r["error"] = "budget exhausted";
    r["message"] = message;
    r["wickets"] = wickets;
    r["k"] = k;
    r["seed"] = opts.seed;
    r["max_attempts"] = opts.max_attempts;
    r["max_resamples"] = opts.max_resamples ? json(*opts.max_resamples) : json(100 * (wickets + 1));
    return r;
}

wl::ColoringResult run_coloring(const wl::TripartiteHypergraph& h, const std::vector<wl::WicketWitness>& wickets,
                                std::size_t k, const wl::ColoringOptions& opts) {
    try {
        return wl::color_edges(h, wickets, k, opts);
    } catch (const wl::BudgetExceeded& e) {
        throw ReportedFailure{budget_report(e.what(), wickets.size(), k, opts), kBudget};
    }
}

json build_report(const BuildSummary& s, const Globals& g) {
    const auto& h = *s.graph;
    std::uint64_t vertices = 0;
    for (auto c : h.class_sizes()) vertices += c;
    json r;
    r["construction"] = s.construction;
    r["n"] = s.n;
    r["set_size"] = s.set_size;
    r["vertices"] = vertices;
    r["edges"] = h.edge_count();
    r["linear"] = wl::is_linear(h).linear;
    r["wickets"] = s.wickets.size();
    r["max_dependency_degree"] = wl::wicket_dependency_degree(h.edge_count(), s.wickets);
    r["sixthree"] = wl::find_63(h).size();
    wl::ColoringOptions opts;
    opts.seed = g.seed;
    const auto colouring = run_coloring(h, s.wickets, wl::color_count_for(s.set_size), opts);
    r.update(coloring_fields(colouring, vertices));
    return r;
}

void write_graph(const std::string& path, const wl::TripartiteHypergraph& h) {
    if (path.empty()) return;
    auto f = open_output(path);
    wl::write_hypergraph(f, h);
}

json cmd_build_f3(const std::string& cap_path, std::optional<std::size_t> n, const std::string& out, const Globals& g) {
    auto cap = wl::verify_cap(read_cap_file(cap_path, n));
    const auto b = n ? wl::build_rsz_f3(cap, *n) : wl::build_rsz_f3(cap);
    write_graph(out, b.graph());
    BuildSummary s{"f3", std::int64_t(b.dimension()), cap.size(), &b.graph(), wl::plane_wickets(b)};
    auto r = build_report(s, g);
    r["plane_families"] = wl::enumerate_plane_wickets(b).size();
    r["dependency_bound"] = wl::dependency_degree_bound(cap.size());
    return r;
}

json cmd_build_modular(std::int64_t k, std::optional<std::int64_t> n, const std::string& set_path,
                       const std::string& out, const Globals& g) {
    if (k < 2) throw std::invalid_argument("--k must be at least 2");
    if (n && *n != wl::modular_order(k))
        throw std::invalid_argument("--n " + std::to_string(*n) + " does not equal k^2 - k + 1 = " +
                                    std::to_string(wl::modular_order(k)));
    const auto set = parse_file(set_path, [](std::istream& in) { return wl::read_int_set(in); });
    const auto b = wl::build_modular(set, k);
    write_graph(out, b.graph);
    BuildSummary s{"modular", b.n, b.set.size(), &b.graph, wl::find_wickets(b.graph)};
    auto r = build_report(s, g);
    r["k_param"] = k;
    r["solution"] = wl::find_modular_wicket_assignment(b.set, k).has_value();
    return r;
}

wl::NormMode parse_norm(const std::string& norm) { return norm == "ring" ? wl::NormMode::ring : wl::NormMode::paper; }

json cmd_build_eisenstein(std::int64_t bound, const std::string& norm, const std::string& set_path,
                          const std::string& out, const Globals& g) {
    const auto set = parse_file(set_path, [](std::istream& in) { return wl::read_point_set(in); });
    const auto b = wl::build_eisenstein(set, bound, parse_norm(norm));
    write_graph(out, b.graph);
    BuildSummary s{"eisenstein", bound, b.set.size(), &b.graph, wl::find_wickets(b.graph)};
    auto r = build_report(s, g);
    r["norm"] = norm;
    r["region_size"] = b.region.size();
    r["solution"] = wl::find_eisenstein_wicket_assignment(b).has_value();
    return r;
}

// color -----------------------------------------------------------------

struct ColorArgs {
    std::string cap;
    std::string graph;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::size_t> max_resamples;
    std::size_t attempts = 4;
    std::string out;
};

json cmd_color(const ColorArgs& a, const Globals& g) {
    if (a.cap.empty() == a.graph.empty()) throw std::invalid_argument("give exactly one of --cap or --hypergraph");
    wl::ColoringOptions opts;
    opts.seed = g.seed;
    opts.max_resamples = a.max_resamples;
    opts.max_attempts = a.attempts;

    std::optional<wl::RszF3Build> build;
    wl::TripartiteHypergraph h;
    std::vector<wl::WicketWitness> wickets;
    std::size_t k = 0;
    if (!a.cap.empty()) {
        auto cap = wl::verify_cap(read_cap_file(a.cap, a.n));
        build = a.n ? wl::build_rsz_f3(cap, *a.n) : wl::build_rsz_f3(cap);
        h = build->graph();
        wickets = wl::plane_wickets(*build);
        k = a.k.value_or(wl::color_count_for(cap.size()));
    } else {
        h = parse_file(a.graph, [](std::istream& in) { return wl::read_hypergraph(in); });
        wickets = wl::find_wickets(h);
        k = a.k.value_or(wl::color_count_for(wl::degree_profile(h).max_degree()));
    }
    const auto c = run_coloring(h, wickets, k, opts);
    write_graph(a.out, c.selected);

    std::uint64_t vertices = 0;
    for (auto s : h.class_sizes()) vertices += s;
    std::vector<std::size_t> class_sizes(k, 0);
    for (auto col : c.coloring.assignment) ++class_sizes[col];
    json r;
    r["edges"] = h.edge_count();
    r["wickets"] = wickets.size();
    r.update(coloring_fields(c, vertices));
    r["class_sizes"] = class_sizes;
    r["lower_bound"] = (h.edge_count() + k - 1) / k;
    r["selected_wicket_free"] = wl::find_wickets(c.selected, 1).empty();
    return r;
}

// bounds ----------------------------------------------------------------

json cmd_bounds_exponent(double base) {
    json r;
    r["base"] = round4(base);
    r["exponent"] = round4(wl::asymptotic_exponent(base));
    return r;
}

json cmd_bounds_corollary(double c) {
    const auto b = wl::corollary_cap_bound(c);
    json r;
    r["c"] = round4(c);
    r["base"] = round4(b.base);
    r["reference"] = wl::kCapUpperBoundBase;
    r["improvement"] = b.improves;
    return r;
}

json cmd_bounds_gl(double exponent) {
    json r;
    r["exponent"] = round4(exponent);
    r["c"] = round4(wl::gl_constant(exponent));
    return r;
}

// search ----------------------------------------------------------------

struct SearchArgs {
    std::string mode = "auto";
    std::size_t budget = 20000;
    std::string out;
};

std::optional<wl::SearchMethod> parse_mode(const std::string& mode) {
    if (mode == "exhaustive") return wl::SearchMethod::exhaustive;
    if (mode == "greedy") return wl::SearchMethod::greedy;
    if (mode == "local") return wl::SearchMethod::local;
    return std::nullopt;
}

template <class T>
json search_json(const std::string& problem, const std::string& domain, const wl::SearchResult<T>& res, json set) {
    json r;
    r["problem"] = problem;
    r["domain"] = domain;
    r["method"] = wl::to_string(res.method);
    r["size"] = res.size();
    r["set"] = std::move(set);
    r["verified"] = res.verified;
    r["optimal"] = res.optimal;
    r["greedy_size"] = res.greedy_size ? json(*res.greedy_size) : json(nullptr);
    if (!res.verified) throw ReportedFailure{r, kVerification};
    return r;
}

json search_equation(const std::string& problem, const std::string& domain_name, const std::vector<std::int64_t>& domain,
                     const wl::EquationSpec& e, const SearchArgs& a, const Globals& g) {
    auto method = parse_mode(a.mode).value_or(domain.size() <= wl::kDefaultExhaustiveCap ? wl::SearchMethod::exhaustive
                                                                                         : wl::SearchMethod::local);
    wl::SearchResult<std::int64_t> res;
    if (method == wl::SearchMethod::exhaustive) {
        res = wl::max_free_exhaustive(domain, e);
    } else {
        wl::HeuristicOptions opts;
        opts.method = method;
        opts.anneal.seed = g.seed;
        opts.anneal.budget = a.budget;
        res = wl::max_free_heuristic(domain, e, opts);
    }
    if (!a.out.empty()) {
        auto f = open_output(a.out);
        wl::write_int_set(f, res.set);
    }
    return search_json(problem, domain_name, res, json(res.set));
}

json cmd_search_triangle(std::int64_t bound, const std::string& norm, const SearchArgs& a, const Globals& g) {
    wl::TriangleSearchOptions opts;
    opts.method = parse_mode(a.mode);
    opts.anneal.seed = g.seed;
    opts.anneal.budget = a.budget;
    const auto res = wl::max_trianglefree(bound, parse_norm(norm), opts);
    if (!a.out.empty()) {
        auto f = open_output(a.out);
        wl::write_point_set(f, res.set);
    }
    json set = json::array();
    for (const auto& p : res.set) set.push_back(p.to_string());
    return search_json("triangle", "norm<=" + std::to_string(bound) + " (" + norm + ")", res, std::move(set));
}

// claim1 ----------------------------------------------------------------

std::string edge_label(const wl::Edge& e) {
    return std::to_string(e[0]) + "-" + std::to_string(e[1]) + "-" + std::to_string(e[2]);
}

json cmd_claim1(bool minimality, bool audit, const std::string& csv, const Globals& g) {
    wl::ClaimOptions opts;
    opts.jobs = g.jobs;
    opts.collect_rows = !csv.empty();
    const auto report = wl::verify_claim1(opts);

    json r;
    r["candidates"] = report.candidates;
    r["linear"] = report.linear;
    r["with_wicket"] = report.with_wicket();
    r["with_sixthree"] = report.with_six_three();
    r["both"] = report.both;
    r["wicket_only"] = report.wicket_only;
    r["sixthree_only"] = report.six_three_only;
    r["linear_full_coverage"] = report.linear_full_coverage;
    json coverage = json::object();
    for (auto [covered, count] : report.coverage) coverage[std::to_string(covered)] = count;
    r["coverage"] = coverage;
    json counter = json::array();
    for (const auto& sys : report.counterexamples) {
        json edges = json::array();
        for (const auto& e : sys) edges.push_back(edge_json(e));
        counter.push_back(edges);
    }
    r["counterexamples"] = counter;
    r["verified"] = report.verified();

    if (!csv.empty()) {
        auto f = open_output(csv);
        f << "index,e1,e2,e3,e4,e5,linear,wicket,sixthree,covered\n";
        std::size_t i = 0;
        for (const auto& row : report.rows) {
            f << i++;
            for (const auto& e : row.edges) f << ',' << edge_label(e);
            f << ',' << int(row.linear) << ',' << int(row.wicket) << ',' << int(row.six_three) << ',' << row.covered
              << '\n';
        }
    }
    if (minimality) {
        const auto m = wl::minimality_check();
        json mj;
        mj["candidates"] = m.candidates;
        mj["linear"] = m.linear;
        mj["neither"] = m.neither;
        if (m.witness) {
            json edges = json::array();
            for (const auto& e : *m.witness) edges.push_back(edge_json(e));
            mj["witness"] = edges;
            mj["witness_max_degree"] = wl::degree_profile(wl::grid_system(*m.witness)).max_degree();
        } else {
            mj["witness"] = nullptr;
        }
        r["minimality"] = mj;
    }
    if (audit) {
        const auto a = wl::degree_structure_audit();
        json aj;
        aj["linear"] = a.linear;
        aj["with_degree3"] = a.with_degree3;
        aj["with_degree3_and_sixthree"] = a.with_degree3_and_63;
        aj["without_sixthree"] = a.without_63;
        aj["without_sixthree_max_degree_2"] = a.without_63_max_degree_2;
        aj["without_sixthree_full_coverage"] = a.without_63_full_coverage;
        aj["without_sixthree_six_twos"] = a.without_63_six_twos;
        aj["consistent"] = a.consistent();
        json dist = json::object();
        for (const auto& [key, count] : a.distribution) dist[key] = count;
        aj["distribution"] = dist;
        r["audit"] = aj;
    }
    if (!report.verified()) throw ReportedFailure{r, kVerification};
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wicketlab: wicket-free linear hypergraphs, cap sets and solution-free sets"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"auto", "json", "text"}));
    app.add_option("--jobs", g.jobs, "Worker threads")->envname("WICKETLAB_JOBS")->check(CLI::PositiveNumber);

    std::function<json()> action;
    const char* default_format = "json";

    // cap
    auto* cap = app.add_subcommand("cap", "Cap sets in F_3^n");
    cap->require_subcommand(1);
    std::string cap_path, cap_path2, cap_out;
    std::optional<std::size_t> cap_n;
    std::size_t max_n = 0;
    {
        auto* v = cap->add_subcommand("verify", "Check a cap file for 3-term progressions");
        v->add_option("file", cap_path)->required();
        v->add_option("--n", cap_n, "Dimension (default: from the first element)");
        v->callback([&] {
            default_format = "text";
            action = [&] { return cmd_cap_verify(cap_path, cap_n); };
        });
        auto* m = cap->add_subcommand("max", "Maximum cap by exhaustive search (n <= 3)");
        m->add_option("--n", max_n)->required();
        m->add_option("--out", cap_out, "Write the witness cap");
        m->callback([&] {
            default_format = "text";
            action = [&] { return cmd_cap_max(max_n, cap_out); };
        });
        auto* p = cap->add_subcommand("product", "Cartesian product of two caps");
        p->add_option("first", cap_path)->required();
        p->add_option("second", cap_path2)->required();
        p->add_option("--out", cap_out, "Write the product cap");
        p->callback([&] {
            default_format = "text";
            action = [&] {
                const auto a = wl::verify_cap(read_cap_file(cap_path, std::nullopt));
                const auto b = wl::verify_cap(read_cap_file(cap_path2, std::nullopt));
                return cap_summary(wl::product_cap(a, b), cap_out);
            };
        });
        auto* l = cap->add_subcommand("lift", "Directions S x {1}");
        l->add_option("file", cap_path)->required();
        l->add_option("--out", cap_out, "Write the lifted set");
        l->callback([&] {
            default_format = "text";
            action = [&] { return cap_summary(wl::lift_cap(wl::verify_cap(read_cap_file(cap_path, std::nullopt))), cap_out); };
        });
    }

    // build
    auto* build = app.add_subcommand("build", "Construct a hypergraph and report on it");
    build->require_subcommand(1);
    std::string build_out, set_path, norm = "paper";
    std::int64_t k_param = 0, bound = 0;
    std::optional<std::int64_t> modular_n;
    {
        auto* f = build->add_subcommand("f3", "Lines of F_3^{n+1} with directions S x {1}");
        f->add_option("--cap", cap_path)->required();
        f->add_option("--n", cap_n, "Dimension (needed for an empty cap)");
        f->add_option("--out", build_out, "Write the hypergraph");
        f->callback([&] { action = [&] { return cmd_build_f3(cap_path, cap_n, build_out, g); }; });
        auto* m = build->add_subcommand("modular", "Edges (a, a+s, a+ks) over Z/(k^2-k+1)");
        m->add_option("--k", k_param)->required();
        m->add_option("--n", modular_n, "Modulus; must equal k^2-k+1");
        m->add_option("--set", set_path)->required();
        m->add_option("--out", build_out, "Write the hypergraph");
        m->callback([&] { action = [&] { return cmd_build_modular(k_param, modular_n, set_path, build_out, g); }; });
        auto* e = build->add_subcommand("eisenstein", "Edges (a, a-s, a+ws) over an Eisenstein region");
        e->add_option("--bound", bound)->required();
        e->add_option("--norm", norm)->check(CLI::IsMember({"paper", "ring"}))->capture_default_str();
        e->add_option("--set", set_path)->required();
        e->add_option("--out", build_out, "Write the hypergraph");
        e->callback([&] { action = [&] { return cmd_build_eisenstein(bound, norm, set_path, build_out, g); }; });
    }

    // color
    ColorArgs color_args;
    {
        auto* c = app.add_subcommand("color", "Wicket-free colour class by resampling");
        c->add_option("--cap", color_args.cap, "Build from this cap");
        c->add_option("--n", color_args.n, "Cap dimension");
        c->add_option("--hypergraph", color_args.graph, "Colour this hypergraph file");
        c->add_option("--k", color_args.k, "Number of colours");
        c->add_option("--max-resamples", color_args.max_resamples, "Resamples per attempt");
        c->add_option("--attempts", color_args.attempts)->capture_default_str();
        c->add_option("--out", color_args.out, "Write the selected colour class");
        c->callback([&] { action = [&] { return cmd_color(color_args, g); }; });
    }

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Bound calculators");
    bounds->require_subcommand(1);
    double base = 0, c_value = 0, exponent = 0;
    {
        auto* e = bounds->add_subcommand("exponent", "1 + (3/4) log_3(base)");
        e->add_option("--base", base)->required();
        e->callback([&] {
            default_format = "text";
            action = [&] { return cmd_bounds_exponent(base); };
        });
        auto* c = bounds->add_subcommand("corollary", "Cap bound 3^{(4/3)(1-c)} from ex <= m^{2-c}");
        c->add_option("--c", c_value)->required();
        c->callback([&] {
            default_format = "text";
            action = [&] { return cmd_bounds_corollary(c_value); };
        });
        auto* l = bounds->add_subcommand("gl", "2 - exponent");
        l->add_option("--exponent", exponent)->required();
        l->callback([&] {
            default_format = "text";
            action = [&] { return cmd_bounds_gl(exponent); };
        });
    }

    // search
    auto* search = app.add_subcommand("search", "Largest solution-free sets");
    search->require_subcommand(1);
    SearchArgs search_args;
    std::int64_t search_n = 0;
    auto add_search_options = [&](CLI::App* s) {
        s->add_option("--mode", search_args.mode)
            ->check(CLI::IsMember({"auto", "exhaustive", "greedy", "local"}))
            ->capture_default_str();
        s->add_option("--budget", search_args.budget, "Annealing proposals")->capture_default_str();
        s->add_option("--out", search_args.out, "Write the set");
    };
    {
        auto* e1 = search->add_subcommand("eq1", "3x+y=2z+2w over [n]");
        e1->add_option("--n", search_n)->required()->check(CLI::NonNegativeNumber);
        add_search_options(e1);
        e1->callback([&] {
            action = [&] {
                const auto domain = wl::integer_interval(search_n);
                return search_equation("eq1", "[1," + std::to_string(search_n) + "]", domain, wl::EquationSpec::ruzsa(),
                                       search_args, g);
            };
        });
        auto* e2 = search->add_subcommand("eq2", "kx-(k-1)y=z over Z/(k^2-k+1)");
        e2->add_option("--k", k_param)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));
        add_search_options(e2);
        e2->callback([&] {
            action = [&] {
                const auto m = wl::modular_order(k_param);
                return search_equation("eq2", "Z/" + std::to_string(m), wl::residues(m), wl::EquationSpec::modular(k_param),
                                       search_args, g);
            };
        });
        auto* t = search->add_subcommand("triangle", "Equilateral-triangle-free subsets of an Eisenstein region");
        t->add_option("--bound", bound)->required()->check(CLI::NonNegativeNumber);
        t->add_option("--norm", norm)->check(CLI::IsMember({"paper", "ring"}))->capture_default_str();
        add_search_options(t);
        t->callback([&] { action = [&] { return cmd_search_triangle(bound, norm, search_args, g); }; });
    }

    // claim1
    bool minimality = false, audit = false;
    std::string csv;
    {
        auto* c = app.add_subcommand("claim1", "Exhaustive check of 5-edge systems on the 3x3x3 grid");
        c->add_flag("--minimality", minimality, "Also search 4-edge systems with neither configuration");
        c->add_flag("--audit", audit, "Degree structure audit");
        c->add_option("--csv", csv, "Per-system classification rows");
        c->callback([&] { action = [&] { return cmd_claim1(minimality, audit, csv, g); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    std::string format = resolve_format(g, default_format);
    try {
        emit(action(), format);
        return kOk;
    } catch (const ReportedFailure& f) {
        emit(f.report, format);
        return f.code;
    } catch (const wl::Ap3Violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const wl::VerificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const wl::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const wl::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
