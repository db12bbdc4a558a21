#include "jobs.hpp"

#include "crystalcone/analytic.hpp"
#include "crystalcone/gromov.hpp"
#include "crystalcone/langlands.hpp"
#include "crystalcone/polytopes.hpp"
#include "crystalcone/reps.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace cc::cli {

std::vector<long> parse_int_list(const std::string& s, const char* what) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw ParseError(std::string("bad ") + what + " entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what);
    return out;
}

std::vector<double> parse_s_grid(const std::string& s) {
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw ParseError("bad s-grid entry '" + item + "'");
        parts.push_back(v);
    }
    if (parts.size() != 3) throw ParseError("s-grid must be lo:hi:step");
    double lo = parts[0], hi = parts[1], step = parts[2];
    if (step == 0 || (hi - lo) * step < 0) throw ParseError("s-grid '" + s + "' is empty");
    if (lo >= 0 || hi >= 0) throw ParseError("s-grid values must be negative");
    std::vector<double> grid;
    int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int k = 0; k <= n; ++k) grid.push_back(lo + k * step);
    return grid;
}

json rational(const Q& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

json rationals(const QVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rational(q));
    return a;
}

json matrix(const QMat& m) {
    json a = json::array();
    for (int i = 0; i < m.rows; ++i) a.push_back(rationals(m.row(i)));
    return a;
}

namespace {

json affine(const Affine& h) { return {{"a", rationals(h.a)}, {"c", rational(h.c)}}; }

json hsystem(const HSystem& s, const std::vector<std::string>& names) {
    json ge = json::array(), eq = json::array();
    for (const auto& h : s.ge) ge.push_back(affine(h));
    for (const auto& h : s.eq) eq.push_back(affine(h));
    return {{"ambient_dim", s.dim}, {"variables", names}, {"halfspaces", ge}, {"equations", eq}};
}

QVec weight_of(const std::vector<long>& v, const CartanDatum& g, const char* what) {
    if (static_cast<int>(v.size()) != g.rank)
        throw ParseError(std::string(what) + " needs " + std::to_string(g.rank) + " entries");
    QVec w;
    for (long x : v) w.push_back(Q(x));
    return w;
}

WeylWord word_of(const JobSpec& spec, const CartanDatum& g) {
    if (!spec.word) return longest_word(g);
    WeylWord w(spec.word->begin(), spec.word->end());
    check_word_letters(g, w);
    return w;
}

Weight need_hw(const JobSpec& spec, const CartanDatum& g) {
    if (!spec.hw) throw ParseError(spec.command + " needs --hw");
    std::vector<long> v(spec.hw->begin(), spec.hw->end());
    return weight_of(v, g, "--hw");
}

json seed_json(const Seed& s) {
    json j;
    j["index"] = s.index;
    std::vector<int> mutable_idx, frozen;
    for (int p = 0; p < s.size(); ++p) (s.exchangeable[p] ? mutable_idx : frozen).push_back(s.index[p]);
    j["exchangeable"] = mutable_idx;
    j["frozen"] = frozen;
    j["M"] = s.M;
    j["skew_symmetrizer"] = s.sym;
    j["initial_names"] = s.names;
    std::vector<std::string> vars;
    for (int p = 0; p < s.size(); ++p) vars.push_back("z" + std::to_string(s.index[p]));
    json labels = json::array();
    for (const auto& l : s.labels) labels.push_back(l.to_string(vars));
    j["cluster_variables"] = labels;
    if (!s.degrees.empty()) {
        json deg = json::array();
        for (const auto& d : s.degrees) deg.push_back({{"left", rationals(d.first)}, {"right", rationals(d.second)}});
        j["degrees"] = deg;
    }
    j["history"] = s.history;
    j["skew_symmetrized"] = is_skew_symmetrized(s.M, s.sym);
    return j;
}

json cmd_cone(const JobSpec& spec, const CartanDatum& g, const WeylWord& word) {
    json out;
    HSystem cone;
    std::vector<std::string> names;
    if (spec.string_cone) {
        cone = string_cone(g, word);
        for (int k = 1; k <= cone.dim; ++k) names.push_back("t" + std::to_string(k));
        out["chart"] = "string";
    } else {
        ChartKind kind = parse_chart_kind(spec.chart.value_or("cluster"));
        Chart ch = make_chart(g, word, kind);
        cone = bk_cone(ch);
        names = ch.names;
        out["chart"] = chart_kind_name(kind);
    }
    out["cone"] = hsystem(cone, names);
    out["facets"] = cone.ge.size();
    QMat eqs(static_cast<int>(cone.eq.size()), cone.dim);
    for (int i = 0; i < eqs.rows; ++i)
        for (int j = 0; j < cone.dim; ++j) eqs(i, j) = cone.eq[i].a[j];
    out["dim"] = cone.dim - (eqs.rows ? rank(eqs) : 0);
    InteriorPoint ip = chebyshev_like_point(cone);
    out["interior_point"] = ip.feasible && sgn(ip.slack) > 0 ? rationals(ip.x) : json(nullptr);
    return out;
}

json cmd_count(const JobSpec& spec, const CartanDatum& g, const WeylWord& word) {
    Weight lambda = need_hw(spec, g);
    ChartKind kind = parse_chart_kind(spec.chart.value_or("reduced-factorization"));
    CountResult r = count_dim(g, word, lambda, kind, spec.raw_cone);
    json out;
    out["chart"] = chart_kind_name(kind);
    out["raw_cone"] = spec.raw_cone;
    out["lambda"] = rationals(lambda);
    out["total"] = r.total;
    json bw = json::array();
    for (const auto& [nu, n] : r.by_weight) bw.push_back({{"nu", rationals(nu)}, {"count", n}});
    out["by_weight"] = bw;
    if (is_dominant(lambda)) out["weyl_dimension"] = weyl_dim(spec.raw_cone ? langlands_dual(g) : g, lambda).get_str();
    if (r.empty_certificate) {
        const auto& f = *r.empty_certificate;
        out["empty_certificate"] = {{"y", rationals(f.y)}, {"z", rationals(f.z)}, {"value", rational(f.value)}};
    } else {
        out["empty_certificate"] = nullptr;
    }
    if (spec.wt) {
        std::vector<long> v(spec.wt->begin(), spec.wt->end());
        Weight nu = weight_of(v, g, "--wt");
        out["nu"] = rationals(nu);
        out["weight_count"] = count_weight(g, word, lambda, nu, kind, spec.raw_cone);
    }
    return out;
}

json cmd_poisson(const CartanDatum& g, const WeylWord& word) {
    Seed s = seed_from_word(g, word);
    PTBracketMatrix pt = pt_bracket_matrix(s);
    PTBracketMatrix sp = special_chart_brackets(g, word);
    DarbouxCoordinates d = darboux_coordinates(g, word);
    json out;
    out["bracket_matrix"] = {{"rows", pt.rows}, {"cols", pt.cols}, {"entries", matrix(pt.m)}};
    out["matches_special_chart"] = pt.m == sp.m;
    out["B"] = matrix(d.change.B);
    out["X"] = matrix(d.change.X);
    out["Y"] = matrix(d.change.Y);
    out["C_phi"] = matrix(d.change.C_phi);
    out["j_minus"] = d.change.j_minus;
    out["lambda_to_x"] = matrix(d.lambda_to_x);
    out["darboux_ok"] = d.canonical;
    out["hw_casimirs"] = hw_components_are_casimirs(g, word);
    return out;
}

json cmd_gromov(const JobSpec& spec, const CartanDatum& g, const WeylWord& word) {
    Weight lambda = need_hw(spec, g);
    Q ell = lambda_bound(g, lambda);
    HSystem p = width_polytope(g, word, lambda);
    SearchOptions opt;
    opt.entry_bound = spec.bound;
    SearchResult r = search_embedding(p, ell, opt);
    const double two_pi = 2 * std::numbers::pi;
    json out;
    out["lambda"] = rationals(lambda);
    out["ell_lambda"] = rational(ell);
    out["ell_lambda_2pi"] = two_pi * ell.get_d();
    out["polytope"] = hsystem(p, {});
    out["status"] = r.status == SearchStatus::Found ? "Found" : "NotFound";
    out["candidates"] = r.candidates;
    if (r.best) {
        out["certificate"] = {{"A", matrix(r.best->A)},
                              {"b", rationals(r.best->b)},
                              {"ell", rational(r.best->ell)},
                              {"ell_2pi", two_pi * r.best->ell.get_d()}};
        out["verified"] = verify_certificate(*r.best, p).ok;
    } else {
        out["certificate"] = nullptr;
        out["verified"] = false;
    }
    return out;
}

json cmd_converge(const JobSpec& spec, const CartanDatum& g, const WeylWord& word, std::string& csv) {
    if (!spec.delta) throw ParseError("converge needs --delta");
    if (!spec.s_grid) throw ParseError("converge needs --s-grid");
    Q delta;
    try {
        delta = parse_rational(*spec.delta);
    } catch (const std::exception&) {
        throw ParseError("bad --delta '" + *spec.delta + "'");
    }
    auto grid = parse_s_grid(*spec.s_grid);
    if (sgn(delta) <= 0) fail(ErrorKind::Inconclusive, "margin delta must be positive: boundary points give no decay rate");
    AnalyticContext ctx = analytic_context(g, word);
    std::mt19937 rng(spec.seed);
    PTPoint p = random_pt_point(ctx, delta, rng);
    ConvergenceReport rep = convergence_fit(ctx, p, grid);
    json out;
    out["point"] = {{"x", rationals(p.x)}, {"phi", p.phi}, {"delta", rational(p.delta)}};
    out["s_grid"] = rep.s_grid;
    json br = json::array(), slopes = json::object();
    for (const auto& b : rep.brackets) {
        br.push_back({{"name", b.name}, {"slope", b.slope}, {"used", b.used}, {"deviation", b.deviation}});
        slopes[b.name] = b.slope;
    }
    out["brackets"] = br;
    out["slopes"] = slopes;
    out["sup_deviation"] = rep.sup_deviation;
    out["sup_slope"] = rep.sup_slope;
    out["threshold"] = 0.75 * rep.delta;
    out["inconclusive"] = rep.inconclusive;
    out["pass"] = rep.pass;
    std::ostringstream os;
    os.precision(17);
    os << "s,bracket,deviation\n";
    for (const auto& b : rep.brackets)
        for (size_t t = 0; t < rep.s_grid.size(); ++t) os << rep.s_grid[t] << ',' << b.name << ',' << b.deviation[t] << '\n';
    csv = os.str();
    return out;
}

json cmd_compare(const JobSpec& spec, const CartanDatum& g, const WeylWord& word) {
    CartanDatum dual = langlands_dual(g);
    Chart gc = make_chart(g, word, ChartKind::Reduced), dc = make_chart(dual, word, ChartKind::Reduced);
    ComparisonMap cm = comparison_trop(g, word);
    ConeIsoReport iso = verify_real_cone_isomorphism(bk_cone(gc), bk_cone(dc), cm.full);
    SampleReport sr = sample_integral_images(gc, dc, cm.full, spec.samples);
    DiagramReport dr = check_diagrams(gc, dc, cm);
    auto failures = [](const std::vector<InclusionFailure>& fs) {
        json a = json::array();
        for (const auto& f : fs) a.push_back({{"facet", f.facet}, {"witness", f.witness ? rationals(*f.witness) : json(nullptr)}});
        return a;
    };
    json out;
    out["dual_type"] = dual.name();
    out["psi"] = matrix(cm.full);
    out["forward"] = iso.forward;
    out["backward"] = iso.backward;
    out["failures_forward"] = failures(iso.failures_forward);
    out["failures_backward"] = failures(iso.failures_backward);
    out["samples"] = {{"count", sr.sampled}, {"injective", sr.injective}, {"contained", sr.contained}, {"integral", sr.integral}};
    out["diagrams"] = {{"hw", dr.hw}, {"wt", dr.wt}};
    out["twist_compatible"] = verify_twist_compat(g, word, 50, spec.seed);
    return out;
}

}  // namespace

JobOutput run_job(const JobSpec& spec) {
    bool shaped = spec.type.size() >= 2 && std::isupper(static_cast<unsigned char>(spec.type[0])) &&
                  std::all_of(spec.type.begin() + 1, spec.type.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!shaped) throw ParseError("--type must look like A2, C2, G2");
    CartanDatum g = parse_type(spec.type);
    WeylWord word = word_of(spec, g);
    JobOutput o;
    json& out = o.result;
    out["command"] = spec.command;
    out["type"] = g.name();
    out["word"] = word;
    json body;
    if (spec.command == "cone") body = cmd_cone(spec, g, word);
    else if (spec.command == "count") body = cmd_count(spec, g, word);
    else if (spec.command == "poisson") body = cmd_poisson(g, word);
    else if (spec.command == "gromov") body = cmd_gromov(spec, g, word);
    else if (spec.command == "converge") body = cmd_converge(spec, g, word, o.csv);
    else if (spec.command == "seed") body = seed_json(seed_from_word(g, word));
    else if (spec.command == "mutate") {
        if (!spec.sequence) throw ParseError("mutate needs --sequence");
        body = seed_json(mutate_sequence(seed_from_word(g, word), *spec.sequence));
    } else if (spec.command == "compare") body = cmd_compare(spec, g, word);
    else throw ParseError("unknown command " + spec.command);
    out.update(body);
    return o;
}

}  // namespace cc::cli
