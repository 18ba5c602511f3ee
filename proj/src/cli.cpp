#include "grit/cli.hpp"

#include "grit/embedding.hpp"
#include "grit/error.hpp"
#include "grit/invgen.hpp"
#include "grit/io.hpp"
#include "grit/parallel.hpp"
#include "grit/sampling.hpp"
#include "grit/scenarios.hpp"
#include "grit/stability.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>

namespace grit::cli {

using io::json;

namespace {

struct Config {
    std::string format = "json";
    std::uint64_t seed = 1;
    int threads = 1;

    std::string group, matrix, curve, point, poly, weights, scenario, route = "decomposable";
    bool jet = false, all_rows = false;
    long p = 1, q = 1, r = 1, chi = 0, eta_min = 0, base = 1000;
    int max_rows = 1;
};

// "key: value" lines, nested keys joined by dots.
void render_text(const json& j, const std::string& key, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, key.empty() ? k : key + "." + k, out);
        return;
    }
    if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
        if (flat) {
            out << key << ":";
            for (const auto& v : j) out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
            out << '\n';
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], key + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

class Emitter {
public:
    Emitter(std::ostream& out, bool text) : out_(out), text_(text) {}
    void report(const json& j) {
        if (text_)
            render_text(j, "", out_);
        else
            out_ << j.dump(2) << '\n';
    }
    // One record of a stream.
    void line(const json& j, const std::string& text) {
        if (text_)
            out_ << text << '\n';
        else
            out_ << j.dump() << '\n';
    }

private:
    std::ostream& out_;
    bool text_;
};

std::vector<int> weights_of(const Config& c) {
    if (!c.weights.empty()) {
        std::vector<int> w;
        std::string tok;
        for (std::size_t i = 0; i <= c.weights.size(); ++i) {
            if (i == c.weights.size() || c.weights[i] == ',') {
                try {
                    std::size_t used = 0;
                    w.push_back(std::stoi(tok, &used));
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::logic_error&) {
                    throw ParseError("bad weight \"" + tok + "\" in --weights", i - tok.size());
                }
                tok.clear();
            } else {
                tok += c.weights[i];
            }
        }
        check_weights(w);
        return w;
    }
    if (c.group.empty()) throw DomainError("give --group or --weights");
    return resolve_group(c.group).weights;
}

json point_field(const QMultiVector& mv) { return io::point_to_json(mv); }

QMultiVector load_point(const std::string& path) {
    const json j = io::load_json(path);
    // accepts the output of embed/limit directly
    return io::point_from_json(j.is_object() && j.contains("point") ? j["point"] : j);
}

json certificate_json(const QMultiVector& mv) {
    const auto cert = boundary_certificate(mv);
    const auto pr = project_boundary(mv);
    return {{"pi_wedge", pr.pi_wedge.to_string()},
            {"pi_det", pr.pi_det.to_string()},
            {"in_W_v1", cert.in_W_v1},
            {"in_W_det", cert.in_W_det},
            {"in_boundary_subspaces", cert.in_orbit_boundary_subspaces}};
}

json validation_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json fails = json::array();
        for (const auto& f : c.failures) fails.push_back({{"i", f.i}, {"j", f.j}, {"witness", f.witness}});
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failures", std::move(fails)}});
    }
    return checks;
}

// ---- verify --------------------------------------------------------------

struct Suite {
    json checks = json::array();
    bool ok = true;
    void add(const std::string& name, bool passed, const std::string& detail = "") {
        json c{{"name", name}, {"passed", passed}};
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        ok = ok && passed;
    }
};

std::string counts(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

json verify_scenario(const std::string& name, std::uint64_t seed, bool& ok) {
    const auto found = builtin_group(name);
    if (!found || name == "gn1" || (name.size() == 3 && name[2] > '4'))
        throw DomainError("unknown scenario " + name + " (gn2, gn3, gn4, heisenberg-adjoint)");
    const GroupPresentation p = *found;
    const int n = p.n;
    const auto sz = static_cast<std::size_t>(n);
    const bool jet = name != "heisenberg-adjoint";
    Sampler s(seed);
    Suite suite;

    suite.add("validate_presentation", validate_presentation(p).passed());
    if (n >= 3) {
        GroupPresentation bad = p;
        bad.p[{2, 3}] += Polynomial::parse("a2^2");
        suite.add("corrupted p(2,3) is rejected", !validate_presentation(bad).passed());
    }

    const int samples = 10;
    int good = 0;
    for (int k = 0; k < samples; ++k) good += stabilizer_check(p, s.group_element(p)) ? 1 : 0;
    suite.add("group elements stabilise the base point", good == samples, counts(good, samples));
    good = 0;
    for (int k = 0; k < samples; ++k) good += stabilizer_check(p, s.non_member(p)) ? 0 : 1;
    suite.add("non-members move the base point", good == samples, counts(good, samples));

    const int eq = n >= 4 ? 2 : 5;
    good = 0;
    for (int k = 0; k < eq; ++k) {
        const QMatrix g = s.invertible(sz), a = s.invertible(sz);
        good += plucker<Rational>(p, g * a) == gl_action(g, plucker<Rational>(p, a)) ? 1 : 0;
    }
    suite.add("plucker is GL-equivariant", good == eq, counts(good, eq));
    good = 0;
    for (int k = 0; k < samples; ++k) {
        const QMatrix a = s.invertible(sz);
        good += proj_equal(plucker<Rational>(p, a * s.group_element(p)), plucker<Rational>(p, a)) ? 1 : 0;
    }
    suite.add("plucker is right invariant", good == samples, counts(good, samples));

    const auto base = base_point(p);
    const auto dims = stabilizer_lie_dim(base);
    suite.add("stabiliser dimension of the base point is n", dims.projective == n,
              "projective " + std::to_string(dims.projective) + ", affine " + std::to_string(dims.affine));
    const auto rec = recover_orbit_matrix(p, base);
    suite.add("base point is recovered as an orbit point", rec.has_value() && !boundary_certificate(base).in_orbit_boundary_subspaces);

    if (jet) {
        good = 0;
        for (int k = 0; k < 5; ++k) {
            const QMatrix a = s.invertible(sz);
            std::vector<std::vector<Rational>> cols;
            for (std::size_t j = 0; j < sz; ++j) cols.push_back(a.column(j));
            good += embed_jet(n, cols) == plucker<Rational>(p, a) ? 1 : 0;
        }
        suite.add("embed_jet agrees with plucker", good == 5, counts(good, 5));
    }

    const auto om = omega_extremes(p.weights);
    const bool strict = std::adjacent_find(p.weights.begin(), p.weights.end(), std::greater_equal<>()) == p.weights.end();
    if (strict) suite.add("omega formula matches enumeration", !om.mismatch);
    const auto win = well_adapted_window(p.weights, 1);
    suite.add("well-adapted window is nonempty", win.lo < win.hi, "(" + win.lo.to_string() + ", " + win.hi.to_string() + ")");
    const auto rho = check_rho_lemma(p.weights, Integer(1000));
    suite.add("rho-lemma", rho.holds(), std::to_string(rho.sequences) + " sequences");

    const auto gm = generator_matrix(p);
    if (n <= 3) {
        const auto minors = initial_segment_minors(gm, n);
        good = 0;
        for (const auto& m : minors)
            good += check_U_invariance(m.value, p) && check_tilde_weight(m.value, p.weights).weight_vector ? 1 : 0;
        suite.add("initial minors are invariant weight vectors", good == static_cast<int>(minors.size()),
                  counts(good, static_cast<int>(minors.size())));
    } else {
        // the full list is too long; for each size draw column j of the
        // minor from the support of row j until four nonzero minors appear
        int tried = 0;
        good = 0;
        for (int rows = 1; rows <= n; ++rows) {
            int found_here = 0;
            for (int attempt = 0; attempt < 200 && found_here < 4; ++attempt) {
                std::vector<std::size_t> cols;
                for (int r = 0; r < rows; ++r) {
                    std::vector<std::size_t> support;
                    for (std::size_t j = 0; j < gm.cols(); ++j)
                        if (!gm(static_cast<std::size_t>(r), j).is_zero() && std::find(cols.begin(), cols.end(), j) == cols.end())
                            support.push_back(j);
                    if (support.empty()) break;
                    cols.push_back(support[static_cast<std::size_t>(s.integer(0, static_cast<int>(support.size()) - 1))]);
                }
                if (static_cast<int>(cols.size()) < rows) continue;
                std::sort(cols.begin(), cols.end());
                Matrix<Polynomial> sub(static_cast<std::size_t>(rows), static_cast<std::size_t>(rows));
                for (std::size_t a = 0; a < sub.rows(); ++a)
                    for (std::size_t b = 0; b < sub.cols(); ++b) sub(a, b) = gm(a, cols[b]);
                const Polynomial f = det_laplace(sub);
                if (f.is_zero()) continue;
                ++found_here;
                ++tried;
                good += check_U_invariance(f, p) && check_tilde_weight(f, p.weights).weight_vector ? 1 : 0;
            }
        }
        suite.add("sampled initial minors are invariant weight vectors", good == tried, counts(good, tried));
    }
    suite.add("x12 is not invariant", !check_U_invariance(Polynomial::parse("x12"), p));

    if (name == "gn4") {
        suite.add("stabdim(p4) = 4", dims.projective == 4);
        const auto l2 = i22_point(Rational(2));
        const auto d2 = stabilizer_lie_dim(l2);
        suite.add("stabdim(p22) = 5", d2.projective == 5, "affine " + std::to_string(d2.affine));
        const auto lim = limit_along_curve(p, i22_torus_curve());
        suite.add("torus curve limit is p22", proj_equal(lim.point, l2), "order " + std::to_string(lim.order));
        suite.add("p22 lies in W_v1", boundary_certificate(l2).in_W_v1);
    }
    ok = suite.ok;
    return {{"scenario", name}, {"seed", seed}, {"checks", std::move(suite.checks)}, {"passed", suite.ok}};
}

int dispatch(CLI::App& app, const Config& c, Emitter& emit) {
    const auto sub = [&](const char* name) { return app.got_subcommand(name); };

    if (sub("group")) {
        auto* g = app.get_subcommand("group");
        if (g->got_subcommand("validate")) {
            const auto p = resolve_group(c.group);
            const auto rep = validate_presentation(p);
            emit.report({{"n", p.n}, {"weights", p.weights}, {"checks", validation_json(rep)}, {"passed", rep.passed()}});
            return rep.passed() ? kPass : kCheckFailed;
        }
        emit.report(io::presentation_to_json(resolve_group(c.group)));
        return kPass;
    }
    if (sub("embed")) {
        const QMatrix a = io::rational_matrix_from_json(io::load_json(c.matrix));
        if (c.jet) {
            std::vector<std::vector<Rational>> cols;
            for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
            emit.report({{"point", point_field(embed_jet(static_cast<int>(a.rows()), cols))}});
        } else {
            emit.report({{"point", point_field(plucker<Rational>(resolve_group(c.group), a))}});
        }
        return kPass;
    }
    if (sub("limit")) {
        const auto lim = limit_along_curve(resolve_group(c.group), io::curve_from_json(io::load_json(c.curve)));
        emit.report({{"order", lim.order}, {"point", point_field(lim.point)}, {"certificate", certificate_json(lim.point)}});
        return kPass;
    }
    if (sub("stab")) {
        const auto p = resolve_group(c.group);
        const QMatrix g = io::rational_matrix_from_json(io::load_json(c.matrix));
        const bool fixes = c.route == "coordinatewise" ? stabilizer_check_coordinatewise(p, g) : stabilizer_check(p, g);
        emit.report({{"route", c.route}, {"stabilizes", fixes}});
        return fixes ? kPass : kCheckFailed;
    }
    if (sub("stabdim")) {
        const QMultiVector mv = c.point.empty() ? base_point(resolve_group(c.group)) : load_point(c.point);
        const auto d = stabilizer_lie_dim(mv);
        emit.report({{"projective", d.projective}, {"affine", d.affine}});
        return kPass;
    }
    if (sub("boundary")) {
        const QMultiVector mv = load_point(c.point);
        json rep = certificate_json(mv);
        if (!c.group.empty()) {
            const auto b = recover_orbit_matrix(resolve_group(c.group), mv);
            rep["orbit_matrix"] = b ? io::matrix_to_json(*b) : json(nullptr);
        }
        emit.report(rep);
        return kPass;
    }
    if (sub("weights")) {
        const auto w = weights_of(c);
        json ex = json::array();
        for (const auto& e : enumerate_exponents(w)) ex.push_back({{"k", e.k}, {"weight", e.weight}});
        const auto om = omega_extremes(w);
        json rep{{"weights", w}, {"exponents", std::move(ex)}, {"omega_min", om.omega_min}, {"omega_max", om.omega_max}};
        rep["formula"] = om.formula ? json(*om.formula) : json(nullptr);
        rep["bruteforce"] = om.bruteforce ? json(*om.bruteforce) : json(nullptr);
        rep["mismatch"] = om.mismatch;
        emit.report(rep);
        return kPass;
    }
    if (sub("window")) {
        const auto w = weights_of(c);
        const auto win = well_adapted_window(w, c.p);
        emit.report({{"p", c.p}, {"lo", win.lo.to_string()}, {"hi", win.hi.to_string()},
                     {"interval", "(" + win.lo.to_string() + ", " + win.hi.to_string() + ")"}});
        return kPass;
    }
    if (sub("admissible")) {
        const auto w = weights_of(c);
        std::size_t index = 0;
        for_each_admissible(w, [&](const AdmissibleSequence& s) {
            emit.line({{"index", ++index}, {"sequence", s}}, sequence_text(s));
        });
        emit.line({{"count", index}}, "count " + std::to_string(index));
        return kPass;
    }
    if (sub("rho-lemma")) {
        const auto w = weights_of(c);
        const auto rep = check_rho_lemma(w, Integer(c.base));
        json viol = json::array();
        for (const auto& v : rep.violations) viol.push_back(sequence_text(v));
        emit.report({{"weights", w},
                     {"base", c.base},
                     {"sequences", rep.sequences},
                     {"identity_weight", rep.identity_weight.get_str()},
                     {"min_other_weight", rep.min_other_weight ? json(rep.min_other_weight->get_str()) : json(nullptr)},
                     {"violations", std::move(viol)},
                     {"holds", rep.holds()}});
        return rep.holds() ? kPass : kCheckFailed;
    }
    if (sub("predicates")) {
        const auto w = weights_of(c);
        const auto pr = instability_predicates({c.p, c.q, c.r, c.chi, c.eta_min}, w);
        emit.report({{"det_boundary_unstable", pr.det_boundary_unstable},
                     {"infinity_section_unstable", pr.infinity_section_unstable},
                     {"chi_well_adapted", pr.chi_well_adapted}});
        return kPass;
    }
    if (sub("minors")) {
        const auto gm = generator_matrix(resolve_group(c.group));
        std::size_t count = 0;
        for (const auto& m : initial_segment_minors(gm, c.max_rows, c.all_rows, default_exec())) {
            ++count;
            const std::string v = m.value.to_string();
            emit.line({{"rows", m.rows}, {"cols", m.cols}, {"value", v}}, v);
        }
        emit.line({{"count", count}}, "count " + std::to_string(count));
        return kPass;
    }
    if (sub("invcheck")) {
        const auto p = resolve_group(c.group);
        Polynomial f;
        try {
            f = Polynomial::parse(c.poly);
        } catch (const ParseError& e) {
            io::rethrow_in("--poly", e);
        }
        const bool inv = check_U_invariance(f, p);
        json rep{{"polynomial", f.to_string()}, {"U_invariant", inv}};
        if (!f.is_zero()) {
            const auto tw = check_tilde_weight(f, p.weights);
            rep["weight_vector"] = tw.weight_vector;
            rep["tilde_weight"] = tw.weight ? json(*tw.weight) : json(nullptr);
        }
        emit.report(rep);
        return inv ? kPass : kCheckFailed;
    }
    if (sub("verify")) {
        bool ok = false;
        emit.report(verify_scenario(c.scenario, c.seed, ok));
        return ok ? kPass : kCheckFailed;
    }
    throw DomainError("no command given");
}

}  // namespace

GroupPresentation resolve_group(const std::string& source) {
    if (source.empty()) throw DomainError("missing --group");
    if (std::filesystem::exists(source)) return io::presentation_from_json(io::load_json(source));
    if (auto b = builtin_group(source)) return *b;
    throw DomainError("cannot open " + source + " (nor is it a built-in group)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"grit: graded unipotent invariant toolkit"};
    app.name("grit");
    app.require_subcommand(1);
    app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", c.seed, "seed for sampled checks (GRIT_SEED overrides)");
    app.add_option("--threads", c.threads, "OpenMP threads (1 = sequential)")->check(CLI::PositiveNumber);

    const auto group_opt = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--group", c.group, "presentation JSON file or built-in name");
        if (required) o->required();
    };
    const auto weight_src = [&](CLI::App* s) {
        group_opt(s, false);
        s->add_option("--weights", c.weights, "comma-separated weights, instead of --group");
    };

    auto* group = app.add_subcommand("group", "presentation utilities");
    group->require_subcommand(1);
    group->add_subcommand("validate", "run the presentation checks")->add_option("group", c.group)->required();
    group->add_subcommand("export", "print a presentation as JSON")->add_option("group", c.group)->required();

    auto* embed = app.add_subcommand("embed", "Plucker point of a matrix");
    group_opt(embed, false);
    embed->add_option("--matrix", c.matrix)->required();
    embed->add_flag("--jet", c.jet, "jet embedding of the matrix columns (no group needed)");

    auto* limit = app.add_subcommand("limit", "limit along a Laurent curve");
    group_opt(limit, true);
    limit->add_option("--curve", c.curve)->required();

    auto* stab = app.add_subcommand("stab", "does g fix the base point");
    group_opt(stab, true);
    stab->add_option("--matrix", c.matrix)->required();
    stab->add_option("--route", c.route)->check(CLI::IsMember({"decomposable", "coordinatewise"}));

    auto* stabdim = app.add_subcommand("stabdim", "stabiliser Lie algebra dimension");
    group_opt(stabdim, false);
    stabdim->add_option("--point", c.point, "point JSON; default the base point of --group");

    auto* boundary = app.add_subcommand("boundary", "boundary certificate of a point");
    group_opt(boundary, false);
    boundary->add_option("--point", c.point)->required();

    auto* weights = app.add_subcommand("weights", "summand exponents and omega extremes");
    weight_src(weights);
    auto* window = app.add_subcommand("window", "well-adapted character window");
    weight_src(window);
    window->add_option("--p", c.p);
    auto* adm = app.add_subcommand("admissible", "stream admissible sequences");
    weight_src(adm);
    auto* rho = app.add_subcommand("rho-lemma", "positivity of rho-weights");
    weight_src(rho);
    rho->add_option("--base", c.base);
    auto* pred = app.add_subcommand("predicates", "instability predicates");
    weight_src(pred);
    pred->add_option("--p", c.p);
    pred->add_option("--q", c.q);
    pred->add_option("--r", c.r);
    pred->add_option("--chi", c.chi);
    pred->add_option("--eta-min", c.eta_min);

    auto* minors = app.add_subcommand("minors", "stream nonzero initial-segment minors");
    group_opt(minors, true);
    minors->add_option("--max-rows", c.max_rows)->required();
    minors->add_flag("--all-rows", c.all_rows);

    auto* inv = app.add_subcommand("invcheck", "U-invariance and tilde weight of a polynomial");
    group_opt(inv, true);
    inv->add_option("--poly", c.poly)->required();

    app.add_subcommand("verify", "built-in scenario suite")->add_option("scenario", c.scenario)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0 and print to out
        return app.exit(e, out, err) == 0 ? kPass : kInputError;
    }

    if (const char* env = std::getenv("GRIT_SEED")) {
        try {
            std::size_t used = 0;
            c.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::logic_error&) {
            err << "error: GRIT_SEED must be a non-negative integer\n";
            return kInputError;
        }
    }
    set_threads(c.threads);

    Emitter emit(out, c.format == "text");
    try {
        return dispatch(app, c, emit);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace grit::cli
