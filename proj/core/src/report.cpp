#include "statcert/report.hpp"

#include <json.hpp>

#include "statcert/errors.hpp"
#include "statcert/rays.hpp"

namespace statcert {

namespace {

using nlohmann::json;

json jrat(const Rational& v) { return format_rational(v); }

json jvec(const RVector& v) {
    json out = json::array();
    for (long i = 0; i < v.size(); ++i) out.push_back(jrat(v(i)));
    return out;
}

json jindices(const std::vector<long>& v) {
    json out = json::array();
    for (long i : v) out.push_back(i + 1);
    return out;
}

json jmult(const MpecPoint& P, const RVector& lambda) {
    json out;
    json g = json::array(), h = json::array(), G = json::array(), H = json::array();
    for (long i = 0; i < P.num_g(); ++i) g.push_back(jrat(lambda(idx_g(P, i))));
    for (long i = 0; i < P.num_h(); ++i) h.push_back(jrat(lambda(idx_h(P, i))));
    for (long i = 0; i < P.num_pairs(); ++i) G.push_back(jrat(lambda(idx_G(P, i))));
    for (long i = 0; i < P.num_pairs(); ++i) H.push_back(jrat(lambda(idx_H(P, i))));
    out["g"] = g;
    out["h"] = h;
    out["G"] = G;
    out["H"] = H;
    return out;
}

std::string block_string(const RVector& lambda, long from, long count) {
    std::string out = "(";
    for (long i = 0; i < count; ++i) {
        if (i) out += ", ";
        out += format_rational(lambda(from + i));
    }
    return out + ")";
}

std::string tmult(const MpecPoint& P, const RVector& lambda) {
    std::string out = "g: " + block_string(lambda, 0, P.num_g());
    out += ", h: " + block_string(lambda, P.num_g(), P.num_h());
    out += ", G: " + block_string(lambda, P.num_g() + P.num_h(), P.num_pairs());
    out += ", H: " + block_string(lambda, P.num_g() + P.num_h() + P.num_pairs(), P.num_pairs());
    return out;
}

std::string ref_name(const ConstraintRef& r) {
    switch (r.kind) {
        case ConstraintRef::Kind::Ineq: return "g" + std::to_string(r.index + 1);
        case ConstraintRef::Kind::Eq: return "h" + std::to_string(r.index + 1);
        default: return "pair" + std::to_string(r.index + 1);
    }
}

const char* status_name(SetStatus s) {
    switch (s) {
        case SetStatus::Empty: return "empty";
        case SetStatus::Nonempty: return "nonempty";
        default: return "singleton";
    }
}

const char* cert_name(SubregCertificate::Kind k) {
    switch (k) {
        case SubregCertificate::Kind::Polyhedral: return "polyhedral";
        case SubregCertificate::Kind::FirstOrder: return "first-order";
        case SubregCertificate::Kind::SecondOrder: return "second-order";
        case SubregCertificate::Kind::None: return "none";
        default: return "unavailable";
    }
}

const char* check_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Holds: return "holds";
        case CheckStatus::Empty: return "empty";
        case CheckStatus::SupNegative: return "sup-negative";
        default: return "unavailable";
    }
}

json jcert(const SubregCertificate& c) {
    json out;
    out["kind"] = cert_name(c.kind);
    if (c.value) out["value"] = jrat(*c.value);
    if (!c.detail.empty()) out["detail"] = c.detail;
    out["certified"] = c.certified();
    return out;
}

json jworking(const WorkingSet& J) {
    json out;
    out["J_g"] = jindices(J.J_g);
    out["J_G"] = jindices(J.J_G);
    out["J_H"] = jindices(J.J_H);
    return out;
}

std::string tindices(const std::vector<long>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i] + 1);
    }
    return out + "}";
}

std::string tworking(const WorkingSet& J) {
    return "(" + tindices(J.J_g) + ", " + tindices(J.J_G) + ", " + tindices(J.J_H) + ")";
}

Report finish(json& root, const std::vector<std::string>& lines) {
    Report rep;
    rep.json_text = root.dump(2) + "\n";
    for (const std::string& l : lines) rep.text += l + "\n";
    return rep;
}

json jheader(const Problem& p, const char* subcommand) {
    json root;
    root["subcommand"] = subcommand;
    if (!p.name.empty()) root["problem"] = p.name;
    root["n"] = p.point.n;
    return root;
}

}  // namespace

std::string trace_line(const MpecPoint& P, const PivotCycle& c) {
    static const char* blocks[] = {"g", "G", "H"};
    std::string l = "cycle: J = " + tworking(c.J) + ", lambda = " + tmult(P, c.lambda);
    l += ", drop " + std::string(blocks[c.drop_block]) + std::to_string(c.drop_index + 1);
    l += ", d = " + format_vector(c.d);
    if (c.enter_block) {
        l += ", step " + format_rational(*c.step) + ", enter " +
             std::string(blocks[*c.enter_block]) + std::to_string(*c.enter_index + 1);
        l += ", u = " + format_vector(c.u_after);
    } else {
        l += ", unbounded step";
    }
    return l;
}

std::vector<RVector> critical_ray_directions(const MpecPoint& P) {
    const IndexSets sets = classify_indices(P);
    std::vector<RVector> out;
    auto add = [&](const RVector& v) {
        if (is_zero(v)) return;
        for (const RVector& seen : out)
            if (same_direction(seen, v)) return;
        out.push_back(*normalize_ray(v));
    };
    for (const LinearizationBranch& br : critical_branches(P, sets)) {
        const RayBasis basis = extreme_rays(br.sys);
        for (const RVector& r : basis.rays) add(r);
        for (const RVector& l : basis.lineality) {
            add(l);
            add(RVector(-l));
        }
    }
    return out;
}

Report render_classify(const Problem& p, const ClassifyOptions& opts) {
    const MpecPoint& P = p.point;
    const StationarityReport rep = classify(P, opts.directions);
    const IndexSets sets = classify_indices(P);

    json root = jheader(p, "classify");
    json idx;
    idx["active_g"] = jindices(sets.act_g);
    idx["plus_zero"] = jindices(sets.plus_zero);
    idx["zero_plus"] = jindices(sets.zero_plus);
    idx["zero_zero"] = jindices(sets.zero_zero);
    root["index_sets"] = idx;

    json verdicts;
    verdicts["s_stationary"] = rep.s_stationary;
    verdicts["m_stationary"] = rep.m_stationary;
    verdicts["extended_m"] = rep.extended_m.verdict;
    verdicts["linearized_b"] = rep.linearized_b;
    root["verdicts"] = verdicts;
    if (rep.extended_m.failing_direction)
        root["failing_direction"] = jvec(*rep.extended_m.failing_direction);

    json dirs = json::array();
    for (const DirectionResult& d : rep.extended_m.per_direction) {
        json jd;
        jd["u"] = jvec(d.u);
        jd["in_tlin"] = d.in_tlin;
        jd["in_critical"] = d.in_critical;
        if (d.status) jd["limiting_set"] = status_name(*d.status);
        dirs.push_back(jd);
    }
    root["directions"] = dirs;

    json wd;
    wd["confirmed"] = rep.wdmscq.confirmed;
    json gens = json::array();
    for (const auto& [ray, cert] : rep.wdmscq.per_generator) {
        json jg;
        jg["u"] = jvec(ray.u);
        jg["certificate"] = jcert(cert);
        gens.push_back(jg);
    }
    wd["generators"] = gens;
    root["wdmscq"] = wd;
    root["notes"] = rep.notes;

    std::vector<std::string> lines;
    lines.push_back("classify " + (p.name.empty() ? std::string("problem") : p.name));
    lines.push_back(std::string("S-stationary: ") + (rep.s_stationary ? "yes" : "no"));
    lines.push_back(std::string("M-stationary: ") + (rep.m_stationary ? "yes" : "no"));
    std::string ext = rep.extended_m.verdict ? "yes" : "no";
    if (rep.extended_m.failing_direction)
        ext += ", fails at u = " + format_vector(*rep.extended_m.failing_direction);
    lines.push_back("extended M-stationary: " + ext);
    lines.push_back(std::string("B-stationary (linearized form): ") +
                    (rep.linearized_b ? "yes" : "no"));
    for (const DirectionResult& d : rep.extended_m.per_direction) {
        std::string l = "direction " + format_vector(d.u) + ": ";
        l += d.in_tlin ? (d.in_critical ? "critical" : "linearization cone only")
                       : "outside the linearization cone";
        if (d.status) l += std::string(", limiting directional set ") + status_name(*d.status);
        lines.push_back(l);
    }
    lines.push_back(std::string("directional subregularity over the generators: ") +
                    (rep.wdmscq.confirmed ? "confirmed" : "not confirmed"));
    for (const auto& [ray, cert] : rep.wdmscq.per_generator)
        lines.push_back("  generator " + format_vector(ray.u) + ": " +
                        cert_name(cert.kind) +
                        (cert.value ? " (value " + format_rational(*cert.value) + ")" : ""));
    for (const std::string& n : rep.notes) lines.push_back("note: " + n);
    return finish(root, lines);
}

Report render_cones(const Problem& p) {
    const MpecPoint& P = p.point;
    const IndexSets sets = classify_indices(P);
    json root = jheader(p, "cones");

    json idx;
    idx["active_g"] = jindices(sets.act_g);
    idx["plus_zero"] = jindices(sets.plus_zero);
    idx["zero_plus"] = jindices(sets.zero_plus);
    idx["zero_zero"] = jindices(sets.zero_zero);
    root["index_sets"] = idx;

    auto branch_json = [](const std::vector<LinearizationBranch>& branches) {
        json out = json::array();
        for (const LinearizationBranch& br : branches) {
            json jb;
            jb["grad_G_zero"] = jindices(br.grad_G_zero);
            const RayBasis basis = extreme_rays(br.sys);
            json rays = json::array();
            for (const RVector& r : basis.rays) rays.push_back(jvec(r));
            json lin = json::array();
            for (const RVector& l : basis.lineality) lin.push_back(jvec(l));
            jb["rays"] = rays;
            jb["lineality"] = lin;
            out.push_back(jb);
        }
        return out;
    };
    root["linearization_cone"] = branch_json(tlin_branches(P, sets));
    root["critical_cone"] = branch_json(critical_branches(P, sets));

    json gens = json::array();
    for (const GeneratorRay& g : generators_of_Tlin(P).rays) {
        json jg;
        jg["u"] = jvec(g.u);
        jg["grad_G_zero"] = jindices(g.grad_G_zero);
        jg["from_lineality"] = g.from_lineality;
        gens.push_back(jg);
    }
    root["generators"] = gens;

    std::vector<std::string> lines;
    lines.push_back("cones " + (p.name.empty() ? std::string("problem") : p.name));
    lines.push_back("active g: " + tindices(sets.act_g) + ", pairs +0: " +
                    tindices(sets.plus_zero) + ", 0+: " + tindices(sets.zero_plus) +
                    ", 00: " + tindices(sets.zero_zero));
    lines.push_back("linearization cone branches: " +
                    std::to_string(root["linearization_cone"].size()));
    lines.push_back("critical cone branches: " + std::to_string(root["critical_cone"].size()));
    for (const GeneratorRay& g : generators_of_Tlin(P).rays)
        lines.push_back("generator " + format_vector(g.u) +
                        (g.from_lineality ? " (lineality)" : ""));
    return finish(root, lines);
}

Report render_multipliers(const Problem& p, const MultipliersOptions& opts) {
    const MpecPoint& P = p.point;
    const RVector u = opts.direction ? *opts.direction : RVector(RVector::Zero(P.n));
    const std::vector<ConstraintRef> core = opts.core ? *opts.core : default_core_set(P);

    json root = jheader(p, "multipliers");
    root["direction"] = jvec(u);
    json jcore = json::array();
    for (const ConstraintRef& r : core) jcore.push_back(ref_name(r));
    root["core"] = jcore;

    std::vector<std::string> lines;
    lines.push_back("multipliers " + (p.name.empty() ? std::string("problem") : p.name));
    lines.push_back("direction " + format_vector(u));

    json sets = json::object();
    struct Entry {
        const char* key;
        const char* label;
        int lambda0;
        MultVariant variant;
    };
    const Entry entries[] = {
        {"limiting_lambda1", "limiting, lambda0 = 1", 1, MultVariant::Limiting},
        {"regular_lambda1", "regular, lambda0 = 1", 1, MultVariant::Regular},
        {"limiting_lambda0", "limiting, lambda0 = 0", 0, MultVariant::Limiting},
        {"regular_lambda0", "regular, lambda0 = 0", 0, MultVariant::Regular},
    };
    for (const Entry& e : entries) {
        const MultiplierSet S = build_multiplier_set(P, e.lambda0, u, e.variant, core);
        const SetQueryResult q = query(S);
        json js;
        js["status"] = status_name(q.status);
        js["branches"] = S.branches.size();
        if (q.witness) js["witness"] = jmult(P, *q.witness);
        sets[e.key] = js;
        std::string l = std::string(e.label) + ": " + status_name(q.status);
        if (q.witness) l += ", witness " + tmult(P, *q.witness);
        lines.push_back(l);
    }
    root["sets"] = sets;
    return finish(root, lines);
}

Report render_second_order(const Problem& p, const SecondOrderOptions& opts) {
    const MpecPoint& P = p.point;
    std::vector<RVector> dirs = opts.directions;
    if (dirs.empty()) dirs = critical_ray_directions(P);

    json root = jheader(p, "second-order");
    std::vector<std::string> lines;
    lines.push_back("second-order " + (p.name.empty() ? std::string("problem") : p.name));

    json jnec = json::array();
    for (const RVector& u : dirs) {
        const NecessaryVerdict v = necessary_so(P, u);
        json jd;
        jd["u"] = jvec(u);
        const char* oc = v.outcome == NecessaryVerdict::Outcome::Holds      ? "holds"
                         : v.outcome == NecessaryVerdict::Outcome::Violated ? "violated"
                                                                            : "unavailable";
        jd["outcome"] = oc;
        json l1;
        l1["status"] = check_name(v.with_lambda1.status);
        if (v.with_lambda1.witness) l1["witness"] = jmult(P, *v.with_lambda1.witness);
        if (v.with_lambda1.value) l1["value"] = jrat(*v.with_lambda1.value);
        jd["lambda1"] = l1;
        if (!v.lambda1_decisive) {
            json l0;
            l0["status"] = check_name(v.with_lambda0.status);
            if (v.with_lambda0.witness) l0["witness"] = jmult(P, *v.with_lambda0.witness);
            if (v.with_lambda0.value) l0["value"] = jrat(*v.with_lambda0.value);
            jd["lambda0"] = l0;
        }
        jd["subregularity"] = jcert(v.subreg);
        jd["lambda1_decisive"] = v.lambda1_decisive;
        if (!v.note.empty()) jd["note"] = v.note;
        jnec.push_back(jd);
        std::string l = "necessary at " + format_vector(u) + ": " + oc;
        if (!v.note.empty()) l += " (" + v.note + ")";
        lines.push_back(l);
    }
    root["necessary"] = jnec;

    const SufficientReport suff = sufficient_so(P, dirs, opts.mode, opts.use_limiting);
    json jsuff;
    const char* mode = opts.mode == SufficientMode::Existence ? "existence"
                       : opts.mode == SufficientMode::Uniform ? "uniform"
                                                              : "ssosc";
    jsuff["mode"] = mode;
    jsuff["use_limiting"] = suff.use_limiting;
    json jper = json::array();
    for (const SufficientDirection& d : suff.per_direction) {
        json jd;
        jd["u"] = jvec(d.u);
        const char* oc = d.outcome == SufficientDirection::Outcome::Holds  ? "holds"
                         : d.outcome == SufficientDirection::Outcome::Fails ? "fails"
                         : d.outcome == SufficientDirection::Outcome::Inapplicable
                             ? "inapplicable"
                             : "unavailable";
        jd["outcome"] = oc;
        if (d.lambda0) jd["lambda0"] = *d.lambda0;
        if (d.witness) jd["witness"] = jmult(P, *d.witness);
        if (d.value) jd["value"] = jrat(*d.value);
        if (!d.note.empty()) jd["note"] = d.note;
        jper.push_back(jd);
        std::string l = std::string("sufficient (") + mode + ") at " + format_vector(d.u) +
                        ": " + oc;
        if (d.value) l += ", value " + format_rational(*d.value);
        lines.push_back(l);
    }
    jsuff["per_direction"] = jper;
    jsuff["all_hold"] = suff.all_hold;
    jsuff["essential_local_min"] = suff.essential_local_min;
    if (!suff.global_note.empty()) jsuff["note"] = suff.global_note;
    root["sufficient"] = jsuff;

    lines.push_back(std::string("essential local minimizer of second order: ") +
                    (suff.essential_local_min ? "certified" : "not certified"));
    if (!suff.global_note.empty()) lines.push_back("note: " + suff.global_note);
    return finish(root, lines);
}

Report render_strong_m(const Problem& p, const StrongMOptions& opts) {
    const MpecPoint& P = p.point;
    json root = jheader(p, "strong-m");
    std::vector<std::string> lines;
    lines.push_back("strong-m " + (p.name.empty() ? std::string("problem") : p.name));

    const std::optional<WorkingSet> J0 = find_initial_working_set(P);
    if (!J0) {
        root["working_set"] = nullptr;
        root["verdict"] = "no working set exists";
        lines.push_back("no working set exists at the candidate point");
        return finish(root, lines);
    }
    root["initial_working_set"] = jworking(*J0);
    lines.push_back("initial working set " + tworking(*J0));

    const PivotOutcome out = pivot(P, *J0, opts.seed);
    root["seed"] = opts.seed;
    root["redraws"] = out.redraws;
    json jb;
    jb["g"] = jvec(out.b.bg);
    jb["G"] = jvec(out.b.bG);
    jb["H"] = jvec(out.b.bH);
    root["perturbation"] = jb;

    json jtrace = json::array();
    for (const PivotCycle& c : out.trace) {
        json jc;
        jc["working_set"] = jworking(c.J);
        jc["lambda"] = jmult(P, c.lambda);
        const char* blocks[] = {"g", "G", "H"};
        jc["drop"] = {{"block", blocks[c.drop_block]}, {"index", c.drop_index + 1}};
        jc["d"] = jvec(c.d);
        if (c.enter_block) {
            jc["enter"] = {{"block", blocks[*c.enter_block]}, {"index", *c.enter_index + 1}};
            jc["step"] = jrat(*c.step);
        }
        jc["u_after"] = jvec(c.u_after);
        jtrace.push_back(jc);
        lines.push_back(trace_line(P, c));
    }
    root["trace"] = jtrace;

    if (out.kind == PivotOutcome::Kind::StronglyM) {
        root["verdict"] = "strongly M-stationary";
        root["working_set"] = jworking(out.J);
        root["lambda"] = jmult(P, out.lambda);
        root["verified"] = verify_strong_m(P, out.J, out.lambda);
        const bool s_stat =
            set_empty(build_multiplier_set(P, 1, RVector::Zero(P.n), MultVariant::Regular)) ==
            false;
        root["s_stationary"] = s_stat;
        lines.push_back("strongly M-stationary with J = " + tworking(out.J) +
                        ", lambda = " + tmult(P, out.lambda));
        lines.push_back(std::string("certificate verified: ") +
                        (root["verified"].get<bool>() ? "yes" : "no"));
        lines.push_back(std::string("S-stationary: ") + (s_stat ? "yes" : "no"));
    } else {
        root["verdict"] = "descent direction";
        root["descent"] = jvec(*out.descent);
        lines.push_back("descent direction d = " + format_vector(*out.descent) +
                        " with grad f . d = -1");
    }
    return finish(root, lines);
}

Report render_oracle(const Problem& p, const OracleOptions& opts) {
    json root = jheader(p, "oracle");
    root["radius"] = jrat(opts.radius);
    root["resolution"] = opts.resolution;
    std::vector<std::string> lines;
    lines.push_back("oracle " + (p.name.empty() ? std::string("problem") : p.name));

    const OracleResult res = grid_oracle(p, opts.radius, opts.resolution);
    root["found"] = res.found;
    if (res.found) {
        root["x"] = jvec(res.x);
        if (res.f_value) root["f"] = jrat(*res.f_value);
        std::string l = "descent point " + format_vector(res.x);
        if (res.f_value) l += " with f = " + format_rational(*res.f_value);
        lines.push_back(l);
    } else {
        root["note"] = "no counterexample at this resolution";
        lines.push_back("no counterexample at this resolution");
    }
    return finish(root, lines);
}

}  // namespace statcert
