#include "polartree/session.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "polartree/fixtures.hpp"

namespace polartree {

using Json = nlohmann::ordered_json;

const char* const kCommands[8] = {"roots", "tree", "analyze", "verify", "factor", "compare", "reduce", "generic"};

namespace {

constexpr int kReportVersion = 1;

std::string q(const Rational& r) { return rational_to_string(r); }

const std::string& name_of(const Tree& t, int id) { return t.bars.at(static_cast<size_t>(id)).name; }

std::string height_of(const Bar& b) { return b.infinite() ? "inf" : exponent_to_string(b.h()); }

std::string kind_name(Placement::Kind k) {
    switch (k) {
        case Placement::Kind::Leaves:
            return "leaves";
        case Placement::Kind::Bounded:
            return "bounded";
        case Placement::Kind::Root:
            return "root";
    }
    return "leaves";
}

Json names(const Tree& t, const std::vector<int>& ids) {
    Json a = Json::array();
    for (int id : ids) a.push_back(name_of(t, id));
    return a;
}

// cover of the supporting point of a collinear bar; nullopt when none exists
std::optional<std::vector<int>> cover_below(const Tree& t, const TreeAnalysis& an, int bar) {
    const Bar& b = t.bars[static_cast<size_t>(bar)];
    try {
        if (bar == Tree::ground) {
            if (b.growth.empty()) return std::vector<int>{};
            return cover_of(t, an, Tree::ground, b.growth.begin()->first);
        }
        const Trunk& tr = t.trunks[static_cast<size_t>(b.trunk)];
        return cover_of(t, an, tr.base_bar, tr.point);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoCover) throw;
        return std::nullopt;
    }
}

Json input_json(const PairSpec& spec, const PairInput& in) {
    Json j;
    j["name"] = spec.name;
    j["f"] = spec.f;
    j["g"] = spec.g;
    j["laurent"] = spec.laurent;
    if (in.fixture) j["fixture"] = *in.fixture;
    return j;
}

Json options_json(const SessionOptions& o) {
    Json j;
    j["field"] = o.field;
    j["trunc"] = o.trunc ? Json(q(*o.trunc)) : Json(nullptr);
    j["laurent"] = o.laurent;
    j["shift"] = o.shift ? Json(*o.shift) : Json(nullptr);
    j["s"] = o.s ? Json(*o.s) : Json(nullptr);
    return j;
}

Json roots_json(const PairResult& r) {
    Json j;
    j["field"] = r.field->conductor();
    j["truncation"] = q(r.root_trunc);
    j["E1"] = r.roots_f.E + r.pair.f_offset;
    j["E2"] = r.roots_g.E + r.pair.g_offset;
    auto list = [&](const Expansion& e) {
        Json a = Json::array();
        for (const auto& x : e.roots) {
            Json o;
            o["series"] = x.series.to_string();
            if (r.reduction) o["original"] = to_original(x.series, r.reduction->s).to_string();
            a.push_back(o);
        }
        return a;
    };
    j["f"] = list(r.roots_f);
    j["g"] = list(r.roots_g);
    return j;
}

Json tree_json(const PairResult& r, bool marks) {
    const Tree& t = r.tree;
    Json j;
    j["p"] = t.p;
    j["q"] = t.q;
    j["E1"] = t.E1;
    j["E2"] = t.E2;
    j["D"] = t.D;
    j["field"] = t.field ? t.field->conductor() : 1;
    Json bars = Json::array();
    for (const auto& b : t.bars) {
        if (b.infinite()) continue;
        Json o;
        o["name"] = b.name;
        o["height"] = height_of(b);
        o["lambda"] = b.lambda.to_string();
        o["parent"] = b.parent >= 0 ? Json(name_of(t, b.parent)) : Json(nullptr);
        Json growth = Json::array();
        for (const auto& [pt, tr_id] : b.growth) {
            const Trunk& tr = t.trunks[static_cast<size_t>(tr_id)];
            Json gp;
            gp["point"] = pt.to_string();
            gp["bimultiplicity"] = {tr.s, tr.t};
            const Bar& top = t.bars[static_cast<size_t>(tr.top_bar)];
            gp["bar"] = top.infinite() ? Json(nullptr) : Json(top.name);
            if (marks) {
                const PointInfo* pi = r.analysis.at(b.id).point(pt);
                gp["collinear"] = pi && pi->collinear;
            }
            growth.push_back(gp);
        }
        o["growth"] = growth;
        bars.push_back(o);
    }
    j["bars"] = bars;
    j["classes"] = Json::array();
    if (marks) {
        for (const auto& cls : r.analysis.classes) {
            if (t.bars[static_cast<size_t>(cls.front())].infinite()) continue;
            j["classes"].push_back(names(t, cls));
        }
    }
    return j;
}

Json bars_json(const PairResult& r) {
    const Tree& t = r.tree;
    Json a = Json::array();
    for (const auto& b : t.bars) {
        if (b.infinite()) continue;
        const BarAnalysis& an = r.analysis.at(b.id);
        Json o;
        o["name"] = b.name;
        o["height"] = height_of(b);
        o["nu_f"] = q(an.nu_f);
        o["nu_g"] = q(an.nu_g);
        o["mero"] = an.mero_string();
        o["collinear"] = an.collinear;
        o["purely_noncollinear"] = an.purely_noncollinear;
        if (an.collinear) {
            auto cov = cover_below(t, r.analysis, b.id);
            o["cover"] = cov ? names(t, *cov) : Json(nullptr);
        }
        Json pts = Json::array();
        for (const auto& pi : an.points) {
            Json p;
            p["z"] = pi.z.to_string();
            p["bimultiplicity"] = {pi.p, pi.q};
            p["delta"] = q(pi.delta);
            p["kind"] = pi.collinear ? "C" : "N";
            if (pi.collinear && pi.zero_mult > 0) p["mero_multiplicity"] = pi.zero_mult;
            p["postbar"] = t.bars[static_cast<size_t>(pi.postbar)].infinite() ? Json(nullptr)
                                                                               : Json(name_of(t, pi.postbar));
            pts.push_back(p);
        }
        o["points"] = pts;
        Json zeros = Json::array();
        for (const auto& [z, k] : an.pure_zeros) zeros.push_back({{"z", z.to_string()}, {"multiplicity", k}});
        o["pure_zeros"] = zeros;
        Json unres = Json::array();
        for (const auto& [p, k] : an.unresolved_zeros) unres.push_back({{"factor", p.to_string()}, {"multiplicity", k}});
        o["unresolved_zeros"] = unres;
        o["m"] = an.m;
        o["m_star"] = an.m_star;
        o["n"] = an.n;
        o["c"] = an.c;
        o["tau"] = an.tau;
        o["mu"] = an.mu;
        a.push_back(o);
    }
    return a;
}

Json predictions_json(const PairResult& r) {
    const Tree& t = r.tree;
    const TreeAnalysis& an = r.analysis;
    Json out;
    for (const auto& b : t.bars) {
        if (b.infinite()) continue;
        const BarAnalysis& a = an.at(b.id);
        if (a.collinear) continue;
        Json o;
        Json tp;
        for (const auto& [z, n] : a.T_point) tp[z.to_string()] = n;
        o["T_point"] = tp;
        o["T_unlocated"] = a.T_pooled;
        o["T_total"] = a.T_total;
        Json cs = Json::array();
        for (const auto& pi : a.points) {
            if (!pi.collinear) continue;
            Json c;
            c["point"] = pi.z.to_string();
            try {
                c["cover"] = names(t, cover_of(t, an, b.id, pi.z));
                c["count"] = predict_C(t, an, b.id, pi.z);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoCover) throw;
                c["cover"] = nullptr;
            }
            cs.push_back(c);
        }
        o["collinear_count"] = cs;
        try {
            o["repair"] = names(t, repair_of(t, an, b.id));
            o["weeds"] = weeds(t, an, b.id);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoCover) throw;
            o["repair"] = nullptr;
        }
        o["basics"] = names(t, basics_of(t, an, b.id));
        o["total_via_basics"] = total_via_basics(t, an, b.id);
        out[b.name] = o;
    }
    return out.is_null() ? Json::object() : out;
}

Json record_json(const Tree& t, const PolarRecord& r) {
    Json o;
    o["series"] = r.series.to_string();
    if (r.algebraic_at) {
        o["algebraic_at"] = exponent_to_string(*r.algebraic_at);
        o["psi"] = r.psi.to_string();
    }
    o["count"] = r.count;
    o["multiplicity"] = r.multiplicity;
    o["kind"] = kind_name(r.placement.kind);
    o["bar"] = name_of(t, r.placement.bar);
    if (r.placement.kind != Placement::Kind::Root) o["height"] = exponent_to_string(r.placement.height);
    o["point"] = r.placement.point ? Json(r.placement.point->to_string()) : Json(nullptr);
    Json climb = Json::array();
    for (const auto& [bar, pt] : r.placement.climb) climb.push_back({name_of(t, bar), pt.to_string()});
    o["climb"] = climb;
    return o;
}

Json oracle_json(const PairResult& r) {
    Json j;
    j["J"] = r.oracle.J.to_string();
    j["E"] = r.oracle.E;
    j["K"] = r.oracle.K;
    j["truncation"] = q(r.oracle.trunc);
    j["coinciding"] = r.oracle.coinciding;
    Json recs = Json::array();
    for (const auto& rec : r.oracle.records) recs.push_back(record_json(r.tree, rec));
    j["records"] = recs;
    return j;
}

Json verification_json(const VerificationReport& v) {
    Json j;
    j["pass"] = v.pass();
    j["total"] = v.checks.size();
    j["failures"] = v.failures();
    Json a = Json::array();
    for (const auto& c : v.checks) {
        a.push_back({{"family", c.family},
                     {"subject", c.subject},
                     {"predicted", c.predicted},
                     {"observed", c.observed},
                     {"pass", c.pass}});
    }
    j["checks"] = a;
    return j;
}

Json factors_json(const PairResult& r) {
    const Tree& t = r.tree;
    const FactorReport& f = r.factors;
    Json j;
    j["E"] = f.E;
    j["complete"] = f.complete;
    Json cls = Json::array();
    for (const auto& c : f.classes) {
        Json o;
        o["bars"] = names(t, c.bars);
        o["height"] = exponent_to_string(c.height);
        o["collinear"] = c.collinear;
        o["P_order"] = c.P_order;
        o["Q_order"] = c.Q_order;
        o["P_records"] = c.P;
        o["Q_records"] = c.Q;
        if (c.P_top) o["P_top"] = c.P_top->to_string();
        if (!c.collinear) {
            o["m_star"] = c.m_star;
            o["I_f"] = {{"formula", q(c.I_f_formula)}, {"direct", q(c.I_f_direct)}, {"truncation", q(c.I_f_top)}};
            o["I_g"] = {{"formula", q(c.I_g_formula)}, {"direct", q(c.I_g_direct)}, {"truncation", q(c.I_g_top)}};
        }
        cls.push_back(o);
    }
    j["classes"] = cls;
    j["ground"] = {{"order", f.Q_ground_order}, {"records", f.Q_ground}};
    j["coinciding"] = f.coinciding;
    j["unassigned"] = f.unassigned;
    return j;
}

Json leave_heights(const PairResult& r) {
    std::map<Rational, int> h;
    for (const auto& rec : r.oracle.records)
        if (rec.placement.kind != Placement::Kind::Root) h[rec.placement.height] += rec.count;
    Json a = Json::array();
    for (const auto& [e, n] : h) a.push_back({{"height", exponent_to_string(e)}, {"count", n}});
    return a;
}

Json reduction_json(const PairResult& r) {
    Json j;
    if (!r.reduction) return nullptr;
    const Reduction& red = *r.reduction;
    j["s"] = red.s;
    j["p"] = red.p;
    j["q"] = red.q;
    j["f"] = red.pair.f.to_string();
    j["g"] = red.pair.g.to_string();
    j["f_offset"] = red.pair.f_offset;
    j["g_offset"] = red.pair.g_offset;
    j["effective_jacobian"] = effective_jacobian(red.pair).to_string();
    j["jacobian_correspondence"] = jacobian_correspondence(r.F, r.G, red.s);
    return j;
}

Json shear_json(const PairResult& r) {
    if (!r.shear) return nullptr;
    return {{"c", r.shear->c.to_string()}, {"f", r.shear->f.to_string()}, {"g", r.shear->g.to_string()},
            {"m", r.shear->m}};
}

// ---- text rendering from the report ----

void render_tree_text(const Json& tree, std::ostream& os) {
    os << "B* h=0  E1=" << tree["E1"].get<int>() << " E2=" << tree["E2"].get<int>() << '\n';
    std::map<std::string, const Json*> by_name;
    for (const auto& b : tree["bars"]) by_name[b["name"].get<std::string>()] = &b;
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& b, const std::string& indent) {
        const auto& growth = b["growth"];
        for (size_t k = 0; k < growth.size(); ++k) {
            const Json& gp = growth[k];
            const bool last = k + 1 == growth.size();
            os << indent << (last ? "└─ " : "├─ ") << gp["point"].get<std::string>();
            if (gp.contains("collinear")) os << (gp["collinear"].get<bool>() ? " ∘" : " ×");
            os << " [" << gp["bimultiplicity"][0].get<int>() << ',' << gp["bimultiplicity"][1].get<int>() << ']';
            if (gp["bar"].is_null()) {
                os << '\n';
                continue;
            }
            const Json& top = *by_name.at(gp["bar"].get<std::string>());
            os << " ─ " << top["name"].get<std::string>() << " h=" << top["height"].get<std::string>();
            const std::string lam = top["lambda"].get<std::string>();
            if (lam != "0") os << " λ=" << lam;
            os << '\n';
            walk(top, indent + (last ? "   " : "│  "));
        }
    };
    walk(tree["bars"][0], "");
}

void render_bars_text(const Json& bars, std::ostream& os) {
    for (const auto& b : bars) {
        os << b["name"].get<std::string>() << "  h=" << b["height"].get<std::string>() << "  nu=("
           << b["nu_f"].get<std::string>() << ',' << b["nu_g"].get<std::string>() << ")  M=" << b["mero"].get<std::string>();
        if (b["collinear"].get<bool>()) {
            os << "  collinear";
            if (b.contains("cover") && b["cover"].is_null()) os << ", no cover";
        } else {
            os << "  m=" << b["m"].get<int>() << " m*=" << b["m_star"].get<int>() << " n=" << b["n"].get<int>()
               << " c=" << b["c"].get<int>() << " tau=" << b["tau"].get<int>() << " mu=" << b["mu"].get<int>();
            if (b["purely_noncollinear"].get<bool>()) os << "  purely non-collinear";
        }
        os << '\n';
        for (const auto& z : b["pure_zeros"])
            os << "    mero-zero " << z["z"].get<std::string>() << " multiplicity " << z["multiplicity"].get<int>() << '\n';
        for (const auto& z : b["unresolved_zeros"])
            os << "    mero-zeros of " << z["factor"].get<std::string>() << " multiplicity "
               << z["multiplicity"].get<int>() << '\n';
    }
}

void render_predictions_text(const Json& pred, std::ostream& os) {
    for (const auto& [name, p] : pred.items()) {
        os << name << "  T=" << p["T_total"].get<int>();
        for (const auto& [z, n] : p["T_point"].items()) os << "  " << z << ':' << n.get<int>();
        if (p["T_unlocated"].get<int>() > 0) os << "  unlocated:" << p["T_unlocated"].get<int>();
        os << '\n';
        for (const auto& c : p["collinear_count"]) {
            os << "    at " << c["point"].get<std::string>() << ": ";
            if (c["cover"].is_null()) {
                os << "no cover\n";
                continue;
            }
            os << c["count"].get<int>() << " bounded by {";
            for (size_t k = 0; k < c["cover"].size(); ++k) os << (k ? ", " : "") << c["cover"][k].get<std::string>();
            os << "}\n";
        }
    }
}

void render_oracle_text(const Json& o, std::ostream& os) {
    os << "polar roots: K=" << o["K"].get<int>() << " E=" << o["E"].get<int>() << '\n';
    for (const auto& r : o["records"]) {
        os << "  x = " << r["series"].get<std::string>();
        if (r.contains("psi"))
            os << " + c*y^" << r["algebraic_at"].get<std::string>() << ", psi(c) = " << r["psi"].get<std::string>();
        os << "  x" << r["count"].get<int>() << "  " << r["kind"].get<std::string>() << ' ' << r["bar"].get<std::string>();
        if (r.contains("height")) os << " at height " << r["height"].get<std::string>();
        if (!r["point"].is_null()) os << " point " << r["point"].get<std::string>();
        os << '\n';
    }
}

void render_verification_text(const Json& v, std::ostream& os) {
    for (const auto& c : v["checks"]) {
        os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["family"].get<std::string>() << "  "
           << c["subject"].get<std::string>() << "  predicted " << c["predicted"].get<std::string>() << ", observed "
           << c["observed"].get<std::string>() << '\n';
    }
    os << v["total"].get<size_t>() << " checks, " << v["failures"].get<int>() << " failed\n";
}

void render_factors_text(const Json& f, std::ostream& os) {
    for (const auto& c : f["classes"]) {
        os << "class {";
        for (size_t k = 0; k < c["bars"].size(); ++k) os << (k ? ", " : "") << c["bars"][k].get<std::string>();
        os << "} h=" << c["height"].get<std::string>() << (c["collinear"].get<bool>() ? " collinear" : "")
           << "  P order " << c["P_order"].get<int>() << "  Q order " << c["Q_order"].get<int>();
        if (c.contains("P_top")) os << "  P^T = " << c["P_top"].get<std::string>();
        os << '\n';
        if (c.contains("I_f")) {
            os << "    I(C_f,P) = " << c["I_f"]["formula"].get<std::string>() << " (direct "
               << c["I_f"]["direct"].get<std::string>() << ", truncation " << c["I_f"]["truncation"].get<std::string>()
               << ")  I(C_g,P) = " << c["I_g"]["formula"].get<std::string>() << " (direct "
               << c["I_g"]["direct"].get<std::string>() << ", truncation " << c["I_g"]["truncation"].get<std::string>()
               << ")\n";
        }
    }
    os << "ground order " << f["ground"]["order"].get<int>() << ", partition "
       << (f["complete"].get<bool>() ? "complete" : "incomplete") << '\n';
}

std::string render_text(const Json& rep) {
    std::ostringstream os;
    const std::string cmd = rep["command"].get<std::string>();
    if (cmd == "compare") {
        for (const auto& p : rep["pairs"]) {
            os << p["input"]["name"].get<std::string>() << ":\n";
            render_tree_text(p["tree"], os);
            os << "leave heights:";
            for (const auto& h : p["leave_heights"])
                os << ' ' << h["height"].get<std::string>() << 'x' << h["count"].get<int>();
            os << '\n';
        }
        os << "verdict: " << rep["verdict"]["level"].get<std::string>();
        if (!rep["verdict"]["witness"].get<std::string>().empty())
            os << " (" << rep["verdict"]["witness"].get<std::string>() << ')';
        os << '\n';
        return os.str();
    }
    if (rep.contains("shear") && !rep["shear"].is_null()) {
        const Json& s = rep["shear"];
        os << "y -> y + (" << s["c"].get<std::string>() << ")x\n  f = " << s["f"].get<std::string>()
           << "\n  g = " << s["g"].get<std::string>() << "\n  m = " << s["m"].get<int>() << '\n';
    }
    if (rep.contains("reduction") && !rep["reduction"].is_null()) {
        const Json& r = rep["reduction"];
        os << "s=" << r["s"].get<int>() << "  f = y^" << r["f_offset"].get<int>() << " * (" << r["f"].get<std::string>()
           << ")  g = y^" << r["g_offset"].get<int>() << " * (" << r["g"].get<std::string>() << ")\n"
           << "J_eff = " << r["effective_jacobian"].get<std::string>() << "\nJacobian correspondence "
           << (r["jacobian_correspondence"].get<bool>() ? "holds" : "fails") << '\n';
    }
    if (rep.contains("roots")) {
        const Json& r = rep["roots"];
        os << "field Q(zeta_" << r["field"].get<int>() << ")  truncation " << r["truncation"].get<std::string>()
           << "  E1=" << r["E1"].get<int>() << " E2=" << r["E2"].get<int>() << '\n';
        for (const char* w : {"f", "g"})
            for (const auto& x : r[w]) {
                os << "  " << w << ": x = " << x["series"].get<std::string>();
                if (x.contains("original")) os << "   X = " << x["original"].get<std::string>();
                os << '\n';
            }
    }
    if (rep.contains("generic")) {
        const Json& g = rep["generic"];
        os << "mini-regular f " << g["mini_regular"]["f"].get<bool>() << ", g " << g["mini_regular"]["g"].get<bool>()
           << ", J " << g["mini_regular"]["J"].get<bool>() << "; generic polar roots m = " << g["m"].get<int>() << '\n';
    }
    if (rep.contains("tree")) render_tree_text(rep["tree"], os);
    if (rep.contains("bars")) render_bars_text(rep["bars"], os);
    if (rep.contains("predictions")) render_predictions_text(rep["predictions"], os);
    if (rep.contains("oracle")) render_oracle_text(rep["oracle"], os);
    if (rep.contains("factors")) render_factors_text(rep["factors"], os);
    if (rep.contains("verification")) render_verification_text(rep["verification"], os);
    return os.str();
}

std::string join_roots(const std::vector<std::string>& roots, int E) {
    std::string s;
    for (const auto& r : roots) s += (s.empty() ? "" : "*") + std::string("(x - (") + r + "))";
    if (E > 0) s += (s.empty() ? "" : "*") + std::string("y^") + std::to_string(E);
    return s.empty() ? "1" : s;
}

Stage stage_for(const std::string& cmd) {
    if (cmd == "roots") return Stage::Roots;
    if (cmd == "tree" || cmd == "analyze" || cmd == "reduce") return Stage::Analysis;
    return Stage::Full;
}

}  // namespace

PairSpec resolve_pair(const PairInput& in) {
    const int given = (in.fixture ? 1 : 0) + (in.roots ? 1 : 0) + ((in.f || in.g) ? 1 : 0);
    if (given != 1) fail(ErrorCode::InvalidArgument, "give exactly one of expressions, root lists or a fixture");
    if (in.fixture) return fixture(*in.fixture).spec;
    if (in.roots) {
        if (in.roots->E1 < 0 || in.roots->E2 < 0) fail(ErrorCode::InvalidArgument, "E1 and E2 must be non-negative");
        return {"roots", join_roots(in.roots->f, in.roots->E1), join_roots(in.roots->g, in.roots->E2)};
    }
    if (!in.f || !in.g) fail(ErrorCode::InvalidArgument, "both f and g are required");
    return {"input", *in.f, *in.g};
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FieldTooSmall:
        case ErrorCode::Indeterminate:
        case ErrorCode::TruncationTooShort:
        case ErrorCode::TruncationBudgetExceeded:
        case ErrorCode::UnresolvedBranch:
        case ErrorCode::PlacementUnresolved:
            return 3;
        case ErrorCode::NoCover:
        case ErrorCode::NoPostbar:
        case ErrorCode::InternalInconsistency:
            return 1;
        default:
            return 2;
    }
}

CommandResult run_command(const std::string& command, const CommandInput& input) {
    if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands)) {
        fail(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    }
    Json rep;
    rep["version"] = kReportVersion;
    rep["command"] = command;
    CommandResult out;

    if (command == "compare") {
        if (!input.second) fail(ErrorCode::InvalidArgument, "compare needs a second pair");
        Json pairs = Json::array();
        std::vector<PairResult> results;
        for (const PairInput* in : {&input.first, &*input.second}) {
            PairSpec spec = resolve_pair(*in);
            results.push_back(run_pipeline(spec, input.options, Stage::Full));
            const PairResult& r = results.back();
            Json p;
            p["input"] = input_json(spec, *in);
            p["tree"] = tree_json(r, true);
            p["bars"] = bars_json(r);
            p["leave_heights"] = leave_heights(r);
            pairs.push_back(p);
        }
        EquivalenceVerdict v =
            compare_pairs(results[0].tree, results[0].analysis, results[1].tree, results[1].analysis);
        rep["options"] = options_json(input.options);
        rep["pairs"] = pairs;
        rep["verdict"] = {{"level", level_name(v.level)}, {"witness", v.witness}};
        out.json = rep.dump(2);
        out.text = render_text(rep);
        return out;
    }

    PairSpec spec = resolve_pair(input.first);
    SessionOptions opt = input.options;
    if (command == "generic" && !opt.shift) opt.shift = "auto";
    const Stage upto = stage_for(command);
    PairResult r = run_pipeline(spec, opt, upto);
    if (command == "reduce" && !r.reduction) {
        fail(ErrorCode::NotApplicable, "reduce needs a pair with negative powers of y (use --laurent)");
    }

    rep["input"] = input_json(spec, input.first);
    rep["options"] = options_json(input.options);
    if (r.shear) rep["shear"] = shear_json(r);
    if (r.reduction) rep["reduction"] = reduction_json(r);
    if (command == "generic") {
        Json g;
        g["c"] = r.shear->c.to_string();
        g["m"] = r.shear->m;
        g["mini_regular"] = {{"f", mini_regular(r.shear->f)},
                             {"g", mini_regular(r.shear->g)},
                             {"J", mini_regular(jacobian(r.shear->f, r.shear->g))}};
        rep["generic"] = g;
    }
    rep["roots"] = roots_json(r);
    if (upto >= Stage::Analysis) {
        rep["tree"] = tree_json(r, true);
        if (command != "tree") {
            rep["bars"] = bars_json(r);
            rep["predictions"] = predictions_json(r);
        }
    }
    if (upto == Stage::Full) {
        rep["oracle"] = oracle_json(r);
        if (command == "factor" || command == "verify") rep["factors"] = factors_json(r);
        if (command == "verify" || command == "generic") {
            rep["verification"] = verification_json(r.verification);
            if (command == "verify" && !r.verification.pass()) out.exit_code = 1;
        }
    }
    if (command == "tree" || command == "analyze") rep.erase("roots");
    out.json = rep.dump(2);
    out.text = render_text(rep);
    return out;
}

}  // namespace polartree
