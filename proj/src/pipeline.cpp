#include "polartree/pipeline.hpp"

#include "polartree/parser.hpp"

namespace polartree {

BiPoly lift_poly(const BiPoly& F, const FieldPtr& field) {
    BiPoly out(F.laurent());
    for (const auto& [k, c] : F.terms()) out.add_term(k.first, k.second, c.lifted(field));
    return out;
}

namespace {

PairPolys lift_pair(const PairPolys& p, const FieldPtr& field) {
    PairPolys q = p;
    q.f = lift_poly(p.f, field);
    q.g = lift_poly(p.g, field);
    return q;
}

bool uses_zeta(const std::string& s) { return s.find("zeta") != std::string::npos; }

void check_simplicity(const Expansion& e, const char* which) {
    for (const auto& r : e.roots) {
        if (r.multiplicity > 1) {
            fail(ErrorCode::InputViolatesSimplicity,
                 std::string(which) + " has the repeated root " + r.series.to_string());
        }
    }
}

bool clustered(const Expansion& e) {
    for (const auto& r : e.roots)
        if (r.cluster > 1) return true;
    return false;
}

std::vector<PuiseuxSeries> series_of(const Expansion& e) {
    std::vector<PuiseuxSeries> out;
    for (const auto& r : e.roots) out.push_back(r.series);
    return out;
}

// Stages after root extraction; TruncationTooShort propagates to the caller.
void analyse(PairResult& res, const SessionOptions& opt, Stage upto) {
    res.tree = build_tree(series_of(res.roots_f), series_of(res.roots_g), res.roots_f.E + res.pair.f_offset,
                          res.roots_g.E + res.pair.g_offset, res.field);
    res.reached = Stage::Tree;
    res.session_trunc = res.tree.max_height() + 2;
    if (res.root_trunc < res.session_trunc) fail(ErrorCode::TruncationTooShort, "roots shorter than the session truncation");
    if (upto == Stage::Tree) return;
    res.analysis = analyze_tree(res.tree);
    res.reached = Stage::Analysis;
    if (upto == Stage::Analysis) return;
    res.oracle = polar_roots(effective_jacobian(res.pair), res.tree, res.root_trunc, 2);
    res.reached = Stage::Oracle;
    if (upto == Stage::Oracle) return;
    res.verification = verify(res.tree, res.analysis, res.oracle, res.pair);
    res.factors = group_factors(res.tree, res.analysis, res.oracle);
    intersection_mults(res.factors, res.tree, res.analysis, res.oracle, res.pair);
    add_factor_checks(res.verification, res.tree, res.factors);
    res.reached = Stage::Full;
    (void)opt;
}

}  // namespace

PairResult run_pipeline(const PairSpec& spec, const SessionOptions& opt, Stage upto) {
    PairResult res;
    res.spec = spec;
    const bool laurent = spec.laurent || opt.laurent;
    long N = opt.field > 0 ? opt.field : 4;
    ParseOptions po;
    po.laurent = laurent;
    if (uses_zeta(spec.f) || uses_zeta(spec.g)) po.field = CycloField::create(static_cast<int>(N));
    res.F = parse_expression(spec.f, po);
    res.G = parse_expression(spec.g, po);
    if (res.F.is_zero() || res.G.is_zero()) fail(ErrorCode::InvalidArgument, "f and g must be nonzero");

    BiPoly F = res.F;
    BiPoly G = res.G;
    if (opt.shift) {
        if (*opt.shift == "auto") {
            res.shear = generic_coordinates(F, G);
        } else {
            Cyclo c = parse_constant(*opt.shift, po);
            res.shear = GenericResult{F.sheared(c), G.sheared(c), c, jacobian(F.sheared(c), G.sheared(c)).x_order_on_axis()};
        }
        F = res.shear->f;
        G = res.shear->g;
    }
    if (F.has_negative_y() || G.has_negative_y()) {
        res.reduction = meromorphic_reduce(F, G, opt.s ? *opt.s : spec.s);
        res.pair = res.reduction->pair;
    } else {
        F.set_laurent(false);
        G.set_laurent(false);
        res.pair.f = F;
        res.pair.g = G;
    }

    BiPoly common = bivariate_gcd(res.pair.f, res.pair.g);
    if (common.x_order_at_origin() > 0) {
        fail(ErrorCode::InputViolatesSimplicity, "f and g share the factor " + common.to_string());
    }

    Rational T = opt.trunc ? *opt.trunc : Rational(4);
    if (T <= 0) fail(ErrorCode::InvalidArgument, "truncation must be positive");
    for (int deepen = 0;; ++deepen) {
        res.field = CycloField::create(static_cast<int>(N));
        PairPolys lifted = lift_pair(res.pair, res.field);
        ExpandOptions eo;
        eo.field = res.field;
        try {
            res.roots_f = expand_roots(lifted.f, T, eo);
            res.roots_g = expand_roots(lifted.g, T, eo);
        } catch (const UnresolvedBranchError& e) {
            long next = lcm_long(N, e.ramification());
            if (next == N) next = 2 * N;
            if (static_cast<int>(cyclotomic_polynomial(static_cast<int>(next)).size()) - 1 > opt.max_field_degree) {
                fail(ErrorCode::FieldTooSmall, std::string(e.what()) + "; a field of conductor " + std::to_string(next) +
                                                   " exceeds the degree limit " + std::to_string(opt.max_field_degree));
            }
            N = next;
            --deepen;
            continue;
        }
        check_simplicity(res.roots_f, "f");
        check_simplicity(res.roots_g, "g");
        long D = 1;
        for (const auto& r : res.roots_f.roots) D = lcm_long(D, r.series.denominator_lcm());
        for (const auto& r : res.roots_g.roots) D = lcm_long(D, r.series.denominator_lcm());
        if (!res.field->has_root_of_unity(D)) {
            N = lcm_long(N, D);
            --deepen;
            continue;
        }
        res.pair = lifted;
        res.root_trunc = T;
        if (clustered(res.roots_f) || clustered(res.roots_g)) {
            if (deepen >= opt.max_deepen) fail(ErrorCode::TruncationBudgetExceeded, "roots not separated");
            T *= 2;
            continue;
        }
        if (upto == Stage::Roots) return res;
        try {
            analyse(res, opt, upto);
            return res;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TruncationTooShort || deepen >= opt.max_deepen) throw;
            Rational next = T * 2;
            if (res.reached >= Stage::Tree && next < res.session_trunc) next = res.session_trunc;
            T = next;
        }
    }
}

}  // namespace polartree
