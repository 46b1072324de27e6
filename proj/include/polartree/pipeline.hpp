#ifndef POLARTREE_PIPELINE_HPP
#define POLARTREE_PIPELINE_HPP

#include <optional>
#include <string>

#include "polartree/factorrep.hpp"

namespace polartree {

struct PairSpec {
    std::string name;
    std::string f;
    std::string g;
    bool laurent = false;
    /// Meromorphic reduction exponent; negative selects the minimal one.
    int s = -1;
};

struct SessionOptions {
    /// Initial field conductor; 0 selects lcm(4, ramification).
    int field = 0;
    std::optional<Rational> trunc;
    bool laurent = false;
    /// Shear constant for y -> y + c x, or "auto".
    std::optional<std::string> shift;
    std::optional<int> s;
    /// Largest admissible field degree.
    int max_field_degree = 32;
    int max_deepen = 6;
};

enum class Stage { Roots, Tree, Analysis, Oracle, Full };

struct PairResult {
    PairSpec spec;
    BiPoly F;
    BiPoly G;
    PairPolys pair;
    std::optional<Reduction> reduction;
    std::optional<GenericResult> shear;
    FieldPtr field;
    Expansion roots_f;
    Expansion roots_g;
    Rational root_trunc;
    Rational session_trunc;
    Tree tree;
    TreeAnalysis analysis;
    OracleResult oracle;
    VerificationReport verification;
    FactorReport factors;
    Stage reached = Stage::Roots;
};

/// Parses, reduces, expands and analyses the pair up to `upto`, widening the
/// field and deepening the truncation as needed.
PairResult run_pipeline(const PairSpec& spec, const SessionOptions& options, Stage upto);

/// The coefficients of F lifted into `field`.
BiPoly lift_poly(const BiPoly& F, const FieldPtr& field);

}  // namespace polartree

#endif
