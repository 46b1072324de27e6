#ifndef POLARTREE_FACTORREP_HPP
#define POLARTREE_FACTORREP_HPP

#include <optional>
#include <string>
#include <vector>

#include "polartree/jacoracle.hpp"

namespace polartree {

struct ClassReport {
    int id = 0;
    std::vector<int> bars;
    bool collinear = false;
    Rational height;
    /// Records leaving the tree on a bar of the class.
    std::vector<int> P;
    /// Records climbing a bar of the class at a collinear point, bounded by its cover.
    std::vector<int> Q;
    int P_order = 0;
    int Q_order = 0;
    std::optional<BiPoly> P_top;
    int m_star = 0;
    Rational nu_f;
    Rational nu_g;
    Rational I_f_formula, I_g_formula;
    Rational I_f_direct, I_g_direct;
    Rational I_f_top, I_g_top;
};

struct FactorReport {
    std::vector<ClassReport> classes;
    /// Records bounded by every non-collinear bar of minimal height.
    std::vector<int> Q_ground;
    int Q_ground_order = 0;
    int E = 0;
    /// Records that fit no group; nonempty means the decomposition failed.
    std::vector<int> unassigned;
    /// Polar roots that are also roots of f*g.
    std::vector<int> coinciding;
    bool complete = false;
};

FactorReport group_factors(const Tree& tree, const TreeAnalysis& an, const OracleResult& oracle);

/// Fills the intersection multiplicities by formula, by direct summation over
/// the group and over its truncation.
void intersection_mults(FactorReport& report, const Tree& tree, const TreeAnalysis& an, const OracleResult& oracle,
                        const PairPolys& pair);

/// Partition completeness, closure under conjugation and the intersection identities.
void add_factor_checks(VerificationReport& rep, const Tree& tree, const FactorReport& report);

/// prod (x - xi_j^T) over the records, as a polynomial.
BiPoly truncation_product(const Tree& tree, const OracleResult& oracle, const std::vector<int>& records);

enum class EquivalenceLevel { Inequivalent, Equivalent, MeroEquivalent };

struct EquivalenceVerdict {
    EquivalenceLevel level = EquivalenceLevel::Inequivalent;
    std::string witness;
};

std::string level_name(EquivalenceLevel level);

/// Canonical bar signature at a comparison level 1..3.
std::string bar_signature(const Tree& tree, const TreeAnalysis& an, int bar, int level);

EquivalenceVerdict compare_pairs(const Tree& ta, const TreeAnalysis& aa, const Tree& tb, const TreeAnalysis& ab);

struct Reduction {
    PairPolys pair;
    int s = 0;
    int p = 0;
    int q = 0;
};

/// Smallest s for which y^(ps) F(x y^-s, y) and y^(qs) G(x y^-s, y) are
/// polynomials with all p (resp. q) roots of positive order.
int minimal_s(const BiPoly& F, const BiPoly& G);

/// SNotLargeEnough when s is too small; a negative s selects the minimal one.
Reduction meromorphic_reduce(const BiPoly& F, const BiPoly& G, int s);

/// X Y J_(F,G)(X,Y) = x y J_(f,g)(x,y) under X = x y^-s, Y = y.
bool jacobian_correspondence(const BiPoly& F, const BiPoly& G, int s);

/// Root of the reduced pair back in the X coordinate.
PuiseuxSeries to_original(const PuiseuxSeries& xi, int s);

struct GenericResult {
    BiPoly f;
    BiPoly g;
    Cyclo c;
    int m = 0;
};

/// Shear y -> y + c x making f, g and J mini-regular in x; tries small
/// rationals when c is absent.
GenericResult generic_coordinates(const BiPoly& f, const BiPoly& g, std::optional<Cyclo> c = {});

bool mini_regular(const BiPoly& F);

}  // namespace polartree

#endif
