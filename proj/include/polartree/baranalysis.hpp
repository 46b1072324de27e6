#ifndef POLARTREE_BARANALYSIS_HPP
#define POLARTREE_BARANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polartree/tree.hpp"
#include "polartree/unipoly.hpp"

namespace polartree {

struct PointInfo {
    Cyclo z;
    int p = 0;
    int q = 0;
    /// nu_f * q - nu_g * p
    Rational delta;
    bool collinear = false;
    /// Multiplicity of z as a zero of the numerator (collinear points only).
    int zero_mult = 0;
    int postbar = -1;
};

struct BarAnalysis {
    int bar = -1;
    Rational nu_f;
    Rational nu_g;
    std::vector<PointInfo> points;
    /// Sum over N(B) of delta/(z - z_k) is numerator / prod (z - z_k).
    UniPoly numerator;
    UniPoly denominator;
    /// Located pure mero-zeros with multiplicities.
    std::vector<std::pair<Cyclo, int>> pure_zeros;
    /// Factors whose zeros lie outside the working field.
    std::vector<std::pair<UniPoly, int>> unresolved_zeros;
    int unresolved_zero_count = 0;
    /// Multiplicities of all pure mero-zeros, ascending.
    std::vector<int> zero_multiplicities;
    int m = 0;
    int m_star = 0;
    int n = 0;
    int c = 0;
    int tau = 0;
    int mu = 0;
    bool collinear = false;
    bool purely_noncollinear = false;

    /// Predicted number of polar roots climbing at each point with a nonzero value.
    std::map<Cyclo, int> T_point;
    /// Predicted roots at pure mero-zeros outside the field.
    int T_pooled = 0;
    int T_total = 0;

    const PointInfo* point(const Cyclo& z) const;
    /// "2/(z*(z - 1)*(z + 1))"
    std::string mero_string() const;
};

struct TreeAnalysis {
    /// Indexed by bar id; entries for infinite bars stay default.
    std::vector<BarAnalysis> bars;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;

    const BarAnalysis& at(int bar) const { return bars.at(static_cast<size_t>(bar)); }
};

Rational compute_nu(const Tree& tree, int bar, bool for_f);

BarAnalysis analyze_bar(const Tree& tree, int bar);

/// All finite bars, plus conjugacy classes. Aborts with InternalInconsistency
/// on any negative predicted count.
TreeAnalysis analyze_tree(const Tree& tree);

/// Non-collinear bars over c reached through collinear bars; NoCover when a
/// chain reaches a bar of infinite height.
std::vector<int> cover_of(const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& c);

std::vector<int> repair_of(const Tree& tree, const TreeAnalysis& an, int bar);

std::vector<int> basics_of(const Tree& tree, const TreeAnalysis& an, int bar);

int weeds(const Tree& tree, const TreeAnalysis& an, int bar);

int total_via_basics(const Tree& tree, const TreeAnalysis& an, int bar);

/// Roots climbing over bar at c and bounded by every cover bar.
int predict_C(const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& c);

/// Postbar at z in N(bar); raises NoPostbar when none or when it has infinite height.
int check_N(const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& z);

/// K minus the totals over the cover of 0 on the ground bar, which must be collinear.
int ground_residual(const Tree& tree, const TreeAnalysis& an, int K);

}  // namespace polartree

#endif
