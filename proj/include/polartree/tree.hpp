#ifndef POLARTREE_TREE_HPP
#define POLARTREE_TREE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polartree/puiseux.hpp"

namespace polartree {

struct TreeRoot {
    PuiseuxSeries series;
    bool from_f = true;
};

struct Trunk {
    int id = 0;
    int s = 0;
    int t = 0;
    /// Bar it grows on (-1 for none) and the growth point there.
    int base_bar = -1;
    Cyclo point;
    /// Bar on top of the trunk.
    int top_bar = -1;
    std::vector<int> roots;
};

struct Bar {
    int id = 0;
    std::string name;
    /// nullopt for infinite height.
    std::optional<Rational> height;
    PuiseuxSeries lambda;
    int trunk = -1;
    int parent = -1;
    /// growth point -> trunk id, ordered by point.
    std::map<Cyclo, int> growth;
    std::vector<int> roots;
    int depth = 0;

    bool infinite() const noexcept { return !height.has_value(); }
    const Rational& h() const { return *height; }
};

struct Tree {
    std::vector<TreeRoot> roots;
    std::vector<Bar> bars;
    std::vector<Trunk> trunks;
    int p = 0;
    int q = 0;
    int E1 = 0;
    int E2 = 0;
    long D = 1;
    FieldPtr field;

    static constexpr int ground = 0;

    /// Postbar of `bar` supported at `point`; -1 when no trunk grows there.
    int postbar(int bar, const Cyclo& point) const;
    /// Bars B' with B lying below B', B itself first.
    std::vector<int> above(int bar) const;
    /// Finite bars in id order, ground excluded.
    std::vector<int> finite_bars() const;
    /// Largest finite bar height; 0 when there is none.
    Rational max_height() const;
    int bar_of_root(int root) const;
};

/// Recursive partition of the roots of f*g by contact order.
Tree build_tree(const std::vector<PuiseuxSeries>& alpha, const std::vector<PuiseuxSeries>& beta, int E1, int E2,
                const FieldPtr& field);

struct Placement {
    enum class Kind { Leaves, Bounded, Root };
    /// (bar, point) for every bar climbed, ground first.
    std::vector<std::pair<int, Cyclo>> climb;
    Kind kind = Kind::Leaves;
    /// Leaves: the bar left; Bounded: the lowest bar bounding the arc; Root: the infinite bar.
    int bar = -1;
    /// Leaves: h(bar); Bounded: contact with lambda of `bar`.
    Rational height;
    /// Coefficient at y^height; absent when it is not in the working field.
    std::optional<Cyclo> point;

    bool climbs(int b) const;
};

/// Position of an arc known below `series.trunc()`. With `algebraic_at`, the
/// coefficient at that exponent is a root of an irreducible polynomial outside
/// the field, distinct from every coefficient of every root.
Placement place_arc(const Tree& tree, const PuiseuxSeries& series, std::optional<Rational> algebraic_at = {});

/// lambda_B + a*y^h(B) for an arc leaving on B at a; an arc bounded by B at
/// contact e is cut at the same height. Roots of f*g are returned unchanged.
PuiseuxSeries truncate_relative(const PuiseuxSeries& xi, const Tree& tree);

/// Bars of one class are mapped onto each other by y^(1/D) -> zeta_D y^(1/D).
std::vector<std::vector<int>> conjugacy_classes(const Tree& tree);

}  // namespace polartree

#endif
