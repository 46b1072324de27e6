#ifndef POLARTREE_FIXTURES_HPP
#define POLARTREE_FIXTURES_HPP

#include <string>
#include <vector>

#include "polartree/pipeline.hpp"

namespace polartree {

struct Fixture {
    std::string name;
    std::string description;
    PairSpec spec;
};

const std::vector<Fixture>& fixtures();

/// Throws InvalidArgument for an unknown name.
const Fixture& fixture(const std::string& name);

}  // namespace polartree

#endif
