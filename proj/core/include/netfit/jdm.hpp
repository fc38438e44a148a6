#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netfit/graph.hpp"

namespace netfit {

/// Edge counts between degree classes, keyed canonically with k <= l.
struct JointDegreeMatrix {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;
    /// n_k; filled by joint_degree_matrix, or derived by implied_degree_counts.
    std::map<std::size_t, std::size_t> degree_counts;

    void add(std::size_t k, std::size_t l, std::size_t count = 1) {
        if (k > l) std::swap(k, l);
        entries[{k, l}] += count;
    }
    std::size_t at(std::size_t k, std::size_t l) const {
        if (k > l) std::swap(k, l);
        auto it = entries.find({k, l});
        return it == entries.end() ? 0 : it->second;
    }
    std::size_t edge_count() const;

    friend bool operator==(const JointDegreeMatrix&, const JointDegreeMatrix&) = default;
};

/// Tallies every edge under (min deg, max deg).
JointDegreeMatrix joint_degree_matrix(const Graph& g);

struct JdmValidation {
    bool valid = true;
    std::vector<std::string> violations;
    /// n_k as implied by the entries (only meaningful where integral).
    std::map<std::size_t, std::size_t> degree_counts;
};

/// Checks that the entries describe a simple graph: every n_k integral,
/// e(k,l) <= n_k n_l for k != l and e(k,k) <= C(n_k, 2).
JdmValidation validate_jdm(const JointDegreeMatrix& jdm);

}  // namespace netfit
