#include "netfit/jdm.hpp"

namespace netfit {

std::size_t JointDegreeMatrix::edge_count() const {
    std::size_t total = 0;
    for (const auto& [key, count] : entries) total += count;
    return total;
}

JointDegreeMatrix joint_degree_matrix(const Graph& g) {
    JointDegreeMatrix jdm;
    for (auto [u, v] : g.edges()) jdm.add(g.degree(u), g.degree(v));
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) ++jdm.degree_counts[g.degree(v)];
    return jdm;
}

JdmValidation validate_jdm(const JointDegreeMatrix& jdm) {
    JdmValidation report;
    auto fail = [&](std::string message) {
        report.valid = false;
        report.violations.push_back(std::move(message));
    };

    // Stub totals per degree class: diagonal entries use two stubs of class k.
    std::map<std::size_t, std::size_t> stubs;
    for (const auto& [key, count] : jdm.entries) {
        const auto [k, l] = key;
        if (count == 0) continue;
        if (k == 0) {
            fail("degree-0 class cannot carry edges");
            continue;
        }
        if (k == l) {
            stubs[k] += 2 * count;
        } else {
            stubs[k] += count;
            stubs[l] += count;
        }
    }
    for (const auto& [k, total] : stubs) {
        if (k == 0) continue;
        if (total % k != 0) {
            fail("n_" + std::to_string(k) + " = " + std::to_string(total) + "/" + std::to_string(k) +
                 " is not an integer");
        } else {
            report.degree_counts[k] = total / k;
        }
    }
    for (const auto& [key, count] : jdm.entries) {
        const auto [k, l] = key;
        if (count == 0 || !report.degree_counts.contains(k) || !report.degree_counts.contains(l)) continue;
        const std::size_t nk = report.degree_counts.at(k);
        const std::size_t nl = report.degree_counts.at(l);
        if (k == l) {
            if (count > nk * (nk - 1) / 2)
                fail("e(" + std::to_string(k) + "," + std::to_string(k) + ") exceeds C(n_k,2)");
        } else if (count > nk * nl) {
            fail("e(" + std::to_string(k) + "," + std::to_string(l) + ") exceeds n_k*n_l");
        }
    }
    return report;
}

}  // namespace netfit
