#include "indcover/pipeline.hpp"

#include <numeric>
#include <string>

namespace indcover {

std::string_view to_string(Strategy s) {
    return s == Strategy::minimal ? "minimal" : "simple";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "minimal") {
        return Strategy::minimal;
    }
    if (name == "simple" || name == "simple_factors") {
        return Strategy::simple_factors;
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::vector<AtlasEntry> factor_list(std::size_t d, Strategy strategy) {
    if (d < 1) {
        throw GraphError("degree must be at least 1");
    }
    std::vector<AtlasEntry> factors;
    factors.reserve(d);
    factors.push_back(complete_entry(d));
    for (std::size_t r = 2; r <= d; ++r) {
        if (strategy == Strategy::simple_factors) {
            factors.push_back(small_graph(d, r));
        } else if (r == d) {
            factors.push_back(dipole_entry(d));
        } else if (std::gcd(d, r) > 1) {
            factors.push_back(compressed_graph(d, r));
        } else {
            factors.push_back(small_graph(d, r));
        }
    }
    return factors;
}

BuildResult build_from_factors(std::vector<AtlasEntry> factors) {
    if (factors.empty()) {
        throw GraphError("no factors given");
    }
    const std::size_t d = factors.front().cover.d;
    std::vector<bool> seen(d + 1, false);
    std::vector<CoveringFactor> inputs;
    for (const auto& f : factors) {
        if (f.cover.d != d || f.cover.r < 1 || f.cover.r > d || seen[f.cover.r]) {
            throw GraphError("factors must supply each r in [1, d] once at a common degree");
        }
        seen[f.cover.r] = true;
        inputs.push_back({f.graph, f.matching});
    }
    if (factors.size() != d) {
        throw GraphError("factors must supply each r in [1, d] once at a common degree");
    }
    auto product = iterated_common_covering(inputs);

    BuildResult result;
    result.graph = product.graph;
    result.covers.resize(d);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        result.covers[factors[i].cover.r - 1] = lift_cover(product.projections[i], factors[i].cover);
    }
    result.projections = std::move(product.projections);
    result.factor_list = std::move(factors);
    return result;
}

BuildResult build_all_covers(std::size_t d, Strategy strategy, bool allow_large) {
    if (d >= kLargeDegree && !allow_large) {
        throw GraphError("degree " + std::to_string(d) + " builds need allow_large (order " +
                         vertex_count(d, strategy).get_str() + ")");
    }
    return build_from_factors(factor_list(d, strategy));
}

BigInt vertex_count(std::size_t d, Strategy strategy) {
    BigInt total = 1;
    for (std::size_t r = 1; r <= d; ++r) {
        const std::size_t k = strategy == Strategy::minimal && r > 1 ? std::gcd(d, r) : 1;
        total *= static_cast<unsigned long>((d + r) / k);
    }
    return total;
}

BuildCheck check_build(const BuildResult& result) {
    BuildCheck check;
    auto problem = [&](std::string what) {
        check.ok = false;
        check.problems.push_back(std::move(what));
    };
    const auto cls = classify(*result.graph);
    const std::size_t d = result.factor_list.empty() ? 0 : result.factor_list.front().cover.d;
    if (!cls.simple()) {
        problem("graph is not simple");
    }
    if (!cls.regular_degree || *cls.regular_degree != d) {
        problem("graph is not " + std::to_string(d) + "-regular");
        return check;
    }
    for (const auto& c : result.covers) {
        const auto report = verify_cover(*result.graph, c);
        if (!report.ok) {
            problem("cover r=" + std::to_string(c.r) + " fails at vertex " +
                    std::to_string(report.failures.front().vertex) + ": " +
                    report.failures.front().reason);
        }
    }
    for (std::size_t i = 0; i < result.projections.size(); ++i) {
        const auto report = verify_covering(result.projections[i]);
        if (!report.ok) {
            problem("projection " + std::to_string(i) + " violates item " +
                    std::to_string(report.first_violation->item) + ": " +
                    report.first_violation->message);
        }
    }
    return check;
}

}  // namespace indcover
