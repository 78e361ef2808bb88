#include "indcover/bounds.hpp"

#include "indcover/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace indcover {

namespace {

BigInt big(std::size_t x) { return BigInt(static_cast<unsigned long>(x)); }

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

double log_of_rat(const Rat& q) { return log_of(q.get_num()) - log_of(q.get_den()); }

std::size_t intersection_size(const std::vector<const CoverCertificate*>& sets, std::size_t n) {
    std::vector<std::uint8_t> count(n, 0);
    for (const auto* c : sets) {
        for (VertexId v : c->subset) {
            ++count[v];
        }
    }
    return static_cast<std::size_t>(
        std::count(count.begin(), count.end(), static_cast<std::uint8_t>(sets.size())));
}

}  // namespace

double log_of(const BigInt& x) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

BigInt smallest_multiplier(const BigInt& coefficient, const BigInt& modulus) {
    return modulus / gcd(coefficient, modulus);
}

BoundReport divisibility_lower_bound(std::size_t d) {
    if (d < 1) {
        throw GraphError("degree must be at least 1");
    }
    BoundReport rep;
    rep.d = d;
    rep.star_lcm = 1;
    rep.combined_lb = 1;
    for (std::size_t r = 1; r <= d; ++r) {
        const BigInt m = smallest_multiplier(big(r), big(d + r));
        rep.single_constraints.push_back({r, 0, m});
        rep.star_lcm = lcm(rep.star_lcm, m);
    }
    for (std::size_t r1 = 1; r1 <= d; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 <= d; ++r2) {
            const BigInt coeff = big(r1 * r2);
            rep.pair_constraints.push_back(
                {r1, r2, smallest_multiplier(coeff, big((d + r1) * (d + r2)))});
            if (r2 < d) {
                rep.triple_constraints.push_back(
                    {r1, r2, smallest_multiplier(coeff, big(2 * (d + r1) * (d + r2)))});
            }
        }
    }
    rep.combined_lb = rep.star_lcm;
    for (const auto* list : {&rep.pair_constraints, &rep.triple_constraints}) {
        for (const auto& c : *list) {
            rep.combined_lb = lcm(rep.combined_lb, c.divisor);
        }
    }
    rep.diamond_lb = diamond_bound(d);
    rep.construction_ub_simple = factorial(2 * d) / factorial(d);
    rep.construction_ub_minimal = vertex_count(d, Strategy::minimal);
    return rep;
}

Rat diamond_bound(std::size_t d) {
    BigInt l = 1;
    for (std::size_t r1 = 0; r1 <= d; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 <= d; ++r2) {
            l = lcm(l, big((d + r1) * (d + r2)));
        }
    }
    return make_rat(2 * l, big(d * d));
}

ExactBounds exact_bound_values(std::size_t d) {
    const auto rep = divisibility_lower_bound(d);
    const double dd = static_cast<double>(d);
    return {rep.diamond_lb,
            rep.construction_ub_simple,
            rep.construction_ub_minimal,
            decimal(log_of_rat(rep.diamond_lb) / dd),
            decimal(log_of(rep.construction_ub_simple) / dd),
            decimal(log_of(rep.construction_ub_minimal) / dd)};
}

IntersectionReport check_intersections(const GeneralizedGraph& g,
                                       const std::vector<CoverCertificate>& covers) {
    for (const auto& c : covers) {
        if (!verify_cover(g, c).ok) {
            throw GraphError("certificate at r = " + std::to_string(c.r) + " does not verify");
        }
    }
    IntersectionReport rep;
    const std::size_t n = g.num_vertices();
    const CoverCertificate* full = nullptr;
    for (const auto& c : covers) {
        if (c.r == c.d) {
            full = &c;
        }
    }
    auto add = [&](IntersectionKind kind, std::vector<const CoverCertificate*> sets, Rat expected,
                   bool asserted) {
        IntersectionLine line{kind, {}, big(intersection_size(sets, n)), std::move(expected), false,
                              asserted};
        for (const auto* c : sets) {
            line.rs.push_back(c->r);
        }
        line.holds = Rat(line.actual) == line.expected;
        if (asserted && !line.holds) {
            rep.ok = false;
        }
        rep.lines.push_back(std::move(line));
    };

    for (std::size_t i = 0; i < covers.size(); ++i) {
        for (std::size_t j = i + 1; j < covers.size(); ++j) {
            const auto& a = covers[i];
            const auto& b = covers[j];
            if (a.r == b.r) {
                continue;
            }
            const std::size_t d = a.d;
            add(IntersectionKind::pair, {&a, &b},
                make_rat(big(a.r * b.r * n), big((d + a.r) * (d + b.r))), true);
            if (full && a.r != d && b.r != d) {
                add(IntersectionKind::triple_with_d, {&a, &b, full},
                    make_rat(big(a.r * b.r * n), big(2 * (d + a.r) * (d + b.r))), true);
            }
            for (std::size_t k = j + 1; k < covers.size(); ++k) {
                const auto& c = covers[k];
                if (c.r == a.r || c.r == b.r || a.r == d || b.r == d || c.r == d) {
                    continue;
                }
                const BigInt prod = big(a.subset.size()) * big(b.subset.size()) * big(c.subset.size());
                add(IntersectionKind::triple_independence, {&a, &b, &c}, make_rat(prod, big(n * n)),
                    false);
            }
        }
    }
    return rep;
}

std::string to_json(const BoundReport& r) {
    using nlohmann::json;
    auto list = [](const std::vector<ForcedDivisor>& cs, bool pair) {
        json out = json::array();
        for (const auto& c : cs) {
            json item{{"divisor", c.divisor.get_str()}};
            if (pair) {
                item["r1"] = c.r1;
                item["r2"] = c.r2;
            } else {
                item["r"] = c.r1;
            }
            out.push_back(std::move(item));
        }
        return out;
    };
    json j{
        {"d", r.d},
        {"star_lcm", r.star_lcm.get_str()},
        {"single_constraints", list(r.single_constraints, false)},
        {"pair_constraints", list(r.pair_constraints, true)},
        {"triple_constraints", list(r.triple_constraints, true)},
        {"combined_lb", r.combined_lb.get_str()},
        {"diamond_lb", fraction_string(r.diamond_lb)},
        {"construction_ub_simple", r.construction_ub_simple.get_str()},
        {"construction_ub_minimal", r.construction_ub_minimal.get_str()},
    };
    return j.dump(2);
}

}  // namespace indcover
