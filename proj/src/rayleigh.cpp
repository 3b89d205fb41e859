#include "ndl/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ndl {

namespace {

void require_vector(const DistanceData& dd, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != dd.n)
        throw std::invalid_argument("vector length does not match the graph order");
    if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; }))
        throw std::invalid_argument("vector must be nonzero");
}

double weighted_mass(const DistanceData& dd, const std::vector<double>& y) {
    double den = 0.0;
    for (int i = 0; i < dd.n; ++i)
        den += y[i] * y[i] * static_cast<double>(dd.transmission[i]);
    return den;
}

void require_feasible(const SignPartition& part, const std::vector<double>& y) {
    for (const int i : part.positive)
        if (y[i] < 0.0)
            throw std::invalid_argument("infeasible sign pattern: negative entry at vertex " +
                                        std::to_string(i) + " on the positive side");
    for (const int i : part.negative)
        if (y[i] > 0.0)
            throw std::invalid_argument("infeasible sign pattern: positive entry at vertex " +
                                        std::to_string(i) + " on the negative side");
}

}  // namespace

double rayleigh_sos(const DistanceData& dd, const std::vector<double>& y) {
    require_vector(dd, y);
    double num = 0.0;
    for (int i = 0; i < dd.n; ++i)
        for (int j = i + 1; j < dd.n; ++j) {
            const double diff = y[i] - y[j];
            num += dd.distance(i, j) * diff * diff;
        }
    const double den = weighted_mass(dd, y);
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
}

double obj0(const DistanceData& dd, const std::vector<double>& y) {
    require_vector(dd, y);
    double num = 0.0;
    for (int i = 0; i < dd.n; ++i)
        for (int j = i + 1; j < dd.n; ++j) {
            const double sum = y[i] + y[j];
            num += dd.distance(i, j) * sum * sum;
        }
    const double den = weighted_mass(dd, y);
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
}

double obj1(const DistanceData& dd, const std::vector<double>& y) {
    require_vector(dd, y);
    double num = 0.0;
    double norm2 = 0.0;
    for (int i = 0; i < dd.n; ++i) {
        norm2 += y[i] * y[i];
        for (int j = i + 1; j < dd.n; ++j) {
            const double sum = y[i] + y[j];
            num += sum * sum;
        }
    }
    const double den = static_cast<double>(dd.n) * dd.diameter * norm2;
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
}

SignPartition sign_partition(const Graph& g, const DistanceData& dd,
                             const std::vector<double>& y) {
    const int n = dd.n;
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("vector length does not match the graph order");

    SignPartition part;
    part.side.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (y[i] >= 0.0) {  // zeros land on the positive side
            part.side[i] = 1;
            part.positive.push_back(i);
        } else {
            part.negative.push_back(i);
        }
    }

    // lexicographically smallest pair realizing the diameter
    int from = 0, to = 0;
    [&] {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (dd.distance(u, v) == dd.diameter) {
                    from = u;
                    to = v;
                    return;
                }
    }();

    // walk from..to, always stepping to the smallest-index neighbor that is
    // one unit closer to the endpoint
    part.geodesic.push_back(from);
    int cur = from;
    while (cur != to) {
        for (int w = 0; w < n; ++w) {
            if (g.has_edge(cur, w) && dd.distance(w, to) == dd.distance(cur, to) - 1) {
                part.geodesic.push_back(w);
                cur = w;
                break;
            }
        }
    }

    for (const int v : part.geodesic) {
        if (part.side[v])
            part.geodesic_positive.push_back(v);
        else
            part.geodesic_negative.push_back(v);
    }
    return part;
}

double obj2(const DistanceData& dd, const SignPartition& part, const std::vector<double>& y) {
    require_vector(dd, y);
    require_feasible(part, y);

    double num = 0.0;
    for (const auto* group : {&part.positive, &part.negative}) {
        for (std::size_t a = 0; a < group->size(); ++a)
            for (std::size_t b = a + 1; b < group->size(); ++b) {
                const int i = (*group)[a];
                const int j = (*group)[b];
                const double sum = y[i] + y[j];
                num += dd.distance(i, j) * sum * sum;
            }
    }
    const double den = weighted_mass(dd, y);
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
}

double obj3(const DistanceData& dd, const SignPartition& part, const std::vector<double>& y) {
    require_vector(dd, y);
    require_feasible(part, y);

    const double wp = static_cast<double>(part.geodesic_positive.size()) *
                      static_cast<double>(part.geodesic_positive.size()) / 8.0;
    const double wn = static_cast<double>(part.geodesic_negative.size()) *
                      static_cast<double>(part.geodesic_negative.size()) / 8.0;
    double num = 0.0;
    for (const int i : part.positive) num += wp * y[i] * y[i];
    for (const int i : part.negative) num += wn * y[i] * y[i];

    const double den = weighted_mass(dd, y);
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
partial_transmissions(const DistanceData& dd, const SignPartition& part) {
    const int n = dd.n;
    std::vector<std::int64_t> tp(n, 0), tn(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (part.side[j])
                tp[i] += dd.distance(i, j);
            else
                tn[i] += dd.distance(i, j);
        }
    }
    return {std::move(tp), std::move(tn)};
}

ConditionCheck condition_check(const Graph& g, const DistanceData& dd,
                               const std::vector<double>& y, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (dd.n < 2) throw std::invalid_argument("condition check needs at least 2 vertices");
    require_vector(dd, y);

    const SignPartition part = sign_partition(g, dd, y);

    double total = 0.0, mass_p = 0.0, mass_n = 0.0;
    for (int i = 0; i < dd.n; ++i) {
        const double sq = y[i] * y[i];
        total += sq;
        if (part.side[i])
            mass_p += sq;
        else
            mass_n += sq;
    }

    const auto [tp, tn] = partial_transmissions(dd, part);
    double min_partial = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dd.n; ++i) {
        const double t = static_cast<double>(dd.transmission[i]);
        min_partial = std::min(min_partial,
                               static_cast<double>(std::min(tp[i], tn[i])) / t);
    }

    ConditionCheck check;
    check.epsilon = epsilon;
    check.min_mass_fraction = std::min(mass_p, mass_n) / total;
    check.min_geodesic_fraction =
        static_cast<double>(std::min(part.geodesic_positive.size(),
                                     part.geodesic_negative.size())) /
        static_cast<double>(dd.diameter);
    check.min_partial_fraction = min_partial;
    check.mass_balanced = mass_p >= epsilon * total && mass_n >= epsilon * total;
    check.geodesic_balanced =
        static_cast<double>(part.geodesic_positive.size()) >= epsilon * dd.diameter &&
        static_cast<double>(part.geodesic_negative.size()) >= epsilon * dd.diameter;
    check.partial_balanced = min_partial >= epsilon;
    return check;
}

double pair_sum_direct(const std::vector<double>& z) {
    const int n = static_cast<int>(z.size());
    if (n < 2) throw std::invalid_argument("pair sum needs at least 2 entries");
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double s = z[i] + z[j];
            sum += s * s;
        }
    return sum;
}

double pair_sum_closed_form(const std::vector<double>& z) {
    const int n = static_cast<int>(z.size());
    if (n < 2) throw std::invalid_argument("pair sum needs at least 2 entries");
    double norm2 = 0.0, total = 0.0;
    for (const double v : z) {
        norm2 += v * v;
        total += v;
    }
    return (n - 2) * norm2 + total * total;
}

ObjectiveReport evaluate_objectives(const DistanceData& dd, const SignPartition& part,
                                    const std::vector<double>& y) {
    ObjectiveReport report;
    report.obj0 = obj0(dd, y);
    report.obj1 = obj1(dd, y);
    report.obj2 = obj2(dd, part, y);
    report.obj3 = obj3(dd, part, y);
    auto [tp, tn] = partial_transmissions(dd, part);
    report.transmission_positive = std::move(tp);
    report.transmission_negative = std::move(tn);
    return report;
}

}  // namespace ndl
