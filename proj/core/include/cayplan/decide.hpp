#ifndef CAYPLAN_DECIDE_HPP
#define CAYPLAN_DECIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cayplan/planarity.hpp"
#include "cayplan/product_graph.hpp"

namespace cayplan {

enum class Condition { I, II, III, IV };

std::string to_string(Condition c);
Condition condition_from_string(const std::string& s);

/// One failed planarity condition with the vertices that witness it:
/// the vertices of a K4/K23 subdivision for I, an edge of the order->2
/// part for II, a vertex plus its link for III, an induced cycle for IV.
/// Condition I additionally carries the subdivision certificate.
struct ConditionViolation {
    Condition condition = Condition::I;
    std::vector<std::string> locus;
    std::optional<GraphCertificate> certificate;
};

struct Verdict {
    bool planar = true;
    std::vector<ConditionViolation> violations;   // empty iff planar
};

/// (i) the order-2 part is outerplanar.
std::optional<ConditionViolation> check_condition_i(const ProductGraph& g);
/// (ii) the order->2 part has no edges.
std::optional<ConditionViolation> check_condition_ii(const ProductGraph& g);
/// (iii) every order->2 vertex has an empty, one-vertex, or
/// two-nonadjacent-vertex link.
std::optional<ConditionViolation> check_condition_iii(const ProductGraph& g);
/// (iv) no induced cycle passes through an order->2 vertex.
std::optional<ConditionViolation> check_condition_iv(const ProductGraph& g);

/// Evaluates all four conditions (never short-circuits) and reports every
/// failure; the Cayley graph is planar iff none fail.
Verdict decide(const ProductGraph& g);

} // namespace cayplan

#endif
