#include "serialize.hpp"

#include <cmath>

namespace dtup::cli {

Json big(const BigInt& v) { return v.str(); }
Json big(u128 v) { return dtup::to_string(v); }
Json big(i128 v) { return dtup::to_string(v); }

Json rational(const BigRational& v)
{
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const PairWitness& w)
{
    Json j{{"a", w.a}, {"b", w.b}, {"value", big(w.product_plus_n)}};
    j["exponent"] = w.exponent ? Json(*w.exponent) : Json(nullptr);
    j["root"] = w.root ? big(*w.root) : Json(nullptr);
    return j;
}

namespace {

template <class T>
Json list(const std::vector<T>& items)
{
    Json out = Json::array();
    for (const auto& item : items) out.push_back(to_json(item));
    return out;
}

}  // namespace

Json to_json(const TupleReport& r)
{
    return {{"holds", r.holds}, {"witnesses", list(r.witnesses)}, {"failures", list(r.failures)}};
}

Json to_json(const BipartiteReport& r)
{
    return {{"holds", r.holds},
            {"degenerate", r.degenerate},
            {"witnesses", list(r.witnesses)},
            {"failures", list(r.failures)}};
}

Json to_json(const RobustCount& r) { return {{"count", r.count}, {"pairs", r.pairs}, {"delta", rational(r.delta)}}; }

Json to_json(const BoundReport& r)
{
    return {{"quantity", r.quantity}, {"lhs", number(r.lhs)},         {"relation", r.relation},
            {"rhs", number(r.rhs)},   {"verdict", to_string(r.verdict)}, {"note", r.note}};
}

Json to_json(const CliqueResult& r) { return {{"size", r.size}, {"witness", r.witness}, {"exhaustive", r.exhaustive}}; }

Json to_json(const FValue& r)
{
    return {{"value", r.value},
            {"witness_set", r.witness_set},
            {"witness_n", r.witness_n},
            {"exhaustive", r.exhaustive},
            {"note", "sets of size <= 1 count, so the value is at least 1"}};
}

Json to_json(const BicliqueResult& r)
{
    return {{"t", r.t}, {"a_side", r.a_side}, {"b_side", r.b_side}, {"exhaustive", r.exhaustive}};
}

Json to_json(const PairCountReport& r)
{
    return {{"count", r.count},
            {"set_size", r.set_size},
            {"precondition_met", r.precondition_met},
            {"report", to_json(r.report)}};
}

Json to_json(const FfCliqueReport& r)
{
    return {{"max_size", r.max_size}, {"witness", r.witness}, {"exhaustive", r.exhaustive}, {"report", to_json(r.report)}};
}

Json to_json(const ResidueSetReport& r) { return {{"b_set", r.b_set}, {"report", to_json(r.report)}}; }

Json to_json(const ThetaConstant& t) { return {{"k", t.k}, {"m", t.m}, {"value", big(t.value)}}; }

Json to_json(const ResidueImages& r)
{
    Json sizes = Json::object();
    for (const auto& [p, s] : r.sizes) sizes[std::to_string(p)] = s;
    return {{"sizes", sizes},
            {"small_image", r.small_image},
            {"hits_zero", r.hits_zero},
            {"divides_n", r.divides_n},
            {"remainder", r.remainder}};
}

Json to_json(const MertensSum& m) { return {{"sum", number(m.sum)}, {"bound_ratio", number(m.bound_ratio)}}; }

Json to_json(const LinnikForm& l) { return {{"applicable", l.applicable}, {"lower", number(l.lower)}}; }

Json to_json(const TupleConstants& c) { return {{"k", c.k}, {"r", c.r}, {"s", c.s}, {"t", rational(c.t)}}; }

Json to_json(const SubgraphMatch& m) { return {{"found", m.found}, {"witness", m.witness}}; }

Json to_json(const PowerSumSolution& s)
{
    return {{"k", s.k}, {"left", s.left}, {"right", s.right}, {"value", big(s.value)}};
}

Json to_json(const LpsReport& r)
{
    return {{"k", r.k}, {"H", r.H}, {"side_sums_checked", r.side_sums_checked}, {"violations", list(r.violations)}};
}

Json to_json(const IntMatrix4& m)
{
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(big(v));
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const SingularReport& r) { return {{"det", big(r.det)}, {"singular", r.singular}}; }

Json to_json(const GreedyResult& r)
{
    Json ledgers = Json::array();
    for (const auto& l : r.ledgers) {
        ledgers.push_back({{"factor_count", l.factor_count}, {"quotients_above_one", l.quotients_above_one}});
    }
    Json matrix = Json::array();
    for (const auto& row : r.matrix) matrix.push_back(row);
    return {{"completed", true},
            {"b_picks", r.b_picks},
            {"c_picks", r.c_picks},
            {"matrix", matrix},
            {"ledgers", ledgers},
            {"rows_consumed", r.rows_consumed},
            {"distinct_by_size", r.distinct_by_size}};
}

Json to_json(const GreedyProgress& p)
{
    return {{"completed", false}, {"stage", p.stage}, {"picks", p.picks}, {"rows_consumed", p.rows_consumed}};
}

Json to_json(const RatioMonotonicity& r)
{
    return {{"monotone", r.monotone}, {"direction", r.direction}, {"points", r.points}};
}

}  // namespace dtup::cli
