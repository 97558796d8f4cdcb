#include "dtup/report.hpp"

namespace dtup {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not_applicable";
    case Verdict::NoVerdict: return "no_verdict";
    }
    return "unknown";
}

BoundReport upper_bound_report(std::string quantity, double lhs, double rhs, double tol)
{
    BoundReport r;
    r.quantity = std::move(quantity);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = "<=";
    r.verdict = lhs <= rhs + tol ? Verdict::Holds : Verdict::Fails;
    return r;
}

}  // namespace dtup
