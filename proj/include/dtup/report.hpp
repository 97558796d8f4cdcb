#pragma once

#include <string>

namespace dtup {

enum class Verdict {
    Holds,
    Fails,
    NotApplicable,  // precondition of the checked statement not met
    NoVerdict,      // pure evaluation; nothing is claimed
};

std::string to_string(Verdict v);

/// A computed quantity next to the bound it is compared against.
struct BoundReport {
    std::string quantity;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation = "<=";
    Verdict verdict = Verdict::NoVerdict;
    std::string note;

    bool holds() const noexcept { return verdict == Verdict::Holds; }
    bool failed() const noexcept { return verdict == Verdict::Fails; }
};

/// lhs <= rhs + tol -> Holds, otherwise Fails.
BoundReport upper_bound_report(std::string quantity, double lhs, double rhs, double tol = 0.0);

}  // namespace dtup
