#pragma once

#include "dtup/cli.hpp"
#include "dtup/conjectures.hpp"
#include "dtup/extremal.hpp"
#include "dtup/ffmodel.hpp"
#include "dtup/search.hpp"
#include "dtup/sieve.hpp"

namespace dtup::cli {

// Integers that may leave 64 bits are written as decimal strings.
Json big(const BigInt& v);
Json big(u128 v);
Json big(i128 v);
Json rational(const BigRational& v);
Json number(double v);  // null when not finite

Json to_json(const PairWitness& w);
Json to_json(const TupleReport& r);
Json to_json(const BipartiteReport& r);
Json to_json(const RobustCount& r);
Json to_json(const BoundReport& r);
Json to_json(const CliqueResult& r);
Json to_json(const FValue& r);
Json to_json(const BicliqueResult& r);
Json to_json(const PairCountReport& r);
Json to_json(const FfCliqueReport& r);
Json to_json(const ResidueSetReport& r);
Json to_json(const ThetaConstant& t);
Json to_json(const ResidueImages& r);
Json to_json(const MertensSum& m);
Json to_json(const LinnikForm& l);
Json to_json(const TupleConstants& c);
Json to_json(const SubgraphMatch& m);
Json to_json(const PowerSumSolution& s);
Json to_json(const LpsReport& r);
Json to_json(const IntMatrix4& m);
Json to_json(const SingularReport& r);
Json to_json(const GreedyResult& r);
Json to_json(const GreedyProgress& p);
Json to_json(const RatioMonotonicity& r);

}  // namespace dtup::cli
