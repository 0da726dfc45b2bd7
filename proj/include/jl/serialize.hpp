#pragma once

#include <json.hpp>

#include "jl/cyclic.hpp"
#include "jl/derivation.hpp"
#include "jl/framings.hpp"
#include "jl/genus0.hpp"
#include "jl/lie_poly.hpp"
#include "jl/repring.hpp"

namespace jl {

using Json = nlohmann::ordered_json;

Json alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);

Json tensor_to_json(const TensorPoly& p);
/// Words may contain the eliminated boundary letter; it is expanded via
/// sum(e_j) = 0 at parse time and never stored.
TensorPoly tensor_from_json(const Json& j);

Json lie_to_json(const LiePoly& p);
LiePoly lie_from_json(const Json& j);

Json cyclic_to_json(const CyclicPoly& p);
CyclicPoly cyclic_from_json(const Json& j);

Json pair_to_json(const CyclicPair& p);
CyclicPair pair_from_json(const Json& j);

Json derivation_to_json(const ThetaDerivation& d);
ThetaDerivation derivation_from_json(const Json& j);

Json sder_to_json(const SpecialDer0& d);
SpecialDer0 sder_from_json(const Json& j);

Json framing_to_json(const FramingData& f);
FramingData framing_from_json(const Json& j);

Json rep_to_json(const RepElement& r);
RepElement rep_from_json(const Json& j);

}  // namespace jl
