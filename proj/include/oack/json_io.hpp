// JSON views of the result types. Rationals serialize as exact "p" or "p/q"
// strings, never as floating point, so round trips are lossless.
#pragma once

#include "oack/checks.hpp"
#include "oack/expose.hpp"
#include "oack/isometry.hpp"
#include "oack/lattice.hpp"
#include "oack/linalg.hpp"
#include "oack/oapoly.hpp"
#include "oack/polytope.hpp"
#include "oack/rational.hpp"

#include <json.hpp>

namespace oack {

using Json = nlohmann::json;

Json to_json(const Rational& value);
Json to_json(const LatticeVector& v);
Json to_json(const Mat& m);
Json to_json(const VRep& v);
Json to_json(const BasicReport& r);
Json to_json(const IsometryReport& r);
Json to_json(const Smoothness& r);
Json to_json(const NormingFace& face);
Json to_json(const CheckReport& r);

} // namespace oack
