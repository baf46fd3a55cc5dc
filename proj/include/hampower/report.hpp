#pragma once

// JSON serialization for every record the CLI emits. Rationals and surds are strings.

#include <json.hpp>

#include "hampower/calculus.hpp"
#include "hampower/exact.hpp"
#include "hampower/lab.hpp"
#include "hampower/oracle.hpp"
#include "hampower/rewire.hpp"
#include "hampower/slope.hpp"

namespace hampower {

using nlohmann::json;

void to_json(json& j, const Rational& q);
void from_json(const json& j, Rational& q);
void to_json(json& j, const Surd& s);
void from_json(const json& j, Surd& s);

void to_json(json& j, const KnownResult& r);
void from_json(const json& j, KnownResult& r);
void to_json(json& j, const Classification& c);
void from_json(const json& j, Classification& c);
void to_json(json& j, const DiracProfile& p);
void from_json(const json& j, DiracProfile& p);
void to_json(json& j, const ScanRow& r);
void from_json(const json& j, ScanRow& r);
void to_json(json& j, const PellSolution& s);
void from_json(const json& j, PellSolution& s);

// {before, after, conds, x, y, ...}
void to_json(json& j, const RewireResult& r);
void from_json(const json& j, RewireResult& r);
void to_json(json& j, const SlopeConstraint& c);
void from_json(const json& j, SlopeConstraint& c);
void to_json(json& j, const SlopeResult& r);
void from_json(const json& j, SlopeResult& r);

void to_json(json& j, const PartitionResult& r);
void from_json(const json& j, PartitionResult& r);
void to_json(json& j, const DeficitResult& r);
void from_json(const json& j, DeficitResult& r);
void to_json(json& j, const DensityResult& r);
void from_json(const json& j, DensityResult& r);
void to_json(json& j, const HamiltonSearch& r);
void from_json(const json& j, HamiltonSearch& r);

void to_json(json& j, const Gadget& g);
void to_json(json& j, const SampleReport& r);
void from_json(const json& j, SampleReport& r);
void to_json(json& j, const ZeroReport& r);
void from_json(const json& j, ZeroReport& r);

}  // namespace hampower
