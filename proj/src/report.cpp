#include "hampower/report.hpp"

#include "hampower/errors.hpp"

namespace hampower {

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string big_str(const BigInt& b) { return b.get_str(); }
BigInt big_from(const json& j) { return BigInt(j.get<std::string>()); }

SearchVerdict search_verdict_from_string(const std::string& s) {
  if (s == "found") return SearchVerdict::found;
  if (s == "absent") return SearchVerdict::absent;
  if (s == "unknown") return SearchVerdict::unknown;
  throw DomainError("unknown search verdict '" + s + "'");
}

}  // namespace

void to_json(json& j, const Rational& q) { j = q.str(); }
void from_json(const json& j, Rational& q) { q = Rational::parse(j.get<std::string>()); }
void to_json(json& j, const Surd& s) { j = s.str(); }
void from_json(const json& j, Surd& s) { s = Surd::parse(j.get<std::string>()); }

void to_json(json& j, const KnownResult& r) {
  j = json{{"k", r.k},
           {"m", r.m},
           {"reciprocal_exponent", r.reciprocal_exponent},
           {"nature", to_string(r.nature)},
           {"source", r.source}};
}

void from_json(const json& j, KnownResult& r) {
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<int>();
  r.reciprocal_exponent = j.at("reciprocal_exponent").get<Rational>();
  r.nature = nature_from_string(j.at("nature").get<std::string>());
  r.source = j.at("source").get<std::string>();
}

void to_json(json& j, const Classification& c) {
  j = json{{"kind", to_string(c.kind)}, {"exponent", c.exponent}, {"proven", opt(c.proven)}};
}

void from_json(const json& j, Classification& c) {
  c.kind = verdict_from_string(j.at("kind").get<std::string>());
  c.exponent = j.at("exponent").get<Rational>();
  c.proven = get_opt<KnownResult>(j, "proven");
}

void to_json(json& j, const DiracProfile& p) {
  j = json{{"k", p.k},
           {"m", p.m},
           {"f_floor", p.f_floor},
           {"f_ceil", p.f_ceil},
           {"lambda", p.lambda},
           {"f_lambda", p.f_lambda},
           {"ell", p.ell},
           {"f_ell", p.f_ell},
           {"r_cr", opt(p.r_cr)},
           {"ell_cr", opt(p.ell_cr)},
           {"ell_star", opt(p.ell_star)},
           {"f_ell_star", opt(p.f_ell_star)},
           {"verdict", to_string(p.verdict.kind)},
           {"exponent", p.verdict.exponent},
           {"known", opt(p.verdict.proven)}};
}

void from_json(const json& j, DiracProfile& p) {
  p.k = j.at("k").get<int>();
  p.m = j.at("m").get<int>();
  p.f_floor = j.at("f_floor").get<Rational>();
  p.f_ceil = j.at("f_ceil").get<Rational>();
  p.lambda = j.at("lambda").get<Surd>();
  p.f_lambda = j.at("f_lambda").get<Surd>();
  p.ell = j.at("ell").get<int>();
  p.f_ell = j.at("f_ell").get<Rational>();
  p.r_cr = get_opt<int>(j, "r_cr");
  p.ell_cr = get_opt<int>(j, "ell_cr");
  p.ell_star = get_opt<int>(j, "ell_star");
  p.f_ell_star = get_opt<Rational>(j, "f_ell_star");
  p.verdict.kind = verdict_from_string(j.at("verdict").get<std::string>());
  p.verdict.exponent = j.at("exponent").get<Rational>();
  p.verdict.proven = get_opt<KnownResult>(j, "known");
}

void to_json(json& j, const ScanRow& r) {
  json w = json::object();
  for (const auto& [key, value] : r.witness) w[key] = value;
  j = json{{"m", r.m}, {"applicable", r.applicable}, {"holds", r.holds}, {"witness", w}};
}

void from_json(const json& j, ScanRow& r) {
  r.m = j.at("m").get<int>();
  r.applicable = j.at("applicable").get<bool>();
  r.holds = j.at("holds").get<bool>();
  r.witness.clear();
  for (const auto& [key, value] : j.at("witness").items()) r.witness.emplace_back(key, value.get<std::string>());
}

void to_json(json& j, const PellSolution& s) {
  j = json{{"p", big_str(s.p)}, {"q", big_str(s.q)}, {"m", big_str(s.m)}};
}

void from_json(const json& j, PellSolution& s) {
  s.p = big_from(j.at("p"));
  s.q = big_from(j.at("q"));
  s.m = big_from(j.at("m"));
}

void to_json(json& j, const RewireResult& r) {
  const auto& c = r.certificate;
  std::vector<int> y = r.partition.gap_sizes();
  j = json{{"before", c.edge_count_before},
           {"after", c.edge_count_after},
           {"conds", c.conditions},
           {"x", r.partition.run_sizes()},
           {"y", y},
           {"permutation", c.permutation},
           {"partition_valid", c.partition_valid},
           {"iterations", c.iterations},
           {"max_gap_ratio", c.max_gap_ratio},
           {"valid", c.valid()},
           {"order", r.order},
           {"S", r.partition.s},
           {"T", r.partition.t}};
}

void from_json(const json& j, RewireResult& r) {
  auto& c = r.certificate;
  c.edge_count_before = j.at("before").get<std::int64_t>();
  c.edge_count_after = j.at("after").get<std::int64_t>();
  c.conditions = j.at("conds").get<std::array<bool, 4>>();
  c.permutation = j.at("permutation").get<bool>();
  c.partition_valid = j.at("partition_valid").get<bool>();
  c.iterations = j.at("iterations").get<std::int64_t>();
  c.max_gap_ratio = j.at("max_gap_ratio").get<Rational>();
  r.order = j.at("order").get<std::vector<int>>();
  r.partition.s = j.at("S").get<std::vector<std::vector<int>>>();
  r.partition.t = j.at("T").get<std::vector<std::vector<int>>>();
}

void to_json(json& j, const SlopeConstraint& c) {
  j = json{{"label", c.label}, {"coeffs", c.coeffs}, {"rhs", c.rhs}, {"offset", c.offset}};
}

void from_json(const json& j, SlopeConstraint& c) {
  c.label = j.at("label").get<std::string>();
  c.coeffs = j.at("coeffs").get<std::vector<Rational>>();
  c.rhs = j.at("rhs").get<Rational>();
  c.offset = j.at("offset").get<Rational>();
}

void to_json(json& j, const SlopeResult& r) {
  j = json{{"k", r.k},
           {"m", r.m},
           {"s", r.s},
           {"h", r.h},
           {"slope", r.slope},
           {"intercept", r.intercept},
           {"far_indices", r.far_indices},
           {"far_densities", r.far_densities},
           {"constraints", r.constraints},
           {"multipliers", r.multipliers}};
}

void from_json(const json& j, SlopeResult& r) {
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<int>();
  r.s = j.at("s").get<int>();
  r.h = j.at("h").get<int>();
  r.slope = j.at("slope").get<Rational>();
  r.intercept = j.at("intercept").get<Rational>();
  r.far_indices = j.at("far_indices").get<std::vector<int>>();
  r.far_densities = j.at("far_densities").get<std::vector<Rational>>();
  r.constraints = j.at("constraints").get<std::vector<SlopeConstraint>>();
  r.multipliers = j.at("multipliers").get<std::vector<Rational>>();
}

void to_json(json& j, const PartitionResult& r) {
  j = json{{"minimum", r.minimum}, {"witness", r.witness}, {"enumerated", r.enumerated}};
}

void from_json(const json& j, PartitionResult& r) {
  r.minimum = j.at("minimum").get<std::int64_t>();
  r.witness = j.at("witness").get<std::vector<int>>();
  r.enumerated = j.at("enumerated").get<std::uint64_t>();
}

void to_json(json& j, const DeficitResult& r) {
  j = json{{"deficit", r.deficit}, {"witness", r.witness}, {"enumerated", r.enumerated}};
}

void from_json(const json& j, DeficitResult& r) {
  r.deficit = j.at("deficit").get<Rational>();
  r.witness = j.at("witness").get<std::vector<int>>();
  r.enumerated = j.at("enumerated").get<std::uint64_t>();
}

void to_json(json& j, const DensityResult& r) {
  j = json{{"density", r.density}, {"vertices", r.vertices}};
}

void from_json(const json& j, DensityResult& r) {
  r.density = j.at("density").get<Rational>();
  r.vertices = j.at("vertices").get<std::vector<int>>();
}

void to_json(json& j, const HamiltonSearch& r) {
  j = json{{"verdict", to_string(r.verdict)}, {"order", r.order}, {"nodes", r.nodes}};
}

void from_json(const json& j, HamiltonSearch& r) {
  r.verdict = search_verdict_from_string(j.at("verdict").get<std::string>());
  r.order = j.at("order").get<std::vector<int>>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
}

void to_json(json& j, const Gadget& g) {
  j = json{{"n", g.spec.n},
           {"k", g.spec.k},
           {"eps", g.spec.eps},
           {"w_size", g.w_size},
           {"classes", g.classes},
           {"w", g.w},
           {"edges", g.graph.edge_count()},
           {"min_degree", g.min_degree},
           {"required_degree", g.required_degree}};
}

void to_json(json& j, const SampleReport& r) {
  j = json{{"seed", r.seed},
           {"n", r.n},
           {"s", r.s},
           {"p", r.p},
           {"trials", r.trials},
           {"counts", r.counts},
           {"mean", r.mean},
           {"variance", r.variance},
           {"expectation", r.expectation},
           {"exact_variance", r.exact_variance},
           {"within_band", r.within_band}};
}

void from_json(const json& j, SampleReport& r) {
  r.seed = j.at("seed").get<std::uint64_t>();
  r.n = j.at("n").get<int>();
  r.s = j.at("s").get<int>();
  r.p = j.at("p").get<Rational>();
  r.trials = j.at("trials").get<int>();
  r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
  r.mean = j.at("mean").get<Rational>();
  r.variance = j.at("variance").get<Rational>();
  r.expectation = j.at("expectation").get<Rational>();
  r.exact_variance = j.at("exact_variance").get<Rational>();
  r.within_band = j.at("within_band").get<bool>();
}

void to_json(json& j, const ZeroReport& r) {
  j = json{{"k", r.k},
           {"m", r.m},
           {"n", r.n},
           {"s", r.s},
           {"p", r.p},
           {"eps", r.eps},
           {"seed", r.seed},
           {"budget", r.budget},
           {"edges", r.edges},
           {"verdict", r.verdict},
           {"order", r.order},
           {"nodes", r.nodes},
           {"removed", r.removed},
           {"segment", r.segment},
           {"class_edges", r.class_edges}};
}

void from_json(const json& j, ZeroReport& r) {
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  r.s = j.at("s").get<int>();
  r.p = j.at("p").get<Rational>();
  r.eps = j.at("eps").get<Rational>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.budget = j.at("budget").get<std::uint64_t>();
  r.edges = j.at("edges").get<std::int64_t>();
  r.verdict = j.at("verdict").get<std::string>();
  r.order = j.at("order").get<std::vector<int>>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.removed = j.at("removed").get<std::vector<int>>();
  r.segment = j.at("segment").get<std::vector<int>>();
  r.class_edges = j.at("class_edges").get<std::vector<std::int64_t>>();
}

}  // namespace hampower
