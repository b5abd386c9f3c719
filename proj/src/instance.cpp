// Copyright 2026 The valmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "valmat/instance.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "valmat/generate.hpp"
#include "valmat/reference.hpp"

namespace valmat {

namespace {

// A JSON node with its path, for error messages.
class Field {
 public:
  Field(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const Json& json() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void Fail(const std::string& msg) const {
    ThrowInvalidInput("field '" + path_ + "': " + msg);
  }
  bool Has(const std::string& key) const {
    return j_->is_object() && j_->contains(key);
  }
  Field operator[](const std::string& key) const {
    if (!j_->is_object()) Fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) Fail("missing key '" + key + "'");
    return Field(*it, path_.empty() ? key : path_ + "." + key);
  }
  std::vector<Field> Items() const {
    if (!j_->is_array()) Fail("expected an array");
    std::vector<Field> out;
    for (std::size_t i = 0; i < j_->size(); ++i) {
      out.emplace_back((*j_)[i], path_ + "[" + std::to_string(i) + "]");
    }
    return out;
  }
  std::string String() const {
    if (!j_->is_string()) Fail("expected a string");
    return j_->get<std::string>();
  }
  std::int64_t Int() const {
    if (!j_->is_number_integer()) Fail("expected an integer");
    return j_->get<std::int64_t>();
  }
  Rational Rat() const {
    if (j_->is_number_integer()) return Rational(j_->get<long>());
    if (!j_->is_string()) Fail("expected a rational as \"p/q\" or an integer");
    try {
      return ParseRational(j_->get<std::string>());
    } catch (const Error& e) {
      Fail(e.what());
    }
  }
  ExtValue Ext() const {
    if (j_->is_string()) {
      try {
        return ExtValue::Parse(j_->get<std::string>());
      } catch (const Error& e) {
        Fail(e.what());
      }
    }
    return ExtValue(Rat());
  }

 private:
  const Json* j_;
  std::string path_;
};

struct Unresolved {
  std::string what;
};

std::size_t ParseElement(const Field& f, const GroundSet& ground) {
  if (f.json().is_number_integer()) {
    const std::int64_t i = f.Int();
    if (i < 0 || static_cast<std::size_t>(i) >= ground.size()) {
      f.Fail("element index out of range");
    }
    return static_cast<std::size_t>(i);
  }
  if (f.json().is_string()) {
    auto e = ground.Find(f.String());
    if (!e) f.Fail("unknown element label '" + f.String() + "'");
    return e->index;
  }
  f.Fail("expected an element index or label");
}

Subset ParseSet(const Field& f, const GroundSet& ground) {
  Subset s(ground.size());
  for (const auto& item : f.Items()) s.insert(ParseElement(item, ground));
  return s;
}

std::vector<Rational> ParseVector(const Field& f, std::size_t n) {
  std::vector<Rational> out;
  for (const auto& item : f.Items()) out.push_back(item.Rat());
  if (out.size() != n) {
    f.Fail("expected " + std::to_string(n) + " entries, got " +
           std::to_string(out.size()));
  }
  return out;
}

IntVector ParseIntVector(const Field& f, std::size_t n) {
  IntVector out(n, 0);
  const auto items = f.Items();
  if (items.size() != n) f.Fail("expected " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i) out[i] = items[i].Int();
  return out;
}

UnivariateTable ParseTable(const Field& f) {
  std::vector<ExtValue> values;
  for (const auto& item : f["values"].Items()) values.push_back(item.Ext());
  return UnivariateTable(f["lo"].Int(), std::move(values));
}

Json SetJson(const Subset& s, const GroundSet& ground) {
  Json out = Json::array();
  for (std::size_t e : s.elements()) {
    if (ground.has_labels()) {
      out.push_back(ground.label(ElementId{e}));
    } else {
      out.push_back(e);
    }
  }
  return out;
}

Json VectorJson(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(FormatRational(x));
  return out;
}

Json IntVectorJson(const IntVector& v) {
  Json out = Json::array();
  for (std::int64_t x : v.entries()) out.push_back(x);
  return out;
}

Matroid ParseMatroid(const Field& f, const GroundSet& ground) {
  const std::size_t n = ground.size();
  const std::string kind = f["kind"].String();
  try {
    if (kind == "uniform") return MakeUniform(n, static_cast<int>(f["rank"].Int()));
    if (kind == "free") return MakeFree(n);
    if (kind == "partition") {
      std::vector<PartitionBlock> blocks;
      for (const auto& b : f["blocks"].Items()) {
        blocks.push_back({ParseSet(b["elements"], ground),
                          static_cast<int>(b["capacity"].Int())});
      }
      return MakePartition(n, std::move(blocks));
    }
    if (kind == "graphic") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : f["edges"].Items()) {
        const auto ends = e.Items();
        if (ends.size() != 2) e.Fail("an edge needs two endpoints");
        edges.emplace_back(static_cast<int>(ends[0].Int()),
                           static_cast<int>(ends[1].Int()));
      }
      if (edges.size() != n) f["edges"].Fail("edge count must equal the ground size");
      return MakeGraphic(static_cast<int>(f["vertices"].Int()), std::move(edges));
    }
    if (kind == "linear") {
      std::vector<std::vector<Rational>> rows;
      for (const auto& r : f["rows"].Items()) rows.push_back(ParseVector(r, n));
      return MakeLinear(std::move(rows));
    }
    if (kind == "explicit") {
      ExplicitBaseFamily family{n, {}};
      for (const auto& b : f["bases"].Items()) {
        family.bases.push_back(ParseSet(b, ground));
      }
      return MakeFromBases(family);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidInput) throw;
    f.Fail(e.what());
  }
  f["kind"].Fail("unknown matroid kind '" + kind + "'");
}

const Matroid& LookupMatroid(const Instance& inst, const Field& f) {
  const std::string name = f.String();
  auto it = inst.matroids.find(name);
  if (it == inst.matroids.end()) f.Fail("unknown matroid '" + name + "'");
  return it->second;
}

const Valuation& LookupValuation(const Instance& inst, const Field& f) {
  const std::string name = f.String();
  auto it = inst.valuations.find(name);
  if (it == inst.valuations.end()) f.Fail("unknown valuation '" + name + "'");
  return it->second;
}

const MnatFunction& LookupFunction(const Instance& inst, const Field& f) {
  const std::string name = f.String();
  auto it = inst.functions.find(name);
  if (it == inst.functions.end()) f.Fail("unknown function '" + name + "'");
  return it->second;
}

template <typename Map>
void RequireDefined(const Map& map, const Field& f) {
  if (!map.contains(f.String())) throw Unresolved{f.path() + " = " + f.String()};
}

Valuation ParseValuation(const Field& f, const Instance& inst) {
  const std::size_t n = inst.ground.size();
  const std::string kind = f["kind"].String();
  try {
    if (kind == "modular") {
      return FromMatroidAndWeights(LookupMatroid(inst, f["matroid"]),
                                   ParseVector(f["weights"], n));
    }
    if (kind == "size_constrained") {
      return SizeConstrainedModular(ParseVector(f["weights"], n),
                                    static_cast<int>(f["rank"].Int()));
    }
    if (kind == "indicator") {
      return MatroidIndicator(LookupMatroid(inst, f["matroid"]));
    }
    if (kind == "dual") {
      RequireDefined(inst.valuations, f["of"]);
      return DualValuation(LookupValuation(inst, f["of"]));
    }
    if (kind == "disjoint_sum") {
      std::vector<Valuation> parts;
      for (const auto& p : f["parts"].Items()) {
        RequireDefined(inst.valuations, p);
        parts.push_back(LookupValuation(inst, p));
      }
      return DisjointSum(parts);
    }
    if (kind == "function") {
      RequireDefined(inst.functions, f["function"]);
      return RestrictToValuation(LookupFunction(inst, f["function"]),
                                 static_cast<int>(f["rank"].Int()));
    }
    if (kind == "explicit") {
      std::map<std::vector<std::size_t>, Rational> table;
      for (const auto& item : f["values"].Items()) {
        table[ParseSet(item["set"], inst.ground).elements()] = item["value"].Rat();
      }
      return ValuationFromSetFunction(
          n, static_cast<int>(f["rank"].Int()),
          [table](const Subset& x) -> ExtValue {
            auto it = table.find(x.elements());
            if (it == table.end()) return ExtValue::Infinity();
            return it->second;
          },
          "explicit");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidInput) throw;
    f.Fail(e.what());
  }
  f["kind"].Fail("unknown valuation kind '" + kind + "'");
}

MnatFunction ParseFunction(const Field& f, const Instance& inst) {
  const std::size_t n = inst.ground.size();
  const std::string kind = f["kind"].String();
  try {
    if (kind == "laminar") {
      LaminarSpec spec;
      spec.ground_size = n;
      for (const auto& m : f["family"].Items()) {
        spec.members.push_back({ParseSet(m["set"], inst.ground), ParseTable(m["table"])});
      }
      if (f.Has("lower") || f.Has("upper")) {
        spec.lower = ParseIntVector(f["lower"], n);
        spec.upper = ParseIntVector(f["upper"], n);
      }
      MnatFunction g = LaminarConvexFunction(spec);
      if (f.Has("rank")) g = RestrictToHyperplane(g, f["rank"].Int());
      return g;
    }
    if (kind == "valuation") {
      RequireDefined(inst.valuations, f["of"]);
      return ValuationAsFunction(LookupValuation(inst, f["of"]));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidInput) throw;
    f.Fail(e.what());
  }
  f["kind"].Fail("unknown function kind '" + kind + "'");
}

}  // namespace

Instance ParseInstance(const Json& doc) {
  const Field root(doc, "");
  const Field g = root["ground"];
  const std::int64_t size = g["size"].Int();
  if (size < 1 || size > static_cast<std::int64_t>(Subset::kMaxSize)) {
    g["size"].Fail("ground size out of range");
  }
  std::vector<std::string> labels;
  if (g.Has("labels")) {
    for (const auto& l : g["labels"].Items()) labels.push_back(l.String());
    if (labels.size() != static_cast<std::size_t>(size)) {
      g["labels"].Fail("label count must equal the ground size");
    }
  }
  Instance inst{labels.empty()
                    ? GroundSet(static_cast<std::size_t>(size))
                    : GroundSet(static_cast<std::size_t>(size), std::move(labels)),
                {}, {}, {}, {}};
  if (root.Has("matroids")) {
    for (const auto& m : root["matroids"].Items()) {
      const std::string name = m["name"].String();
      if (inst.matroids.contains(name)) m["name"].Fail("duplicate name");
      inst.matroids.emplace(name, ParseMatroid(m, inst.ground));
    }
  }
  // Valuations and functions may refer to each other; resolve in rounds.
  std::vector<std::pair<Field, bool>> pending;
  if (root.Has("valuations")) {
    for (const auto& v : root["valuations"].Items()) pending.emplace_back(v, true);
  }
  if (root.Has("functions")) {
    for (const auto& v : root["functions"].Items()) pending.emplace_back(v, false);
  }
  while (!pending.empty()) {
    std::vector<std::pair<Field, bool>> next;
    std::string last;
    for (const auto& [f, is_valuation] : pending) {
      const std::string name = f["name"].String();
      if (inst.valuations.contains(name) || inst.functions.contains(name)) {
        f["name"].Fail("duplicate name");
      }
      try {
        if (is_valuation) {
          inst.valuations.emplace(name, ParseValuation(f, inst));
        } else {
          inst.functions.emplace(name, ParseFunction(f, inst));
        }
      } catch (const Unresolved& u) {
        next.emplace_back(f, is_valuation);
        last = u.what;
      }
    }
    if (next.size() == pending.size()) {
      ThrowInvalidInput("unresolved reference: " + last);
    }
    pending = std::move(next);
  }
  if (root.Has("problem")) inst.problem = root["problem"].json();
  return inst;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ThrowInvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    // The library reports the byte offset; translate it to line and column.
    std::ifstream again(path);
    std::string text((std::istreambuf_iterator<char>(again)),
                     std::istreambuf_iterator<char>());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    ThrowInvalidInput(path + ":" + std::to_string(line) + ":" +
                      std::to_string(col) + ": " + e.what());
  }
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadJsonFile(path));
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return 3;
    case ErrorCode::kResourceLimit:
      return 4;
    case ErrorCode::kEmptyDomain:
      return 2;
    case ErrorCode::kInternal:
      break;
  }
  return 1;
}

namespace {

struct Ctx {
  const Instance& inst;
  Field p;
  std::string type;
  const RunOptions& options;

  std::size_t n() const { return inst.ground.size(); }
  int K() const {
    if (options.k) return *options.k;
    return static_cast<int>(p["k"].Int());
  }
  const Valuation& Val(const std::string& key) const {
    return LookupValuation(inst, p[key]);
  }
  const Matroid& Mat(const std::string& key) const {
    return LookupMatroid(inst, p[key]);
  }
  const MnatFunction& Fn(const std::string& key) const {
    return LookupFunction(inst, p[key]);
  }
  std::vector<Rational> Vec(const std::string& key) const {
    return ParseVector(p[key], n());
  }
  std::vector<Valuation> Vals(const std::string& key) const {
    std::vector<Valuation> out;
    for (const auto& f : p[key].Items()) out.push_back(LookupValuation(inst, f));
    return out;
  }
};

struct Answer {
  Status status = Status::kInfeasible;
  ExtValue value = ExtValue::Infinity();
  Json solution;
  Json witness;
  std::optional<std::uint64_t> oracle_calls;
  Json extra;
};

bool IsPairProblem(const std::string& t) {
  return t == "v_geq_k" || t == "v_eq_k" || t == "v_leq_k" ||
         t == "w_eq_k_lpt" || t == "v_c" || t == "copic" ||
         t == "recoverable_robust";
}

// The two valuations the pair problems are stated over.
std::pair<Valuation, Valuation> PairValuations(const Ctx& c) {
  if (c.type == "w_eq_k_lpt" || c.type == "copic") {
    return {FromMatroidAndWeights(c.Mat("matroid1"), c.Vec("w1")),
            FromMatroidAndWeights(c.Mat("matroid2"), c.Vec("w2"))};
  }
  if (c.type == "recoverable_robust") {
    const Matroid& m = c.Mat("matroid");
    Valuation first = c.p.Has("omega1") ? c.Val("omega1")
                                        : FromMatroidAndWeights(m, c.Vec("w1"));
    return {first, FromMatroidAndWeights(m, c.Vec("upper"))};
  }
  return {c.Val("omega1"), c.Val("omega2")};
}

IntervalUncertainty Interval(const Ctx& c) {
  return {c.Vec("lower"), c.Vec("upper")};
}

Json WitnessJson(const IntersectionSolution& s, const GroundSet& ground) {
  if (!s.witness) return nullptr;
  return Json{{"frame", s.frame == WitnessFrame::kDualSecond ? "dual_second" : "direct"},
              {"k", s.witness_k},
              {"p1", VectorJson(s.witness->p1)},
              {"p2", VectorJson(s.witness->p2)},
              {"F", SetJson(s.witness->F, ground)}};
}

Answer FromPair(const IntersectionSolution& s, const Ctx& c, bool with_witness) {
  Answer a;
  a.status = s.status;
  if (s.optimal()) {
    a.value = s.value;
    a.solution = Json{{"X1", SetJson(s.X1, c.inst.ground)},
                      {"X2", SetJson(s.X2, c.inst.ground)}};
    if (with_witness) a.witness = WitnessJson(s, c.inst.ground);
  }
  a.oracle_calls = s.stats.oracle_calls;
  return a;
}

Answer FromTuple(const TupleSolution& s, const Ctx& c) {
  Answer a;
  a.status = s.status;
  if (s.optimal()) {
    a.value = s.value;
    Json sets = Json::array();
    for (const auto& x : s.sets) sets.push_back(SetJson(x, c.inst.ground));
    a.solution = Json{{"sets", sets}};
  }
  a.oracle_calls = s.stats.oracle_calls;
  return a;
}

Answer FromM(const MSolution& s) {
  Answer a;
  a.status = s.status;
  if (s.status == Status::kOptimal) {
    a.value = s.value;
    a.solution = Json{{"x1", IntVectorJson(s.x1)}, {"x2", IntVectorJson(s.x2)}};
  }
  a.extra = Json{{"flow_iterations", s.iterations}};
  return a;
}

Answer Solve(const Ctx& c) {
  const std::string& t = c.type;
  if (t == "v_geq_k") {
    return FromPair(SolveVGeqK(c.Val("omega1"), c.Val("omega2"), c.K()), c, true);
  }
  if (t == "v_eq_k") {
    return FromPair(SolveVEqK(c.Val("omega1"), c.Val("omega2"), c.K()), c, true);
  }
  if (t == "v_leq_k") {
    return FromPair(SolveVLeqK(c.Val("omega1"), c.Val("omega2"), c.K()), c, false);
  }
  if (t == "w_eq_k_lpt") {
    const LptResult r =
        LptSolveWEqK(c.Mat("matroid1"), c.Mat("matroid2"), c.Vec("w1"), c.Vec("w2"), c.K());
    Answer a = FromPair(r.solution, c, true);
    a.oracle_calls.reset();
    if (r.lpt) {
      a.witness["lpt"] = Json{{"q1", VectorJson(r.lpt->q1)},
                              {"q2", VectorJson(r.lpt->q2)},
                              {"lambda", FormatRational(r.lpt->lambda)}};
    }
    a.extra = Json{{"potential_raises", r.raises}};
    return a;
  }
  if (t == "v_in") {
    return FromTuple(SolveVIn(c.Vals("valuations"), c.Mat("independence")), c);
  }
  if (t == "v_n_w") {
    return FromTuple(SolveVnW(c.Vals("valuations"), c.Vec("w")), c);
  }
  if (t == "m_geq_k_w") {
    return FromM(SolveMGeqKW(c.Fn("f1"), c.Fn("f2"), c.K(), c.Vec("w")));
  }
  if (t == "v_c") {
    return FromPair(SolveVC(c.Val("omega1"), c.Val("omega2"), ParseTable(c.p["c"])),
                    c, false);
  }
  if (t == "copic") {
    Answer a = FromPair(SolveCopicDiagonal(c.Mat("matroid1"), c.Mat("matroid2"),
                                           c.Vec("w1"), c.Vec("w2"), c.Vec("q")),
                        c, false);
    a.oracle_calls.reset();
    return a;
  }
  if (t == "recoverable_robust") {
    const auto [omega1, unused] = PairValuations(c);
    return FromPair(SolveRecoverableRobustInterval(omega1, c.Mat("matroid"),
                                                   Interval(c), c.K()),
                    c, true);
  }
  if (t == "congestion") {
    CongestionInstance ci;
    ci.players = c.Vals("players");
    for (const auto& d : c.p["delays"].Items()) {
      std::vector<Rational> table;
      for (const auto& x : d.Items()) table.push_back(x.Rat());
      ci.delays.push_back(std::move(table));
    }
    return FromTuple(SolveCongestionSocialOptimum(ci), c);
  }
  c.p["type"].Fail("unknown problem type '" + t + "'");
}

CongestionInstance Congestion(const Ctx& c) {
  CongestionInstance ci;
  ci.players = c.Vals("players");
  for (const auto& d : c.p["delays"].Items()) {
    std::vector<Rational> table;
    for (const auto& x : d.Items()) table.push_back(x.Rat());
    ci.delays.push_back(std::move(table));
  }
  return ci;
}

// Objective of a reported solution; +inf when it violates the constraints.
ExtValue Evaluate(const Ctx& c, const Field& sol) {
  const std::string& t = c.type;
  if (IsPairProblem(t)) {
    const Subset X1 = ParseSet(sol["X1"], c.inst.ground);
    const Subset X2 = ParseSet(sol["X2"], c.inst.ground);
    const auto [omega1, omega2] = PairValuations(c);
    const int meet = static_cast<int>((X1 & X2).count());
    const ExtValue base = omega1.value(X1) + omega2.value(X2);
    if (t == "v_geq_k" || t == "recoverable_robust") {
      return meet >= c.K() ? base : ExtValue::Infinity();
    }
    if (t == "v_eq_k" || t == "w_eq_k_lpt") {
      return meet == c.K() ? base : ExtValue::Infinity();
    }
    if (t == "v_leq_k") return meet <= c.K() ? base : ExtValue::Infinity();
    if (t == "v_c") return base + ParseTable(c.p["c"])(meet);
    return base + ExtValue(WeightOf(c.Vec("q"), X1 & X2));
  }
  if (t == "v_in" || t == "v_n_w" || t == "congestion") {
    std::vector<Subset> sets;
    for (const auto& s : sol["sets"].Items()) sets.push_back(ParseSet(s, c.inst.ground));
    if (t == "congestion") return CongestionCost(Congestion(c), sets);
    const auto omegas = c.Vals("valuations");
    if (sets.size() != omegas.size()) sol["sets"].Fail("wrong number of sets");
    Subset meet = Subset::Full(c.n());
    ExtValue total;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      total += omegas[i].value(sets[i]);
      meet &= sets[i];
    }
    if (t == "v_in") {
      return c.Mat("independence").IsIndependent(meet) ? total : ExtValue::Infinity();
    }
    return total + ExtValue(WeightOf(c.Vec("w"), meet));
  }
  if (t == "m_geq_k_w") {
    const IntVector x1 = ParseIntVector(sol["x1"], c.n());
    const IntVector x2 = ParseIntVector(sol["x2"], c.n());
    std::int64_t meet = 0;
    for (std::size_t v = 0; v < c.n(); ++v) meet += std::min(x1[v], x2[v]);
    if (meet < c.K()) return ExtValue::Infinity();
    return MgeqkObjective(c.Fn("f1"), c.Fn("f2"), c.Vec("w"), x1, x2);
  }
  c.p["type"].Fail("unknown problem type '" + t + "'");
}

// nullopt when the report carries no witness.
std::optional<bool> CheckWitness(const Ctx& c, const Field& sol, const Field& w) {
  if (w.json().is_null() || !IsPairProblem(c.type)) return std::nullopt;
  const Subset X1 = ParseSet(sol["X1"], c.inst.ground);
  Subset X2 = ParseSet(sol["X2"], c.inst.ground);
  auto [omega1, omega2] = PairValuations(c);
  const bool dual = w["frame"].String() == "dual_second";
  const int wk = static_cast<int>(w["k"].Int());
  const int k = c.type == "v_c" ? static_cast<int>((X1 & X2).count()) : c.K();
  if (wk != (dual ? omega1.rank() - k : k)) return false;
  if (dual && c.type != "v_eq_k" && c.type != "w_eq_k_lpt") return false;
  if (dual) X2 = X2.Complement();
  const Valuation second = dual ? DualValuation(omega2) : omega2;
  const Witness witness{ParseVector(w["p1"], c.n()), ParseVector(w["p2"], c.n()),
                        ParseSet(w["F"], c.inst.ground)};
  if (!VerifyWitness(X1, X2, witness, wk, omega1, second)) return false;
  if (w.Has("lpt")) {
    const Field l = w["lpt"];
    const LptWitness lpt{ParseVector(l["q1"], c.n()), ParseVector(l["q2"], c.n()),
                         l["lambda"].Rat()};
    if (!LptWitnessCheck(X1, X2, lpt, omega1, second)) return false;
  }
  return true;
}

std::pair<Status, ExtValue> Brute(const Ctx& c, std::uint64_t limit) {
  const std::string& t = c.type;
  auto pair = [](const IntersectionSolution& s) {
    return std::make_pair(s.status, s.value);
  };
  auto tuple = [](const TupleSolution& s) { return std::make_pair(s.status, s.value); };
  if (t == "v_geq_k") return pair(BruteVGeqK(c.Val("omega1"), c.Val("omega2"), c.K(), limit));
  if (t == "v_eq_k") return pair(BruteVEqK(c.Val("omega1"), c.Val("omega2"), c.K(), limit));
  if (t == "v_leq_k") return pair(BruteVLeqK(c.Val("omega1"), c.Val("omega2"), c.K(), limit));
  if (t == "w_eq_k_lpt") {
    const auto [o1, o2] = PairValuations(c);
    return pair(BruteVEqK(o1, o2, c.K(), limit));
  }
  if (t == "v_c") {
    return pair(BruteVC(c.Val("omega1"), c.Val("omega2"), ParseTable(c.p["c"]), limit));
  }
  if (t == "copic") {
    return pair(BruteCopic(c.Mat("matroid1"), c.Mat("matroid2"), c.Vec("w1"),
                           c.Vec("w2"), c.Vec("q"), limit));
  }
  if (t == "recoverable_robust") {
    const auto [o1, unused] = PairValuations(c);
    return pair(BruteRecoverableRobust(o1, c.Mat("matroid"), Interval(c), c.K(), limit));
  }
  if (t == "v_in") {
    return tuple(BruteVIn(c.Vals("valuations"), c.Mat("independence"), limit));
  }
  if (t == "v_n_w") return tuple(BruteVnW(c.Vals("valuations"), c.Vec("w"), limit));
  if (t == "congestion") return tuple(BruteCongestion(Congestion(c), limit));
  if (t == "m_geq_k_w") {
    const MSolution s = BruteMGeqKW(c.Fn("f1"), c.Fn("f2"), c.K(), c.Vec("w"), limit);
    return {s.status, s.value};
  }
  c.p["type"].Fail("unknown problem type '" + t + "'");
}

const char* StatusName(Status s) {
  return s == Status::kOptimal ? "optimal" : "infeasible";
}

Ctx MakeCtx(const Instance& inst, const RunOptions& options, std::string type) {
  if (!inst.problem.is_object()) ThrowInvalidInput("field 'problem': missing");
  return Ctx{inst, Field(inst.problem, "problem"), std::move(type), options};
}

std::string ProblemType(const Instance& inst, const RunOptions& options) {
  if (options.problem) return *options.problem;
  return Field(inst.problem, "problem")["type"].String();
}

// Fills report["verify"]; returns whether every check passed.
bool AddVerification(const Ctx& c, Json& report) {
  Json v;
  bool ok = true;
  if (report.at("status") == "optimal") {
    const Field sol(report.at("solution"), "solution");
    const ExtValue value = Evaluate(c, sol);
    const ExtValue claimed = ExtValue::Parse(report.at("value").get<std::string>());
    v["feasible"] = value.is_finite();
    v["value_matches"] = value.is_finite() && value == claimed;
    ok = value.is_finite() && value == claimed;
    const Json& wj = report.contains("witness") ? report.at("witness") : Json(nullptr);
    const auto w = CheckWitness(c, sol, Field(wj, "witness"));
    v["witness"] = !w ? "absent" : (*w ? "pass" : "fail");
    ok = ok && (!w || *w);
  } else {
    v["witness"] = "absent";
  }
  v["ok"] = ok;
  report["verify"] = v;
  return ok;
}

bool AddBrute(const Ctx& c, Json& report, std::uint64_t limit) {
  const auto [status, value] = Brute(c, limit);
  const bool match =
      report.at("status") == StatusName(status) &&
      (status != Status::kOptimal ||
       ExtValue::Parse(report.at("value").get<std::string>()) == value);
  report["brute"] = Json{{"status", StatusName(status)},
                         {"value", value.ToString()},
                         {"match", match}};
  return match;
}

}  // namespace

RunOutcome SolveInstance(const Instance& inst, const RunOptions& options) {
  const std::string type = ProblemType(inst, options);
  const Ctx c = MakeCtx(inst, options, type);
  Answer a;
  try {
    a = Solve(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyDomain) throw;
    a = Answer{};
  }
  RunOutcome out;
  Json& r = out.report;
  r["problem"] = type;
  if (options.k) r["k"] = *options.k;
  r["status"] = StatusName(a.status);
  r["value"] = a.value.ToString();
  r["solution"] = a.solution;
  if (!a.witness.is_null()) r["witness"] = a.witness;
  if (a.oracle_calls) r["oracle_calls"] = *a.oracle_calls;
  if (!a.extra.is_null()) r["stats"] = a.extra;
  out.exit_code = a.status == Status::kOptimal ? 0 : 2;
  bool ok = true;
  if (options.verify) ok = AddVerification(c, r) && ok;
  if (options.brute) ok = AddBrute(c, r, options.limit) && ok;
  if (!ok) out.exit_code = 1;
  return out;
}

RunOutcome VerifyReport(const Instance& inst, const Json& report,
                        const RunOptions& options) {
  RunOptions o = options;
  const Field rf(report, "report");
  if (!o.problem) o.problem = rf["problem"].String();
  if (!o.k && report.contains("k")) o.k = static_cast<int>(rf["k"].Int());
  rf["status"].String();
  rf["value"].String();
  const Ctx c = MakeCtx(inst, o, *o.problem);
  RunOutcome out;
  out.report = report;
  out.report.erase("verify");
  out.report.erase("brute");
  bool ok = AddVerification(c, out.report);
  if (o.brute) ok = AddBrute(c, out.report, o.limit) && ok;
  out.exit_code = ok ? 0 : 1;
  return out;
}

RunOutcome CheckExchange(const Instance& inst,
                         const std::optional<std::string>& name) {
  RunOutcome out;
  Json results = Json::object();
  bool all = true;
  bool found = false;
  for (const auto& [n, v] : inst.valuations) {
    if (name && *name != n) continue;
    found = true;
    const bool ok = CheckValuatedExchange(v);
    results[n] = ok ? "pass" : "fail";
    all = all && ok;
  }
  for (const auto& [n, f] : inst.functions) {
    if (name && *name != n) continue;
    found = true;
    const bool ok = CheckMnatExchange(f);
    results[n] = ok ? "pass" : "fail";
    all = all && ok;
  }
  if (name && !found) ThrowInvalidInput("no valuation or function named '" + *name + "'");
  out.report = Json{{"check", "exchange"}, {"results", results}, {"pass", all}};
  out.exit_code = all ? 0 : 1;
  return out;
}

namespace {

Json WeightsJson(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  return VectorJson(RandomWeights(rng, n, lo, hi));
}

Json MatroidJson(Rng& rng, const std::string& name, std::size_t n, int max_rank,
                 bool uniform_or_partition) {
  const int cap = std::min(max_rank, static_cast<int>(n));
  const std::int64_t kind = RandomInt(rng, 0, uniform_or_partition ? 1 : 3);
  Json m{{"name", name}};
  if (kind == 0 || n == 0) {
    m["kind"] = "uniform";
    m["rank"] = RandomInt(rng, 0, cap);
  } else if (kind == 1) {
    m["kind"] = "partition";
    const std::int64_t blocks = RandomInt(rng, 1, static_cast<std::int64_t>(n));
    std::vector<Json> parts(static_cast<std::size_t>(blocks), Json::array());
    for (std::size_t v = 0; v < n; ++v) {
      parts[static_cast<std::size_t>(RandomInt(rng, 0, blocks - 1))].push_back(v);
    }
    Json out = Json::array();
    std::int64_t budget = cap;
    for (auto& p : parts) {
      if (p.empty()) continue;
      const std::int64_t c =
          RandomInt(rng, 0, std::min<std::int64_t>(p.size(), budget));
      budget -= c;
      out.push_back(Json{{"elements", p}, {"capacity", c}});
    }
    m["blocks"] = out;
  } else if (kind == 2) {
    m["kind"] = "graphic";
    const std::int64_t vertices = RandomInt(rng, 1, cap + 1);
    Json edges = Json::array();
    for (std::size_t e = 0; e < n; ++e) {
      edges.push_back(Json::array({RandomInt(rng, 0, vertices - 1),
                                   RandomInt(rng, 0, vertices - 1)}));
    }
    m["vertices"] = vertices;
    m["edges"] = edges;
  } else {
    m["kind"] = "linear";
    const std::int64_t rows = RandomInt(rng, 1, std::max(cap, 1));
    Json rj = Json::array();
    for (std::int64_t r = 0; r < rows; ++r) {
      Json row = Json::array();
      for (std::size_t v = 0; v < n; ++v) row.push_back(RandomInt(rng, -2, 2));
      rj.push_back(row);
    }
    m["rows"] = rj;
  }
  return m;
}

Json TableJson(const UnivariateTable& t) {
  Json values = Json::array();
  for (const auto& v : t.values()) values.push_back(v.ToString());
  return Json{{"lo", t.lo()}, {"values", values}};
}

Json LaminarFunctionJson(Rng& rng, const std::string& name, std::size_t n,
                         std::int64_t box_hi) {
  while (true) {
    const LaminarSpec spec = RandomLaminarSpec(rng, n, box_hi);
    Json family = Json::array();
    for (const auto& m : spec.members) {
      Json set = Json::array();
      for (std::size_t e : m.set.elements()) set.push_back(e);
      family.push_back(Json{{"set", set}, {"table", TableJson(m.g)}});
    }
    const std::int64_t rank = RandomInt(rng, 0, static_cast<std::int64_t>(n) * box_hi);
    const MnatFunction g = RestrictToHyperplane(LaminarConvexFunction(spec), rank);
    if (!g.has_domain()) continue;
    return Json{{"name", name},
                {"kind", "laminar"},
                {"family", family},
                {"lower", IntVectorJson(spec.lower)},
                {"upper", IntVectorJson(spec.upper)},
                {"rank", rank}};
  }
}

}  // namespace

Json GenerateInstance(const std::string& type, std::uint64_t seed,
                      std::size_t n) {
  if (n < 1 || n > 12) ThrowInvalidInput("generator size must be in [1, 12]");
  Rng rng(seed);
  Json doc{{"ground", {{"size", n}}}};
  Json matroids = Json::array();
  Json valuations = Json::array();
  Json problem{{"type", type}};
  const auto nk = static_cast<std::int64_t>(n);
  auto add_modular = [&](const std::string& name, std::int64_t lo, std::int64_t hi,
                         bool simple) {
    matroids.push_back(MatroidJson(rng, "M_" + name, n, 4, simple));
    valuations.push_back(Json{{"name", name},
                              {"kind", "modular"},
                              {"matroid", "M_" + name},
                              {"weights", WeightsJson(rng, n, lo, hi)}});
  };
  if (type == "v_geq_k" || type == "v_eq_k" || type == "v_leq_k" || type == "v_c") {
    add_modular("omega1", -10, 10, false);
    add_modular("omega2", -10, 10, false);
    problem["omega1"] = "omega1";
    problem["omega2"] = "omega2";
    if (type == "v_c") {
      Json values = Json::array();
      for (std::size_t k = 0; k <= n; ++k) {
        values.push_back(RandomInt(rng, 0, 3) == 0
                             ? std::string("inf")
                             : FormatRational(RandomRational(rng, -5, 5)));
      }
      problem["c"] = Json{{"lo", 0}, {"values", values}};
    } else {
      problem["k"] = RandomInt(rng, 0, nk);
    }
  } else if (type == "w_eq_k_lpt" || type == "copic") {
    matroids.push_back(MatroidJson(rng, "M1", n, 4, false));
    matroids.push_back(MatroidJson(rng, "M2", n, 4, false));
    problem["matroid1"] = "M1";
    problem["matroid2"] = "M2";
    problem["w1"] = WeightsJson(rng, n, -10, 10);
    problem["w2"] = WeightsJson(rng, n, -10, 10);
    if (type == "copic") {
      problem["q"] = RandomInt(rng, 0, 1) == 0 ? WeightsJson(rng, n, 0, 10)
                                               : WeightsJson(rng, n, -10, 0);
    } else {
      problem["k"] = RandomInt(rng, 0, nk);
    }
  } else if (type == "v_in" || type == "v_n_w" || type == "congestion") {
    const std::int64_t players = RandomInt(rng, 2, 3);
    Json names = Json::array();
    for (std::int64_t i = 0; i < players; ++i) {
      const std::string name = "omega" + std::to_string(i + 1);
      add_modular(name, type == "congestion" ? 0 : -10, 10, false);
      names.push_back(name);
    }
    problem[type == "congestion" ? "players" : "valuations"] = names;
    if (type == "v_in") {
      matroids.push_back(MatroidJson(rng, "I", n, 4, true));
      problem["independence"] = "I";
    } else if (type == "v_n_w") {
      problem["w"] = WeightsJson(rng, n, 0, 10);
    } else {
      Json delays = Json::array();
      for (std::size_t v = 0; v < n; ++v) {
        // Affine nondecreasing delays make x d(x) convex.
        const Rational a = RandomRational(rng, 0, 5);
        const Rational b = RandomRational(rng, 0, 3);
        Json table = Json::array();
        for (std::int64_t x = 0; x <= players; ++x) {
          table.push_back(FormatRational(a + b * Rational(static_cast<long>(x))));
        }
        delays.push_back(table);
      }
      problem["delays"] = delays;
    }
  } else if (type == "m_geq_k_w") {
    const std::int64_t box_hi = n <= 3 ? 3 : (n <= 5 ? 2 : 1);
    doc["functions"] = Json::array({LaminarFunctionJson(rng, "f1", n, box_hi),
                                    LaminarFunctionJson(rng, "f2", n, box_hi)});
    problem["f1"] = "f1";
    problem["f2"] = "f2";
    problem["w"] = WeightsJson(rng, n, -5, 0);
    problem["k"] = RandomInt(rng, 0, nk * box_hi);
  } else if (type == "recoverable_robust") {
    matroids.push_back(MatroidJson(rng, "M", n, 4, false));
    problem["matroid"] = "M";
    problem["w1"] = WeightsJson(rng, n, -10, 10);
    const auto lower = RandomWeights(rng, n, -10, 10);
    std::vector<Rational> upper(n);
    for (std::size_t v = 0; v < n; ++v) upper[v] = lower[v] + RandomRational(rng, 0, 5);
    problem["lower"] = VectorJson(lower);
    problem["upper"] = VectorJson(upper);
    problem["k"] = RandomInt(rng, 0, nk);
  } else {
    ThrowInvalidInput("unknown problem type '" + type + "'");
  }
  if (!matroids.empty()) doc["matroids"] = matroids;
  if (!valuations.empty()) doc["valuations"] = valuations;
  doc["problem"] = problem;
  return doc;
}

}  // namespace valmat
