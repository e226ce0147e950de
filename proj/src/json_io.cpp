#include "muntz/json_io.hpp"

#include <cmath>
#include <ctime>

namespace muntz {

namespace {

std::string iso_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json interval_json(const Interval& iv) {
  return json{{"a", point_json(iv.a)}, {"b", point_json(iv.b)}};
}

Interval interval_from_json(const json& j) {
  return Interval{point_from_json(j.at("a")), point_from_json(j.at("b"))};
}

void require_schema(const json& j, const char* expected) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != expected)
    throw InvalidInput(std::string("certificate: expected schema \"") + expected +
                       "\"");
}

json slice_check_json(const SliceCheck& c) {
  json j;
  j["slice"] = c.slice;
  j["oscillation"] = c.oscillation;
  j["norm_plus"] = c.norm_plus;
  j["norm_minus"] = c.norm_minus;
  j["member_plus"] = c.member_plus;
  j["member_minus"] = c.member_minus;
  j["margin"] = c.margin;
  j["ok"] = c.ok;
  return j;
}

SliceCheck slice_check_from_json(const json& j) {
  SliceCheck c;
  c.slice = j.at("slice").get<std::size_t>();
  c.oscillation = j.at("oscillation").get<double>();
  c.norm_plus = j.at("norm_plus").get<double>();
  c.norm_minus = j.at("norm_minus").get<double>();
  c.member_plus = j.at("member_plus").get<double>();
  c.member_minus = j.at("member_minus").get<double>();
  c.margin = j.at("margin").get<double>();
  c.ok = j.at("ok").get<bool>();
  return c;
}

}  // namespace

json point_json(const PointT& p) {
  json j;
  j["x"] = p.x();
  if (std::isinf(p.t()))
    j["t"] = "inf";  // JSON has no infinity literal
  else
    j["t"] = p.t();
  return j;
}

PointT point_from_json(const json& j) {
  if (j.is_number()) return PointT::from_x(j.get<double>());
  if (j.is_object()) {
    if (j.contains("t")) {
      const json& t = j.at("t");
      if (t.is_string()) {
        if (t.get<std::string>() == "inf") return PointT::from_x(0.0);
        throw InvalidInput("point: unrecognized t value '" +
                           t.get<std::string>() + "'");
      }
      return PointT::from_t(t.get<double>());
    }
    if (j.contains("x")) return PointT::from_x(j.at("x").get<double>());
  }
  throw InvalidInput("point: expected a number or an object with t or x");
}

json polynomial_json(const MuntzPolynomial& p) {
  json arr = json::array();
  for (const Term& term : p.terms())
    arr.push_back(
        json{{"exponent", term.exponent}, {"coefficient", term.coefficient}});
  return arr;
}

MuntzPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial: expected an array of terms");
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (const json& item : j)
    terms.push_back(Term{item.at("exponent").get<double>(),
                         item.at("coefficient").get<double>()});
  return MuntzPolynomial(std::move(terms));
}

json sequence_json(const ExponentSequence& seq) {
  json j;
  j["values"] = seq.values();
  if (seq.family()) {
    j["family"] = json{{"kind", "geometric"},
                       {"base", seq.family()->base},
                       {"scale", seq.family()->scale},
                       {"start", seq.family()->start}};
  } else {
    j["family"] = nullptr;
  }
  return j;
}

ExponentSequence sequence_from_json(const json& j) {
  const auto values = j.at("values").get<std::vector<double>>();
  if (j.contains("family") && j.at("family").is_object()) {
    const json& fam = j.at("family");
    if (fam.at("kind") != "geometric")
      throw InvalidInput("sequence: unknown family kind");
    ExponentSequence seq = ExponentSequence::geometric(
        fam.at("base").get<double>(), values.size(),
        fam.at("scale").get<double>(), fam.at("start").get<long>());
    if (seq.values() != values)
      throw InvalidInput("sequence: values do not match their family tag");
    return seq;
  }
  return ExponentSequence::from_values(values);
}

json functional_json(const DiscreteFunctional& f) {
  json arr = json::array();
  for (const Atom& atom : f.atoms()) {
    json a = point_json(atom.point);
    a["weight"] = atom.weight;
    arr.push_back(std::move(a));
  }
  return arr;
}

DiscreteFunctional functional_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("functional: expected an array of atoms");
  std::vector<Atom> atoms;
  atoms.reserve(j.size());
  for (const json& item : j)
    atoms.push_back(Atom{point_from_json(item), item.at("weight").get<double>()});
  return DiscreteFunctional(std::move(atoms));
}

json profile_json(const SpikeProfile& p) {
  json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["argmax"] = point_json(p.argmax);
  j["norm"] = p.norm;
  j["y_lower_bound"] = p.y_lower_bound;
  j["y_bound_valid"] = p.y_bound_valid;
  j["quarter_bound_applies"] = p.quarter_bound_applies;
  j["alpha_zero_edge"] = p.alpha_zero_edge;
  return j;
}

json certificate_json(const C0Certificate& cert, bool canonical) {
  json j;
  j["schema"] = kC0CertSchema;
  if (!canonical) j["generated"] = iso_now();
  j["tol"] = cert.tol;
  j["exponents"] = sequence_json(cert.exponents);
  json picks = json::array();
  for (const C0Pick& pick : cert.picks) {
    json p;
    p["n"] = pick.n;
    p["k"] = pick.k;
    p["alpha"] = pick.alpha;
    p["beta"] = pick.beta;
    p["scale"] = pick.scale;
    p["level"] = pick.level;
    p["interval"] = interval_json(pick.interval);
    p["spike_norm"] = pick.spike_norm;
    p["spike_argmax"] = point_json(pick.spike_argmax);
    picks.push_back(std::move(p));
  }
  j["picks"] = std::move(picks);
  json functions = json::array();
  for (const MuntzPolynomial& f : cert.functions)
    functions.push_back(polynomial_json(f));
  j["functions"] = std::move(functions);
  j["rejected"] = cert.rejected;
  j["muntz_partial_sum"] = cert.muntz_partial_sum;
  if (cert.rip_tail_bound)
    j["rip_tail_bound"] = *cert.rip_tail_bound;
  else
    j["rip_tail_bound"] = nullptr;
  return j;
}

C0Certificate c0_certificate_from_json(const json& j) {
  require_schema(j, kC0CertSchema);
  C0Certificate cert;
  cert.exponents = sequence_from_json(j.at("exponents"));
  cert.tol = j.at("tol").get<double>();
  for (const json& p : j.at("picks")) {
    C0Pick pick;
    pick.n = p.at("n").get<std::size_t>();
    pick.k = p.at("k").get<std::size_t>();
    pick.alpha = p.at("alpha").get<double>();
    pick.beta = p.at("beta").get<double>();
    pick.scale = p.at("scale").get<double>();
    pick.level = p.at("level").get<double>();
    pick.interval = interval_from_json(p.at("interval"));
    pick.spike_norm = p.at("spike_norm").get<double>();
    pick.spike_argmax = point_from_json(p.at("spike_argmax"));
    cert.picks.push_back(std::move(pick));
  }
  for (const json& f : j.at("functions"))
    cert.functions.push_back(polynomial_from_json(f));
  if (j.contains("rejected"))
    cert.rejected = j.at("rejected").get<std::vector<std::size_t>>();
  if (j.contains("muntz_partial_sum"))
    cert.muntz_partial_sum = j.at("muntz_partial_sum").get<double>();
  if (j.contains("rip_tail_bound") && j.at("rip_tail_bound").is_number())
    cert.rip_tail_bound = j.at("rip_tail_bound").get<double>();
  return cert;
}

json certificate_json(const OctaCertificate& cert, bool canonical) {
  json j;
  j["schema"] = kOctaCertSchema;
  if (!canonical) j["generated"] = iso_now();
  j["tol"] = cert.tol;
  j["eps"] = cert.eps;
  j["scale"] = cert.scale;
  j["chosen_k"] = cert.chosen_k;
  j["separation"] = cert.separation;
  j["verified"] = cert.verified;
  j["exponents"] = sequence_json(cert.exponents);
  j["spike"] = json{{"alpha", cert.spike_alpha},
                    {"beta", cert.spike_beta},
                    {"argmax", point_json(cert.spike_argmax)}};
  j["weights"] = cert.weights;
  json slices = json::array();
  for (const SliceSpec& slice : cert.slices) {
    json s;
    s["functional"] = functional_json(slice.functional);
    s["epsilon"] = slice.epsilon;
    s["witness"] = polynomial_json(slice.witness);
    slices.push_back(std::move(s));
  }
  j["slices"] = std::move(slices);
  json perts = json::array();
  for (const auto& [plus, minus] : cert.perturbations)
    perts.push_back(json{{"plus", polynomial_json(plus)},
                         {"minus", polynomial_json(minus)}});
  j["perturbations"] = std::move(perts);
  j["u_plus_norm"] = cert.u_plus_norm;
  j["u_minus_norm"] = cert.u_minus_norm;
  json membership = json::array();
  for (const SliceCheck& c : cert.membership)
    membership.push_back(slice_check_json(c));
  j["membership"] = std::move(membership);
  return j;
}

OctaCertificate octa_certificate_from_json(const json& j) {
  require_schema(j, kOctaCertSchema);
  OctaCertificate cert;
  cert.tol = j.at("tol").get<double>();
  cert.eps = j.at("eps").get<double>();
  cert.scale = j.at("scale").get<double>();
  cert.chosen_k = j.at("chosen_k").get<std::size_t>();
  cert.separation = j.at("separation").get<double>();
  cert.verified = j.at("verified").get<bool>();
  cert.exponents = sequence_from_json(j.at("exponents"));
  cert.spike_alpha = j.at("spike").at("alpha").get<double>();
  cert.spike_beta = j.at("spike").at("beta").get<double>();
  cert.spike_argmax = point_from_json(j.at("spike").at("argmax"));
  cert.weights = j.at("weights").get<std::vector<double>>();
  for (const json& s : j.at("slices"))
    cert.slices.push_back(SliceSpec{functional_from_json(s.at("functional")),
                                    s.at("epsilon").get<double>(),
                                    polynomial_from_json(s.at("witness"))});
  for (const json& p : j.at("perturbations"))
    cert.perturbations.emplace_back(polynomial_from_json(p.at("plus")),
                                    polynomial_from_json(p.at("minus")));
  cert.u_plus_norm = j.at("u_plus_norm").get<double>();
  cert.u_minus_norm = j.at("u_minus_norm").get<double>();
  for (const json& c : j.at("membership"))
    cert.membership.push_back(slice_check_from_json(c));
  return cert;
}

json report_json(const C0ConditionsReport& conditions,
                 const C0InequalityReport& inequalities) {
  json j;
  j["schema"] = kC0VerifySchema;
  json cond;
  cond["grid_points"] = conditions.grid_points;
  cond["all_hold"] = conditions.all_hold;
  json margins = json::array();
  for (const ConditionMargin& m : conditions.conditions) {
    json e;
    e["condition"] = m.condition;
    e["margin"] = m.margin;
    e["holds"] = m.holds;
    e["stage"] = m.stage;
    e["worst_point"] = point_json(m.worst_point);
    margins.push_back(std::move(e));
  }
  cond["margins"] = std::move(margins);
  j["conditions"] = std::move(cond);

  json ineq;
  ineq["m"] = inequalities.m;
  ineq["M"] = inequalities.M;
  ineq["seed"] = inequalities.seed;
  ineq["trials"] = inequalities.trials.size();
  ineq["basis_norms"] = inequalities.basis_norms;
  ineq["worst_basis_norm_error"] = inequalities.worst_basis_norm_error;
  ineq["min_norm"] = inequalities.min_norm;
  ineq["max_norm"] = inequalities.max_norm;
  ineq["all_within"] = inequalities.all_within;
  json violations = json::array();
  for (const C0Trial& trial : inequalities.trials)
    if (!trial.within) {
      json v;
      v["tag"] = trial.tag;
      v["coefficients"] = trial.coefficients;
      v["norm"] = trial.norm;
      violations.push_back(std::move(v));
    }
  ineq["violations"] = std::move(violations);
  j["inequalities"] = std::move(ineq);
  return j;
}

std::vector<SliceSpec> slices_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw InvalidInput("slices: expected a non-empty array");
  std::vector<SliceSpec> slices;
  slices.reserve(j.size());
  for (const json& s : j)
    slices.push_back(SliceSpec{functional_from_json(s.at("functional")),
                               s.at("epsilon").get<double>(),
                               polynomial_from_json(s.at("witness"))});
  return slices;
}

json slices_json(const std::vector<SliceSpec>& slices) {
  json arr = json::array();
  for (const SliceSpec& slice : slices) {
    json s;
    s["functional"] = functional_json(slice.functional);
    s["epsilon"] = slice.epsilon;
    s["witness"] = polynomial_json(slice.witness);
    arr.push_back(std::move(s));
  }
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace muntz
