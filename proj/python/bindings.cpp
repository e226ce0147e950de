// Python surface for the Müntz laboratory. Structured results cross the
// boundary as plain dicts (via the JSON layer), certificates as classes with
// to_dict/to_json for persistence.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <vector>

#include "muntz/c0.hpp"
#include "muntz/errors.hpp"
#include "muntz/exponents.hpp"
#include "muntz/functional.hpp"
#include "muntz/json_io.hpp"
#include "muntz/octa.hpp"
#include "muntz/polynomial.hpp"
#include "muntz/spikes.hpp"

namespace py = pybind11;
using namespace muntz;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items())
        out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      throw InvalidInput("json_to_py: unsupported value type");
  }
}

MuntzPolynomial poly_from_pairs(
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<Term> terms;
  terms.reserve(pairs.size());
  for (const auto& [e, c] : pairs) terms.push_back({e, c});
  return MuntzPolynomial(std::move(terms));
}

DiscreteFunctional functional_from_pairs(
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<Atom> atoms;
  atoms.reserve(pairs.size());
  for (const auto& [x, w] : pairs) atoms.push_back({PointT::from_x(x), w});
  return DiscreteFunctional(std::move(atoms));
}

py::dict sup_norm_dict(const SupNormResult& r) {
  py::list argmax;
  for (const auto& p : r.argmax) {
    py::dict q;
    q["x"] = p.x();
    q["t"] = p.t();
    argmax.append(q);
  }
  py::dict out;
  out["value"] = r.value;
  out["argmax"] = argmax;
  out["degraded_precision"] = r.degraded_precision;
  return out;
}

SupNormOptions make_opts(double tol, int scan_points) {
  SupNormOptions o;
  o.tol = tol;
  o.scan_points = scan_points;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Müntz-space geometry: spikes, c0 certificates, diameter-2 "
            "certificates";

  py::register_exception<InsufficientSequence>(m, "InsufficientSequenceError",
                                               PyExc_RuntimeError);
  py::register_exception<EmptyInterval>(m, "EmptyIntervalError",
                                        PyExc_RuntimeError);
  py::register_exception<ConstructionFailure>(m, "ConstructionFailureError",
                                              PyExc_RuntimeError);

  py::class_<PointT>(m, "Point")
      .def_static("from_x", &PointT::from_x, py::arg("x"))
      .def_static("from_t", &PointT::from_t, py::arg("t"))
      .def_property_readonly("x", &PointT::x)
      .def_property_readonly("t", &PointT::t)
      .def("__repr__", [](const PointT& p) {
        std::ostringstream os;
        os << "Point(x=" << p.x() << ", t=" << p.t() << ")";
        return os.str();
      });

  py::class_<MuntzPolynomial>(m, "Polynomial")
      .def(py::init(&poly_from_pairs), py::arg("terms"),
           "terms: list of (exponent, coefficient) pairs")
      .def_static("monomial", &MuntzPolynomial::monomial, py::arg("exponent"),
                  py::arg("coefficient") = 1.0)
      .def_property_readonly("terms",
                             [](const MuntzPolynomial& p) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& t : p.terms())
                                 out.emplace_back(t.exponent, t.coefficient);
                               return out;
                             })
      .def("__len__", &MuntzPolynomial::size)
      .def("eval",
           [](const MuntzPolynomial& p, double x) {
             return p.eval(PointT::from_x(x));
           },
           py::arg("x"))
      .def("eval_t", &MuntzPolynomial::eval_t, py::arg("t"))
      .def("__repr__", [](const MuntzPolynomial& p) {
        std::ostringstream os;
        os << "Polynomial(" << p.size() << " terms)";
        return os.str();
      });

  py::class_<ExponentSequence>(m, "ExponentSequence")
      .def_static("geometric", &ExponentSequence::geometric, py::arg("base"),
                  py::arg("count"), py::arg("scale") = 1.0,
                  py::arg("start") = 1)
      .def_static("from_values",
                  [](std::vector<double> v) {
                    return ExponentSequence::from_values(std::move(v));
                  },
                  py::arg("values"))
      .def_static("parse", &parse_sequence_spec, py::arg("spec"),
                  py::arg("count"),
                  "spec: 'geometric:<base>[:scale=<s>][:start=<k0>]' or "
                  "'list:v1,v2,...'")
      .def_property_readonly("values",
                             [](const ExponentSequence& s) { return s.values(); })
      .def("__len__", &ExponentSequence::size)
      .def("__getitem__",
           [](const ExponentSequence& s, std::size_t i) {
             if (i >= s.size()) throw py::index_error();
             return s[i];
           })
      .def("prefix", &ExponentSequence::prefix, py::arg("count"))
      .def("is_rip", [](const ExponentSequence& s) { return is_rip(s); })
      .def("partial_sum",
           [](const ExponentSequence& s) {
             const auto ms = muntz_partial_sum(s);
             py::dict out;
             out["partial_sum"] = ms.partial_sum;
             out["rip_tail_bound"] = ms.rip_tail_bound
                                         ? py::object(py::float_(*ms.rip_tail_bound))
                                         : py::object(py::none());
             return out;
           })
      .def("__repr__", [](const ExponentSequence& s) {
        std::ostringstream os;
        os << "ExponentSequence(" << s.size() << " values";
        if (s.size() > 0) os << ", " << s.front() << ".." << s.back();
        os << ")";
        return os.str();
      });

  m.def("extract_rip_subsequence", &extract_rip_subsequence, py::arg("seq"),
        py::arg("count"));

  m.def("sup_norm",
        [](const MuntzPolynomial& p, double tol, int scan_points) {
          return sup_norm_dict(sup_norm(p, make_opts(tol, scan_points)));
        },
        py::arg("polynomial"), py::arg("tol") = 1e-10,
        py::arg("scan_points") = 4096);

  py::class_<SpikeFunction>(m, "Spike")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("alpha", &SpikeFunction::alpha)
      .def_property_readonly("beta", &SpikeFunction::beta)
      .def("value",
           [](const SpikeFunction& s, double x) {
             return s.value(PointT::from_x(x));
           },
           py::arg("x"))
      .def("value_t", &SpikeFunction::value_t, py::arg("t"))
      .def("polynomial", &SpikeFunction::polynomial)
      .def("__repr__", [](const SpikeFunction& s) {
        std::ostringstream os;
        os << "Spike(alpha=" << s.alpha() << ", beta=" << s.beta() << ")";
        return os.str();
      });

  m.def("spike_at", &spike_at, py::arg("seq"), py::arg("k"),
        "Spike x^{lambda_k} - x^{lambda_{k+1}}, 1-based k");

  m.def("profile",
        [](const SpikeFunction& s) { return json_to_py(profile_json(profile(s))); },
        py::arg("spike"));

  m.def("superlevel_interval",
        [](const SpikeFunction& s, double level) {
          const auto iv = superlevel_interval(s, level);
          py::dict out;
          out["a"] = json_to_py(point_json(iv.a));
          out["b"] = json_to_py(point_json(iv.b));
          return out;
        },
        py::arg("spike"), py::arg("level"));

  py::class_<DiscreteFunctional>(m, "Functional")
      .def(py::init(&functional_from_pairs), py::arg("atoms"),
           "atoms: list of (x, weight) pairs, sum |weight| <= 1")
      .def_static("parse", &parse_functional_spec, py::arg("spec"),
                  "spec: 'w1@x1,w2@x2,...'")
      .def_property_readonly("atoms",
                             [](const DiscreteFunctional& f) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& a : f.atoms())
                                 out.emplace_back(a.point.x(), a.weight);
                               return out;
                             })
      .def_property_readonly("total_variation",
                             &DiscreteFunctional::total_variation)
      .def("__call__",
           [](const DiscreteFunctional& f, const MuntzPolynomial& p) {
             return f(p);
           },
           py::arg("polynomial"));

  m.def("weak_null_trace", &weak_null_trace, py::arg("seq"),
        py::arg("functional"), py::arg("k_max"));

  py::class_<C0Certificate>(m, "C0Certificate")
      .def_property_readonly("count",
                             [](const C0Certificate& c) { return c.picks.size(); })
      .def_property_readonly("functions",
                             [](const C0Certificate& c) { return c.functions; })
      .def("to_dict",
           [](const C0Certificate& c) {
             return json_to_py(certificate_json(c, true));
           })
      .def("to_json",
           [](const C0Certificate& c) { return dump(certificate_json(c, true)); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return c0_certificate_from_json(json::parse(text));
                  },
                  py::arg("text"))
      .def("__repr__", [](const C0Certificate& c) {
        std::ostringstream os;
        os << "C0Certificate(" << c.picks.size() << " functions)";
        return os.str();
      });

  m.def("c0_build",
        [](const ExponentSequence& seq, std::size_t count, double tol,
           int scan_points) {
          return c0_build(seq, count, make_opts(tol, scan_points));
        },
        py::arg("seq"), py::arg("count"), py::arg("tol") = 1e-10,
        py::arg("scan_points") = 4096);

  m.def("verify_conditions",
        [](const C0Certificate& cert, std::size_t grid_points, double tol,
           int scan_points) {
          const auto rep = verify_conditions(cert, grid_points,
                                             make_opts(tol, scan_points));
          py::list margins;
          for (const auto& c : rep.conditions) {
            py::dict e;
            e["condition"] = c.condition;
            e["margin"] = c.margin;
            e["holds"] = c.holds;
            e["stage"] = c.stage;
            e["worst_point"] = json_to_py(point_json(c.worst_point));
            margins.append(e);
          }
          py::dict out;
          out["all_hold"] = rep.all_hold;
          out["grid_points"] = rep.grid_points;
          out["margins"] = margins;
          return out;
        },
        py::arg("certificate"), py::arg("grid_points") = 100000,
        py::arg("tol") = 1e-10, py::arg("scan_points") = 4096);

  m.def("verify_inequalities",
        [](const C0Certificate& cert, std::size_t trials, std::uint64_t seed,
           double tol, int scan_points) {
          const auto rep = verify_c0_inequalities(cert, trials, seed,
                                                  make_opts(tol, scan_points));
          py::dict out;
          out["all_within"] = rep.all_within;
          out["m"] = rep.m;
          out["M"] = rep.M;
          out["seed"] = rep.seed;
          out["trials"] = rep.trials.size();
          out["basis_norms"] = rep.basis_norms;
          out["worst_basis_norm_error"] = rep.worst_basis_norm_error;
          out["min_norm"] = rep.min_norm;
          out["max_norm"] = rep.max_norm;
          return out;
        },
        py::arg("certificate"), py::arg("trials") = 1000, py::arg("seed") = 42,
        py::arg("tol") = 1e-10, py::arg("scan_points") = 4096);

  py::class_<SliceSpec>(m, "Slice")
      .def(py::init([](const DiscreteFunctional& f, double epsilon,
                       const MuntzPolynomial& witness) {
             return SliceSpec{f, epsilon, witness};
           }),
           py::arg("functional"), py::arg("epsilon"), py::arg("witness"))
      .def_property_readonly("epsilon",
                             [](const SliceSpec& s) { return s.epsilon; })
      .def_property_readonly("functional",
                             [](const SliceSpec& s) { return s.functional; })
      .def_property_readonly("witness",
                             [](const SliceSpec& s) { return s.witness; });

  m.def("find_K",
        [](const std::vector<SliceSpec>& slices, double eps,
           const ExponentSequence& seq, std::size_t k_max, double tol,
           int scan_points) {
          const auto rep = find_K(slices, eps, seq, k_max,
                                  make_opts(tol, scan_points));
          py::list checks;
          for (const auto& c : rep.checks) {
            py::dict e;
            e["slice"] = c.slice;
            e["norm_plus"] = c.norm_plus;
            e["norm_minus"] = c.norm_minus;
            e["member_plus"] = c.member_plus;
            e["member_minus"] = c.member_minus;
            e["oscillation"] = c.oscillation;
            e["margin"] = c.margin;
            e["ok"] = c.ok;
            checks.append(e);
          }
          py::dict out;
          out["found"] = rep.found;
          out["k"] = rep.k;
          out["best_k"] = rep.best_k;
          out["best_margin"] = rep.best_margin;
          out["k_max"] = rep.k_max;
          out["checks"] = checks;
          return out;
        },
        py::arg("slices"), py::arg("eps"), py::arg("seq"), py::arg("k_max"),
        py::arg("tol") = 1e-10, py::arg("scan_points") = 4096);

  py::class_<OctaCertificate>(m, "OctaCertificate")
      .def_property_readonly("verified",
                             [](const OctaCertificate& c) { return c.verified; })
      .def_property_readonly("chosen_k",
                             [](const OctaCertificate& c) { return c.chosen_k; })
      .def_property_readonly("separation",
                             [](const OctaCertificate& c) { return c.separation; })
      .def_property_readonly("scale",
                             [](const OctaCertificate& c) { return c.scale; })
      .def("to_dict",
           [](const OctaCertificate& c) {
             return json_to_py(certificate_json(c, true));
           })
      .def("to_json",
           [](const OctaCertificate& c) { return dump(certificate_json(c, true)); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return octa_certificate_from_json(json::parse(text));
                  },
                  py::arg("text"))
      .def("__repr__", [](const OctaCertificate& c) {
        std::ostringstream os;
        os << "OctaCertificate(k=" << c.chosen_k
           << ", separation=" << c.separation << ")";
        return os.str();
      });

  m.def("diameter_certificate",
        [](const std::vector<SliceSpec>& slices, const std::vector<double>& w,
           double eps, const ExponentSequence& seq, std::size_t k_max,
           double tol, int scan_points) {
          return diameter_certificate(slices, w, eps, seq, k_max,
                                      make_opts(tol, scan_points));
        },
        py::arg("slices"), py::arg("weights"), py::arg("eps"), py::arg("seq"),
        py::arg("k_max"), py::arg("tol") = 1e-10,
        py::arg("scan_points") = 4096);

  m.def("witness_finder",
        [](const DiscreteFunctional& f, double epsilon,
           const ExponentSequence& seq, std::size_t budget, double tol,
           int scan_points) {
          const auto r = witness_finder(f, epsilon, seq, budget,
                                        make_opts(tol, scan_points));
          py::dict out;
          out["witness"] = r.witness ? py::cast(*r.witness)
                                     : py::object(py::none());
          out["best_value"] = r.best_value;
          out["steps"] = r.steps;
          return out;
        },
        py::arg("functional"), py::arg("epsilon"), py::arg("seq"),
        py::arg("budget"), py::arg("tol") = 1e-10,
        py::arg("scan_points") = 4096);
}
