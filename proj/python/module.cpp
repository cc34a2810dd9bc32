#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

#include "dyb/acceptance.hpp"
#include "dyb/instances.hpp"
#include "dyb/verify.hpp"

namespace py = pybind11;
using namespace dyb;

namespace {

const char* verdict_name(BpVerdict v) {
  switch (v) {
    case BpVerdict::member: return "member";
    case BpVerdict::non_member: return "non-member";
    default: return "inconclusive";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical checks for two-weight bump inequalities on dyadic model domains";

  py::class_<YoungFunction>(m, "YoungFunction")
      .def_static("power", &YoungFunction::power, py::arg("r"))
      .def_static("log_bump", &YoungFunction::log_bump, py::arg("p"), py::arg("delta"))
      .def_static("loglog_bump", &YoungFunction::loglog_bump, py::arg("p"), py::arg("delta"))
      .def_static("table", &YoungFunction::table, py::arg("points"))
      .def("__call__", [](const YoungFunction& a, double t) { return a(t); })
      .def("conjugate", py::overload_cast<double>(&YoungFunction::conjugate, py::const_),
           py::arg("s"))
      .def("inverse", &YoungFunction::inverse, py::arg("s"))
      .def("normalized", &YoungFunction::normalized)
      .def("is_normalized", &YoungFunction::is_normalized)
      .def("young_gap", &YoungFunction::young_gap, py::arg("s"), py::arg("t"))
      .def("bp_verdict",
           [](const YoungFunction& a, double p) { return verdict_name(a.bp_test(p).verdict); },
           py::arg("p"))
      .def("__repr__", &YoungFunction::describe);

  py::class_<CubeId>(m, "CubeId")
      .def(py::init([](int shift, int level, std::int64_t index) {
             return CubeId{shift, level, index};
           }),
           py::arg("shift"), py::arg("level"), py::arg("index"))
      .def_readwrite("shift", &CubeId::shift)
      .def_readwrite("level", &CubeId::level)
      .def_readwrite("index", &CubeId::index)
      .def("__repr__", [](const CubeId& q) {
        return "CubeId(shift=" + std::to_string(q.shift) + ", level=" +
               std::to_string(q.level) + ", index=" + std::to_string(q.index) + ")";
      });

  py::class_<DyadicDomain>(m, "DyadicDomain")
      .def(py::init<int, std::vector<double>>(), py::arg("depth"), py::arg("masses"))
      .def_static("uniform", [](int depth) { return DyadicDomain::uniform(depth); },
                  py::arg("depth"))
      .def_property_readonly("depth", &DyadicDomain::depth)
      .def_property_readonly("size", &DyadicDomain::size)
      .def_property_readonly("num_shifts", &DyadicDomain::num_shifts)
      .def("total_mass", &DyadicDomain::total_mass)
      .def("cube_measure", &DyadicDomain::cube_measure, py::arg("cube"))
      .def("doubling_constant", &DyadicDomain::doubling_constant)
      .def("integrate",
           [](const DyadicDomain& d, const GridFunction& f, const CubeId& q) {
             return d.integrate(f, q);
           },
           py::arg("f"), py::arg("cube"))
      .def("average",
           [](const DyadicDomain& d, const GridFunction& f, const CubeId& q) {
             return d.average(f, q);
           },
           py::arg("f"), py::arg("cube"));

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def_static("constant", &GridFunction::constant, py::arg("domain"), py::arg("value"))
      .def_static("indicator",
                  [](const DyadicDomain& d, const std::vector<std::int64_t>& cells) {
                    return GridFunction::indicator(
                        d, std::set<std::int64_t>(cells.begin(), cells.end()));
                  },
                  py::arg("domain"), py::arg("cells"))
      .def_static("lognormal", &GridFunction::lognormal, py::arg("domain"), py::arg("seed"),
                  py::arg("sigma") = 1.0)
      .def("values", [](const GridFunction& f) { return f.values(); })
      .def("__len__", [](const GridFunction& f) { return f.size(); })
      .def("__getitem__", [](const GridFunction& f, std::int64_t i) {
        if (i < 0 || i >= f.size()) throw py::index_error();
        return f[i];
      });

  py::class_<BanachSpaceSpec>(m, "BanachSpaceSpec")
      .def_static("lr", &BanachSpaceSpec::Lr, py::arg("r"))
      .def_static("orlicz", &BanachSpaceSpec::orlicz, py::arg("young"))
      .def("associate", &BanachSpaceSpec::associate)
      .def("norm_on_cube", &BanachSpaceSpec::norm_on_cube, py::arg("domain"), py::arg("f"),
           py::arg("cube"))
      .def("__repr__", &BanachSpaceSpec::describe);

  m.def("lp_norm_on_cube", &lp_norm_on_cube, py::arg("domain"), py::arg("f"),
        py::arg("cube"), py::arg("p"));
  m.def("lp_norm_global", &lp_norm_global, py::arg("domain"), py::arg("f"), py::arg("p"));
  m.def("orlicz_norm_on_cube", &orlicz_norm_on_cube, py::arg("domain"), py::arg("f"),
        py::arg("cube"), py::arg("young"));

  m.def("maximal_hl",
        [](const DyadicDomain& d, const GridFunction& f, std::optional<int> only_shift) {
          return maximal(d, f, MaximalSpec::hl(), only_shift);
        },
        py::arg("domain"), py::arg("f"), py::arg("only_shift") = py::none());
  m.def("maximal_lq",
        [](const DyadicDomain& d, const GridFunction& f, double q,
           std::optional<int> only_shift) {
          return maximal(d, f, MaximalSpec::lq(q), only_shift);
        },
        py::arg("domain"), py::arg("f"), py::arg("q"), py::arg("only_shift") = py::none());
  m.def("maximal_orlicz",
        [](const DyadicDomain& d, const GridFunction& f, const YoungFunction& a,
           std::optional<int> only_shift) {
          return maximal(d, f, MaximalSpec::orlicz(a), only_shift);
        },
        py::arg("domain"), py::arg("f"), py::arg("young"),
        py::arg("only_shift") = py::none());

  py::class_<SparseFamily>(m, "SparseFamily")
      .def_property_readonly("shift", &SparseFamily::shift)
      .def("cubes", &SparseFamily::cubes)
      .def("__len__", &SparseFamily::size)
      .def("serialize", &SparseFamily::serialize);

  m.def("build_cz_sparse", &build_cz_sparse, py::arg("domain"), py::arg("f"),
        py::arg("lam"), py::arg("shift") = 0);
  m.def("verify_sparsity", &verify_sparsity, py::arg("domain"), py::arg("family"));
  m.def("sparse_operator", &sparse_operator, py::arg("domain"), py::arg("family"),
        py::arg("f"));
  m.def("ainfty_gamma", &ainfty_gamma, py::arg("domain"), py::arg("family"), py::arg("w"));

  py::class_<WitnessedConstant>(m, "WitnessedConstant")
      .def_readonly("value", &WitnessedConstant::value)
      .def_readonly("witness", &WitnessedConstant::witness);

  m.def("two_weight_ap_constant", &two_weight_ap_constant, py::arg("domain"), py::arg("w"),
        py::arg("v"), py::arg("p"));
  m.def("neugebauer_constant", &neugebauer_constant, py::arg("domain"), py::arg("w"),
        py::arg("v"), py::arg("p"), py::arg("r"));
  m.def("reverse_holder_constant",
        [](const DyadicDomain& d, const GridFunction& rho, double p) {
          return reverse_holder_constant(d, rho, p);
        },
        py::arg("domain"), py::arg("rho"), py::arg("p"));
  m.def("a1_constant",
        [](const DyadicDomain& d, const GridFunction& w) { return a1_constant(d, w); },
        py::arg("domain"), py::arg("w"));
  m.def("power_weight_blowup", &power_weight_blowup, py::arg("alpha"), py::arg("beta"),
        py::arg("p"), py::arg("depths"));

  py::class_<RdFConfig>(m, "RdFConfig")
      .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
      .def_readwrite("p", &RdFConfig::p)
      .def_readwrite("q", &RdFConfig::q)
      .def_readwrite("b", &RdFConfig::b)
      .def_readwrite("truncation", &RdFConfig::truncation)
      .def_readwrite("tail_tol", &RdFConfig::tail_tol)
      .def_readwrite("shift", &RdFConfig::shift);

  py::class_<RdFReport>(m, "RdFReport")
      .def_readonly("pointwise_lower", &RdFReport::pointwise_lower)
      .def_readonly("norm_bound", &RdFReport::norm_bound)
      .def_readonly("self_control", &RdFReport::self_control)
      .def_readonly("rh_chain", &RdFReport::rh_chain)
      .def_readonly("norm_ratio", &RdFReport::norm_ratio)
      .def_readonly("a1", &RdFReport::a1)
      .def_readonly("rh", &RdFReport::rh)
      .def("certified", &RdFReport::certified);

  m.def("rubio_operator", &rubio_operator, py::arg("domain"), py::arg("h"), py::arg("cfg"));
  m.def("tilde_r", &tilde_r, py::arg("domain"), py::arg("h"), py::arg("cfg"));
  m.def("certify_properties", &certify_properties, py::arg("domain"), py::arg("h"),
        py::arg("cfg"));

  py::class_<Step1Report>(m, "Step1Report")
      .def_readonly("lhs", &Step1Report::lhs)
      .def_readonly("rhs", &Step1Report::rhs)
      .def_readonly("tracked_constant", &Step1Report::tracked_constant)
      .def_readonly("passed", &Step1Report::pass);

  py::class_<MainTheoremReport>(m, "MainTheoremReport")
      .def_readonly("lhs", &MainTheoremReport::lhs)
      .def_readonly("rhs", &MainTheoremReport::rhs)
      .def_readonly("tight_constant", &MainTheoremReport::tight_constant)
      .def_readonly("coarse_constant", &MainTheoremReport::coarse_constant)
      .def_readonly("tight_pass", &MainTheoremReport::tight_pass)
      .def_readonly("coarse_pass", &MainTheoremReport::coarse_pass)
      .def_readonly("passed", &MainTheoremReport::pass);

  m.def("verify_step1",
        [](std::uint64_t seed, int depth, const std::string& preset) {
          const VerifyInstance in =
              make_verify_instance(seed, depth, pair_preset_from_string(preset));
          return step1_check(in.d, in.s, in.pair, in.f, in.rho, in.p);
        },
        py::arg("seed"), py::arg("depth") = 8, py::arg("preset") = "mq-pair");
  m.def("verify_main",
        [](std::uint64_t seed, int depth, const std::string& preset) {
          const VerifyInstance in =
              make_verify_instance(seed, depth, pair_preset_from_string(preset));
          return main_theorem_check(in.d, in.s, in.pair, in.f, in.p, in.cfg);
        },
        py::arg("seed"), py::arg("depth") = 8, py::arg("preset") = "mq-pair");

  m.def("run_acceptance",
        [](double scale, int max_depth, int jobs, const std::vector<int>& only) {
          AcceptanceConfig cfg;
          cfg.scale = scale;
          cfg.max_depth = max_depth;
          cfg.jobs = jobs;
          py::list out;
          for (const auto& r : run_acceptance(cfg, only)) {
            py::dict item;
            item["id"] = r.id;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            item["seconds"] = r.seconds;
            out.append(std::move(item));
          }
          return out;
        },
        py::arg("scale") = 0.1, py::arg("max_depth") = 12, py::arg("jobs") = 1,
        py::arg("only") = std::vector<int>{});
}
