#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "ircb/audit.hpp"
#include "ircb/cf.hpp"
#include "ircb/channel.hpp"
#include "ircb/df.hpp"
#include "ircb/fme.hpp"
#include "ircb/outer.hpp"
#include "ircb/region.hpp"

namespace py = pybind11;
using namespace ircb;

namespace {

RateRegion region_from_tuples(
    const std::vector<std::tuple<int, int, double>>& planes) {
    RateRegion r;
    for (const auto& [a1, a2, b] : planes) {
        const BoundFamily fam{a1, a2};
        if (family_index(fam) < 0)
            throw std::invalid_argument("unsupported bound family (" +
                                        std::to_string(a1) + ", " +
                                        std::to_string(a2) + ")");
        r.add(fam, b);
    }
    return r;
}

py::list planes_out(const RateRegion& r) {
    py::list out;
    for (const HalfPlane& p : r.planes())
        out.append(py::make_tuple(p.fam.a1, p.fam.a2, p.b));
    return out;
}

py::list vertices_out(const RateRegion& r) {
    py::list out;
    for (const RatePoint& v : r.vertices())
        out.append(py::make_tuple(v.r1, v.r2));
    return out;
}

py::dict row_out(const SweepRow& r) {
    py::dict d;
    d["s31_db"] = r.s31_db;
    d["outer"] = r.outer;
    d["df"] = r.df;
    d["cf"] = r.cf;
    d["hk"] = r.hk;
    d["gap_df"] = r.gap_df;
    d["gap_cf"] = r.gap_cf;
    return d;
}

AuditRegime parse_regime(const std::string& name) {
    AuditRegime regime;
    if (!regime_parse(name, regime))
        throw std::invalid_argument("unknown audit regime '" + name + "'");
    return regime;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rate-region bounds for the Gaussian interference relay channel";

    m.def("cap", &cap, py::arg("snr"),
          "Gaussian point-to-point rate 0.5*log2(1 + snr) in bits.");
    m.def("db_to_lin", &db_to_lin, py::arg("db"));
    m.def("lin_to_db", &lin_to_db, py::arg("lin"));
    m.def("interference_det", &interference_det, py::arg("channel"),
          "Cross-gain determinant term entering the sum-rate outer bounds.");

    py::class_<ChannelSnr>(m, "ChannelSnr",
                           "Linear receive SNRs of the seven links plus the "
                           "gain-sign parity (even: all gains positive).")
        .def(py::init([](double s11, double s12, double s13, double s21,
                         double s22, double s23, double s31,
                         bool sign_parity) {
                 ChannelSnr c;
                 c.s11 = s11;
                 c.s12 = s12;
                 c.s13 = s13;
                 c.s21 = s21;
                 c.s22 = s22;
                 c.s23 = s23;
                 c.s31 = s31;
                 c.sign_parity = sign_parity;
                 c.validate();
                 return c;
             }),
             py::arg("s11") = 0.0, py::arg("s12") = 0.0, py::arg("s13") = 0.0,
             py::arg("s21") = 0.0, py::arg("s22") = 0.0, py::arg("s23") = 0.0,
             py::arg("s31") = 0.0, py::arg("sign_parity") = true)
        .def_readwrite("s11", &ChannelSnr::s11)
        .def_readwrite("s12", &ChannelSnr::s12)
        .def_readwrite("s13", &ChannelSnr::s13)
        .def_readwrite("s21", &ChannelSnr::s21)
        .def_readwrite("s22", &ChannelSnr::s22)
        .def_readwrite("s23", &ChannelSnr::s23)
        .def_readwrite("s31", &ChannelSnr::s31)
        .def_readwrite("sign_parity", &ChannelSnr::sign_parity)
        .def("validate", &ChannelSnr::validate)
        .def("__eq__",
             [](const ChannelSnr& a, const ChannelSnr& b) {
                 return a.s11 == b.s11 && a.s12 == b.s12 && a.s13 == b.s13 &&
                        a.s21 == b.s21 && a.s22 == b.s22 && a.s23 == b.s23 &&
                        a.s31 == b.s31 && a.sign_parity == b.sign_parity;
             })
        .def("__repr__", [](const ChannelSnr& c) {
            char buf[224];
            std::snprintf(buf, sizeof buf,
                          "ChannelSnr(s11=%g, s12=%g, s13=%g, s21=%g, s22=%g, "
                          "s23=%g, s31=%g, sign_parity=%s)",
                          c.s11, c.s12, c.s13, c.s21, c.s22, c.s23, c.s31,
                          c.sign_parity ? "True" : "False");
            return std::string(buf);
        });

    py::class_<RateRegion>(m, "RateRegion",
                           "Intersection of half-planes a1*R1 + a2*R2 <= b "
                           "over nonnegative rate pairs.")
        .def(py::init(&region_from_tuples), py::arg("planes"))
        .def("planes", &planes_out, "List of (a1, a2, b) tuples.")
        .def("vertices", &vertices_out,
             "Counterclockwise vertex list starting at the origin.")
        .def(
            "contains",
            [](const RateRegion& r, double r1, double r2, double tol) {
                return r.contains(RatePoint{r1, r2}, tol);
            },
            py::arg("r1"), py::arg("r2"), py::arg("tol") = 1e-9)
        .def("max_weighted", &RateRegion::max_weighted, py::arg("w1"),
             py::arg("w2"))
        .def(
            "support",
            [](const RateRegion& r, int a1, int a2) {
                return r.support(BoundFamily{a1, a2});
            },
            py::arg("a1"), py::arg("a2"))
        .def("bounded", &RateRegion::bounded)
        .def("empty", &RateRegion::empty)
        .def("__repr__", [](const RateRegion& r) {
            return "RateRegion(" + std::to_string(r.planes().size()) +
                   " planes)";
        });

    m.def("hull_union", &hull_union, py::arg("regions"),
          "Tightest five-family region containing every input region.");
    m.def("gap_per_dim", &gap_per_dim, py::arg("outer"), py::arg("inner"),
          "Diagonal shift (with axis clipping) taking outer's vertices into "
          "inner.");
    m.def("family_gap_per_dim", &family_gap_per_dim, py::arg("outer"),
          py::arg("inner"),
          "Largest per-family plane deficit divided by a1 + a2.");

    m.def("outer_region", &outer_region, py::arg("channel"),
          "Closed-form 20-plane outer bound.");
    m.def("outer_region_correlated", &outer_region_correlated,
          py::arg("channel"), py::arg("rho"),
          "Outer bound at fixed source-relay input correlation.");
    m.def(
        "outer_region_best",
        [](const ChannelSnr& ch, py::object grid) {
            OuterConfig cfg = OuterConfig::default_grid();
            if (!grid.is_none())
                cfg.rho_grid = grid.cast<std::vector<double>>();
            return outer_region_best(ch, cfg);
        },
        py::arg("channel"), py::arg("rho_grid") = py::none(),
        "Hull of the correlated outer bound over a correlation grid "
        "(default: 201 points in [-1, 1]).");
    m.def(
        "df_full_region",
        [](const ChannelSnr& ch) { return RateRegion{df_full_planes(ch)}; },
        py::arg("channel"), "Relay decodes the full source-1 message.");
    m.def(
        "df_partial_region",
        [](const ChannelSnr& ch) {
            return RateRegion{df_partial_planes(ch)};
        },
        py::arg("channel"), "Relay decodes one message layer.");
    m.def("df_best_region", &df_best_region, py::arg("channel"),
          "Per-family best of the two relay-decoding regions.");
    m.def(
        "cf_terms",
        [](const ChannelSnr& ch, double n) {
            const CfTerms t = cf_terms(ch, CfConfig{n});
            py::dict d;
            d["I"] = t.I;
            d["Ip"] = t.Ip;
            return d;
        },
        py::arg("channel"), py::arg("compress_noise") = 1.81,
        "Decoding rates with ('I') and without ('Ip') the compressed relay "
        "observation, indexed [destination][term].");
    m.def(
        "cf_region",
        [](const ChannelSnr& ch, double n) {
            return cf_region(ch, CfConfig{n});
        },
        py::arg("channel"), py::arg("compress_noise") = 1.81,
        "Compress-forward region: hull of the joint and single-side index "
        "decoding patterns.");
    m.def("hk_region", &hk_region, py::arg("channel"),
          "Relay-free rate-splitting baseline region.");
    m.def("cf_gap_objective", &cf_gap_objective, py::arg("compress_noise"),
          "Worst-case compress-forward gap as a function of the compression "
          "noise.");
    m.def("decorr_ratio_check", &decorr_ratio_check, py::arg("grid_density"),
          "Largest correlated-to-decorrelated bound ratio on a scan grid "
          "(analytically at most 2).");

    m.def(
        "sweep_row",
        [](const ChannelSnr& base, double s31_db, double cf_noise) {
            return row_out(sweep_row(base, s31_db, cf_noise));
        },
        py::arg("base"), py::arg("s31_db"), py::arg("cf_noise") = 1.81,
        "Best sum rates of each bound and per-dimension gaps at one relay "
        "SNR.");
    m.def(
        "run_sweep",
        [](const ChannelSnr& base, double lo_db, double hi_db, double step_db,
           double cf_noise) {
            SweepSpec spec;
            spec.base = base;
            spec.lo_db = lo_db;
            spec.hi_db = hi_db;
            spec.step_db = step_db;
            spec.cf_noise = cf_noise;
            spec.validate();
            py::list out;
            for (const SweepRow& r : run_sweep(spec)) out.append(row_out(r));
            return out;
        },
        py::arg("base"), py::arg("lo_db") = -15.0, py::arg("hi_db") = 25.0,
        py::arg("step_db") = 0.5, py::arg("cf_noise") = 1.81);
    m.def(
        "run_audit",
        [](const std::string& regime, int samples, std::uint64_t seed,
           double lo_db, double hi_db, double cf_noise) {
            AuditSpec spec;
            spec.regime = parse_regime(regime);
            spec.samples = samples;
            spec.seed = seed;
            spec.lo_db = lo_db;
            spec.hi_db = hi_db;
            spec.cf_noise = cf_noise;
            spec.validate();
            const AuditResult res = run_audit(spec);
            py::dict d;
            d["regime"] = regime_name(spec.regime);
            d["sampled"] = res.sampled;
            d["kept"] = res.kept;
            d["max_gap"] =
                res.kept > 0 ? py::cast(res.max_gap) : py::object(py::none());
            d["argmax"] =
                res.kept > 0 ? py::cast(res.argmax) : py::object(py::none());
            d["bin_width"] = kAuditBinWidth;
            d["histogram"] = res.histogram;
            return d;
        },
        py::arg("regime"), py::arg("samples") = 1000, py::arg("seed") = 1,
        py::arg("lo_db") = -20.0, py::arg("hi_db") = 40.0,
        py::arg("cf_noise") = 1.81,
        "Seeded random-channel gap audit for one SNR regime.");

    m.def("fme_builtin_names", &fme::builtin_names);
    m.def(
        "fme_check",
        [](const std::string& name) {
            const fme::CheckOutcome out = fme::run_builtin_check(name);
            py::dict d;
            d["name"] = name;
            d["ok"] = out.ok;
            d["matched"] = out.report.matched;
            d["extra"] = out.report.extra_in_derived;
            d["missing"] = out.report.missing;
            d["feasibility"] = out.report.feasibility;
            d["derived"] = fme::to_text(out.derived);
            return d;
        },
        py::arg("name"),
        "Eliminate a built-in decoding system's split rates and compare the "
        "surviving inequalities with the published region.");
}
