// Command-line frontend: region queries, relay-link sweeps, randomized gap
// audits, inequality-system checks, and the decorrelation-ratio scan.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ircb/audit.hpp"
#include "ircb/cf.hpp"
#include "ircb/channel.hpp"
#include "ircb/df.hpp"
#include "ircb/fme.hpp"
#include "ircb/outer.hpp"
#include "ircb/region.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct ChannelFlags {
    double s11 = 0, s12 = 0, s13 = 0;  // dB
    double s21 = 0, s22 = 0, s23 = 0;
    double s31 = 0;
    std::string parity = "even";

    void attach(CLI::App* cmd, bool with_s31) {
        cmd->add_option("--s11", s11, "SNR of link source 1 -> dest 1 in dB");
        cmd->add_option("--s12", s12, "SNR of link source 2 -> dest 1 in dB");
        cmd->add_option("--s13", s13, "SNR of link relay -> dest 1 in dB");
        cmd->add_option("--s21", s21, "SNR of link source 1 -> dest 2 in dB");
        cmd->add_option("--s22", s22, "SNR of link source 2 -> dest 2 in dB");
        cmd->add_option("--s23", s23, "SNR of link relay -> dest 2 in dB");
        if (with_s31)
            cmd->add_option("--s31", s31,
                            "SNR of link source 1 -> relay in dB");
        cmd->add_option("--sign-parity", parity,
                        "parity of negative gains among h11,h13,h21,h23")
            ->check(CLI::IsMember({"even", "odd"}));
    }

    ircb::ChannelSnr to_channel() const {
        ircb::ChannelSnr ch;
        ch.s11 = ircb::db_to_lin(s11);
        ch.s12 = ircb::db_to_lin(s12);
        ch.s13 = ircb::db_to_lin(s13);
        ch.s21 = ircb::db_to_lin(s21);
        ch.s22 = ircb::db_to_lin(s22);
        ch.s23 = ircb::db_to_lin(s23);
        ch.s31 = ircb::db_to_lin(s31);
        ch.sign_parity = parity == "even";
        return ch;
    }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

json channel_json_db(const ircb::ChannelSnr& ch) {
    return json{{"s11_db", ircb::lin_to_db(ch.s11)},
                {"s12_db", ircb::lin_to_db(ch.s12)},
                {"s13_db", ircb::lin_to_db(ch.s13)},
                {"s21_db", ircb::lin_to_db(ch.s21)},
                {"s22_db", ircb::lin_to_db(ch.s22)},
                {"s23_db", ircb::lin_to_db(ch.s23)},
                {"s31_db", ircb::lin_to_db(ch.s31)},
                {"sign_parity", ch.sign_parity ? "even" : "odd"}};
}

int cmd_region(const ChannelFlags& cf, const std::string& bound,
               double cf_noise, const std::string& out) {
    const ircb::ChannelSnr ch = cf.to_channel();
    std::vector<ircb::HalfPlane> planes;
    if (bound == "outer-cor1") {
        planes = ircb::outer_planes(ch);
    } else if (bound == "outer-thm1") {
        planes = ircb::outer_region_best(ch, ircb::OuterConfig::default_grid())
                     .planes();
    } else if (bound == "df-full") {
        planes = ircb::df_full_planes(ch);
    } else if (bound == "df-partial") {
        planes = ircb::df_partial_planes(ch);
    } else if (bound == "cf") {
        planes = ircb::cf_region(ch, ircb::CfConfig{cf_noise}).planes();
    } else if (bound == "hk") {
        planes = ircb::hk_planes(ch);
    } else {
        throw CLI::ValidationError("--bound", "unknown bound: " + bound);
    }
    ircb::RateRegion region;
    for (const auto& p : planes) region.add(p);

    json doc;
    doc["bound"] = bound;
    doc["channel"] = channel_json_db(ch);
    if (bound == "cf") doc["cf_noise"] = cf_noise;
    doc["planes"] = json::array();
    for (const auto& p : planes)
        doc["planes"].push_back(
            json{{"a1", p.fam.a1}, {"a2", p.fam.a2}, {"b", p.b}});
    doc["vertices"] = json::array();
    for (const auto& v : region.vertices())
        doc["vertices"].push_back(json::array({v.r1, v.r2}));
    write_output(out, doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_sweep(const ircb::SweepSpec& spec, const std::string& out) {
    const std::vector<ircb::SweepRow> rows = ircb::run_sweep(spec);
    std::string csv = "s31_db,outer,df,cf,hk,gap_df,gap_cf\n";
    char line[160];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line,
                      "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.s31_db,
                      r.outer, r.df, r.cf, r.hk, r.gap_df, r.gap_cf);
        csv += line;
    }
    write_output(out, csv);
    return kExitOk;
}

int cmd_gap_audit(const ircb::AuditSpec& spec, const std::string& out) {
    const ircb::AuditResult res = ircb::run_audit(spec);
    json doc;
    doc["regime"] = std::string(ircb::regime_name(spec.regime));
    doc["samples"] = res.sampled;
    doc["kept"] = res.kept;
    doc["seed"] = spec.seed;
    doc["snr_db_range"] = json::array({spec.lo_db, spec.hi_db});
    if (spec.regime == ircb::AuditRegime::Cf)
        doc["cf_noise"] = spec.cf_noise;
    if (res.kept > 0) {
        doc["max_gap"] = res.max_gap;
        doc["argmax"] = channel_json_db(res.argmax);
    } else {
        doc["max_gap"] = nullptr;
        doc["argmax"] = nullptr;
    }
    doc["histogram"] = json{
        {"bin_width", ircb::kAuditBinWidth},
        {"counts", std::vector<int>(res.histogram.begin(),
                                    res.histogram.end())}};
    write_output(out, doc.dump(2) + "\n");
    if (res.kept == 0) {
        std::fprintf(stderr,
                     "gap-audit: no sample passed the %s regime filter\n",
                     std::string(ircb::regime_name(spec.regime)).c_str());
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_fme_check(const std::string& name, const std::string& out) {
    const ircb::fme::CheckOutcome outcome = ircb::fme::run_builtin_check(name);
    const ircb::fme::MatchReport& rep = outcome.report;

    std::string text = "fme-check " + name + "\n";
    text += "matched rows: " + std::to_string(rep.matched.size()) + "\n";
    text += "extra rows (" + std::to_string(rep.extra_in_derived.size()) +
            "):\n";
    for (const auto& s : rep.extra_in_derived) text += "  " + s + "\n";
    text += "missing rows (" + std::to_string(rep.missing.size()) + "):\n";
    for (const auto& s : rep.missing) text += "  " + s + "\n";
    text += "feasibility conditions (" +
            std::to_string(rep.feasibility.size()) + "):\n";
    for (const auto& s : rep.feasibility) text += "  " + s + "\n";
    text += outcome.ok ? "result: OK\n" : "result: MISMATCH\n";
    std::fputs(text.c_str(), stdout);

    if (!out.empty()) {
        json doc;
        doc["name"] = name;
        doc["ok"] = outcome.ok;
        doc["matched"] = rep.matched;
        doc["extra"] = rep.extra_in_derived;
        doc["missing"] = rep.missing;
        doc["feasibility"] = rep.feasibility;
        write_output(out, doc.dump(2) + "\n");
    }
    return outcome.ok ? kExitOk : kExitCheckFailed;
}

int cmd_decorr_check(int density) {
    const double sup = ircb::decorr_ratio_check(density);
    const bool ok = sup <= 2.0 + 1e-3;
    std::printf("decorr-check: sup ratio %.9g at density %d (ceiling 2)\n",
                sup, density);
    std::printf("result: %s\n", ok ? "OK" : "FAIL");
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Rate-region bounds and constant-gap audits for the Gaussian "
        "interference relay channel"};
    app.require_subcommand(1);

    // region
    auto* region = app.add_subcommand(
        "region", "print one bound's planes and vertices as JSON");
    ChannelFlags region_ch;
    region_ch.attach(region, true);
    std::string bound;
    double region_cf_noise = 1.81;
    std::string region_out;
    region->add_option("--bound", bound, "which bound to evaluate")
        ->required()
        ->check(CLI::IsMember({"outer-cor1", "outer-thm1", "df-full",
                               "df-partial", "cf", "hk"}));
    region->add_option("--cf-noise", region_cf_noise,
                       "compression noise variance for --bound cf");
    region->add_option("--out", region_out, "write JSON here instead of stdout");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "sweep the source-to-relay SNR and print a CSV of best sum "
                 "rates and gaps");
    ChannelFlags sweep_ch;
    sweep_ch.attach(sweep, false);
    ircb::SweepSpec sweep_spec;
    std::string sweep_out;
    sweep->add_option("--from", sweep_spec.lo_db, "first s31 value in dB");
    sweep->add_option("--to", sweep_spec.hi_db, "last s31 value in dB");
    sweep->add_option("--step", sweep_spec.step_db, "step in dB");
    sweep->add_option("--cf-noise", sweep_spec.cf_noise,
                      "compression noise variance");
    sweep->add_option("--out", sweep_out, "write CSV here instead of stdout");

    // gap-audit
    auto* audit = app.add_subcommand(
        "gap-audit", "sample random channels in one SNR regime and report the "
                     "worst per-dimension gap as JSON");
    std::string regime_name;
    ircb::AuditSpec audit_spec;
    std::string audit_out;
    audit->add_option("--regime", regime_name, "SNR regime / scheme to audit")
        ->required()
        ->check(CLI::IsMember({"full-df", "partial-df", "cf", "hk-no-relay"}));
    audit->add_option("--samples", audit_spec.samples, "channels to draw")
        ->check(CLI::PositiveNumber);
    audit->add_option("--seed", audit_spec.seed, "RNG seed");
    audit->add_option("--lo", audit_spec.lo_db, "lower SNR bound in dB");
    audit->add_option("--hi", audit_spec.hi_db, "upper SNR bound in dB");
    audit->add_option("--cf-noise", audit_spec.cf_noise,
                      "compression noise variance for --regime cf");
    audit->add_option("--out", audit_out, "write JSON here instead of stdout");

    // fme-check
    auto* fme = app.add_subcommand(
        "fme-check", "eliminate a built-in decoding-constraint system and "
                     "compare against its published region");
    std::string fme_name;
    std::string fme_out;
    fme->add_option("name", fme_name, "built-in system name")
        ->required()
        ->check(CLI::IsMember({"df-full", "df-partial", "cf-joint",
                               "cf-single-1", "cf-single-2", "cf-single-k"}));
    fme->add_option("--out", fme_out, "also write a JSON report here");

    // decorr-check
    auto* decorr = app.add_subcommand(
        "decorr-check", "scan the correlated-to-decorrelated bound ratio");
    int density = 50;
    decorr->add_option("--density", density, "grid points per axis")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (region->parsed())
            return cmd_region(region_ch, bound, region_cf_noise, region_out);
        if (sweep->parsed()) {
            sweep_spec.base = sweep_ch.to_channel();
            return cmd_sweep(sweep_spec, sweep_out);
        }
        if (audit->parsed()) {
            ircb::regime_parse(regime_name, audit_spec.regime);
            return cmd_gap_audit(audit_spec, audit_out);
        }
        if (fme->parsed()) return cmd_fme_check(fme_name, fme_out);
        if (decorr->parsed()) return cmd_decorr_check(density);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
