#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ircb::fme {

using Rational = boost::multiprecision::cpp_rational;

// Rate variables of the layered coding systems, fixed order. R11p / R11pp
// print as R11' / R11''; T10 is the layer rate the relay re-encodes.
enum class RateVar : int { R10, R11p, R11pp, R20, R22, T10, R1, R2 };
inline constexpr int kRateVars = 8;

std::string_view rate_var_name(RateVar v);
std::optional<RateVar> rate_var_parse(std::string_view name);

// Opaque information quantity. No identities are assumed beyond the sign;
// any ordering between symbols must be declared as an axiom.
struct InfoSymbol {
    std::string name;
    bool sign_known_nonneg = true;
};

// rate * R <= sym * S (strict: <). Homogeneous, no constant term.
struct LinIneq {
    std::array<Rational, kRateVars> rate{};
    std::map<std::string, Rational> sym;
    bool strict = false;

    Rational& coeff(RateVar v) { return rate[static_cast<int>(v)]; }
    const Rational& coeff(RateVar v) const {
        return rate[static_cast<int>(v)];
    }
    bool rate_free() const;
    bool trivial() const;  // all coefficients zero

    friend bool operator==(const LinIneq&, const LinIneq&) = default;
};

// Comparison key ignoring strictness; used for canonical ordering.
bool ineq_less(const LinIneq& a, const LinIneq& b);

struct IneqSystem {
    std::vector<InfoSymbol> symbols;
    std::vector<LinIneq> inequalities;
    // Rate-free facts 0 <= sym * S declared by the caller (e.g. orderings
    // obtained from conditioning arguments).
    std::vector<LinIneq> axioms;
};

// Positive primitive scaling (integer coefficients, content 1); the
// inequality direction is never flipped.
LinIneq canonical_form(LinIneq q);

// Standard Fourier-Motzkin step: pair every upper bound on var with every
// lower bound, keep var-free rows. Exact arithmetic; a row that cancels to
// 0 <= 0 is dropped. A var absent from the system projects to identity.
IneqSystem eliminate(const IneqSystem& sys, RateVar var);

// Primitive scaling, exact-duplicate removal (keeping the strict copy when
// both forms occur), deterministic sort.
IneqSystem canonicalize(const IneqSystem& sys);

// Drops every inequality provable from the remaining ones together with the
// declared axioms, symbol nonnegativity, and rate nonnegativity, via an
// exact rational cone-membership test. A strict inequality is only dropped
// when the proving combination carries a strict row. Input order does not
// affect the result (rows are processed in canonical order).
IneqSystem remove_dominated(const IneqSystem& sys);

// Merges every occurrence of symbol `from` (in rows and axioms) into `to`.
void rename_symbol(IneqSystem& sys, const std::string& from,
                   const std::string& to);

struct MatchReport {
    std::vector<std::string> matched;
    std::vector<std::string> extra_in_derived;
    std::vector<std::string> missing;
    // Rate-free survivors of the derived side (conditions on the symbols
    // themselves, not rate bounds).
    std::vector<std::string> feasibility;
};

// Canonicalizes and prunes both systems, then compares the rate-bearing
// inequalities as sets (strictness ignored: both describe closed regions).
MatchReport check_against_target(const IneqSystem& derived,
                                 const IneqSystem& target);

// Text form, one inequality per line: `R1 - R10 <= B2 - Ib`, rational
// coefficients printed as p/q, axiom lines prefixed with `axiom:`.
std::string to_text(const LinIneq& q);
std::string to_text(const IneqSystem& sys);
LinIneq parse_ineq(std::string_view line);       // throws std::invalid_argument
IneqSystem parse_system(std::string_view text);  // symbols inferred

// A named decoding-constraint system bundled with the region it should
// reduce to and the reductions the reduction is known to add on top.
struct BuiltinCheck {
    std::string name;
    IneqSystem system;
    std::vector<RateVar> eliminate_order;
    IneqSystem target;
    // Pretty-printed canonical forms expected in extra_in_derived.
    std::vector<std::string> expected_extra;
    // Symbol renames applied to the derived system before comparison
    // (declared substitutions, e.g. a conditioning-set reduction).
    std::vector<std::pair<std::string, std::string>> rewrites;
};

std::vector<std::string> builtin_names();
BuiltinCheck builtin_check(const std::string& name);  // throws on unknown

struct CheckOutcome {
    MatchReport report;
    IneqSystem derived;  // after elimination, rewrites, and pruning
    bool ok = false;     // extras match expected_extra exactly, no missing
};

CheckOutcome run_builtin_check(const std::string& name);

}  // namespace ircb::fme
