#include "ircb/fme.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ircb::fme {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::array<std::string_view, kRateVars> kRateNames{
    "R10", "R11'", "R11''", "R20", "R22", "T10", "R1", "R2"};

}  // namespace

std::string_view rate_var_name(RateVar v) {
    return kRateNames[static_cast<int>(v)];
}

std::optional<RateVar> rate_var_parse(std::string_view name) {
    for (int i = 0; i < kRateVars; ++i)
        if (kRateNames[i] == name) return static_cast<RateVar>(i);
    return std::nullopt;
}

bool LinIneq::rate_free() const {
    return std::all_of(rate.begin(), rate.end(),
                       [](const Rational& r) { return r == 0; });
}

bool LinIneq::trivial() const {
    return rate_free() && std::all_of(sym.begin(), sym.end(), [](const auto& kv) {
               return kv.second == 0;
           });
}

bool ineq_less(const LinIneq& a, const LinIneq& b) {
    for (int i = 0; i < kRateVars; ++i)
        if (a.rate[i] != b.rate[i]) return a.rate[i] < b.rate[i];
    return a.sym < b.sym;
}

LinIneq canonical_form(LinIneq q) {
    for (auto it = q.sym.begin(); it != q.sym.end();)
        it = (it->second == 0) ? q.sym.erase(it) : std::next(it);
    cpp_int den = 1;
    cpp_int num = 0;
    auto absorb = [&](const Rational& r) {
        if (r == 0) return;
        den = lcm(den, denominator(r));
    };
    for (const auto& r : q.rate) absorb(r);
    for (const auto& [name, r] : q.sym) absorb(r);
    auto content = [&](const Rational& r) {
        if (r == 0) return;
        num = gcd(num, abs(numerator(r) * (den / denominator(r))));
    };
    for (const auto& r : q.rate) content(r);
    for (const auto& [name, r] : q.sym) content(r);
    if (num == 0) return q;
    const Rational scale(den, num);
    for (auto& r : q.rate) r *= scale;
    for (auto& [name, r] : q.sym) r *= scale;
    return q;
}

IneqSystem eliminate(const IneqSystem& sys, RateVar var) {
    IneqSystem out;
    out.symbols = sys.symbols;
    out.axioms = sys.axioms;
    std::vector<const LinIneq*> uppers, lowers;
    for (const auto& q : sys.inequalities) {
        const Rational& c = q.coeff(var);
        if (c == 0)
            out.inequalities.push_back(q);
        else if (c > 0)
            uppers.push_back(&q);
        else
            lowers.push_back(&q);
    }
    for (const LinIneq* lo : lowers) {
        const Rational cl = -lo->coeff(var);
        for (const LinIneq* up : uppers) {
            const Rational cu = up->coeff(var);
            LinIneq q;
            q.strict = lo->strict || up->strict;
            for (int i = 0; i < kRateVars; ++i)
                q.rate[i] = cl * up->rate[i] + cu * lo->rate[i];
            for (const auto& [name, c] : up->sym) q.sym[name] += cl * c;
            for (const auto& [name, c] : lo->sym) q.sym[name] += cu * c;
            q = canonical_form(std::move(q));
            if (!q.trivial()) out.inequalities.push_back(std::move(q));
        }
    }
    return out;
}

IneqSystem canonicalize(const IneqSystem& sys) {
    IneqSystem out;
    out.symbols = sys.symbols;
    out.axioms = sys.axioms;
    for (const auto& q0 : sys.inequalities) {
        LinIneq q = canonical_form(q0);
        if (!q.trivial()) out.inequalities.push_back(std::move(q));
    }
    std::sort(out.inequalities.begin(), out.inequalities.end(),
              [](const LinIneq& a, const LinIneq& b) {
                  if (ineq_less(a, b)) return true;
                  if (ineq_less(b, a)) return false;
                  return a.strict && !b.strict;
              });
    std::vector<LinIneq> merged;
    for (auto& q : out.inequalities) {
        if (!merged.empty() && !ineq_less(merged.back(), q) &&
            !ineq_less(q, merged.back())) {
            merged.back().strict = merged.back().strict || q.strict;
        } else {
            merged.push_back(std::move(q));
        }
    }
    out.inequalities = std::move(merged);
    return out;
}

namespace {

// Feasibility of sum_j lambda_j * cols[j] = rhs with lambda >= 0, by
// phase-one simplex with Bland's rule (exact, always terminates). On
// success *support holds the indices with lambda_j > 0.
bool in_cone(const std::vector<std::vector<Rational>>& cols,
             std::vector<Rational> rhs, std::vector<int>* support) {
    const int m = static_cast<int>(rhs.size());
    const int n = static_cast<int>(cols.size());
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + m + 1));
    for (int i = 0; i < m; ++i) {
        const bool flip = rhs[i] < 0;
        for (int j = 0; j < n; ++j)
            t[i][j] = flip ? -cols[j][i] : cols[j][i];
        t[i][n + i] = 1;
        t[i][n + m] = flip ? -rhs[i] : rhs[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;
    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m && enter < 0; ++j) {
            Rational red = (j >= n) ? 1 : 0;
            for (int i = 0; i < m; ++i)
                if (basis[i] >= n) red -= t[i][j];
            if (red < 0) enter = j;
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return false;
        const Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n && t[i][n + m] != 0) return false;
    if (support) {
        support->clear();
        for (int i = 0; i < m; ++i)
            if (basis[i] < n && t[i][n + m] > 0) support->push_back(basis[i]);
    }
    return true;
}

struct Coordinates {
    std::map<std::string, int> sym_index;  // offset by kRateVars
    int dim = kRateVars;
};

Coordinates coordinates_of(const IneqSystem& sys) {
    Coordinates c;
    auto note = [&](const std::string& name) {
        if (c.sym_index.emplace(name, 0).second) {}
    };
    for (const auto& s : sys.symbols) note(s.name);
    for (const auto& q : sys.inequalities)
        for (const auto& [name, v] : q.sym) note(name);
    for (const auto& q : sys.axioms)
        for (const auto& [name, v] : q.sym) note(name);
    for (auto& [name, idx] : c.sym_index) idx = c.dim++;
    return c;
}

// Slack vector of a valid fact `rate * R <= sym * S`, i.e. the coefficient
// list of sym * S - rate * R, which is nonnegative on the feasible set.
std::vector<Rational> slack_vector(const LinIneq& q, const Coordinates& c) {
    std::vector<Rational> g(c.dim);
    for (int i = 0; i < kRateVars; ++i) g[i] = -q.rate[i];
    for (const auto& [name, v] : q.sym) g[c.sym_index.at(name)] += v;
    return g;
}

}  // namespace

IneqSystem remove_dominated(const IneqSystem& sys0) {
    IneqSystem sys = canonicalize(sys0);
    const Coordinates coords = coordinates_of(sys);

    // Facts available to every proof: axioms, nonnegative symbols,
    // nonnegative rates.
    std::vector<std::vector<Rational>> base;
    for (const auto& ax : sys.axioms) base.push_back(slack_vector(ax, coords));
    std::set<std::string> nonneg_names;
    for (const auto& s : sys.symbols)
        if (s.sign_known_nonneg) nonneg_names.insert(s.name);
    for (const auto& [name, idx] : coords.sym_index) {
        if (!nonneg_names.count(name)) continue;
        std::vector<Rational> g(coords.dim);
        g[idx] = 1;
        base.push_back(std::move(g));
    }
    for (int i = 0; i < kRateVars; ++i) {
        std::vector<Rational> g(coords.dim);
        g[i] = 1;
        base.push_back(std::move(g));
    }

    const auto& rows = sys.inequalities;
    std::vector<bool> alive(rows.size(), true);
    for (std::size_t a = 0; a < rows.size(); ++a) {
        std::vector<std::vector<Rational>> cols = base;
        std::vector<bool> col_strict(base.size(), false);
        for (std::size_t b = 0; b < rows.size(); ++b) {
            if (b == a || !alive[b]) continue;
            cols.push_back(slack_vector(rows[b], coords));
            col_strict.push_back(rows[b].strict);
        }
        std::vector<int> support;
        if (!in_cone(cols, slack_vector(rows[a], coords), &support)) continue;
        bool conclusion_strict = false;
        for (int j : support) conclusion_strict |= col_strict[j];
        if (conclusion_strict || !rows[a].strict) alive[a] = false;
    }

    IneqSystem out;
    out.symbols = sys.symbols;
    out.axioms = sys.axioms;
    for (std::size_t a = 0; a < rows.size(); ++a)
        if (alive[a]) out.inequalities.push_back(rows[a]);
    return out;
}

void rename_symbol(IneqSystem& sys, const std::string& from,
                   const std::string& to) {
    auto apply = [&](LinIneq& q) {
        auto it = q.sym.find(from);
        if (it == q.sym.end()) return;
        const Rational v = it->second;
        q.sym.erase(it);
        q.sym[to] += v;
        if (q.sym[to] == 0) q.sym.erase(to);
    };
    for (auto& q : sys.inequalities) apply(q);
    for (auto& q : sys.axioms) apply(q);
    bool have_to = false;
    for (const auto& s : sys.symbols) have_to |= (s.name == to);
    for (auto& s : sys.symbols) {
        if (s.name != from) continue;
        if (have_to) {
            s = sys.symbols.back();
            sys.symbols.pop_back();
            break;
        }
        s.name = to;
        break;
    }
}

MatchReport check_against_target(const IneqSystem& derived,
                                 const IneqSystem& target) {
    const IneqSystem d = remove_dominated(derived);
    const IneqSystem t = remove_dominated(target);

    auto key = [](const LinIneq& q) {
        LinIneq k = q;
        k.strict = false;
        return to_text(k);
    };
    std::set<std::string> target_keys;
    for (const auto& q : t.inequalities)
        if (!q.rate_free()) target_keys.insert(key(q));

    MatchReport rep;
    std::set<std::string> derived_keys;
    for (const auto& q : d.inequalities) {
        if (q.rate_free()) {
            rep.feasibility.push_back(to_text(q));
            continue;
        }
        const std::string k = key(q);
        derived_keys.insert(k);
        if (target_keys.count(k))
            rep.matched.push_back(k);
        else
            rep.extra_in_derived.push_back(k);
    }
    for (const auto& q : t.inequalities) {
        if (q.rate_free()) continue;
        const std::string k = key(q);
        if (!derived_keys.count(k)) rep.missing.push_back(k);
    }
    return rep;
}

namespace {

void append_term(std::string& s, bool first, const Rational& c,
                 std::string_view name) {
    const bool neg = c < 0;
    if (first)
        s += neg ? "-" : "";
    else
        s += neg ? " - " : " + ";
    const Rational a = neg ? Rational(-c) : c;
    if (a != 1) {
        s += a.str();
        s += "*";
    }
    s += name;
}

}  // namespace

std::string to_text(const LinIneq& q) {
    std::string lhs, rhs;
    bool first = true;
    for (int i = 0; i < kRateVars; ++i) {
        if (q.rate[i] == 0) continue;
        append_term(lhs, first, q.rate[i], kRateNames[i]);
        first = false;
    }
    if (first) lhs = "0";
    first = true;
    for (const auto& [name, c] : q.sym) {
        if (c == 0) continue;
        append_term(rhs, first, c, name);
        first = false;
    }
    if (first) rhs = "0";
    return lhs + (q.strict ? " < " : " <= ") + rhs;
}

std::string to_text(const IneqSystem& sys) {
    std::string out;
    for (const auto& q : sys.inequalities) {
        out += to_text(q);
        out += '\n';
    }
    for (const auto& q : sys.axioms) {
        out += "axiom: ";
        out += to_text(q);
        out += '\n';
    }
    return out;
}

namespace {

struct ParsedTerm {
    Rational coeff;
    std::string name;  // empty for a bare constant
};

ParsedTerm parse_term(std::string tok) {
    ParsedTerm t;
    t.coeff = 1;
    if (!tok.empty() && tok.front() == '-') {
        t.coeff = -1;
        tok.erase(0, 1);
    }
    const auto star = tok.find('*');
    std::string body = tok;
    if (star != std::string::npos) {
        try {
            t.coeff *= Rational(tok.substr(0, star));
        } catch (const std::exception&) {
            throw std::invalid_argument("fme: bad coefficient in '" + tok + "'");
        }
        body = tok.substr(star + 1);
        if (body.empty())
            throw std::invalid_argument("fme: missing name in '" + tok + "'");
    }
    if (!body.empty() && (std::isdigit(static_cast<unsigned char>(body[0])))) {
        try {
            t.coeff *= Rational(body);
        } catch (const std::exception&) {
            throw std::invalid_argument("fme: bad term '" + tok + "'");
        }
        if (t.coeff != 0)
            throw std::invalid_argument(
                "fme: constant terms are not supported: '" + tok + "'");
        t.name.clear();
        t.coeff = 0;
        return t;
    }
    t.name = body;
    if (t.name.empty()) throw std::invalid_argument("fme: empty term");
    return t;
}

void add_side(LinIneq& q, const std::vector<std::string>& toks, std::size_t lo,
              std::size_t hi, int side_sign) {
    // side_sign +1: left side (rates positive); -1: right side.
    int sign = 1;
    bool expect_term = true;
    for (std::size_t i = lo; i < hi; ++i) {
        const std::string& tok = toks[i];
        if (!expect_term) {
            if (tok == "+")
                sign = 1;
            else if (tok == "-")
                sign = -1;
            else
                throw std::invalid_argument("fme: expected +/- before '" + tok +
                                            "'");
            expect_term = true;
            continue;
        }
        ParsedTerm t = parse_term(tok);
        if (!t.name.empty()) {
            const Rational c = t.coeff * sign;
            if (auto rv = rate_var_parse(t.name))
                q.coeff(*rv) += side_sign * c;
            else
                q.sym[t.name] += -side_sign * c;
        }
        sign = 1;
        expect_term = false;
    }
    if (expect_term && lo != hi)
        throw std::invalid_argument("fme: dangling operator");
    if (lo == hi) throw std::invalid_argument("fme: empty side");
}

}  // namespace

LinIneq parse_ineq(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    std::size_t rel = toks.size();
    bool strict = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] == "<=" || toks[i] == "<") {
            rel = i;
            strict = (toks[i] == "<");
            break;
        }
    }
    if (rel == toks.size())
        throw std::invalid_argument("fme: no relation in '" +
                                    std::string(line) + "'");
    LinIneq q;
    q.strict = strict;
    add_side(q, toks, 0, rel, +1);
    add_side(q, toks, rel + 1, toks.size(), -1);
    q = canonical_form(std::move(q));
    if (q.trivial())
        throw std::invalid_argument("fme: trivial inequality '" +
                                    std::string(line) + "'");
    return q;
}

IneqSystem parse_system(std::string_view text) {
    IneqSystem sys;
    std::set<std::string> names;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                          : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) continue;
        line.remove_prefix(start);
        if (line.front() == '#') continue;
        bool axiom = false;
        constexpr std::string_view kAxiom = "axiom:";
        if (line.substr(0, kAxiom.size()) == kAxiom) {
            axiom = true;
            line.remove_prefix(kAxiom.size());
        }
        LinIneq q = parse_ineq(line);
        if (axiom) {
            if (!q.rate_free())
                throw std::invalid_argument(
                    "fme: axioms must not involve rate variables");
            sys.axioms.push_back(std::move(q));
        } else {
            sys.inequalities.push_back(std::move(q));
        }
    }
    for (const auto& q : sys.inequalities)
        for (const auto& [name, c] : q.sym) names.insert(name);
    for (const auto& q : sys.axioms)
        for (const auto& [name, c] : q.sym) names.insert(name);
    for (const auto& name : names) sys.symbols.push_back({name, true});
    return sys;
}

namespace {

using RV = RateVar;

LinIneq row(std::vector<std::pair<RV, int>> rates,
            std::vector<std::pair<std::string, int>> syms) {
    LinIneq q;
    for (const auto& [v, c] : rates) q.coeff(v) += c;
    for (const auto& [s, c] : syms) q.sym[s] += c;
    return canonical_form(std::move(q));
}

LinIneq axiom_le(const std::string& lo, const std::string& hi) {
    LinIneq q;
    q.sym[hi] += 1;
    q.sym[lo] += -1;
    return q;
}

LinIneq axiom_sum_le(const std::string& lo, const std::string& hi_a,
                     const std::string& hi_b) {
    LinIneq q;
    q.sym[hi_a] += 1;
    q.sym[hi_b] += 1;
    q.sym[lo] += -1;
    return q;
}

void add_equality(IneqSystem& s, RV sum, std::vector<RV> parts) {
    std::vector<std::pair<RV, int>> fwd{{sum, 1}}, rev{{sum, -1}};
    for (RV p : parts) {
        fwd.push_back({p, -1});
        rev.push_back({p, 1});
    }
    s.inequalities.push_back(row(fwd, {}));
    s.inequalities.push_back(row(rev, {}));
}

void add_nonneg(IneqSystem& s, std::vector<RV> vars) {
    for (RV v : vars) s.inequalities.push_back(row({{v, -1}}, {}));
}

void declare(IneqSystem& s, std::vector<std::string> names) {
    for (auto& n : names) s.symbols.push_back({std::move(n), true});
}

BuiltinCheck make_df_full() {
    BuiltinCheck b;
    b.name = "df-full";
    IneqSystem& s = b.system;
    declare(s, {"Ib", "D1", "D2", "B2", "B3", "B5", "B6", "C1", "C2", "C3",
                "C4", "C5"});
    auto& q = s.inequalities;
    q.push_back(row({{RV::R10, 1}, {RV::T10, -1}}, {{"Ib", -1}}));
    q.push_back(row({{RV::R11p, 1}}, {{"D1", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R11p, 1}}, {{"D2", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::R11p, 1}}, {{"B2", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R11p, 1}}, {{"B3", 1}, {"Ib", 1}}));
    q.push_back(
        row({{RV::R11p, 1}, {RV::R20, 1}}, {{"B5", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R11p, 1}, {RV::R20, 1}},
                    {{"B6", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::R22, 1}}, {{"C1", 1}}));
    q.push_back(row({{RV::R20, 1}, {RV::R22, 1}}, {{"C2", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R22, 1}}, {{"C3", 1}}));
    q.push_back(
        row({{RV::T10, 1}, {RV::R20, 1}, {RV::R22, 1}}, {{"C4", 1}}));
    q.push_back(row({{RV::T10, 1}}, {{"C5", 1}}));
    add_equality(s, RV::R1, {RV::R10, RV::R11p});
    add_equality(s, RV::R2, {RV::R20, RV::R22});
    add_nonneg(s, {RV::R10, RV::R11p, RV::R20, RV::R22, RV::T10});
    s.axioms = {axiom_le("D1", "D2"), axiom_le("B2", "B3"),
                axiom_le("B2", "B5"), axiom_le("B3", "B6"),
                axiom_le("B5", "B6"), axiom_le("C1", "C2"),
                axiom_le("C1", "C3"), axiom_le("C2", "C4"),
                axiom_le("C3", "C4"), axiom_le("C5", "C3"),
                axiom_sum_le("C3", "C1", "C5")};
    b.eliminate_order = {RV::R10, RV::R11p, RV::R20, RV::R22, RV::T10};

    IneqSystem& t = b.target;
    t.symbols = s.symbols;
    t.axioms = s.axioms;
    auto& r = t.inequalities;
    r.push_back(row({{RV::R1, 1}}, {{"D2", 1}}));
    r.push_back(row({{RV::R1, 1}}, {{"B3", 1}}));
    r.push_back(row({{RV::R2, 1}}, {{"C2", 1}}));
    r.push_back(row({{RV::R2, 1}}, {{"C4", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{"B2", 1}, {"C4", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}},
                    {{"D1", 1}, {"C4", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{"B5", 1}, {"C3", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}},
                    {{"B6", 1}, {"C3", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{"B6", 1}, {"C1", 1}}));
    r.push_back(row({{RV::R1, 2}, {RV::R2, 1}},
                    {{"B2", 1}, {"B6", 1}, {"C3", 1}}));
    r.push_back(row({{RV::R1, 2}, {RV::R2, 1}},
                    {{"D1", 1}, {"B6", 1}, {"C3", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 2}},
                    {{"B5", 1}, {"C1", 1}, {"C4", 1}}));

    b.expected_extra = {"R1 <= B2 + C5", "R1 <= C5 + D1 - Ib",
                        "R2 <= B5 + C1 + Ib"};
    return b;
}

BuiltinCheck make_df_partial() {
    BuiltinCheck b;
    b.name = "df-partial";
    IneqSystem& s = b.system;
    declare(s, {"Ib", "A1", "A2", "B1", "B2", "B3", "B4", "B5", "B6", "C1",
                "C2", "C3", "C4", "C5"});
    auto& q = s.inequalities;
    q.push_back(row({{RV::R10, 1}, {RV::T10, -1}}, {{"Ib", -1}}));
    q.push_back(row({{RV::R11p, 1}}, {{"A1", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R11p, 1}}, {{"A2", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::R11pp, 1}}, {{"B1", 1}}));
    q.push_back(
        row({{RV::R11p, 1}, {RV::R11pp, 1}}, {{"B2", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R11p, 1}, {RV::R11pp, 1}},
                    {{"B3", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::R11pp, 1}, {RV::R20, 1}}, {{"B4", 1}}));
    q.push_back(row({{RV::R11p, 1}, {RV::R11pp, 1}, {RV::R20, 1}},
                    {{"B5", 1}, {"Ib", 1}}));
    q.push_back(
        row({{RV::T10, 1}, {RV::R11p, 1}, {RV::R11pp, 1}, {RV::R20, 1}},
            {{"B6", 1}, {"Ib", 1}}));
    q.push_back(row({{RV::R22, 1}}, {{"C1", 1}}));
    q.push_back(row({{RV::R20, 1}, {RV::R22, 1}}, {{"C2", 1}}));
    q.push_back(row({{RV::T10, 1}, {RV::R22, 1}}, {{"C3", 1}}));
    q.push_back(
        row({{RV::T10, 1}, {RV::R20, 1}, {RV::R22, 1}}, {{"C4", 1}}));
    q.push_back(row({{RV::T10, 1}}, {{"C5", 1}}));
    add_equality(s, RV::R1, {RV::R10, RV::R11p, RV::R11pp});
    add_equality(s, RV::R2, {RV::R20, RV::R22});
    add_nonneg(s, {RV::R10, RV::R11p, RV::R11pp, RV::R20, RV::R22, RV::T10});
    s.axioms = {axiom_le("A1", "A2"), axiom_le("B1", "B2"),
                axiom_le("B2", "B3"), axiom_le("B2", "B5"),
                axiom_le("B3", "B6"), axiom_le("B4", "B5"),
                axiom_le("B5", "B6"), axiom_le("C1", "C2"),
                axiom_le("C1", "C3"), axiom_le("C2", "C4"),
                axiom_le("C3", "C4"), axiom_le("B1", "B4"),
                axiom_le("C5", "C3"), axiom_sum_le("C3", "C1", "C5"),
                axiom_sum_le("B5", "B2", "B4")};
    b.eliminate_order = {RV::R10, RV::R11p, RV::R11pp,
                         RV::R20, RV::R22,  RV::T10};
    // The relay decoding term conditioned on its own forwarded layer only;
    // declared interchangeable with the jointly conditioned version.
    b.rewrites = {{"A2", "A1X"}};

    IneqSystem& t = b.target;
    declare(t, {"Ib", "A1", "A1X", "B1", "B2", "B3", "B4", "B5", "B6", "C1",
                "C2", "C3", "C4", "C5"});
    t.axioms = {axiom_le("A1", "A1X"), axiom_le("B1", "B2"),
                axiom_le("B2", "B3"), axiom_le("B2", "B5"),
                axiom_le("B3", "B6"), axiom_le("B4", "B5"),
                axiom_le("B5", "B6"), axiom_le("C1", "C2"),
                axiom_le("C1", "C3"), axiom_le("C2", "C4"),
                axiom_le("C3", "C4"), axiom_le("B1", "B4"),
                axiom_le("C5", "C3"), axiom_sum_le("C3", "C1", "C5"),
                axiom_sum_le("B5", "B2", "B4")};
    auto& r = t.inequalities;
    r.push_back(row({{RV::R1, 1}}, {{"A1X", 1}, {"B1", 1}}));
    r.push_back(row({{RV::R1, 1}}, {{"B3", 1}}));
    r.push_back(row({{RV::R2, 1}}, {{"C2", 1}}));
    r.push_back(row({{RV::R2, 1}}, {{"C4", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{"B2", 1}, {"C4", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}},
                    {{"A1", 1}, {"B1", 1}, {"C4", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{"B5", 1}, {"C3", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}},
                    {{"A1", 1}, {"B4", 1}, {"C3", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}},
                    {{"B6", 1}, {"C3", 1}, {"Ib", -1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{"B6", 1}, {"C1", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}},
                    {{"A1X", 1}, {"B4", 1}, {"C1", 1}}));
    r.push_back(row({{RV::R1, 2}, {RV::R2, 1}},
                    {{"B2", 1}, {"B6", 1}, {"C3", 1}}));
    r.push_back(row({{RV::R1, 2}, {RV::R2, 1}},
                    {{"B2", 1}, {"B4", 1}, {"A1X", 1}, {"C3", 1}}));
    r.push_back(row({{RV::R1, 2}, {RV::R2, 1}},
                    {{"A1", 1}, {"B1", 1}, {"Ib", -1}, {"B6", 1}, {"C3", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 2}},
                    {{"B5", 1}, {"C1", 1}, {"C4", 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 2}},
                    {{"A1", 1}, {"B4", 1}, {"Ib", -1}, {"C1", 1}, {"C4", 1}}));

    b.expected_extra = {"R1 <= B2 + C5", "R1 <= A1 + B1 + C5 - Ib",
                        "R2 <= B4 + C1", "R2 <= B4 + C3 - Ib"};
    return b;
}

// k = 0: both destinations decode the compression index (all terms
// relay-aided); k = 1 or 2: only destination k does, the other side uses
// the relay-free primed terms.
BuiltinCheck make_cf(int k) {
    BuiltinCheck b;
    b.name = (k == 0) ? "cf-joint" : (k == 1 ? "cf-single-1" : "cf-single-2");
    const bool p1 = (k == 2);  // destination 1 terms primed
    const bool p2 = (k == 1);
    auto t1 = [&](int i) {
        return "I1" + std::to_string(i) + (p1 ? "'" : "");
    };
    auto t2 = [&](int i) {
        return "I2" + std::to_string(i) + (p2 ? "'" : "");
    };
    IneqSystem& s = b.system;
    declare(s, {t1(1), t1(2), t1(3), t1(4), t2(1), t2(2), t2(3), t2(4)});
    auto& q = s.inequalities;
    q.push_back(row({{RV::R11p, 1}}, {{t1(1), 1}}));
    q.push_back(row({{RV::R10, 1}, {RV::R11p, 1}}, {{t1(2), 1}}));
    q.push_back(row({{RV::R20, 1}, {RV::R11p, 1}}, {{t1(3), 1}}));
    q.push_back(
        row({{RV::R10, 1}, {RV::R11p, 1}, {RV::R20, 1}}, {{t1(4), 1}}));
    q.push_back(row({{RV::R22, 1}}, {{t2(1), 1}}));
    q.push_back(row({{RV::R20, 1}, {RV::R22, 1}}, {{t2(2), 1}}));
    q.push_back(row({{RV::R10, 1}, {RV::R22, 1}}, {{t2(3), 1}}));
    q.push_back(
        row({{RV::R10, 1}, {RV::R20, 1}, {RV::R22, 1}}, {{t2(4), 1}}));
    add_equality(s, RV::R1, {RV::R10, RV::R11p});
    add_equality(s, RV::R2, {RV::R20, RV::R22});
    add_nonneg(s, {RV::R10, RV::R11p, RV::R20, RV::R22});
    s.axioms = {axiom_le(t1(1), t1(2)), axiom_le(t1(2), t1(4)),
                axiom_le(t1(1), t1(3)), axiom_le(t1(3), t1(4)),
                axiom_le(t2(1), t2(2)), axiom_le(t2(2), t2(4)),
                axiom_le(t2(1), t2(3)), axiom_le(t2(3), t2(4))};
    b.eliminate_order = {RV::R10, RV::R11p, RV::R20, RV::R22};

    IneqSystem& t = b.target;
    t.symbols = s.symbols;
    t.axioms = s.axioms;
    auto& r = t.inequalities;
    r.push_back(row({{RV::R1, 1}}, {{t1(2), 1}}));
    r.push_back(row({{RV::R2, 1}}, {{t2(2), 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{t1(1), 1}, {t2(4), 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{t1(4), 1}, {t2(1), 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 1}}, {{t1(3), 1}, {t2(3), 1}}));
    r.push_back(row({{RV::R1, 2}, {RV::R2, 1}},
                    {{t1(1), 1}, {t1(4), 1}, {t2(3), 1}}));
    r.push_back(row({{RV::R1, 1}, {RV::R2, 2}},
                    {{t2(1), 1}, {t2(4), 1}, {t1(3), 1}}));

    b.expected_extra = {"R1 <= " + t1(1) + " + " + t2(3),
                        "R2 <= " + t1(3) + " + " + t2(1)};
    return b;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"df-full", "df-partial", "cf-joint", "cf-single-1", "cf-single-2"};
}

BuiltinCheck builtin_check(const std::string& name) {
    if (name == "df-full") return make_df_full();
    if (name == "df-partial") return make_df_partial();
    if (name == "cf-joint") return make_cf(0);
    if (name == "cf-single-1" || name == "cf-single-k") return make_cf(1);
    if (name == "cf-single-2") return make_cf(2);
    throw std::invalid_argument("fme: unknown builtin system '" + name + "'");
}

CheckOutcome run_builtin_check(const std::string& name) {
    BuiltinCheck b = builtin_check(name);
    IneqSystem sys = canonicalize(b.system);
    for (RateVar v : b.eliminate_order) sys = canonicalize(eliminate(sys, v));
    for (const auto& [from, to] : b.rewrites) rename_symbol(sys, from, to);
    CheckOutcome out;
    out.derived = remove_dominated(sys);
    out.report = check_against_target(out.derived, b.target);
    std::vector<std::string> got = out.report.extra_in_derived;
    std::vector<std::string> want = b.expected_extra;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    out.ok = (got == want) && out.report.missing.empty();
    return out;
}

}  // namespace ircb::fme
