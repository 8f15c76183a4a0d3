// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "asdescent/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "asdescent/error.hpp"

namespace asdescent {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<uint32_t> divisors_of(uint32_t n) {
    std::vector<uint32_t> d;
    for (uint32_t t = 1; t <= n; ++t)
        if (n % t == 0) d.push_back(t);
    return d;
}

void sort_unique(std::vector<uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

const char* case_name(CaseKind kind) {
    switch (kind) {
    case CaseKind::char_two: return "char_two";
    case CaseKind::one_mod_four: return "one_mod_four";
    case CaseKind::three_mod_four: return "three_mod_four";
    }
    raise(Errc::internal, "unhandled case kind");
}

Subgroup subfield_by_scan(const Field& field, uint32_t t) {
    std::vector<Element> fixed;
    for (uint64_t code = 0; code < field.order(); ++code) {
        Element a = field.from_code(code);
        if (field.frobenius(a, t) == a) fixed.push_back(a);
    }
    return Subgroup::from_elements(field, std::move(fixed));
}

std::string exp_set(const std::vector<uint64_t>& exps) {
    std::string s = "{";
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(exps[i]);
    }
    return s + "}";
}

bool digits_are_scalar(const std::vector<uint32_t>& digits) {
    for (size_t i = 1; i < digits.size(); ++i)
        if (digits[i] != 0) return false;
    return true;
}

// One term of a vanishing polynomial: T^25, 2*T, b^364*T.
std::string poly_term(const PolyCoeff& c) {
    std::string var = (c.degree == 1) ? "T" : "T^" + std::to_string(c.degree);
    if (digits_are_scalar(c.digits)) {
        uint32_t v = c.digits.empty() ? 0 : c.digits[0];
        return (v == 1) ? var : std::to_string(v) + "*" + var;
    }
    return "b^" + std::to_string(*c.exp) + "*" + var;
}

std::string poly_string(const std::vector<PolyCoeff>& poly) {
    std::string s;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        if (!it->exp) continue;
        if (!s.empty()) s += " + ";
        s += poly_term(*it);
    }
    return s.empty() ? "0" : s;
}

} // namespace

DescentReport run(const RunConfig& config) {
    if (config.p < 2) raise(Errc::bad_config, "p must be at least 2");
    if (config.s == 0) raise(Errc::bad_config, "s must be at least 1");
    const uint32_t n = 2 * config.s;

    std::vector<uint32_t> t_list = config.t_list;
    if (t_list.empty()) t_list = divisors_of(n);
    sort_unique(t_list);
    for (uint32_t t : t_list)
        if (t == 0 || n % t != 0)
            raise(Errc::not_a_divisor,
                  "t = " + std::to_string(t) + " does not divide n = " + std::to_string(n));

    std::vector<uint32_t> dims = config.subspace_dims;
    if (dims.empty()) dims = {1};
    sort_unique(dims);
    for (uint32_t d : dims)
        if (d > config.s)
            raise(Errc::bad_config, "subspace dimension " + std::to_string(d) +
                                        " exceeds s = " + std::to_string(config.s));

    std::vector<int64_t> mod_coeffs =
        config.modulus ? *config.modulus
                       : search_primitive_polynomial(config.p, n, config.size_cap);
    Field field(config.p, n, mod_coeffs, config.size_cap);

    GaloisGroup g = (field.p() == 2) ? galois_group_by_scan(field, config.s)
                                     : galois_group_by_formula(field, config.s);
    if (config.oracle) {
        if (field.p() != 2) {
            GaloisGroup check = galois_group_by_scan(field, config.s);
            if (check.sub != g.sub)
                raise(Errc::oracle_mismatch, "formula-built G differs from the brute-force scan");
        }
        for (uint32_t t : t_list) {
            if (subfield(field, t) != subfield_by_scan(field, t))
                raise(Errc::oracle_mismatch,
                      "subfield exponent formula differs from the fixed-point scan at t = " +
                          std::to_string(t));
        }
    }

    std::vector<Subgroup> inventory;
    for (uint32_t d : dims) {
        std::vector<Subgroup> block = all_subspaces(g, d, config.enum_cap);
        if (config.oracle && d == 1) {
            std::vector<Subgroup> lines = order_p_subgroups(g);
            if (block != lines)
                raise(Errc::oracle_mismatch,
                      "echelon enumeration of lines differs from the span-based walk");
        }
        for (Subgroup& sub : block) inventory.push_back(std::move(sub));
    }

    DescentReport rep;
    rep.config = config;
    rep.config.t_list = t_list;
    rep.config.subspace_dims = dims;
    rep.config.modulus = mod_coeffs;
    rep.p = field.p();
    rep.n = n;
    rep.modulus = field.modulus();
    rep.beta_order = field.unit_order();
    rep.case_tag = classify_case(field.p());
    if (rep.case_tag.wilson_root) {
        uint32_t w = *rep.case_tag.wilson_root;
        uint32_t other = static_cast<uint32_t>(field.p()) - w;
        rep.wilson_roots = {std::min(w, other), std::max(w, other)};
    }
    rep.g_exponents = g.sub.exponent_view();

    for (const Subgroup& sub : inventory) {
        SubgroupRecord rec;
        rec.dim = sub.dim();
        if (sub.dim() > 0) rec.gen_exp = sub.exponent_view().front();
        rec.exps = sub.exponent_view();
        for (uint32_t t : t_list)
            rec.verdicts.emplace_back(t, is_descendable(sub, t).stable);
        for (const auto& [deg, c] : subgroup_polynomial(sub)) {
            PolyCoeff pc;
            pc.degree = deg;
            pc.digits = c.coeffs();
            if (!c.is_zero()) pc.exp = field.dlog(c);
            rec.poly.push_back(std::move(pc));
        }
        rep.subgroups.push_back(std::move(rec));
    }

    for (size_t ti = 0; ti < t_list.size(); ++ti) {
        OrbitStructure o = orbit_structure(inventory, t_list[ti]);
        std::vector<size_t> stable_idx;
        for (size_t i = 0; i < rep.subgroups.size(); ++i)
            if (rep.subgroups[i].verdicts[ti].second) stable_idx.push_back(i);
        if (stable_idx != o.fixed)
            raise(Errc::internal, "orbit fixed points disagree with descent verdicts at t = " +
                                      std::to_string(t_list[ti]));
        OrbitRecord orec;
        orec.t = t_list[ti];
        orec.fixed = std::move(o.fixed);
        orec.pairs = std::move(o.pairs);
        orec.cycles = std::move(o.longer_cycles);
        rep.orbits.push_back(std::move(orec));
    }

    if (config.oracle) rep.oracle_ok = true;
    return rep;
}

std::string render_json(const DescentReport& report) {
    ordered_json j;
    j["field"]["p"] = report.p;
    j["field"]["n"] = report.n;
    j["field"]["modulus"] = report.modulus;
    j["field"]["beta_order"] = report.beta_order;
    j["case"] = case_name(report.case_tag.kind);
    j["wilson_roots"] = report.wilson_roots;
    j["G_exponents"] = report.g_exponents;

    j["subgroups"] = ordered_json::array();
    for (const SubgroupRecord& rec : report.subgroups) {
        ordered_json js;
        if (rec.gen_exp)
            js["gen_exp"] = *rec.gen_exp;
        else
            js["gen_exp"] = nullptr;
        js["exps"] = rec.exps;
        js["verdicts"] = ordered_json::object();
        for (const auto& [t, stable] : rec.verdicts) js["verdicts"][std::to_string(t)] = stable;
        js["poly"] = ordered_json::object();
        for (const PolyCoeff& pc : rec.poly) js["poly"][std::to_string(pc.degree)] = pc.digits;
        j["subgroups"].push_back(std::move(js));
    }

    j["orbits"] = ordered_json::object();
    for (const OrbitRecord& orec : report.orbits) {
        ordered_json jo;
        jo["fixed"] = orec.fixed;
        jo["pairs"] = ordered_json::array();
        for (const auto& [a, b] : orec.pairs) jo["pairs"].push_back({a, b});
        if (!orec.cycles.empty()) jo["cycles"] = orec.cycles;
        j["orbits"][std::to_string(orec.t)] = std::move(jo);
    }

    if (report.oracle_ok)
        j["oracle_ok"] = *report.oracle_ok;
    else
        j["oracle_ok"] = nullptr;
    return j.dump(2) + "\n";
}

std::string render_text(const DescentReport& report) {
    std::ostringstream out;
    out << "field: p=" << report.p << " n=" << report.n << " modulus=";
    for (size_t i = 0; i < report.modulus.size(); ++i)
        out << (i ? "," : "") << report.modulus[i];
    out << " beta_order=" << report.beta_order << "\n";

    out << "case: " << case_name(report.case_tag.kind) << "\n";
    std::vector<uint64_t> roots(report.wilson_roots.begin(), report.wilson_roots.end());
    out << "wilson_roots: " << exp_set(roots) << "\n";
    out << "G_exponents: " << exp_set(report.g_exponents) << "\n";

    out << "subgroups:\n";
    for (size_t i = 0; i < report.subgroups.size(); ++i) {
        const SubgroupRecord& rec = report.subgroups[i];
        out << "  [" << i << "] dim=" << rec.dim << " gen_exp=";
        if (rec.gen_exp)
            out << *rec.gen_exp;
        else
            out << "-";
        out << " exps=" << exp_set(rec.exps) << "\n";
        out << "      poly: " << poly_string(rec.poly) << "\n";
        for (const auto& [t, stable] : rec.verdicts) {
            out << "      t=" << t << ": ";
            if (stable) {
                uint64_t q = 1;
                for (uint32_t k = 0; k < t; ++k) q *= report.p;
                out << "stable, descends to F_" << q;
            } else {
                out << "moves";
            }
            out << "\n";
        }
    }

    out << "orbits:\n";
    for (const OrbitRecord& orec : report.orbits) {
        out << "  t=" << orec.t << ": fixed={";
        for (size_t i = 0; i < orec.fixed.size(); ++i) out << (i ? ", " : "") << orec.fixed[i];
        out << "} pairs={";
        for (size_t i = 0; i < orec.pairs.size(); ++i) {
            if (i) out << ", ";
            out << "(" << orec.pairs[i].first << ", " << orec.pairs[i].second << ")";
        }
        out << "}";
        if (!orec.cycles.empty()) {
            out << " cycles={";
            for (size_t i = 0; i < orec.cycles.size(); ++i) {
                if (i) out << ", ";
                out << "(";
                for (size_t k = 0; k < orec.cycles[i].size(); ++k)
                    out << (k ? " -> " : "") << orec.cycles[i][k];
                out << ")";
            }
            out << "}";
        }
        out << "\n";
    }

    if (report.oracle_ok)
        out << "oracle: " << (*report.oracle_ok ? "ok" : "MISMATCH") << "\n";
    else
        out << "oracle: off\n";
    return out.str();
}

std::string render(const DescentReport& report, OutputFormat format) {
    return format == OutputFormat::json ? render_json(report) : render_text(report);
}

std::vector<int64_t> search_primitive_polynomial(uint64_t p, uint32_t n, uint64_t size_cap) {
    std::vector<int64_t> cand(n + 1, 0);
    cand[n] = 1;
    while (true) {
        try {
            Field probe(p, n, cand, size_cap);
            return cand;
        } catch (const Error& e) {
            if (e.code() != Errc::not_primitive) throw;
        }
        // Advance the coefficient odometer; the constant term is the most
        // significant digit, so the digit next to the leading 1 moves fastest.
        int32_t i = static_cast<int32_t>(n) - 1;
        while (i >= 0 && cand[i] == static_cast<int64_t>(p) - 1) cand[i--] = 0;
        if (i < 0)
            raise(Errc::internal,
                  "no primitive polynomial of degree " + std::to_string(n) + " over F_" +
                      std::to_string(p));
        ++cand[i];
    }
}

const std::vector<AppendixGolden>& appendix_goldens() {
    static const std::vector<AppendixGolden> goldens = {
        {5,
         {3, 1, 0, 1, 1},
         {2, 3},
         {{{39, 195, 351, 507}, {117, 273, 429, 585}}}},
        {13,
         {2, 1, 0, 1, 1},
         {5, 8},
         {{{595, 2975, 5355, 7735, 10115, 12495, 14875, 17255, 19635, 22015, 24395, 26775},
           {1785, 4165, 6545, 8925, 11305, 13685, 16065, 18445, 20825, 23205, 25585, 27965}}}},
        {17,
         {5, 0, 0, 1, 1},
         {4, 13},
         {{{1305, 6525, 11745, 16965, 22185, 27405, 32625, 37845, 43065, 48285, 53505, 58725,
            63945, 69165, 74385, 79605},
           {3915, 9135, 14355, 19575, 24795, 30015, 35235, 40455, 45675, 50895, 56115, 61335,
            66555, 71775, 76995, 82215}}}},
    };
    return goldens;
}

std::vector<std::string> golden_diffs(const DescentReport& report, const AppendixGolden& golden) {
    std::vector<std::string> diffs;

    if (report.wilson_roots != golden.wilson_roots) {
        std::vector<uint64_t> got(report.wilson_roots.begin(), report.wilson_roots.end());
        std::vector<uint64_t> want(golden.wilson_roots.begin(), golden.wilson_roots.end());
        diffs.push_back("wilson roots: got " + exp_set(got) + ", want " + exp_set(want));
    }

    std::vector<const SubgroupRecord*> stable;
    for (const SubgroupRecord& rec : report.subgroups) {
        if (rec.dim != 1) continue;
        for (const auto& [t, ok] : rec.verdicts)
            if (t == 1 && ok) stable.push_back(&rec);
    }
    if (stable.size() != golden.stable_sets.size()) {
        diffs.push_back("stable order-p subgroup count: got " + std::to_string(stable.size()) +
                        ", want " + std::to_string(golden.stable_sets.size()));
        return diffs;
    }

    // Both sides are sorted by smallest exponent, so compare positionally.
    for (size_t i = 0; i < stable.size(); ++i) {
        const std::vector<uint64_t>& got = stable[i]->exps;
        const std::vector<uint64_t>& want = golden.stable_sets[i];
        if (got == want) continue;
        std::vector<uint64_t> missing, extra;
        std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                            std::back_inserter(missing));
        std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                            std::back_inserter(extra));
        diffs.push_back("stable set " + std::to_string(i) + ": missing " + exp_set(missing) +
                        ", extra " + exp_set(extra));
    }
    return diffs;
}

std::vector<AppendixOutcome> appendix_mode(uint64_t size_cap) {
    std::vector<AppendixOutcome> outcomes;
    for (const AppendixGolden& golden : appendix_goldens()) {
        RunConfig cfg;
        cfg.p = golden.p;
        cfg.s = 2;
        cfg.t_list = {1};
        cfg.modulus = golden.modulus;
        cfg.format = OutputFormat::text;
        cfg.oracle = true;
        cfg.subspace_dims = {1};
        cfg.size_cap = size_cap;
        AppendixOutcome outcome{run(cfg), false, {}};
        outcome.diffs = golden_diffs(outcome.report, golden);
        outcome.golden_ok = outcome.diffs.empty();
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

} // namespace asdescent
