#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covspace/cover.hpp"
#include "covspace/lens.hpp"
#include "covspace/lowindex.hpp"
#include "covspace/spaces.hpp"
#include "covspace/textio.hpp"

namespace covspace {

// Exit codes: 0 success, 1 a verification ran and failed, 2 input error,
// 3 resource exhausted (coset cap).
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInputError = 2,
    kExitResourceExhausted = 3,
};

struct CommandPlan {
    std::string command;
    std::vector<std::string> inputs;
    int max_cosets = kDefaultMaxCosets;
    int max_index = 0;
    long long window = 0; // 0 = pick the default for the command
    std::string output;
    bool quiet = false;
    bool classes = false;
};

inline const std::set<std::string>& known_commands() {
    static const std::set<std::string> cmds = {
        "pi1",       "order",    "cosets",      "subgroups",   "cover",
        "universal", "deck",     "lens-classify", "lens-verify", "verify-galois",
        "abelianize", "component"};
    return cmds;
}

inline CommandPlan parse_cli(const std::vector<std::string>& args) {
    CommandPlan plan;
    if (const char* env = std::getenv("COVER_MAX_COSETS"))
        plan.max_cosets = int(detail::parse_number(env, "COVER_MAX_COSETS"));
    if (args.empty())
        throw input_error("missing command; expected one of: pi1, order, cosets, subgroups, "
                          "cover, universal, deck, lens-classify, lens-verify, verify-galois, "
                          "abelianize, component");
    plan.command = args[0];
    if (!known_commands().count(plan.command))
        throw input_error("unknown command '" + plan.command + "'");

    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto option_value = [&](const std::string& name) {
            if (++i >= args.size())
                throw input_error("missing value for " + name);
            return args[i];
        };
        if (a == "--max-cosets")
            plan.max_cosets = int(detail::parse_number(option_value(a), a));
        else if (a == "--max-index")
            plan.max_index = int(detail::parse_number(option_value(a), a));
        else if (a == "--window")
            plan.window = detail::parse_number(option_value(a), a);
        else if (a == "-o" || a == "--output")
            plan.output = option_value(a);
        else if (a == "--quiet")
            plan.quiet = true;
        else if (a == "--classes")
            plan.classes = true;
        else if (a.size() > 1 && a[0] == '-' &&
                 !std::isdigit(static_cast<unsigned char>(a[1])))
            throw input_error("unknown option '" + a + "'");
        else
            plan.inputs.push_back(a);
    }

    auto need_inputs = [&](std::size_t lo, std::size_t hi, const std::string& what) {
        if (plan.inputs.size() < lo)
            throw input_error(plan.command + ": missing " + what);
        if (plan.inputs.size() > hi)
            throw input_error(plan.command + ": unexpected extra argument '" +
                              plan.inputs[hi] + "'");
    };
    const std::string& c = plan.command;
    if (c == "pi1" || c == "universal" || c == "component")
        need_inputs(1, 1, "complex file");
    else if (c == "order" || c == "abelianize")
        need_inputs(1, 1, "presentation (inline '<...>' or a file)");
    else if (c == "cosets" || c == "deck")
        need_inputs(1, 2, c == "cosets" ? "presentation" : "complex file");
    else if (c == "subgroups")
        need_inputs(1, 1, "presentation");
    else if (c == "cover")
        need_inputs(2, 2, plan.inputs.empty() ? "complex file" : "subgroup file");
    else if (c == "verify-galois")
        need_inputs(1, 1, "complex file");
    else if (c == "lens-classify") {
        need_inputs(2, 2, "order and parameter list");
        detail::parse_number(plan.inputs[0], "lens order");
    } else if (c == "lens-verify") {
        need_inputs(3, 3, "n, m and l");
        for (int j = 0; j < 3; ++j)
            detail::parse_number(plan.inputs[j], "lens-verify argument");
    }
    if ((c == "subgroups" || c == "verify-galois") && plan.max_index < 1)
        throw input_error(c + ": --max-index must be given and positive");
    if (plan.max_cosets < 1)
        throw input_error("--max-cosets must be positive");
    return plan;
}

namespace detail {

inline std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot write file '" + path + "'");
    out << content;
}

inline bool looks_like_presentation(const std::string& s) {
    auto pos = s.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && s[pos] == '<';
}

// Inline '<...>' text, a presentation file, or a complex file (then the
// fundamental group of its basepoint component).
inline Presentation presentation_from_arg(const std::string& arg) {
    if (looks_like_presentation(arg))
        return parse_presentation_text(arg);
    std::string text = load_text_file(arg);
    if (looks_like_presentation(text))
        return parse_presentation_text(text);
    return fundamental_group_presentation(parse_complex_text(text)).group;
}

inline std::vector<long long> parse_csv_numbers(const std::string& s) {
    std::vector<long long> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string chunk =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_number(chunk, "parameter list"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string csv(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

inline CosetTable subgroup_table_from_file(const std::string& path, const Presentation& p,
                                           int max_cosets) {
    SubgroupInput sub = parse_subgroup_text(load_text_file(path), p);
    if (sub.table)
        return standardize_table(*sub.table);
    return todd_coxeter(p, sub.words, max_cosets);
}

} // namespace detail

inline int execute_plan(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
    const std::string& c = plan.command;
    try {
        if (c == "pi1") {
            TwoComplex x = parse_complex_text(detail::load_text_file(plan.inputs[0]));
            Pi1Presentation p = fundamental_group_presentation(x);
            if (int(p.tree.discovery_order.size()) != x.vertex_count && !plan.quiet)
                err << "warning: ignoring "
                    << x.vertex_count - int(p.tree.discovery_order.size())
                    << " vertices outside the basepoint component\n";
            out << serialize_presentation(p.group) << "\n";
        } else if (c == "order") {
            Presentation p = detail::presentation_from_arg(plan.inputs[0]);
            out << todd_coxeter(p, {}, plan.max_cosets).coset_count << "\n";
        } else if (c == "abelianize") {
            Presentation p = detail::presentation_from_arg(plan.inputs[0]);
            AbelianInvariants inv = abelianization_invariants(p);
            out << "factors";
            for (std::size_t i = 0; i < inv.invariant_factors.size(); ++i)
                out << (i ? "," : " ") << inv.invariant_factors[i];
            out << "\n";
            out << "free_rank " << inv.free_rank << "\n";
        } else if (c == "cosets") {
            Presentation p = detail::presentation_from_arg(plan.inputs[0]);
            CosetTable t =
                plan.inputs.size() > 1
                    ? detail::subgroup_table_from_file(plan.inputs[1], p, plan.max_cosets)
                    : todd_coxeter(p, {}, plan.max_cosets);
            std::string text = serialize_table(t);
            if (!plan.output.empty())
                detail::write_text_file(plan.output, text);
            else
                out << text;
        } else if (c == "subgroups") {
            Presentation p = detail::presentation_from_arg(plan.inputs[0]);
            std::vector<CosetTable> subs = low_index_subgroups(p, plan.max_index);
            std::vector<int> cls;
            if (plan.classes)
                cls = conjugacy_class_ids(subs);
            out << "count " << subs.size() << "\n";
            for (std::size_t i = 0; i < subs.size(); ++i) {
                out << "subgroup " << i << " index " << subs[i].coset_count;
                if (plan.classes)
                    out << " class " << cls[i];
                out << "\n" << serialize_table(subs[i]);
            }
        } else if (c == "cover" || c == "universal") {
            TwoComplex x = parse_complex_text(detail::load_text_file(plan.inputs[0]));
            Pi1Presentation p = fundamental_group_presentation(x);
            CosetTable t =
                c == "universal"
                    ? todd_coxeter(p.group, {}, plan.max_cosets)
                    : detail::subgroup_table_from_file(plan.inputs[1], p.group, plan.max_cosets);
            CoveringMap cov = build_cover(x, t);
            if (!plan.output.empty()) {
                detail::write_text_file(plan.output + ".cx", serialize_complex(cov.total));
                detail::write_text_file(plan.output + ".proj", serialize_projection(cov));
                out << "sheets " << cov.sheets() << "\n";
                out << "total " << cov.total.vertex_count << " " << cov.total.edges.size()
                    << " " << cov.total.faces.size() << " " << cov.total.cell3_count << "\n";
                out << "euler " << euler_characteristic(cov.total) << "\n";
            } else {
                out << serialize_complex(cov.total) << serialize_projection(cov);
            }
        } else if (c == "deck") {
            TwoComplex x = parse_complex_text(detail::load_text_file(plan.inputs[0]));
            Pi1Presentation p = fundamental_group_presentation(x);
            CosetTable t =
                plan.inputs.size() > 1
                    ? detail::subgroup_table_from_file(plan.inputs[1], p.group, plan.max_cosets)
                    : todd_coxeter(p.group, {}, plan.max_cosets);
            out << deck_group_order(build_cover(x, t)) << "\n";
        } else if (c == "lens-classify") {
            LensSpace L = make_lens_space(detail::parse_number(plan.inputs[0], "lens order"),
                                          detail::parse_csv_numbers(plan.inputs[1]));
            for (const LensCoverRecord& rec : classify_lens_covers(L))
                out << rec.m << " " << rec.sheets << " " << detail::csv(rec.cover.params)
                    << "\n";
        } else if (c == "lens-verify") {
            long long n = detail::parse_number(plan.inputs[0], "n");
            long long m = detail::parse_number(plan.inputs[1], "m");
            long long l = detail::parse_number(plan.inputs[2], "l");
            long long window = plan.window > 0 ? plan.window : 10 * n;
            PullbackCheck chk = verify_lens_pullback_group(n, m, l, window);
            for (const auto& s : chk.solutions)
                out << "solution " << s.a << " " << s.b << " multiplier " << s.x << "\n";
            if (chk.verdict == PullbackCheck::Verdict::pass) {
                out << "pass\n";
            } else if (chk.verdict == PullbackCheck::Verdict::fail) {
                out << "fail: " << chk.failure << "\n";
                return kExitVerificationFailed;
            } else {
                out << "inconclusive: window too small to contain a nontrivial solution\n";
                return kExitInputError;
            }
        } else if (c == "verify-galois") {
            TwoComplex x = parse_complex_text(detail::load_text_file(plan.inputs[0]));
            RoundTripReport rep = galois_roundtrip_check(x, plan.max_index, plan.max_cosets);
            int failed = 0;
            for (const auto& e : rep.entries) {
                if (e.subgroup_roundtrip_ok && e.cover_roundtrip_ok) continue;
                ++failed;
                out << "subgroup " << e.subgroup_index << " index " << e.coset_count
                    << " failed:" << (e.subgroup_roundtrip_ok ? "" : " subgroup-roundtrip")
                    << (e.cover_roundtrip_ok ? "" : " cover-roundtrip") << "\n";
            }
            if (failed) {
                out << failed << " of " << rep.entries.size() << " round trips failed\n";
                return kExitVerificationFailed;
            }
            out << "all " << rep.entries.size() << " round trips passed\n";
        } else if (c == "component") {
            TwoComplex x = parse_complex_text(detail::load_text_file(plan.inputs[0]));
            TwoComplex y = basepoint_component(x);
            if (!plan.quiet && y.vertex_count != x.vertex_count)
                err << "warning: dropped " << x.vertex_count - y.vertex_count
                    << " vertices outside the basepoint component\n";
            std::string text = serialize_complex(y);
            if (!plan.output.empty())
                detail::write_text_file(plan.output, text);
            else
                out << text;
        }
    } catch (const resource_exhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceExhausted;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    try {
        return execute_plan(parse_cli(args), out, err);
    } catch (const input_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace covspace
