#include "cdg/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "cdg/classifier.hpp"
#include "cdg/degree_graphs.hpp"
#include "cdg/descriptor_io.hpp"
#include "cdg/group_engine.hpp"
#include "cdg/numbers.hpp"

namespace cdg {

namespace {

const char* usage_text =
    "usage:\n"
    "  cdg graph <family> [t a]      print the degree graph and its analysis\n"
    "  cdg classify <file>           classify a group descriptor file\n"
    "  cdg verify <suite>            run a lemma suite: nq | counting | singer | clg | all\n"
    "  cdg zsygmondy <a> <n>         primitive prime divisor of a^n - 1\n"
    "  cdg export --dot <family> [t a]   DOT output for a degree graph\n"
    "families: psl2 <t> <a>, sl2 <t> <a>, sz <a>, m11, j1, psl3_4\n";

std::optional<u64> parse_number(const std::string& s) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Builds the graph named on the command line; family_args excludes the
// family word itself. Returns nullopt (after printing) on bad arguments.
std::optional<PrimeGraph> family_graph(const std::string& family,
                                       const std::vector<std::string>& family_args,
                                       std::ostream& err, int& exit_code) {
    auto need = [&](std::size_t n) {
        if (family_args.size() != n) {
            err << "error: family '" << family << "' takes " << n << " parameter(s)\n";
            exit_code = 1;
            return false;
        }
        return true;
    };
    try {
        if (family == "psl2" || family == "sl2") {
            if (!need(2)) return std::nullopt;
            auto t = parse_number(family_args[0]);
            auto a = parse_number(family_args[1]);
            if (!t || !a) {
                err << "error: t and a must be integers\n";
                exit_code = 1;
                return std::nullopt;
            }
            return psl2_graph(*t, static_cast<unsigned>(*a),
                              family == "sl2" ? PSL2Variant::SL2 : PSL2Variant::PSL2);
        }
        if (family == "sz") {
            if (!need(1)) return std::nullopt;
            auto a = parse_number(family_args[0]);
            if (!a) {
                err << "error: a must be an integer\n";
                exit_code = 1;
                return std::nullopt;
            }
            return sz_graph(static_cast<unsigned>(*a));
        }
        if (family == "m11") {
            if (!need(0)) return std::nullopt;
            return sporadic_graph(Sporadic::M11);
        }
        if (family == "j1") {
            if (!need(0)) return std::nullopt;
            return sporadic_graph(Sporadic::J1);
        }
        if (family == "psl3_4") {
            if (!need(0)) return std::nullopt;
            return sporadic_graph(Sporadic::PSL3_4);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        exit_code = 1;
        return std::nullopt;
    }
    err << "error: unknown family '" << family << "'\n";
    exit_code = 4;
    return std::nullopt;
}

struct SuiteRunner {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        out << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << '\n';
        if (!ok) all_ok = false;
    }
};

void run_nq_suite(SuiteRunner& r) {
    auto expect_nq = [](u64 t, unsigned a, u64 q, unsigned d, unsigned b, u64 nq,
                        std::string& detail) {
        NqReport rep = check_Nq(sl2_natural(t, a), q);
        std::ostringstream os;
        os << "d=" << rep.d_exponent << " b=" << rep.b_exponent
           << " n_q=" << rep.sylow_count;
        detail = os.str();
        return rep.holds && rep.d_exponent == d && rep.b_exponent == b &&
               rep.sylow_count == nq;
    };
    r.check("Nq SL2(4) natural q=2",
            [&](std::string& d) { return expect_nq(2, 2, 2, 4, 2, 5, d); });
    r.check("Nq SL2(8) natural q=2",
            [&](std::string& d) { return expect_nq(2, 3, 2, 6, 3, 9, d); });
    r.check("Nq SL2(5) natural q=5", [&](std::string& d) {
        NqReport rep = check_Nq(sl2_natural(5, 1), 5);
        d = "holds=" + std::string(rep.holds ? "true" : "false");
        return rep.holds;
    });
    r.check("Nq SL2(4) natural q=3 fails with witnesses", [&](std::string& d) {
        NqReport rep = check_Nq(sl2_natural(2, 2), 3);
        d = "witnesses=" + std::to_string(rep.witnesses.size());
        return !rep.holds && !rep.witnesses.empty();
    });
}

void run_counting_suite(SuiteRunner& r) {
    auto expect = [](u64 t, unsigned a, u64 q) {
        return counting_identity(sl2_natural(t, a), q);
    };
    r.check("counting identity SL2(4) q=2", [&](std::string&) { return expect(2, 2, 2); });
    r.check("counting identity SL2(8) q=2", [&](std::string&) { return expect(2, 3, 2); });
    r.check("counting identity SL2(5) q=5", [&](std::string&) { return expect(5, 1, 5); });
}

void run_singer_suite(SuiteRunner& r) {
    auto expect = [](u64 t, unsigned a, u64 p, u64 order, std::string& detail) {
        SingerReport rep = singer_check(t, a);
        std::ostringstream os;
        os << "p=" << rep.p << " |C|=" << rep.centralizer_order
           << (rep.is_cyclic ? " cyclic" : " not cyclic");
        detail = os.str();
        return rep.p == p && rep.centralizer_order == order && rep.is_cyclic;
    };
    r.check("singer GL3(2)", [&](std::string& d) { return expect(2, 3, 7, 7, d); });
    r.check("singer GL4(2)", [&](std::string& d) { return expect(2, 4, 5, 15, d); });
    r.check("singer GL3(3)", [&](std::string& d) { return expect(3, 3, 13, 26, d); });
    r.check("singer GL2(5)", [&](std::string& d) { return expect(5, 2, 3, 24, d); });
    r.check("singer GL2(3) rejected (3 = 2^2 - 1)", [&](std::string& d) {
        try {
            singer_check(3, 2);
        } catch (const std::invalid_argument& e) {
            d = e.what();
            return true;
        }
        return false;
    });
}

void run_clg_suite(SuiteRunner& r) {
    auto expect = [](u64 t, unsigned a, u64 order, std::string& detail) {
        Sl2CentralizerReport rep = sl2_centralizer_check(t, a);
        std::ostringstream os;
        os << "|C|=" << rep.centralizer_order << (rep.is_cyclic ? " cyclic" : " not cyclic")
           << (rep.equals_center_of_GL2_extension ? " scalar" : " non-scalar");
        detail = os.str();
        return rep.centralizer_order == order && rep.is_cyclic &&
               rep.equals_center_of_GL2_extension;
    };
    r.check("centralizer of SL2(4) in GL4(2)",
            [&](std::string& d) { return expect(2, 2, 3, d); });
    r.check("centralizer of SL2(3) in GL2(3)",
            [&](std::string& d) { return expect(3, 1, 2, d); });
    r.check("centralizer of SL2(5) in GL2(5)",
            [&](std::string& d) { return expect(5, 1, 4, d); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << usage_text;
        return 1;
    }
    const std::string& verb = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());

    if (verb == "graph" || verb == "export") {
        std::vector<std::string> fam = rest;
        bool dot = false;
        if (verb == "export") {
            if (fam.empty() || fam[0] != "--dot") {
                err << "error: export requires --dot\n" << usage_text;
                return 1;
            }
            fam.erase(fam.begin());
            dot = true;
        }
        if (fam.empty()) {
            err << "error: missing family\n" << usage_text;
            return 1;
        }
        std::string family = fam[0];
        fam.erase(fam.begin());
        int code = 0;
        auto g = family_graph(family, fam, err, code);
        if (!g) return code;
        if (dot) {
            out << g->to_dot(family);
        } else {
            out << g->canonical_text() << format_report(analyze(*g));
        }
        return 0;
    }

    if (verb == "classify") {
        if (rest.size() != 1) {
            err << "error: classify takes one descriptor file\n" << usage_text;
            return 1;
        }
        GroupDescriptor d;
        try {
            d = parse_descriptor_file(rest[0]);
        } catch (const DescriptorError& e) {
            err << "descriptor error: " << e.what() << '\n';
            return 3;
        }
        Verdict v = classify(d);
        out << format_verdict(v);
        return v.outcome == Outcome::not_covered ? 2 : 0;
    }

    if (verb == "verify") {
        if (rest.size() != 1) {
            err << "error: verify takes one suite name\n" << usage_text;
            return 1;
        }
        const std::string& suite = rest[0];
        SuiteRunner r{out};
        bool known = false;
        if (suite == "nq" || suite == "all") {
            run_nq_suite(r);
            known = true;
        }
        if (suite == "counting" || suite == "all") {
            run_counting_suite(r);
            known = true;
        }
        if (suite == "singer" || suite == "all") {
            run_singer_suite(r);
            known = true;
        }
        if (suite == "clg" || suite == "all") {
            run_clg_suite(r);
            known = true;
        }
        if (!known) {
            err << "error: unknown suite '" << suite
                << "' (expected nq, counting, singer, clg or all)\n";
            return 1;
        }
        return r.all_ok ? 0 : 1;
    }

    if (verb == "zsygmondy") {
        if (rest.size() != 2) {
            err << "error: zsygmondy takes <a> <n>\n" << usage_text;
            return 1;
        }
        auto a = parse_number(rest[0]);
        auto n = parse_number(rest[1]);
        if (!a || !n || *a < 2 || *n < 2) {
            err << "error: a and n must be integers >= 2\n";
            return 1;
        }
        auto p = zsygmondy(*a, static_cast<unsigned>(*n));
        if (p) {
            out << to_string_u128(*p) << '\n';
        } else {
            out << "none: exceptional case n=" << *n << ", a=" << *a << '\n';
        }
        return 0;
    }

    err << "error: unknown verb '" << verb << "'\n" << usage_text;
    return 1;
}

}  // namespace cdg
