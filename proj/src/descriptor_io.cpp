#include "cdg/descriptor_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace cdg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

u64 parse_u64(const std::string& field, const std::string& value) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw DescriptorError(field, "expected a non-negative integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& field, const std::string& value) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    throw DescriptorError(field, "expected true or false, got '" + value + "'");
}

std::set<u64> parse_vertex_list(const std::string& field, const std::string& value) {
    std::set<u64> out;
    if (value == "none" || value == "empty" || value == "{}") return out;
    std::istringstream is(value);
    std::string tok;
    while (is >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (tok.empty()) continue;
        out.insert(parse_u64(field, tok));
    }
    return out;
}

SocleTag parse_socle(const std::string& value) {
    if (value == "psl2") return SocleTag::PSL2;
    if (value == "sl2") return SocleTag::SL2;
    if (value == "sz") return SocleTag::Sz;
    if (value == "psl3_4") return SocleTag::PSL3_4;
    if (value == "m11") return SocleTag::M11;
    if (value == "j1") return SocleTag::J1;
    throw DescriptorError("socle",
                          "unknown family '" + value +
                              "' (expected psl2, sl2, sz, psl3_4, m11 or j1)");
}

ResidualShape parse_shape(const std::string& value) {
    if (value == "simple") return ResidualShape::simple;
    if (value == "sl2_cover") return ResidualShape::sl2_cover;
    if (value == "extension_natural") return ResidualShape::extension_natural;
    if (value == "extension_special") return ResidualShape::extension_special;
    throw DescriptorError("residual_shape", "unknown shape '" + value + "'");
}

}  // namespace

GroupDescriptor parse_descriptor_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t colon = s.find(':');
        if (colon == std::string::npos) {
            throw DescriptorError("line", "expected 'key: value', got '" + s + "'");
        }
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (!kv.emplace(key, value).second) {
            throw DescriptorError(key, "key appears twice");
        }
    }

    static const std::set<std::string> known{
        "socle",       "t",           "a",
        "residual_shape",  "radical_vertices", "quotient_vertices",
        "outer_index", "outer_part_odd",   "sylow2_condition",
        "direct_product_with_R",            "p"};
    for (const auto& [key, value] : kv) {
        if (!known.count(key)) throw DescriptorError(key, "unknown key");
    }
    if (!kv.count("socle")) throw DescriptorError("socle", "required key missing");
    if (!kv.count("p")) throw DescriptorError("p", "required key missing");

    GroupDescriptor d;
    d.socle.tag = parse_socle(kv.at("socle"));
    bool parametrized = d.socle.tag == SocleTag::PSL2 || d.socle.tag == SocleTag::SL2 ||
                        d.socle.tag == SocleTag::Sz;
    if (parametrized) {
        if (d.socle.tag == SocleTag::Sz) {
            d.socle.t = 2;
            if (kv.count("t") && parse_u64("t", kv.at("t")) != 2) {
                throw DescriptorError("t", "Sz has characteristic 2");
            }
        } else {
            if (!kv.count("t")) throw DescriptorError("t", "required for this family");
            d.socle.t = parse_u64("t", kv.at("t"));
        }
        if (!kv.count("a")) throw DescriptorError("a", "required for this family");
        d.socle.a = static_cast<unsigned>(parse_u64("a", kv.at("a")));
    } else if (kv.count("t") || kv.count("a")) {
        throw DescriptorError("t", "t/a only apply to the parametrized families");
    }

    if (kv.count("residual_shape")) d.residual_shape = parse_shape(kv.at("residual_shape"));
    if (kv.count("radical_vertices")) {
        d.radical_vertices = parse_vertex_list("radical_vertices", kv.at("radical_vertices"));
    }
    if (kv.count("quotient_vertices")) {
        d.quotient_vertices = parse_vertex_list("quotient_vertices", kv.at("quotient_vertices"));
    }
    if (kv.count("outer_index")) d.outer_index = parse_u64("outer_index", kv.at("outer_index"));
    if (kv.count("outer_part_odd")) {
        d.outer_part_odd = parse_bool("outer_part_odd", kv.at("outer_part_odd"));
    }
    if (kv.count("sylow2_condition")) {
        d.sylow2_condition = parse_bool("sylow2_condition", kv.at("sylow2_condition"));
    }
    if (kv.count("direct_product_with_R")) {
        d.direct_product_with_R =
            parse_bool("direct_product_with_R", kv.at("direct_product_with_R"));
    }
    d.candidate_p = parse_u64("p", kv.at("p"));

    try {
        d.validate();
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::size_t colon = msg.find(':');
        std::string field = colon == std::string::npos ? "descriptor" : msg.substr(0, colon);
        throw DescriptorError(field, colon == std::string::npos
                                         ? msg
                                         : trim(msg.substr(colon + 1)));
    }
    return d;
}

GroupDescriptor parse_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DescriptorError("file", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor_text(buf.str());
}

std::string format_verdict(const Verdict& v) {
    std::ostringstream os;
    os << "outcome: " << outcome_name(v.outcome) << '\n';
    if (!v.matched_clause.empty()) os << "clause: " << v.matched_clause << '\n';
    if (v.cut_vertex) os << "cut_vertex: " << *v.cut_vertex << '\n';
    if (v.predicted_graph) {
        os << "graph:\n" << v.predicted_graph->canonical_text();
    }
    if (!v.violations.empty()) {
        os << "violations:\n";
        for (const Violation& viol : v.violations) {
            os << "  " << viol.clause << ": " << viol.condition << '\n';
        }
    }
    for (const std::string& note : v.notes) os << "note: " << note << '\n';
    return os.str();
}

std::string format_report(const ConnectivityReport& r) {
    std::ostringstream os;
    os << "components:";
    for (const auto& comp : r.components) {
        os << " {";
        bool first = true;
        for (u64 v : comp) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << "}";
    }
    os << '\n' << "cut_vertices:";
    for (u64 v : r.cut_vertices) os << ' ' << v;
    os << '\n' << "connectivity_degree: " << r.connectivity_degree << '\n';
    os << "complete_vertices:";
    for (u64 v : r.complete_vertices) os << ' ' << v;
    os << '\n';
    return os.str();
}

std::string format_nq_report(const NqReport& r) {
    std::ostringstream os;
    os << "holds: " << (r.holds ? "true" : "false") << '\n';
    if (!r.reason.empty()) os << "reason: " << r.reason << '\n';
    if (!r.witnesses.empty()) {
        os << "witnesses:";
        for (u64 w : r.witnesses) os << ' ' << w;
        os << '\n';
    }
    os << "d: " << r.d_exponent << '\n';
    os << "b: " << r.b_exponent << '\n';
    os << "sylow_count: " << r.sylow_count << '\n';
    return os.str();
}

}  // namespace cdg
