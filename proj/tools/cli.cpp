#include "cli.hpp"

#include "nichols/nichols.hpp"
#include "nichols/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace nichols::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string command;
    std::string file;
    bool as_json = false;
    int max_degree = -1;
    int jobs = 1;
    uint64_t max_dim = VerifyOptions{}.max_dim;
    bool general = false;
    bool no_verify = false;
};

json cyc_json(const CycNum& x) {
    json c = json::array();
    for (const auto& r : x.canonical()) c.push_back(r.str());
    return {{"order", x.order()}, {"coeffs", c}};
}

json word_json(const Word& w) {
    json a = json::array();
    for (int l : w) a.push_back(l + 1);
    return a;
}

json elem_json(const TensorElem& x) {
    json a = json::array();
    for (const auto& [w, c] : x.terms()) a.push_back(json::array({word_json(w), cyc_json(c)}));
    return a;
}

json root_json(const RootOfUnity& q) { return {{"order", q.order}, {"exponent", q.exponent}}; }

std::string q_str(const RootOfUnity& q) {
    if (q.exponent == 0) return "1";
    return "z" + std::to_string(q.order) + "^" + std::to_string(q.exponent);
}

int max_degree_of(const Options& o, const InputSpec& s) {
    if (o.max_degree >= 0) return o.max_degree;
    if (const char* env = std::getenv("NICHOLS_MAX_DEGREE")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InputError("NICHOLS_MAX_DEGREE is not an integer");
        }
    }
    return s.caps.max_degree;
}

EngineOptions engine(int max_degree, int jobs) {
    EngineOptions e;
    e.max_degree = max_degree;
    e.jobs = jobs;
    return e;
}

// relations reach far beyond the hilbert cap; their cost is bounded by max_dim instead
EngineOptions relation_engine(int jobs) {
    EngineOptions e = engine(1 << 16, jobs);
    e.max_dim = 100000;
    return e;
}

void print_matrix(std::ostream& out, const std::vector<std::vector<int>>& m) {
    for (const auto& row : m) {
        out << " ";
        for (int x : row) out << ' ' << std::setw(3) << x;
        out << '\n';
    }
}

int cmd_cartan(const Options& o, const InputSpec& s, std::ostream& out) {
    Bicharacter chi(s.N, s.exps);
    CartanData cd = cartan_matrix(chi, s.caps.cartan_bound);
    const int t = chi.theta();
    if (o.as_json) {
        json m = json::array();
        for (int i = 0; i < t; ++i) {
            json row = json::array();
            for (int j = 0; j < t; ++j) row.push_back(i == j ? json(nullptr) : json(cd.m(i, j)));
            m.push_back(row);
        }
        json j = {{"theta", t}, {"N", s.N}, {"exps", chi.exps()}, {"cartan", cd.a}, {"m", m},
                  {"cartan_vertex", cd.cartan_vertex}};
        if (t == 1) j["vacuous_cartan_vertex"] = true;
        out << j.dump(2) << '\n';
        return Ok;
    }
    out << "Cartan matrix\n";
    print_matrix(out, cd.a);
    for (int i = 0; i < t; ++i) {
        out << "vertex " << i + 1 << ": " << (cd.cartan_vertex[i] ? "Cartan" : "not Cartan");
        if (t == 1) out << " (no other vertex)";
        out << '\n';
    }
    return Ok;
}

int cmd_roots(const Options& o, const InputSpec& s, std::ostream& out) {
    Bicharacter chi(s.N, s.exps);
    RootSystem rs = root_system(chi, s.caps);
    auto scalars = root_scalars(rs, chi);
    if (o.as_json) {
        json objs = json::array();
        for (const auto& ob : rs.objects)
            objs.push_back({{"exps", ob.chi.exps()}, {"cartan", ob.cartan.a}, {"neighbor", ob.neighbor}});
        json roots = json::array();
        for (const auto& r : scalars)
            roots.push_back({{"root", r.beta}, {"height", total(r.beta)}, {"q", root_json(r.q)}, {"N", r.N_beta},
                             {"in_orbit", r.in_orbit}});
        json j = {{"objects", objs}, {"roots", roots}};
        if (chi.theta() == 1) j["vacuous_cartan_vertex"] = true;
        out << j.dump(2) << '\n';
        return Ok;
    }
    out << rs.objects.size() << " objects, " << scalars.size() << " positive roots\n";
    out << std::left << std::setw(16) << "root" << std::setw(10) << "q" << std::setw(6) << "N"
        << "orbit\n";
    for (const auto& r : scalars)
        out << std::setw(16) << degree_str(r.beta) << std::setw(10) << q_str(r.q) << std::setw(6) << r.N_beta
            << (r.in_orbit ? "yes" : "no") << '\n';
    out << std::right;
    return Ok;
}

json relation_json(const Relation& r, const Verdict* v) {
    json idx = json::array();
    for (int i : r.indices) idx.push_back(i + 1);
    json j = {{"family", family_tag(r.family)}, {"pattern", family_pattern(r.family)}, {"formula", r.formula},
              {"indices", idx}, {"degree", r.degree}};
    if (r.family == Family::PowerRootVector || r.family == Family::SimplePower) j["root"] = r.root;
    if (!r.diagnostic.empty()) {
        j["diagnostic"] = r.diagnostic;
    } else if (r.base) {
        j["base"] = elem_json(*r.base);
        j["exponent"] = r.exponent;
        if (r.expanded) j["element"] = elem_json(r.element);
    } else {
        j["element"] = elem_json(r.element);
    }
    if (v) {
        j["status"] = status_str(v->status);
        if (!v->detail.empty()) j["detail"] = v->detail;
    }
    return j;
}

void relation_text(std::ostream& out, const Relation& r, const Verdict* v) {
    out << family_tag(r.family) << "  " << r.formula << "  degree " << degree_str(r.degree);
    if (v) out << "  " << status_str(v->status);
    out << '\n';
    if (!r.diagnostic.empty()) {
        out << "    " << r.diagnostic << '\n';
        return;
    }
    if (v && !v->detail.empty()) out << "    " << v->detail << '\n';
    if (!r.expanded) {
        out << "    (" << r.base->str() << ")^" << r.exponent << '\n';
        return;
    }
    std::string e = r.element.str();
    if (e.size() > 400) e = e.substr(0, 400) + " ... (" + std::to_string(r.element.size()) + " terms)";
    out << "    " << e << '\n';
}

int cmd_relations(const Options& o, const InputSpec& s, std::ostream& out) {
    Bicharacter chi(s.N, s.exps);
    RootSystem rs = root_system(chi, s.caps);
    Nichols B(chi, relation_engine(o.jobs));
    auto rels = emit_relations(chi, rs, B);
    std::vector<Relation> general;
    if (o.general) {
        auto roots = pbw_roots(rs, chi, B);
        for (auto [i, j] : general_pairs(roots)) general.push_back(general_relation(i, j, roots, chi).relation);
    }
    VerifyOptions vo;
    vo.max_dim = o.max_dim;
    auto verdicts = [&](const std::vector<Relation>& rs_) {
        std::vector<Verdict> v;
        if (!o.no_verify)
            for (const auto& r : rs_) v.push_back(verify_relation(r, B, rs, vo));
        return v;
    };
    auto vm = verdicts(rels);
    auto vg = verdicts(general);
    if (o.as_json) {
        json a = json::array();
        for (size_t k = 0; k < rels.size(); ++k) a.push_back(relation_json(rels[k], vm.empty() ? nullptr : &vm[k]));
        json j = {{"relations", a}};
        if (o.general) {
            json g = json::array();
            for (size_t k = 0; k < general.size(); ++k)
                g.push_back(relation_json(general[k], vg.empty() ? nullptr : &vg[k]));
            j["general"] = g;
        }
        out << j.dump(2) << '\n';
        return Ok;
    }
    for (size_t k = 0; k < rels.size(); ++k) relation_text(out, rels[k], vm.empty() ? nullptr : &vm[k]);
    if (o.general) {
        out << "general presentation\n";
        for (size_t k = 0; k < general.size(); ++k) relation_text(out, general[k], vg.empty() ? nullptr : &vg[k]);
    }
    return Ok;
}

int cmd_hilbert(const Options& o, const InputSpec& s, std::ostream& out) {
    Bicharacter chi(s.N, s.exps);
    const int d = max_degree_of(o, s);
    Nichols B(chi, engine(d, o.jobs));
    auto pbw = pbw_generators(B, d);
    auto rows = hilbert_series(B, pbw);
    if (o.as_json) {
        json a = json::array();
        for (const auto& r : rows)
            a.push_back({{"degree", r.degree}, {"gram_dim", r.gram_dim}, {"pbw_dim", r.pbw_dim},
                         {"match", r.gram_dim == r.pbw_dim}});
        out << json{{"max_degree", d}, {"rows", a}}.dump(2) << '\n';
        return Ok;
    }
    out << std::left << std::setw(20) << "degree" << std::setw(10) << "gram" << std::setw(10) << "pbw"
        << "match\n";
    std::map<int, std::pair<uint64_t, uint64_t>> by_total;
    for (const auto& r : rows) {
        out << std::setw(20) << degree_str(r.degree) << std::setw(10) << r.gram_dim << std::setw(10) << r.pbw_dim
            << (r.gram_dim == r.pbw_dim ? "yes" : "no") << '\n';
        by_total[total(r.degree)].first += r.gram_dim;
        by_total[total(r.degree)].second += r.pbw_dim;
    }
    out << "by total degree\n";
    for (const auto& [n, p] : by_total)
        out << std::setw(20) << n << std::setw(10) << p.first << std::setw(10) << p.second
            << (p.first == p.second ? "yes" : "no") << '\n';
    out << std::right;
    return Ok;
}

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

Check check_relations(const Options& o, const Bicharacter& chi, const RootSystem& rs) {
    Check c{"relations in the radical"};
    Nichols B(chi, relation_engine(o.jobs));
    auto rels = emit_relations(chi, rs, B);
    if (o.general) {
        auto roots = pbw_roots(rs, chi, B);
        for (auto [i, j] : general_pairs(roots)) rels.push_back(general_relation(i, j, roots, chi).relation);
    }
    VerifyOptions vo;
    vo.max_dim = o.max_dim;
    int ok = 0, failed = 0, skipped = 0;
    std::string first;
    for (const auto& r : rels) {
        Verdict v = verify_relation(r, B, rs, vo);
        if (v.status == Status::Verified) {
            ++ok;
            continue;
        }
        std::string what = status_str(v.status) + " " + family_tag(r.family) + " " + r.formula + ": " + v.detail;
        if (v.status == Status::Failed) {
            if (failed++ == 0) first = what;
        } else if (skipped++ == 0 && failed == 0) {
            first = what;
        }
    }
    c.pass = failed == 0 && skipped == 0;
    c.detail = std::to_string(ok) + " verified, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
               " skipped";
    if (!first.empty()) c.detail += "; " + first;
    return c;
}

std::vector<Check> run_checks(const Options& o, const InputSpec& s) {
    Bicharacter chi(s.N, s.exps);
    const int d = max_degree_of(o, s);
    RootSystem rs = root_system(chi, s.caps);
    std::vector<Check> checks;
    checks.push_back(check_relations(o, chi, rs));

    Nichols B(chi, engine(d, o.jobs));
    auto pbw = pbw_generators(B, d);
    auto predicted = predicted_dims(rs, chi, Degree(chi.theta(), d));
    Check h{"hilbert series"};
    int bad = 0;
    for (const auto& r : hilbert_series(B, pbw)) {
        uint64_t from_roots = predicted.count(r.degree) ? predicted.at(r.degree) : 0;
        if (r.gram_dim == r.pbw_dim && r.gram_dim == from_roots) continue;
        if (bad++ == 0)
            h.detail = "degree " + degree_str(r.degree) + ": gram " + std::to_string(r.gram_dim) + ", pbw " +
                       std::to_string(r.pbw_dim) + ", roots " + std::to_string(from_roots);
    }
    h.pass = bad == 0;
    if (h.pass) h.detail = "total degree <= " + std::to_string(d);
    checks.push_back(h);

    Check p{"PBW degrees equal roots"};
    std::vector<Degree> lyndon, roots;
    for (const auto& g : pbw.generators) lyndon.push_back(g.degree);
    for (const auto& b : rs.positive())
        if (total(b) <= d) roots.push_back(b);
    std::sort(lyndon.begin(), lyndon.end());
    p.pass = lyndon == roots;
    p.detail = std::to_string(lyndon.size()) + " generators, " + std::to_string(roots.size()) + " roots of height <= " +
               std::to_string(d);
    checks.push_back(p);

    Check r{"reflection recursion"};
    for (auto f : {check_reflection_involution, check_cartan_scheme, check_cartan_from_roots,
                   check_reflection_recursion, check_root_axioms, check_root_additivity}) {
        std::string e = f(rs);
        if (!e.empty()) {
            r.pass = false;
            r.detail = e;
            break;
        }
    }
    if (r.pass) r.detail = std::to_string(rs.objects.size()) + " objects";
    checks.push_back(r);
    return checks;
}

int cmd_verify(const Options& o, const InputSpec& s, std::ostream& out) {
    auto checks = run_checks(o, s);
    bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (o.as_json) {
        json a = json::array();
        for (const auto& c : checks) a.push_back({{"check", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
        out << json{{"checks", a}, {"pass", all}}.dump(2) << '\n';
    } else {
        for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    return all ? Ok : VerifyFailed;
}

}  // namespace

InputSpec parse_input(const std::string& text, int max_theta) {
    json j = json::parse(text);
    if (!j.is_object()) throw InputError("input must be a JSON object");
    InputSpec s;
    if (!j.contains("N") || !j["N"].is_number_integer()) throw InputError("missing integer N");
    s.N = j["N"].get<int>();
    if (s.N < 1) throw InputError("N must be positive");
    if (!j.contains("exps") || !j["exps"].is_array()) throw InputError("missing exps matrix");
    for (const auto& row : j["exps"]) {
        if (!row.is_array()) throw InputError("exps must be a matrix");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InputError("exps entries must be integers");
            int e = static_cast<int>(x.get<long long>() % s.N);
            r.push_back(e < 0 ? e + s.N : e);
        }
        s.exps.push_back(std::move(r));
    }
    s.theta = static_cast<int>(s.exps.size());
    if (j.contains("theta")) {
        if (!j["theta"].is_number_integer() || j["theta"].get<int>() != s.theta)
            throw InputError("theta does not match the size of exps");
    }
    if (s.theta < 1 || s.theta > max_theta) throw InputError("theta must lie in 1.." + std::to_string(max_theta));
    for (const auto& row : s.exps)
        if (static_cast<int>(row.size()) != s.theta) throw InputError("exps must be theta x theta");
    if (j.contains("caps")) {
        const auto& c = j["caps"];
        if (!c.is_object()) throw InputError("caps must be an object");
        auto read = [&](const char* key, int& dst) {
            if (!c.contains(key)) return false;
            if (!c[key].is_number_integer() || c[key].get<int>() < 1) throw InputError(std::string(key) + " must be a positive integer");
            dst = c[key].get<int>();
            return true;
        };
        s.has_max_degree = read("max_degree", s.caps.max_degree);
        read("max_objects", s.caps.max_objects);
        read("max_root_height", s.caps.max_root_height);
    }
    return s;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nichols algebras of diagonal type: Cartan data, roots, PBW bases and defining relations"};
    app.name("nichols");
    app.require_subcommand(1, 1);
    Options o;
    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.file, "JSON input file, - for stdin")->capture_default_str();
        sub->add_flag("--json", o.as_json, "machine-readable output");
        sub->add_option("--jobs", o.jobs, "threads per degree level")->check(CLI::PositiveNumber);
        sub->callback([&o, name] { o.command = name; });
        return sub;
    };
    add("cartan", "Cartan matrix and Cartan vertices");
    add("roots", "Weyl groupoid objects and positive roots");
    auto* rel = add("relations", "defining relations with their verification status");
    auto* hil = add("hilbert", "graded dimensions against the PBW prediction");
    auto* ver = add("verify", "soundness checks");
    for (auto* sub : {hil, ver})
        sub->add_option("--max-degree", o.max_degree, "total degree cap (default: input caps, NICHOLS_MAX_DEGREE or 8)")
            ->check(CLI::NonNegativeNumber);
    for (auto* sub : {rel, ver}) {
        sub->add_option("--max-dim", o.max_dim, "largest predicted component a relation check may use");
        sub->add_flag("--general", o.general, "include the presentation by PBW generators");
    }
    rel->add_flag("--no-verify", o.no_verify, "skip the radical check");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return ParseError;
    }

    InputSpec s;
    try {
        std::string text;
        if (o.file.empty() || o.file == "-") {
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(o.file);
            if (!f) throw InputError("cannot open " + o.file);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        s = parse_input(text);
        max_degree_of(o, s);
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return ParseError;
    } catch (const InputError& e) {
        err << "parse error: " << e.what() << '\n';
        return ParseError;
    }

    try {
        if (o.command == "cartan") return cmd_cartan(o, s, out);
        if (o.command == "roots") return cmd_roots(o, s, out);
        if (o.command == "relations") return cmd_relations(o, s, out);
        if (o.command == "hilbert") return cmd_hilbert(o, s, out);
        return cmd_verify(o, s, out);
    } catch (const NotFiniteError& e) {
        err << "not finite: " << e.what() << '\n';
        return NotFinite;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return NotFinite;
    }
}

}  // namespace nichols::cli
