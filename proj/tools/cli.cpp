#include "cli.hpp"

#include "curvesing/atlas.hpp"
#include "curvesing/classify.hpp"
#include "curvesing/deform.hpp"
#include "curvesing/notation.hpp"
#include "curvesing/plane.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace curvesing::cli {

namespace {

using Record = std::vector<std::pair<std::string, std::string>>;

struct Options {
    int truncation = 256;
    std::string lambda = "2";
    std::string sample_s;
    std::string format = "text";
    std::string output;
    std::string input_file;
    std::vector<std::string> inputs;
};

struct Context {
    Options opt;
    JetOptions jet;
    Params params;
    std::ostream* out = nullptr;
    bool records() const { return opt.format == "records"; }
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

void emit(const Context& c, const Record& rec) {
    for (const auto& [k, v] : rec) {
        if (c.records()) {
            *c.out << k << "=" << v << "\n";
        } else {
            std::string key = k;
            std::replace(key.begin(), key.end(), '_', ' ');
            *c.out << key << ": " << v << "\n";
        }
    }
}

MultiGerm read_germ(const Context& c, const std::string& text) {
    try {
        return instantiate(atlas().resolve(text, c.params));
    } catch (const DomainError&) {
        return parse_germ(text);
    }
}

std::vector<std::string> inputs(const Context& c) {
    std::vector<std::string> all = c.opt.inputs;
    if (!c.opt.input_file.empty()) {
        std::ifstream in(c.opt.input_file);
        if (!in) throw DomainError("cannot read " + c.opt.input_file);
        std::string line;
        while (std::getline(in, line)) {
            const auto a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line[a] == '#') continue;
            all.push_back(line.substr(a, line.find_last_not_of(" \t\r") - a + 1));
        }
    }
    if (all.empty()) throw DomainError("no input germ given");
    return all;
}

int cmd_invariants(const Context& c) {
    bool first = true;
    for (const auto& text : inputs(c)) {
        const MultiGerm g = read_germ(c, text);
        const Signature s = signature_of(g, c.jet);
        const PieceSignature& w = s.whole;
        std::vector<std::string> sg;
        for (const auto& gens : w.semigroups) sg.push_back("<" + join(gens) + ">");
        std::string parts;
        for (const auto& p : decompose(g, c.jet)) parts += "{" + join(p) + "}";
        std::string semis;
        for (std::size_t i = 0; i < sg.size(); ++i) semis += (i ? " " : "") + sg[i];
        if (!first && c.records()) *c.out << "\n";
        first = false;
        emit(c, {{"germ", format_germ(g)},
                 {"ambient", std::to_string(s.ambient)},
                 {"branches", std::to_string(w.r)},
                 {"multiplicities", join(w.multiplicities)},
                 {"semigroups", semis},
                 {"delta", std::to_string(w.delta)},
                 {"embedding_dimension", std::to_string(w.embedding_dimension)},
                 {"tangent_span", std::to_string(w.tangent_span)},
                 {"planar_2jet", w.planar_2jet ? "yes" : "no"},
                 {"pair_deltas", join(w.pair_deltas)},
                 {"decomposition", parts},
                 {"signature", to_string(s)}});
    }
    return Ok;
}

int cmd_classify(const Context& c) {
    bool first = true;
    for (const auto& text : inputs(c)) {
        const auto r = recognize(read_germ(c, text), {}, c.jet);
        Record rec{{"input", text}, {"verdict", to_string(r.verdict)}};
        if (!r.label.empty()) rec.emplace_back("label", r.label);
        if (r.rule) {
            rec.emplace_back("rule", r.rule->rule);
            rec.emplace_back("citation", r.rule->citation);
            if (r.rule->target) rec.emplace_back("target", *r.rule->target);
            if (r.rule->witness) rec.emplace_back("witness", *r.rule->witness);
        }
        if (!r.candidates.empty()) {
            std::string cands;
            for (std::size_t i = 0; i < r.candidates.size(); ++i) cands += (i ? ";" : "") + r.candidates[i];
            rec.emplace_back("candidates", cands);
        }
        if (!r.reason.empty()) rec.emplace_back("reason", r.reason);
        if (!first) *c.out << "\n";
        first = false;
        emit(c, rec);
    }
    return Ok;
}

int cmd_resolve(const Context& c) {
    bool first = true;
    for (const auto& text : inputs(c)) {
        const MultiGerm g = read_germ(c, text);
        const MultiGerm plane = g.ambient() == 2 ? g : stable_reduce(g, c.jet);
        if (plane.ambient() != 2) throw DomainError("resolve needs a plane curve; " + text + " has embedding dimension " +
                                                    std::to_string(plane.ambient()));
        const ResolutionTree tree = resolution_tree(plane);
        Record rec{{"germ", format_germ(g)}};
        for (int i = 0; i < tree.branch_count(); ++i)
            rec.emplace_back("multiplicity_sequence_" + std::to_string(i), join(multiplicity_sequence(tree, i)));
        const auto ade = ade_recognize(tree);
        rec.emplace_back("satellites", std::to_string(tree.satellite_count()));
        rec.emplace_back("modality", std::to_string(wall_modality(tree)));
        rec.emplace_back("bpv", bpv_simple(tree) ? "simple" : "not simple");
        rec.emplace_back("ade", ade ? *ade : "none");
        if (!first) *c.out << "\n";
        first = false;
        emit(c, rec);
        std::istringstream nodes(export_tree(tree));
        std::string line;
        while (std::getline(nodes, line)) *c.out << (c.records() ? "" : "  ") << line << "\n";
    }
    return Ok;
}

int cmd_verify_atlas(const Context& c) {
    std::vector<Instance> todo;
    std::set<std::string> seen;
    int table_ok = 0, table_total = 0;
    for (auto inst : atlas().table_rows()) {
        for (int k = 1; k <= (inst.entry->uses_k() ? 3 : 1); ++k) {
            inst.params.k = k;
            inst.label = inst.entry->display(inst.params);
            if (seen.insert(inst.label).second) todo.push_back(inst);
        }
    }
    const std::size_t table_count = todo.size();
    for (const auto& e : atlas().entries()) {
        const Instance inst = atlas().resolve(e.label);
        if (seen.insert(inst.label).second) todo.push_back(inst);
    }
    int failed = 0;
    std::set<std::string> table_failed, table_names;
    for (std::size_t i = 0; i < todo.size(); ++i) {
        const auto rep = verify_entry(todo[i]);
        const bool table = i < table_count;
        if (table) table_names.insert(todo[i].entry->label);
        if (!rep.ok) {
            ++failed;
            if (table) table_failed.insert(todo[i].entry->label);
        }
        if (c.records()) {
            *c.out << "entry=" << rep.label << " ok=" << (rep.ok ? "yes" : "no")
                   << " equations=" << rep.equations_checked << "\n";
        } else {
            *c.out << (rep.ok ? "ok    " : "FAIL  ") << rep.label << " (" << rep.equations_checked << " equations)\n";
        }
        for (const auto& f : rep.failures) *c.out << (c.records() ? "failure=" : "      ") << f << "\n";
    }
    table_total = static_cast<int>(table_names.size());
    table_ok = table_total - static_cast<int>(table_failed.size());
    emit(c, {{"table_rows_verified", std::to_string(table_ok) + "/" + std::to_string(table_total)},
             {"instances_verified",
              std::to_string(todo.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(todo.size())}});
    return failed ? Verification : Ok;
}

int cmd_verify_adjacency(const Context& c) {
    int failed = 0, total = 0;
    for (auto f : shipped_families()) {
        if (!c.opt.sample_s.empty()) f.sample_s = Rational(c.opt.sample_s);
        const auto rep = verify_family(f);
        ++total;
        if (!rep.ok) ++failed;
        auto d = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
        if (c.records()) {
            *c.out << "family=" << f.id << " ok=" << (rep.ok ? "yes" : "no") << " source=" << f.source
                   << " target=" << f.target << " delta=" << d(rep.source_delta) << "->" << d(rep.target_delta)
                   << "\n";
        } else {
            *c.out << (rep.ok ? "ok    " : "FAIL  ") << f.id << ": " << f.source << " -> " << f.target
                   << " (delta " << d(rep.source_delta) << " -> " << d(rep.target_delta) << ")\n";
        }
        for (const auto& m : rep.failures) *c.out << (c.records() ? "failure=" : "      ") << m << "\n";
    }
    int edges = 0, edge_failed = 0;
    for (const auto& e : atlas().adjacency_graph()) {
        if (!e.witness) continue;
        ++edges;
        std::string problem;
        const auto* f = find_family(*e.witness);
        if (!f) {
            problem = "missing family " + *e.witness;
        } else {
            const MultiGerm s = germ_of(e.source), t = germ_of(e.target);
            if (!signature_of(germ_of(f->source), c.jet).same_type(signature_of(s, c.jet)) ||
                !signature_of(germ_of(f->target), c.jet).same_type(signature_of(t, c.jet)))
                problem = "family " + f->id + " does not connect the edge's types";
            else if (e.kind != ArrowKind::Curve &&
                     delta(t, c.jet) - t.branch_count() > delta(s, c.jet) - s.branch_count())
                problem = "delta - r + 1 increases";
        }
        if (!problem.empty()) {
            ++edge_failed;
            *c.out << (c.records() ? "edge_failure=" : "FAIL  edge ") << e.source << " -> " << e.target << ": "
                   << problem << "\n";
        }
    }
    emit(c, {{"families_verified", std::to_string(total - failed) + "/" + std::to_string(total)},
             {"witnessed_edges_verified", std::to_string(edges - edge_failed) + "/" + std::to_string(edges)}});
    return failed || edge_failed ? Verification : Ok;
}

int cmd_adjacency_dot(const Context& c) {
    *c.out << adjacency_dot(atlas().adjacency_graph());
    return Ok;
}

int cmd_atlas_list(const Context& c) {
    for (const auto& e : atlas().entries()) {
        std::string aliases;
        for (std::size_t i = 0; i < e.aliases.size(); ++i) aliases += (i ? "," : "") + e.aliases[i];
        if (c.records()) {
            *c.out << "label=" << e.label << " tag=" << to_string(e.tag) << " group=" << e.group;
            if (!aliases.empty()) *c.out << " aliases=" << aliases;
            *c.out << "\n";
        } else {
            *c.out << e.label << "  [" << to_string(e.tag) << "]  " << e.group;
            if (!aliases.empty()) *c.out << "  (also " << aliases << ")";
            *c.out << "\n";
        }
    }
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants, classification and adjacency checks for parametrised curve singularities",
                 "curvesing"};
    app.require_subcommand(1);
    app.fallthrough();
    Context c;
    app.add_option("--truncation", c.opt.truncation, "Largest jet window of the stabilization protocol")
        ->check(CLI::Range(16, 4096));
    app.add_option("--lambda", c.opt.lambda, "Modulus for atlas entries that take one");
    app.add_option("--sample-s", c.opt.sample_s, "Sample value of s for verify-adjacency");
    app.add_option("--format", c.opt.format, "Output format")->check(CLI::IsMember({"text", "records"}));
    app.add_option("--output", c.opt.output, "Write the report to this file");

    using Handler = int (*)(const Context&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto with_inputs = [&](const char* name, const char* help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("germ", c.opt.inputs, "Germ notation or atlas label");
        sub->add_option("--input", c.opt.input_file, "File with one germ per line");
        commands.emplace_back(sub, h);
    };
    with_inputs("invariants", "Print the signature of a germ", cmd_invariants);
    with_inputs("classify", "Decide simplicity and name the type", cmd_classify);
    with_inputs("resolve", "Embedded resolution of a plane curve", cmd_resolve);
    commands.emplace_back(app.add_subcommand("verify-atlas", "Check equations and invariants of the atlas"),
                          cmd_verify_atlas);
    commands.emplace_back(app.add_subcommand("verify-adjacency", "Check the shipped deformation families"),
                          cmd_verify_adjacency);
    commands.emplace_back(app.add_subcommand("adjacency-dot", "Write the adjacency graph in DOT"),
                          cmd_adjacency_dot);
    commands.emplace_back(app.add_subcommand("atlas-list", "List atlas labels"), cmd_atlas_list);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "curvesing: " << e.what() << "\n";
        return Usage;
    }

    std::ofstream file;
    c.out = &out;
    if (!c.opt.output.empty()) {
        file.open(c.opt.output);
        if (!file) {
            err << "curvesing: cannot write " << c.opt.output << "\n";
            return Usage;
        }
        c.out = &file;
    }
    c.jet.max_window = c.opt.truncation;
    try {
        c.params.lambda = Rational(c.opt.lambda);
        c.params.lambda.canonicalize();
        if (!c.opt.sample_s.empty()) Rational(c.opt.sample_s);
    } catch (const std::invalid_argument&) {
        err << "curvesing: not a rational number\n";
        return Usage;
    }

    try {
        for (const auto& [sub, handler] : commands)
            if (sub->parsed()) return handler(c);
    } catch (const ParseError& e) {
        err << "curvesing: " << e.what() << "\n";
        return Parse;
    } catch (const StabilizationError& e) {
        err << "curvesing: " << e.what() << "\n";
        return Stabilization;
    } catch (const VerificationError& e) {
        err << "curvesing: " << e.what() << "\n";
        return Verification;
    } catch (const Error& e) {
        err << "curvesing: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace curvesing::cli
