#include "rgpoly/graphio.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "rgpoly/identities.hpp"
#include "rgpoly/invariants.hpp"

namespace rgpoly {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

struct RawBlock {
    std::string name;
    int line = 0;
    // (line, tokens) for each record in the block
    std::vector<std::pair<int, std::vector<Token>>> records;
};

}  // namespace

GraphFile parse_graphs(std::string_view text) {
    GraphFile result;
    std::vector<RawBlock> blocks;
    {
        std::istringstream in{std::string(text)};
        std::string line;
        int lineno = 0;
        RawBlock* cur = nullptr;
        while (std::getline(in, line)) {
            ++lineno;
            auto toks = tokenize(line);
            if (toks.empty()) continue;
            if (toks[0].text == "graph") {
                if (toks.size() != 2) {
                    result.errors.push_back({lineno, toks[0].col, "expected: graph <name>"});
                    cur = nullptr;
                    continue;
                }
                blocks.push_back({toks[1].text, lineno, {}});
                cur = &blocks.back();
                continue;
            }
            if (cur == nullptr) {
                result.errors.push_back({lineno, toks[0].col, "record outside a graph block"});
                continue;
            }
            cur->records.emplace_back(lineno, std::move(toks));
        }
    }

    std::map<std::string, int> names_seen;
    for (const RawBlock& blk : blocks) {
        size_t errors_before = result.errors.size();
        auto fail = [&](int line, int col, std::string msg) {
            result.errors.push_back({line, col, std::move(msg)});
        };
        if (auto it = names_seen.find(blk.name); it != names_seen.end()) {
            fail(blk.line, 1, "duplicate graph name '" + blk.name + "'");
            continue;
        }
        names_seen.emplace(blk.name, blk.line);

        std::vector<std::vector<std::string>> rotations;
        std::vector<std::pair<std::string, std::string>> pairs;
        std::vector<std::string> edge_names;
        std::map<std::string, int> edge_index;
        std::map<std::string, std::pair<int, int>> dart_where;  // token -> (line, col)
        std::map<std::string, int> dart_paired_line;
        std::map<int, std::string> weights;  // edge index -> symbol
        std::map<int, TangleType> tangles;
        int isolated = 0;

        // a record head like "vertex v1: ..." carries the colon on the id
        // token or as a separate ":" token
        auto split_head = [&](const std::vector<Token>& toks, size_t& body_start,
                              std::string& id) -> bool {
            if (toks.size() < 2) return false;
            const std::string& t1 = toks[1].text;
            if (t1.size() > 1 && t1.back() == ':') {
                id = t1.substr(0, t1.size() - 1);
                body_start = 2;
                return true;
            }
            if (toks.size() >= 3 && toks[2].text == ":") {
                id = t1;
                body_start = 3;
                return true;
            }
            return false;
        };

        for (const auto& [lineno, toks] : blk.records) {
            const std::string& kind = toks[0].text;
            if (kind == "vertex") {
                size_t body = 0;
                std::string vid;
                if (!split_head(toks, body, vid)) {
                    fail(lineno, toks[0].col, "expected: vertex <vid>: <darts...>");
                    continue;
                }
                std::vector<std::string> rot;
                bool ok = true;
                for (size_t i = body; i < toks.size(); ++i) {
                    const std::string& d = toks[i].text;
                    if (auto it = dart_where.find(d); it != dart_where.end()) {
                        fail(lineno, toks[i].col,
                             "DuplicateDart: dart '" + d + "' already used at line " +
                                 std::to_string(it->second.first));
                        ok = false;
                        break;
                    }
                    dart_where.emplace(d, std::make_pair(lineno, toks[i].col));
                    rot.push_back(d);
                }
                if (!ok) continue;
                if (rot.empty())
                    ++isolated;
                else
                    rotations.push_back(std::move(rot));
            } else if (kind == "edge") {
                size_t body = 0;
                std::string eid;
                if (!split_head(toks, body, eid) || toks.size() - body != 2) {
                    fail(lineno, toks[0].col, "expected: edge <eid>: <dartA> <dartB>");
                    continue;
                }
                if (edge_index.count(eid)) {
                    fail(lineno, toks[1].col, "duplicate edge name '" + eid + "'");
                    continue;
                }
                const std::string& da = toks[body].text;
                const std::string& db = toks[body + 1].text;
                if (da == db) {
                    fail(lineno, toks[body].col,
                         "SelfPairedDart: dart '" + da + "' is paired with itself");
                    continue;
                }
                bool ok = true;
                for (size_t i = body; i < toks.size(); ++i) {
                    const std::string& d = toks[i].text;
                    if (!dart_where.count(d)) {
                        fail(lineno, toks[i].col,
                             "UnpairedDart: dart '" + d + "' appears in no vertex rotation");
                        ok = false;
                    } else if (auto it = dart_paired_line.find(d); it != dart_paired_line.end()) {
                        fail(lineno, toks[i].col,
                             "DuplicateDart: dart '" + d + "' already paired at line " +
                                 std::to_string(it->second));
                        ok = false;
                    }
                }
                if (!ok) continue;
                dart_paired_line.emplace(da, lineno);
                dart_paired_line.emplace(db, lineno);
                edge_index.emplace(eid, static_cast<int>(edge_names.size()));
                edge_names.push_back(eid);
                pairs.emplace_back(da, db);
            } else if (kind == "weight" || kind == "tangle") {
                if (toks.size() != 3) {
                    fail(lineno, toks[0].col, "expected: " + kind + " <eid> <value>");
                    continue;
                }
                auto it = edge_index.find(toks[1].text);
                if (it == edge_index.end()) {
                    fail(lineno, toks[1].col, "unknown edge '" + toks[1].text + "'");
                    continue;
                }
                if (kind == "weight") {
                    weights[it->second] = toks[2].text;
                } else {
                    auto t = tangle_from_name(toks[2].text);
                    if (!t) {
                        fail(lineno, toks[2].col,
                             "tangle type must be one of w1 w2 w3 w4, got '" + toks[2].text + "'");
                        continue;
                    }
                    tangles[it->second] = *t;
                }
            } else {
                fail(lineno, toks[0].col, "unknown record '" + kind + "'");
            }
        }

        for (const auto& [dart, where] : dart_where) {
            if (!dart_paired_line.count(dart))
                fail(where.first, where.second,
                     "UnpairedDart: dart '" + dart + "' appears in no edge");
        }

        if (result.errors.size() != errors_before) continue;

        try {
            RibbonGraph g = RibbonGraph::from_rotation(rotations, pairs, isolated);
            for (const auto& [e, sym] : weights) g = g.with_weight(e, sym);
            for (const auto& [e, t] : tangles) g = g.with_tangle(e, t);
            result.graphs.push_back({blk.name, std::move(g), std::move(edge_names), blk.line});
        } catch (const GraphError& err) {
            fail(blk.line, 1, err.what());
        }
    }
    return result;
}

std::string serialize(const RibbonGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << "\n";
    auto rots = g.vertex_rotations();
    // darts are renamed in print order, so reparsing reproduces the same
    // indices and serialization is a fixed point of parse-then-serialize
    std::vector<int> printed(g.dart_count(), -1);
    int next = 0;
    for (const auto& rot : rots)
        for (int d : rot) printed[d] = next++;
    int vid = 0;
    for (const auto& rot : rots) {
        out << "vertex v" << vid++ << ":";
        for (int d : rot) out << " d" << printed[d];
        out << "\n";
    }
    for (int i = 0; i < g.isolated_vertices(); ++i) out << "vertex v" << vid++ << ":\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [da, db] = g.edge_darts(e);
        out << "edge e" << e << ": d" << printed[da] << " d" << printed[db] << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.weight(e)) out << "weight e" << e << " " << *g.weight(e) << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.tangle(e)) out << "tangle e" << e << " " << tangle_name(*g.tangle(e)) << "\n";
    return out.str();
}

namespace {

struct CliArgs {
    std::vector<std::string> positional;
    std::optional<long> writhe;
    std::optional<std::string> graph;
    uint64_t seed = 0;
    bool c3_subdivision = false;
};

int usage(std::ostream& err) {
    err << "usage:\n"
           "  rgpoly compute {br|tutte|homfly|homfly-full|jones-cp|jones-homfly|bracket}"
           " <file> [--writhe N] [--c3-subdivision] [--graph NAME]\n"
           "  rgpoly transform {dual|tensor Q} <file> [--graph NAME]\n"
           "  rgpoly verify {all|duality|determination|tensor-c3|tensor-odd P|jones-mirror|"
           "eq12|thm32} <file> [--seed N] [--graph NAME]\n";
    return 2;
}

std::optional<CliArgs> parse_cli(const std::vector<std::string>& args, std::ostream& err) {
    CliArgs cli;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need_value = [&](const char* flag) -> std::optional<std::string> {
            if (i + 1 >= args.size()) {
                err << "error: " << flag << " needs a value\n";
                return std::nullopt;
            }
            return args[++i];
        };
        if (a == "--writhe") {
            auto v = need_value("--writhe");
            if (!v) return std::nullopt;
            try {
                cli.writhe = std::stol(*v);
            } catch (const std::exception&) {
                err << "error: --writhe expects an integer, got '" << *v << "'\n";
                return std::nullopt;
            }
        } else if (a == "--graph") {
            auto v = need_value("--graph");
            if (!v) return std::nullopt;
            cli.graph = *v;
        } else if (a == "--seed") {
            auto v = need_value("--seed");
            if (!v) return std::nullopt;
            try {
                cli.seed = std::stoull(*v);
            } catch (const std::exception&) {
                err << "error: --seed expects an integer, got '" << *v << "'\n";
                return std::nullopt;
            }
        } else if (a == "--c3-subdivision") {
            cli.c3_subdivision = true;
        } else if (a.size() >= 2 && a[0] == '-' && a[1] == '-') {
            err << "error: unknown option '" << a << "'\n";
            return std::nullopt;
        } else {
            cli.positional.push_back(a);
        }
    }
    return cli;
}

std::optional<std::vector<NamedGraph>> load_graphs(const std::string& path,
                                                   const std::optional<std::string>& name,
                                                   std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    GraphFile file = parse_graphs(buf.str());
    if (!file.errors.empty()) {
        for (const auto& e : file.errors)
            err << path << ":" << e.line << ":" << e.col << ": " << e.message << "\n";
        return std::nullopt;
    }
    if (!name) return std::move(file.graphs);
    std::vector<NamedGraph> out;
    for (auto& g : file.graphs)
        if (g.name == *name) out.push_back(std::move(g));
    if (out.empty()) {
        err << "error: no graph named '" << *name << "' in " << path << "\n";
        return std::nullopt;
    }
    return out;
}

std::string labelset_str(const LabelMultiset& labels, const std::vector<std::string>& edge_names) {
    auto name_of = [&](int e) {
        return e < static_cast<int>(edge_names.size()) ? edge_names[e] : "e" + std::to_string(e);
    };
    std::string out = "{";
    bool first = true;
    for (const auto& w : labels) {
        if (!first) out += ",";
        first = false;
        out += w.str(name_of);
    }
    return out + "}";
}

int run_compute(const CliArgs& cli, std::ostream& out, std::ostream& err) {
    if (cli.positional.size() != 3) return usage(err);
    const std::string& what = cli.positional[1];
    auto graphs = load_graphs(cli.positional[2], cli.graph, err);
    if (!graphs) return 2;
    bool single = graphs->size() == 1;
    for (const NamedGraph& ng : *graphs) {
        std::string prefix = single ? "" : ng.name + ": ";
        try {
            if (what == "br") {
                out << prefix << bollobas_riordan(ng.graph).str() << "\n";
            } else if (what == "tutte") {
                out << prefix << tutte(ng.graph).str() << "\n";
            } else if (what == "homfly") {
                out << prefix << homfly_formula(ng.graph).str() << "\n";
            } else if (what == "jones-homfly") {
                out << prefix << jones_from_homfly(ng.graph).str() << "\n";
            } else if (what == "bracket") {
                out << prefix << kauffman_bracket(ng.graph).str() << "\n";
            } else if (what == "jones-cp") {
                long w;
                if (cli.writhe)
                    w = *cli.writhe;
                else if (cli.c3_subdivision)
                    w = subdivision_writhe(ng.graph);
                else {
                    err << "error: jones-cp needs --writhe N (or --c3-subdivision for the"
                           " w = -e convention)\n";
                    return 2;
                }
                out << prefix << jones_cp(ng.graph, w).str() << "\n";
            } else if (what == "homfly-full") {
                LabeledPoly p = homfly_full(ng.graph);
                for (const auto& [labels, poly] : p.parts())
                    out << prefix << "labels=" << labelset_str(labels, ng.edge_names)
                        << " poly=" << poly.str() << "\n";
            } else {
                err << "error: unknown compute kind '" << what << "'\n";
                return usage(err);
            }
        } catch (const std::exception& e) {
            err << "error: " << ng.name << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

int run_transform(const CliArgs& cli, std::ostream& out, std::ostream& err) {
    if (cli.positional.size() < 3) return usage(err);
    const std::string& what = cli.positional[1];
    int q = 0;
    size_t file_at = 2;
    if (what == "tensor") {
        if (cli.positional.size() != 4) return usage(err);
        try {
            q = std::stoi(cli.positional[2]);
        } catch (const std::exception&) {
            err << "error: tensor expects an integer cycle length\n";
            return 2;
        }
        file_at = 3;
    } else if (what != "dual" || cli.positional.size() != 3) {
        return usage(err);
    }
    auto graphs = load_graphs(cli.positional[file_at], cli.graph, err);
    if (!graphs) return 2;
    bool first = true;
    for (const NamedGraph& ng : *graphs) {
        try {
            RibbonGraph g = what == "dual" ? ng.graph.dual() : ng.graph.tensor_cycle(q);
            if (!first) out << "\n";
            first = false;
            out << serialize(g, ng.name);
        } catch (const std::exception& e) {
            err << "error: " << ng.name << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

int run_verify(const CliArgs& cli, std::ostream& out, std::ostream& err) {
    if (cli.positional.size() < 3) return usage(err);
    const std::string& what = cli.positional[1];
    int odd_p = 1;
    size_t file_at = 2;
    if (what == "tensor-odd") {
        if (cli.positional.size() != 4) return usage(err);
        try {
            odd_p = std::stoi(cli.positional[2]);
        } catch (const std::exception&) {
            err << "error: tensor-odd expects an integer exponent\n";
            return 2;
        }
        file_at = 3;
    } else if (cli.positional.size() != 3) {
        return usage(err);
    }
    auto graphs = load_graphs(cli.positional[file_at], cli.graph, err);
    if (!graphs) return 2;

    out << "# seed=" << cli.seed << "\n";
    bool all_pass = true;
    for (const NamedGraph& ng : *graphs) {
        std::vector<VerificationReport> reports;
        try {
            const RibbonGraph& g = ng.graph;
            if (what == "all") {
                reports = verify_all(g, cli.seed);
            } else if (what == "duality") {
                reports.push_back(check_duality(g));
            } else if (what == "determination") {
                reports.push_back(check_determination(g, determination_points(25, cli.seed),
                                                      DetReading::alpha_plus_one, cli.seed));
            } else if (what == "tensor-c3") {
                reports.push_back(check_tensor_c3(g, cli.seed));
            } else if (what == "tensor-odd") {
                reports.push_back(check_tensor_odd(g, odd_p, cli.seed));
            } else if (what == "jones-mirror") {
                reports.push_back(check_jones_mirror(g));
            } else if (what == "eq12") {
                reports.push_back(check_br_forms(g));
            } else if (what == "thm32") {
                reports.push_back(check_homfly_forms(g));
            } else {
                err << "error: unknown verify kind '" << what << "'\n";
                return usage(err);
            }
        } catch (const std::exception& e) {
            err << "error: " << ng.name << ": " << e.what() << "\n";
            return 2;
        }
        for (const VerificationReport& r : reports) {
            out << "identity=" << r.identity << " graph=" << ng.name << " mode=" << r.mode_name()
                << " points=" << r.points << " result=" << (r.pass ? "pass" : "fail");
            if (!r.pass) {
                out << " witness='" << r.witness << "'";
                all_pass = false;
            }
            out << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto cli = parse_cli(args, err);
    if (!cli) return 2;
    if (cli->positional.empty()) return usage(err);
    const std::string& cmd = cli->positional[0];
    if (cmd == "compute") return run_compute(*cli, out, err);
    if (cmd == "transform") return run_transform(*cli, out, err);
    if (cmd == "verify") return run_verify(*cli, out, err);
    err << "error: unknown command '" << cmd << "'\n";
    return usage(err);
}

}  // namespace rgpoly
