// Copyright 2026 The xchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

#include "xchain/bias.h"
#include "xchain/factorization.h"
#include "xchain/localize.h"
#include "xchain/schmidt.h"
#include "xchain/stabilizer.h"
#include "xchain/verify.h"

namespace xchain::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxListedStates = 64;
constexpr int kMaxListedOutcomesN = 10;

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

VertexSet parse_vertices(const std::string &text, int n, const char *what) {
    VertexSet out = VertexSet::zero(n);
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            throw std::invalid_argument(std::string(what) + ": empty entry in '" + text + "'");
        }
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size()) {
            throw std::invalid_argument(std::string(what) + ": '" + item + "' is not a vertex");
        }
        if (v < 1 || v > n) {
            throw std::invalid_argument(std::string(what) + ": vertex " + item + " outside 1.." + std::to_string(n));
        }
        if (out.has(v)) {
            throw std::invalid_argument(std::string(what) + ": vertex " + item + " listed twice");
        }
        out = out.with(v);
    }
    return out;
}

ordered_json vertices_json(const VertexSet &s) { return s.vertices(); }

ordered_json basis_json(const Basis &b) {
    ordered_json out = ordered_json::array();
    for (const auto &r : b.rows()) {
        out.push_back(vertices_json(r));
    }
    return out;
}

ordered_json dyadic_json(const DyadicReal &d) { return {{"value", d.str()}, {"approx", d.approx()}}; }

ordered_json graph_json(const Graph &g) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", g.n()}, {"edges", edges}, {"graph6", emit_graph6(g)}};
}

std::string sign_str(int sign) { return sign < 0 ? "-1" : "+1"; }

std::string signed_ket(int sign, const VertexSet &bits) { return (sign < 0 ? "-|" : "+|") + bits.str() + ">"; }

std::string pad(std::string s, size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

struct Options {
    std::string graph;
    std::string graph2;
    std::string part_a;
    std::string errors;
    uint64_t seed = 1;
    int samples = 500;
    int max_n = 8;
    std::string format = "text";
};

struct Outcome {
    ordered_json results;
    std::string text;
    int code = kOk;
};

Bipartition load_partition(const Graph &g, const std::string &text) {
    if (text.empty()) {
        throw std::invalid_argument("--part-a is required");
    }
    return Bipartition::from_a(g.n(), parse_vertices(text, g.n(), "--part-a"));
}

Outcome cmd_xchains(const Graph &g) {
    XChainData xd = factorize(g);
    Outcome o;
    ordered_json exclusive = xd.exclusive;
    o.results = {{"gamma", basis_json(xd.gamma)},
                 {"exclusive", exclusive},
                 {"kappa", xd.kappa},
                 {"x_gamma", xd.x_gamma.str()},
                 {"alpha", xd.alpha ? ordered_json(*xd.alpha) : ordered_json(nullptr)}};
    std::ostringstream t;
    t << "Gamma_G = " << xd.gamma.str() << "\n";
    t << "exclusive vertices = " << ordered_json(xd.exclusive).dump() << "\n";
    t << "K_G = {";
    for (size_t i = 0; i < xd.kappa.size(); ++i) {
        t << (i ? "," : "") << "{" << xd.kappa[i] << "}";
    }
    t << "}\n";
    t << "x_Gamma = " << xd.x_gamma.str() << "\n";
    t << "alpha = " << (xd.alpha ? sign_str(*xd.alpha) : std::string("not computed")) << "\n";
    o.text = t.str();
    return o;
}

std::string diagram(const Graph &g, const XChainData &xd, const XBasisExpansion &e) {
    std::ostringstream t;
    t << "P(V) = <Gamma_G> x <K_G>\n";
    t << "|-- Gamma_G = " << xd.gamma.str() << "\n";
    for (size_t i = 0; i < xd.generators.size(); ++i) {
        t << "|     " << pad(xd.generators[i].set_str(), 12) << " exclusive " << xd.exclusive[i] << "  pi "
          << sign_str(stabilizer_parity(g, xd.generators[i])) << "\n";
    }
    t << "|     x_Gamma = " << xd.x_gamma.set_str() << " -> |" << xd.x_gamma.str() << ">\n";
    Basis k = xd.correlation_group();
    t << "|-- <K_G> = span" << k.str() << "\n";
    t << "|     " << pad("xi", 12) << " pi  " << pad("c_xi", static_cast<size_t>(g.n()) + 2) << " X-chain state\n";
    const uint64_t total = uint64_t{1} << k.dim();
    const uint64_t shown = std::min<uint64_t>(total, kMaxListedStates);
    for (uint64_t code = 0; code < shown; ++code) {
        VertexSet xi = k.combine(code);
        XChainState s = xchain_state(g, xd, xi);
        t << "|     " << pad(xi.set_str(), 12) << " " << sign_str(stabilizer_parity(g, xi)) << "  "
          << pad(correlation_index(g, xi).str(), static_cast<size_t>(g.n()) + 2) << " " << signed_ket(s.sign, s.bits)
          << "\n";
    }
    if (shown < total) {
        t << "|     ... " << total - shown << " more\n";
    }
    t << "|-- alpha = " << (xd.alpha ? sign_str(*xd.alpha) : std::string("not computed")) << "\n";
    t << "|G> = " << e.str() << "\n";
    return t.str();
}

Outcome cmd_represent(const Graph &g) {
    XChainData xd = factorize(g);
    XBasisExpansion e = x_representation(g, xd);
    Outcome o;
    ordered_json terms = ordered_json::array();
    for (auto [key, sign] : e.terms) {
        terms.push_back({{"ket", e.ket(key)}, {"sign", sign}});
    }
    o.results = {{"expansion", e.str()},
                 {"coefficient", dyadic_json(DyadicReal::make(1, e.half_log_norm))},
                 {"terms", terms},
                 {"x_gamma", xd.x_gamma.str()},
                 {"alpha", xd.alpha ? ordered_json(*xd.alpha) : ordered_json(nullptr)}};
    o.text = diagram(g, xd, e);
    return o;
}

Outcome cmd_bias(const Graph &g) {
    DyadicReal beta = bias_degree(g);
    Outcome o;
    o.results = {{"bias", dyadic_json(beta)}, {"balanced", beta.is_zero()}};
    o.text = "bias = " + beta.str() + "\nbalanced = " + (beta.is_zero() ? "true" : "false") + "\n";
    return o;
}

Outcome cmd_overlap(const Graph &g, const Graph &h) {
    DyadicReal value = overlap(g, h);
    Outcome o;
    o.results = {{"graph2", graph_json(h)}, {"overlap", dyadic_json(value)}};
    o.text = "overlap = " + value.str() + "\n";
    if (g.n() <= kMaxListedOutcomesN) {
        DistinguishingOutcomes d = distinguishing_outcomes(g, h);
        ordered_json only_g = ordered_json::array(), only_h = ordered_json::array();
        for (const auto &s : d.only_g) only_g.push_back(s.str());
        for (const auto &s : d.only_h) only_h.push_back(s.str());
        o.results["distinguishing"] = {{"only_g", only_g}, {"only_h", only_h}};
        o.text += "outcomes only under graph: " + std::to_string(d.only_g.size()) + "\n";
        o.text += "outcomes only under graph2: " + std::to_string(d.only_h.size()) + "\n";
    }
    return o;
}

Outcome cmd_balanced(int max_n) {
    if (max_n < 1 || max_n > 5) {
        throw std::invalid_argument("balanced catalog is limited to --max-n 1..5");
    }
    Outcome o;
    ordered_json classes = ordered_json::array();
    std::ostringstream t;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto &c : enumerate_balanced(n)) {
            ordered_json entry = graph_json(c.graph);
            entry["witness"] = vertices_json(c.witness);
            entry["witness_edges"] = c.witness_edge_count;
            classes.push_back(entry);
            t << "n=" << n << " g6:" << emit_graph6(c.graph) << " edges=" << c.graph.edge_count()
              << " witness=" << c.witness.set_str() << " (" << c.witness_edge_count << " edges)\n";
        }
    }
    o.results = {{"max_n", max_n}, {"count", classes.size()}, {"classes", classes}};
    o.text = t.str() + "classes = " + std::to_string(classes.size()) + "\n";
    return o;
}

Outcome cmd_schmidt(const Graph &g, const Bipartition &part) {
    PartitionGroups pg = partition_groups(g, part);
    SchmidtRank r = schmidt_rank(g, part);
    SchmidtDecomposition d = schmidt_decomposition(g, part);
    Outcome o;
    ordered_json terms = ordered_json::array();
    for (const auto &term : d.terms) {
        terms.push_back({{"label", vertices_json(term.label)},
                         {"sign", term.sign},
                         {"a", term.vec_a.str()},
                         {"b", term.vec_b.str()}});
    }
    o.results = {{"part_a", vertices_json(part.a)},
                 {"part_b", vertices_json(part.b)},
                 {"rank", r.rank},
                 {"log_rank", r.log_rank},
                 {"geometric_measure", r.geometric_measure},
                 {"groups",
                  {{"k_b", basis_json(pg.k_b)},
                   {"k_aa", basis_json(pg.k_aa)},
                   {"k_simb", basis_json(pg.k_simb)},
                   {"k_harpoon", basis_json(pg.k_harpoon)}}},
                 {"coefficient", dyadic_json(d.coeff)},
                 {"alpha", d.alpha},
                 {"terms", terms}};
    std::ostringstream t;
    t << "A = " << part.a.set_str() << "  B = " << part.b.set_str() << "\n";
    t << "rank = " << r.rank << "\nE_g = " << r.geometric_measure << "\n";
    t << "k_b = " << pg.k_b.str() << "  k_aa = " << pg.k_aa.str() << "  k_simb = " << pg.k_simb.str()
      << "  k_harpoon = " << pg.k_harpoon.str() << "\n";
    t << "alpha = " << sign_str(d.alpha) << "\ncoefficient = " << d.coeff.str() << "\nterms (label, sign, A side, B side):\n";
    for (const auto &term : d.terms) {
        t << "  " << pad(term.label.set_str(), 10) << (term.sign < 0 ? " - " : " + ") << term.vec_a.str() << " (x) "
          << term.vec_b.str() << "\n";
    }
    o.text = t.str();
    return o;
}

Outcome cmd_localize(const Graph &g, const Bipartition &part, const std::string &errors, uint64_t seed) {
    VertexSet err = errors.empty() ? VertexSet::zero(g.n()) : parse_vertices(errors, g.n(), "--errors");
    LocalizationCode code = extract_code(g, part);
    LocalizationReport rep = simulate(g, part, err, seed);
    const int len = code.length();
    Outcome o;
    ordered_json words = ordered_json::array();
    for (const auto &c : code.codewords) {
        words.push_back({{"label", vertices_json(c.label)}, {"word", word_str(c.word, len)}});
    }
    ordered_json corrected = nullptr, label = nullptr;
    if (rep.decoded.codeword) {
        corrected = word_str(rep.decoded.codeword->word, len);
        label = vertices_json(rep.decoded.codeword->label);
    }
    o.results = {{"ideal", word_str(rep.ideal.word, len)},
                 {"noisy", word_str(rep.noisy, len)},
                 {"corrected", corrected},
                 {"label", label},
                 {"success", rep.success},
                 {"flips", rep.decoded.flips},
                 {"code", {{"codewords", words}, {"distance", code.distance}}},
                 {"bob_state", rep.bob_state ? ordered_json(rep.bob_state->str()) : ordered_json(nullptr)}};
    std::ostringstream t;
    t << "code:";
    for (const auto &c : code.codewords) {
        t << " " << word_str(c.word, len);
    }
    t << " (distance " << code.distance << ")\n";
    t << "ideal = " << word_str(rep.ideal.word, len) << "\nnoisy = " << word_str(rep.noisy, len) << "\n";
    t << "corrected = " << (rep.decoded.codeword ? word_str(rep.decoded.codeword->word, len) : std::string("ambiguous"))
      << "\nlabel = " << (rep.decoded.codeword ? rep.decoded.codeword->label.set_str() : std::string("none")) << "\n";
    t << "success = " << (rep.success ? "true" : "false") << "\n";
    if (rep.bob_state) {
        t << "bob state = " << rep.bob_state->str() << "\n";
    }
    o.text = t.str();
    return o;
}

Outcome cmd_verify(const Options &opt) {
    if (opt.max_n < 1 || opt.max_n > 14) {
        throw std::invalid_argument("--max-n must be in 1..14 for verify");
    }
    if (opt.samples < 0) {
        throw std::invalid_argument("--samples must be nonnegative");
    }
    OracleSuiteOptions so;
    so.exhaustive_max_n = std::min(opt.max_n, 5);
    so.max_n = opt.max_n;
    so.samples = opt.samples;
    so.seed = opt.seed;
    Outcome o;
    ordered_json checks = ordered_json::array();
    std::ostringstream t;
    bool ok = true;
    for (const auto &r : oracle_equivalence(so)) {
        ok = ok && r.ok();
        checks.push_back({{"name", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"first_failure", r.ok() ? ordered_json(nullptr) : ordered_json(r.first_failure)}});
        t << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.failures << " failures)";
        if (!r.ok()) {
            t << " first: " << r.first_failure;
        }
        t << "\n";
    }
    o.results = {{"max_n", opt.max_n}, {"samples", opt.samples}, {"seed", opt.seed}, {"ok", ok}, {"checks", checks}};
    o.text = t.str();
    o.code = ok ? kOk : kMismatch;
    return o;
}

}  // namespace

Graph load_graph(std::string_view spec) {
    if (spec.starts_with("@")) {
        std::string path(spec.substr(1));
        std::ifstream in(path);
        if (!in) {
            throw std::runtime_error("cannot read graph file '" + path + "'");
        }
        std::stringstream text;
        text << in.rdbuf();
        return parse_edge_list(text.str());
    }
    if (spec.starts_with("g6:")) {
        return parse_graph6(spec.substr(3));
    }
    if (spec.starts_with("named:")) {
        return named(spec.substr(6));
    }
    return named(spec);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact X-basis analysis of graph states"};
    app.require_subcommand(1);
    Options opt;
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_graph = [&](CLI::App *sub) {
        sub->add_option("--graph", opt.graph, "Graph: name (star:4), @file.edges or g6:<code>")->required();
        add_format(sub);
    };

    auto *xchains = app.add_subcommand("xchains", "X-chain group, correlation generators and x_Gamma");
    add_graph(xchains);
    auto *represent = app.add_subcommand("represent", "X-basis expansion and factorization diagram");
    add_graph(represent);
    auto *bias = app.add_subcommand("bias", "Bias degree of the X-basis distribution");
    add_graph(bias);
    auto *ovl = app.add_subcommand("overlap", "Inner product of two graph states");
    add_graph(ovl);
    ovl->add_option("--graph2", opt.graph2, "Second graph")->required();
    auto *balanced = app.add_subcommand("balanced", "Catalog of balanced graph classes");
    balanced->add_option("--max-n", opt.max_n, "Largest vertex count (1..5)")->default_val(5);
    add_format(balanced);
    auto *schmidt = app.add_subcommand("schmidt", "Schmidt decomposition across a bipartition");
    add_graph(schmidt);
    schmidt->add_option("--part-a", opt.part_a, "Vertices of side A, e.g. 1,2,3")->required();
    auto *localize = app.add_subcommand("localize", "Entanglement localization with Z errors on A");
    add_graph(localize);
    localize->add_option("--part-a", opt.part_a, "Vertices of side A")->required();
    localize->add_option("--errors", opt.errors, "Vertices of A hit by Z errors");
    localize->add_option("--seed", opt.seed, "Sampling seed");
    auto *verify = app.add_subcommand("verify", "Oracle-equivalence property suite");
    verify->add_option("--max-n", opt.max_n, "Largest vertex count")->default_val(8);
    verify->add_option("--samples", opt.samples, "Random graphs above n = 5")->default_val(500);
    verify->add_option("--seed", opt.seed, "Sampling seed");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    CLI::App *sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        ordered_json report{{"command", name}};
        Outcome o;
        if (name == "balanced") {
            o = cmd_balanced(opt.max_n);
        } else if (name == "verify") {
            o = cmd_verify(opt);
        } else {
            Graph g = load_graph(opt.graph);
            report["graph"] = graph_json(g);
            if (name == "xchains") {
                o = cmd_xchains(g);
            } else if (name == "represent") {
                o = cmd_represent(g);
            } else if (name == "bias") {
                o = cmd_bias(g);
            } else if (name == "overlap") {
                o = cmd_overlap(g, load_graph(opt.graph2));
            } else if (name == "schmidt") {
                o = cmd_schmidt(g, load_partition(g, opt.part_a));
            } else {
                o = cmd_localize(g, load_partition(g, opt.part_a), opt.errors, opt.seed);
            }
        }
        report["results"] = o.results;
        if (opt.format == "json") {
            out << report.dump(2) << "\n";
        } else {
            out << o.text;
        }
        return o.code;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::length_error &e) {
        err << "error: input too large: " << e.what() << "\n";
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::logic_error &e) {
        err << "internal mismatch: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}

}  // namespace xchain::cli
