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

#include "xchain/verify.h"

#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "xchain/bias.h"
#include "xchain/factorization.h"
#include "xchain/kernels.h"
#include "xchain/oracle.h"
#include "xchain/schmidt.h"
#include "xchain/stabilizer.h"

namespace xchain {

namespace {

// Failure counts for one graph, in check order.
struct Tally {
    std::vector<uint64_t> cases;
    std::vector<uint64_t> failures;
    std::vector<std::string> first;

    explicit Tally(size_t checks) : cases(checks), failures(checks), first(checks) {}

    void record(size_t check, bool ok, const std::string &what) {
        ++cases[check];
        if (!ok && failures[check]++ == 0) {
            first[check] = what;
        }
    }
};

std::vector<CheckResult> merge(const std::vector<std::string> &names, const std::vector<Tally> &tallies) {
    std::vector<CheckResult> out;
    for (size_t c = 0; c < names.size(); ++c) {
        CheckResult r{names[c], 0, 0, {}};
        for (const auto &t : tallies) {
            r.cases += t.cases[c];
            if (t.failures[c] && r.failures == 0) {
                r.first_failure = t.first[c];
            }
            r.failures += t.failures[c];
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string describe(const Graph &g) { return "g6:" + emit_graph6(g); }

std::string describe(const Graph &g, const Bipartition &part) { return describe(g) + " A=" + part.a.set_str(); }

Graph random_graph(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::bernoulli_distribution coin(density(rng));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

struct OracleCase {
    Graph g;
    Graph partner;
    std::vector<Bipartition> parts;
};

void oracle_checks(const OracleCase &c, Tally &t) {
    const Graph &g = c.g;
    const int n = g.n();

    auto brute = brute_xchains(g);
    Basis gamma = xchain_group(g);
    t.record(0, Basis::span_of(n, brute) == gamma && brute.size() == (size_t{1} << gamma.dim()), describe(g));

    DenseState x = dense_to_x(dense_state_z(g));
    t.record(1, dense_from_expansion(x_representation(g)) == x, describe(g));

    t.record(2, overlap(g, c.partner) == dense_overlap(g, c.partner), describe(g) + " vs " + describe(c.partner));

    for (const auto &part : c.parts) {
        t.record(3, schmidt_rank(g, part).rank == dense_schmidt_rank(g, part), describe(g, part));
        t.record(4, dense_from_schmidt(n, schmidt_decomposition(g, part)) == x, describe(g, part));
    }

    auto dist = x_distribution(g);
    auto support = measurement_support(g);
    bool same = dist.size() == support.size();
    for (const auto &o : support) {
        auto it = dist.find(o.bits.bits());
        same = same && it != dist.end() && it->second == o.probability;
    }
    t.record(5, same, describe(g));
}

// Dense X-frame vector of an expansion, not normalised.
std::vector<int64_t> raw_amps(const XBasisExpansion &e, int n) {
    std::vector<int64_t> amps(size_t{1} << n, 0);
    for (auto [key, sign] : e.terms) {
        amps[key] = sign;
    }
    return amps;
}

DenseState raw_state(const XBasisExpansion &e, int n) {
    DenseState s;
    s.n = n;
    s.amps = raw_amps(e, n);
    s.scale = e.half_log_norm;
    s.frame = Frame::X;
    return s;
}

Basis span_of_vertices(int n, uint32_t mask) {
    std::vector<BitVec> rows;
    for (uint32_t m = mask; m; m &= m - 1) {
        rows.emplace_back(n, m & (~m + 1));
    }
    return Basis::span_of(n, rows);
}

void stabilizer_lemmas(const Graph &g, Tally &t) {
    const int n = g.n();
    const size_t size = size_t{1} << n;
    std::vector<int64_t> parity(size);
    kernels::serial::parity_table(g.rows(), parity);
    std::vector<uint32_t> corr(size);
    std::vector<PauliStabilizer> induced(size);
    for (uint32_t xi = 0; xi < size; ++xi) {
        corr[xi] = correlation_index(g, BitVec(n, xi)).bits();
        induced[xi] = induced_stabilizer(g, BitVec(n, xi));
    }
    uint64_t cut_bad = 0, hom_bad = 0;
    std::string cut_first, hom_first;
    for (uint32_t a = 0; a < size; ++a) {
        for (uint32_t b = 0; b < size; ++b) {
            int cut = std::popcount(a & corr[b]) & 1;
            if (parity[a] * parity[b] * parity[a ^ b] != (cut ? -1 : 1) && cut_bad++ == 0) {
                cut_first = describe(g) + " a=" + BitVec(n, a).set_str() + " b=" + BitVec(n, b).set_str();
            }
            if (multiply(g, induced[a], induced[b]) != induced[a ^ b] && hom_bad++ == 0) {
                hom_first = describe(g) + " a=" + BitVec(n, a).set_str() + " b=" + BitVec(n, b).set_str();
            }
        }
    }
    t.cases[0] += size * size;
    t.failures[0] += cut_bad;
    if (cut_bad && t.first[0].empty()) t.first[0] = cut_first;
    t.cases[1] += size * size;
    t.failures[1] += hom_bad;
    if (hom_bad && t.first[1].empty()) t.first[1] = hom_first;
}

void dense_lemmas(const Graph &g, Tally &t) {
    const int n = g.n();
    XChainData xd = factorize(g);
    uint32_t kappa = xd.kappa_mask().bits();

    // Correlation-state properties for every subgroup K spanned by kappa
    // singletons and every coset representative xi.
    for (uint32_t s = kappa;; s = (s - 1) & kappa) {
        Basis k = span_of_vertices(n, s);
        uint32_t rest = kappa & ~s;
        for (uint32_t r = rest;; r = (r - 1) & rest) {
            BitVec xi(n, r);
            DenseState psi = raw_state(correlation_state(g, xd, k, xi), n);
            std::string where = describe(g) + " K=" + k.str() + " xi=" + xi.set_str();
            for (const auto &gen : xd.gamma.rows()) {
                t.record(2, check_stabilizer(psi, induced_stabilizer(g, gen)), where);
            }
            for (const auto &kv : k.rows()) {
                t.record(2, check_stabilizer(psi, induced_stabilizer(g, kv)), where);
            }
            for (uint32_t m = rest; m; m &= m - 1) {
                BitVec kap(n, m & (~m + 1));
                DenseState moved = apply_pauli(psi, induced_stabilizer(g, kap));
                t.record(3, moved == raw_state(correlation_state(g, xd, k, xi ^ kap), n), where + " by " + kap.set_str());

                DenseState mixed = psi;
                for (size_t i = 0; i < mixed.amps.size(); ++i) {
                    mixed.amps[i] += moved.amps[i];
                }
                mixed.scale += 1;
                Basis bigger = sum(k, Basis::span_of(n, {kap}));
                t.record(4, mixed.normalized() == raw_state(correlation_state(g, xd, bigger, xi), n).normalized(),
                         where + " add " + kap.set_str());
            }
            if (r == 0) break;
        }
        if (s == 0) break;
    }

    // Expansion identity over disjoint k1, k2 (ternary assignment of kappa).
    std::vector<int> kv = xd.kappa;
    uint64_t assignments = 1;
    for (size_t i = 0; i < kv.size(); ++i) assignments *= 3;
    for (uint64_t code = 0; code < assignments; ++code) {
        uint32_t k1 = 0, k2 = 0, rest = 0;
        uint64_t c = code;
        for (int v : kv) {
            uint32_t bit = uint32_t{1} << (v - 1);
            (c % 3 == 0 ? k1 : c % 3 == 1 ? k2 : rest) |= bit;
            c /= 3;
        }
        Basis b1 = span_of_vertices(n, k1), b2 = span_of_vertices(n, k2);
        for (uint32_t r = rest;; r = (r - 1) & rest) {
            BitVec xi(n, r);
            auto lhs = raw_amps(correlation_state(g, xd, span_of_vertices(n, k1 | k2), xi), n);
            std::vector<int64_t> rhs(lhs.size(), 0);
            for (const auto &x2 : b2.elements()) {
                auto part = raw_amps(correlation_state(g, xd, b1, xi ^ x2), n);
                for (size_t i = 0; i < rhs.size(); ++i) rhs[i] += part[i];
            }
            t.record(5, lhs == rhs,
                     describe(g) + " k1=" + b1.str() + " k2=" + b2.str() + " xi=" + xi.set_str());
            if (r == 0) break;
        }
    }

    // Orthonormality of the Schmidt vectors on both sides.
    const uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t a = 1; a < full; ++a) {
        Bipartition part = Bipartition::from_a(n, BitVec(n, a));
        SchmidtDecomposition d = schmidt_decomposition(g, part);
        bool ok = d.terms.size() == (size_t{1} << d.coeff.half_log);
        for (size_t i = 0; i < d.terms.size() && ok; ++i) {
            for (size_t j = i; j < d.terms.size() && ok; ++j) {
                DyadicReal expected = i == j ? DyadicReal::one() : DyadicReal::zero();
                ok = inner_product(d.terms[i].vec_a, d.terms[j].vec_a) == expected &&
                     inner_product(d.terms[i].vec_b, d.terms[j].vec_b) == expected;
            }
        }
        t.record(6, ok, describe(g, part));
    }
}

}  // namespace

std::vector<Graph> labelled_graphs(int n) {
    if (n < 1 || n > 7) {
        throw std::invalid_argument("labelled_graphs is limited to 1 <= n <= 7");
    }
    std::vector<Edge> slots;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (uint64_t code = 0; code < (uint64_t{1} << slots.size()); ++code) {
        std::vector<Edge> edges;
        for (size_t s = 0; s < slots.size(); ++s) {
            if ((code >> s) & 1) {
                edges.push_back(slots[s]);
            }
        }
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

std::vector<Graph> isomorphism_classes(int n) {
    auto graphs = labelled_graphs(n);
    std::vector<std::string> keys(graphs.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t i = 0; i < static_cast<int64_t>(graphs.size()); ++i) {
        keys[i] = adjacency_key(canonical_form(graphs[i]).graph);
    }
    std::map<std::string, Graph> classes;
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (!classes.count(keys[i])) {
            classes.emplace(keys[i], canonical_form(graphs[i]).graph);
        }
    }
    std::vector<Graph> out;
    for (auto &[key, g] : classes) {
        out.push_back(g);
    }
    return out;
}

std::vector<CheckResult> oracle_equivalence(const OracleSuiteOptions &options) {
    if (options.max_n > kMaxDenseQubits || options.exhaustive_max_n > 6) {
        throw std::invalid_argument("oracle suite limited to n <= " + std::to_string(kMaxDenseQubits) +
                                    " and exhaustive n <= 6");
    }
    std::mt19937_64 rng(options.seed);
    std::vector<OracleCase> cases;
    auto add = [&](const Graph &g) {
        const int n = g.n();
        OracleCase c{g, random_graph(n, rng), {}};
        if (n >= 2) {
            std::uniform_int_distribution<uint32_t> pick(1, (uint32_t{1} << n) - 2);
            for (int k = 0; k < options.bipartitions; ++k) {
                c.parts.push_back(Bipartition::from_a(n, BitVec(n, pick(rng))));
            }
        }
        cases.push_back(std::move(c));
    };
    for (int n = 1; n <= options.exhaustive_max_n; ++n) {
        for (const Graph &g : labelled_graphs(n)) {
            add(g);
        }
    }
    if (options.max_n >= options.random_min_n) {
        std::uniform_int_distribution<int> size(options.random_min_n, options.max_n);
        for (int s = 0; s < options.samples; ++s) {
            add(random_graph(size(rng), rng));
        }
    }
    const std::vector<std::string> names{"xchain_group = brute-force X-chains",
                                         "x_representation = dense X-basis state",
                                         "overlap = dense inner product",
                                         "2^dim k_harpoon = dense Schmidt rank",
                                         "Schmidt reconstruction = dense state",
                                         "measurement_support = X-basis distribution"};
    std::vector<Tally> tallies(cases.size(), Tally(names.size()));
#pragma omp parallel for schedule(dynamic, 8)
    for (int64_t i = 0; i < static_cast<int64_t>(cases.size()); ++i) {
        oracle_checks(cases[i], tallies[i]);
    }
    return merge(names, tallies);
}

std::vector<CheckResult> lemma_suite(const LemmaSuiteOptions &options) {
    if (options.labelled_max_n > 6 || options.dense_labelled_max_n > 6 || options.class_n > 7) {
        throw std::invalid_argument("lemma suite limited to labelled n <= 6 and class n <= 7");
    }
    const std::vector<std::string> names{"parity-cut identity",
                                         "stabilizer product homomorphism",
                                         "correlation states stabilized by Gamma x <K>",
                                         "stabilizer moves correlation state label",
                                         "(1 + s_kappa)/sqrt2 adds kappa to K",
                                         "correlation-state expansion identity",
                                         "Schmidt vectors orthonormal"};
    std::vector<Graph> stab_graphs, dense_graphs;
    for (int n = 1; n <= options.labelled_max_n; ++n) {
        for (const Graph &g : labelled_graphs(n)) {
            stab_graphs.push_back(g);
        }
    }
    for (int n = 1; n <= options.dense_labelled_max_n; ++n) {
        for (const Graph &g : labelled_graphs(n)) {
            dense_graphs.push_back(g);
        }
    }
    if (options.class_n > options.dense_labelled_max_n) {
        for (const Graph &g : isomorphism_classes(options.class_n)) {
            dense_graphs.push_back(g);
        }
    }
    std::vector<Tally> tallies(stab_graphs.size() + dense_graphs.size(), Tally(names.size()));
    const int64_t split = static_cast<int64_t>(stab_graphs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < static_cast<int64_t>(tallies.size()); ++i) {
        if (i < split) {
            stabilizer_lemmas(stab_graphs[i], tallies[i]);
        } else {
            dense_lemmas(dense_graphs[i - split], tallies[i]);
        }
    }
    return merge(names, tallies);
}

}  // namespace xchain
