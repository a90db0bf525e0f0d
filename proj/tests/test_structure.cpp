#include <doctest.h>

#include <numeric>

#include "aec/generators.hpp"
#include "aec/rng.hpp"
#include "aec/structure.hpp"
#include "helpers.hpp"

using namespace aec;
using namespace testutil;

namespace {

// one 20-vertex v (id 0) whose twenty neighbors are 4-vertices; three
// extra big vertices soak up the remaining stubs
Graph c5_fixture() {
    std::vector<std::pair<int, int>> pairs;
    // v = 0, small u's = 4..23, bigs = 1,2,3
    for (int u = 4; u < 24; ++u) {
        pairs.emplace_back(0, u);
        for (int b = 1; b <= 3; ++b) pairs.emplace_back(b, u);
    }
    return Graph::build(24, pairs);
}

Graph circulant(int n, int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int off = 1; off <= d / 2; ++off)
        for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + off) % n);
    if (d % 2)
        for (int v = 0; v < n / 2; ++v) pairs.emplace_back(v, v + n / 2);
    return Graph::build(n, pairs);
}

Rat charge_sum(const std::vector<Rat>& xs) {
    Rat s(0);
    for (const Rat& x : xs) s += x;
    return s;
}

}  // namespace

TEST_CASE("find_reducible on the worked examples") {
    // K5: every vertex is a 4-vertex with 19^- neighbors
    auto r = find_reducible(complete(5));
    REQUIRE(r);
    CHECK(r->variant == Reducible::Variant::Config);
    CHECK(r->kind == ConfigKind::C1);
    CHECK(r->center == 0);
    CHECK(r->witnesses == std::vector<int>{1});
    CHECK(recheck_reducible(complete(5), *r));

    // C4 cycle: degree 2
    auto low = find_reducible(cycle(4));
    REQUIRE(low);
    CHECK(low->variant == Reducible::Variant::LowDegree);
    CHECK(low->center == 0);
    CHECK(recheck_reducible(cycle(4), *low));

    // the constructed degree-20 vertex with all-small neighborhood
    Graph fix = c5_fixture();
    DegreeProfile p = fix.degree_profile();
    CHECK(p.degree[0] == 20);
    for (int u = 4; u < 24; ++u) CHECK(p.degree[u] == 4);
    CHECK(fix.edge_count() <= 4 * fix.vertex_count() - 1);
    auto c5 = find_reducible(fix);
    REQUIRE(c5);
    CHECK(c5->kind == ConfigKind::C5);
    CHECK(c5->center == 0);
    CHECK(c5->witnesses.size() == 20);
    CHECK(recheck_reducible(fix, *c5));
}

TEST_CASE("find_configuration ignores the low-degree shortcut") {
    CHECK_FALSE(find_configuration(cycle(4)).has_value());
    auto r = find_configuration(complete(5));
    REQUIRE(r);
    CHECK(r->kind == ConfigKind::C1);
}

TEST_CASE("discharging audit ledgers") {
    // K5: all charges -4, nobody is big, sum -20
    ChargeReport k5 = discharging_audit(complete(5));
    for (const Rat& w : k5.initial) CHECK(w == Rat(-4));
    CHECK(k5.transfers.empty());
    CHECK(k5.final_ == k5.initial);
    CHECK(k5.total == Rat(-20));

    // 8-regular: everything 0, outside the lemma's hypothesis but audited
    ChargeReport oct = discharging_audit(circulant(17, 8));
    for (const Rat& w : oct.initial) CHECK(w == Rat(0));
    CHECK(oct.transfers.empty());
    CHECK(oct.total == Rat(0));

    // the C5 fixture: v=0 sends 1 to each of its twenty 4-vertices
    Graph fix = c5_fixture();
    ChargeReport rep = discharging_audit(fix);
    CHECK(rep.initial[0] == Rat(12));
    int from_v = 0;
    for (const ChargeTransfer& t : rep.transfers) {
        CHECK((t.amount == Rat(1) || t.amount == Rat(3, 4)));
        CHECK(rep.initial[t.from] >= Rat(12));  // senders are 20+-vertices
        if (t.from == 0) {
            ++from_v;
            CHECK(t.amount == Rat(1));
        }
    }
    CHECK(from_v == 20);
    CHECK(rep.final_[0] == Rat(12 - 20));  // rules applied literally
    CHECK(charge_sum(rep.final_) == charge_sum(rep.initial));
}

TEST_CASE("charge conservation holds exactly on random graphs") {
    DetRng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = erdos_renyi(6 + rng.below(30), rng.below(90), rng.next());
        ChargeReport rep = discharging_audit(g);
        CHECK(charge_sum(rep.final_) == charge_sum(rep.initial));
        long long dsum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) dsum += g.degree(v);
        CHECK(charge_sum(rep.initial) == Rat(dsum - 8LL * g.vertex_count()));
    }
}

TEST_CASE("verify_lemma") {
    auto k5 = verify_lemma(complete(5));
    REQUIRE(std::holds_alternative<Reducible>(k5));
    CHECK(std::get<Reducible>(k5).kind == ConfigKind::C1);

    // K9 fails the density hypothesis: 36 > 4*9-1
    CHECK_THROWS_AS(verify_lemma(complete(9)), Error);
    // C4 fails the degree hypothesis
    CHECK_THROWS_AS(verify_lemma(cycle(4)), Error);

    // 4-regular random graph on 50 vertices: e=100 <= 199
    Graph reg = random_regular(50, 4, 31337);
    auto r = verify_lemma(reg);
    REQUIRE(std::holds_alternative<Reducible>(r));
    CHECK(recheck_reducible(reg, std::get<Reducible>(r)));
}

TEST_CASE("lemma property suite (small): delta>=4, e<=4v-1 always yields a witness") {
    DetRng rng(271828);
    int ran = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int n = 8 + rng.below(40);
        Graph g = (trial % 2 == 0) ? corpus_graph(CorpusKind::Regular, n, rng.next())
                                   : random_sparse_delta4(n, rng.next());
        DegreeProfile p = g.degree_profile();
        REQUIRE(p.min_degree >= 4);
        REQUIRE(g.edge_count() <= 4 * g.vertex_count() - 1);
        auto r = verify_lemma(g);
        REQUIRE(std::holds_alternative<Reducible>(r));
        CHECK(recheck_reducible(g, std::get<Reducible>(r)));
        ++ran;
    }
    CHECK(ran == 150);
}

TEST_CASE("no configuration found implies nonnegative final charges") {
    // configuration-free graphs with delta >= 4 must discharge to w' >= 0
    // everywhere, forcing e >= 4v
    std::vector<Graph> gs;
    gs.push_back(circulant(17, 8));
    gs.push_back(circulant(20, 9));
    gs.push_back(circulant(23, 10));
    {
        // a big vertex whose neighbors are all 8-vertices: still no
        // configuration, and R1/R2 have nothing to feed
        std::vector<std::pair<int, int>> pairs;
        Graph mids = circulant(20, 7);
        for (const EdgeId& e : mids.edges()) pairs.emplace_back(e.a + 1, e.b + 1);
        for (int u = 1; u <= 20; ++u) pairs.emplace_back(0, u);
        gs.push_back(Graph::build(21, pairs));
    }
    for (const Graph& g : gs) {
        REQUIRE(g.degree_profile().min_degree >= 4);
        CHECK_FALSE(find_reducible(g).has_value());
        ChargeReport rep = discharging_audit(g);
        for (const Rat& w : rep.final_) CHECK(w >= Rat(0));
        CHECK(g.edge_count() >= 4 * g.vertex_count());
    }
}

TEST_CASE("detection soundness across a random corpus") {
    DetRng rng(555);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = erdos_renyi(6 + rng.below(40), rng.below(120), rng.next());
        auto r = find_reducible(g);
        if (r) CHECK(recheck_reducible(g, *r));
    }
}
